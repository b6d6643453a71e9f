#pragma once

#include <array>
#include <vector>

#include "stirling/bignum.hpp"

namespace stirling {

// joint_pmf refuses above this unless a larger cap is passed; the state space
// is O(n^2) exact rationals.
inline constexpr int kJointPmfCap = 200;

// (2n-1)!! = 1*3*...*(2n-1); 1 for n = 0.
BigInt double_factorial(long long n);

// Row n of the second-order Eulerian triangle: c[k] counts Stirling
// permutations of length 2n with k plateaux. c[0] == 0 and sum_k c[k] ==
// (2n-1)!!. Computed by c_{n,k} = k*c_{n-1,k} + (2n-k)*c_{n-1,k-1}.
struct EulerianRow {
    int n = 0;
    std::vector<BigInt> c;  // index k = 0..n

    BigInt sum() const;
};

EulerianRow eulerian_row(int n);

// Finitely supported exact distribution on integers.
struct ExactDist {
    struct Atom {
        long long point;
        BigRational p;

        bool operator==(const Atom&) const = default;
    };
    std::vector<Atom> atoms;  // sorted by point, probabilities positive

    bool operator==(const ExactDist&) const = default;

    BigRational total() const;
    BigRational mean() const;
    BigRational variance() const;
};

// Finitely supported exact distribution on integer triples.
struct ExactDist3 {
    struct Atom {
        long long x, y, z;
        BigRational p;

        bool operator==(const Atom&) const = default;
    };
    std::vector<Atom> atoms;  // sorted lexicographically, probabilities positive

    bool operator==(const ExactDist3&) const = default;

    BigRational total() const;
    ExactDist marginal(int axis) const;                    // axis 0, 1, 2
    ExactDist3 permuted(const std::array<int, 3>& perm) const;
    BigRational mean(int axis) const;
    BigRational covariance(int a, int b) const;            // a == b gives the variance
};

// P(L_n = k) = C_{n,k} / (2n-1)!! on k = 1..n.
ExactDist pmf_L(int n);

// E L_n = (2n+1)/3.
BigRational mean_L(long long n);

// Var L_n = 2(n^2-1) / (9(2n-1)); 0 at n = 1.
BigRational var_L(long long n);

// Cov of any distinct pair among (X_n, Y_n, Z_n): -(n^2-1)/(9(2n-1)) = -Var/2.
BigRational cov_pair(long long n);

// Exact law of (X_n, Y_n, Z_n): ascent, descent and plateau counts, evolved
// forward from (1,1,1) with the drawn color keeping its count and the other
// two gaining one, with probabilities proportional to the counts.
ExactDist3 joint_pmf(int n, int cap = kJointPmfCap);

// 3x3 symmetric matrix of exact rationals.
struct CovMatrix3 {
    std::array<std::array<BigRational, 3>, 3> m;

    bool operator==(const CovMatrix3&) const = default;
};

// Limit covariance of n^{-1/2}(X_n - 2n/3, Y_n - 2n/3, Z_n - 2n/3):
// (1/18) * [[2,-1,-1],[-1,2,-1],[-1,-1,2]].
CovMatrix3 asymptotic_sigma();

// r-th moment of Beta(1/2, k): prod_{j=0}^{r-1} (1/2+j)/(1/2+k+j).
BigRational beta_moment(long long k, int r);

// Variance of one color's count when n-1 individuals are removed uniformly at
// random from 3n (n per color); hypergeometric, (n-1)(1/3)(2/3)(2n+1)/(3n-1).
// Grows like (4/27)n, against n/9 for the real urn.
BigRational simplified_model_variance(long long n);

}  // namespace stirling
