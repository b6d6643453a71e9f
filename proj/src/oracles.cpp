#include "stirling/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stirling {

BigInt double_factorial(long long n) {
    if (n < 0) throw std::invalid_argument("double_factorial: n must be nonnegative");
    BigInt out = 1;
    for (long long j = 1; j <= 2 * n - 1; j += 2) out *= j;
    return out;
}

BigInt EulerianRow::sum() const {
    BigInt s = 0;
    for (const BigInt& v : c) s += v;
    return s;
}

EulerianRow eulerian_row(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_row: n must be >= 1");
    // row-by-row, keeping only the previous row
    std::vector<BigInt> prev = {BigInt(0), BigInt(1)};  // row n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (int k = 1; k <= m; ++k) {
            BigInt v = 0;
            if (k < static_cast<int>(prev.size())) v += k * prev[k];
            v += (2 * m - k) * prev[k - 1];
            row[k] = std::move(v);
        }
        prev = std::move(row);
    }
    return EulerianRow{n, std::move(prev)};
}

BigRational ExactDist::total() const {
    BigRational s = 0;
    for (const Atom& a : atoms) s += a.p;
    return s;
}

BigRational ExactDist::mean() const {
    BigRational s = 0;
    for (const Atom& a : atoms) s += a.p * a.point;
    return s;
}

BigRational ExactDist::variance() const {
    const BigRational mu = mean();
    BigRational s = 0;
    for (const Atom& a : atoms) {
        const BigRational d = BigRational(a.point) - mu;
        s += a.p * d * d;
    }
    return s;
}

BigRational ExactDist3::total() const {
    BigRational s = 0;
    for (const Atom& a : atoms) s += a.p;
    return s;
}

ExactDist ExactDist3::marginal(int axis) const {
    if (axis < 0 || axis > 2) throw std::invalid_argument("marginal: axis must be 0, 1 or 2");
    std::vector<ExactDist::Atom> out;
    for (const Atom& a : atoms) {
        const long long point = axis == 0 ? a.x : axis == 1 ? a.y : a.z;
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const ExactDist::Atom& b) { return b.point == point; });
        if (it == out.end())
            out.push_back({point, a.p});
        else
            it->p += a.p;
    }
    std::sort(out.begin(), out.end(),
              [](const ExactDist::Atom& a, const ExactDist::Atom& b) { return a.point < b.point; });
    return ExactDist{std::move(out)};
}

ExactDist3 ExactDist3::permuted(const std::array<int, 3>& perm) const {
    ExactDist3 out;
    out.atoms.reserve(atoms.size());
    for (const Atom& a : atoms) {
        const long long v[3] = {a.x, a.y, a.z};
        out.atoms.push_back({v[perm[0]], v[perm[1]], v[perm[2]], a.p});
    }
    std::sort(out.atoms.begin(), out.atoms.end(), [](const Atom& a, const Atom& b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    });
    return out;
}

BigRational ExactDist3::mean(int axis) const {
    BigRational s = 0;
    for (const Atom& a : atoms) s += a.p * (axis == 0 ? a.x : axis == 1 ? a.y : a.z);
    return s;
}

BigRational ExactDist3::covariance(int a, int b) const {
    const BigRational ma = mean(a);
    const BigRational mb = mean(b);
    BigRational s = 0;
    for (const Atom& atom : atoms) {
        const long long v[3] = {atom.x, atom.y, atom.z};
        s += atom.p * (BigRational(v[a]) - ma) * (BigRational(v[b]) - mb);
    }
    return s;
}

ExactDist pmf_L(int n) {
    const EulerianRow row = eulerian_row(n);
    const BigInt denom = double_factorial(n);
    std::vector<ExactDist::Atom> atoms;
    for (int k = 1; k <= n; ++k) {
        if (row.c[k] != 0) atoms.push_back({k, BigRational(row.c[k], denom)});
    }
    return ExactDist{std::move(atoms)};
}

BigRational mean_L(long long n) {
    if (n < 1) throw std::invalid_argument("mean_L: n must be >= 1");
    return BigRational(2 * BigInt(n) + 1, 3);
}

BigRational var_L(long long n) {
    if (n < 1) throw std::invalid_argument("var_L: n must be >= 1");
    const BigInt nn(n);
    return BigRational(2 * (nn * nn - 1), 9 * (2 * nn - 1));
}

BigRational cov_pair(long long n) {
    if (n < 1) throw std::invalid_argument("cov_pair: n must be >= 1");
    const BigInt nn(n);
    return BigRational(-(nn * nn - 1), 9 * (2 * nn - 1));
}

ExactDist3 joint_pmf(int n, int cap) {
    if (n < 1) throw std::invalid_argument("joint_pmf: n must be >= 1");
    if (n > cap)
        throw std::invalid_argument("joint_pmf: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
    // Weights over states (x, y) with z = 2m+1-x-y implied; the common
    // denominator after step m is (2m-1)!!, so transitions stay in BigInt.
    const int width = 2 * n + 2;
    auto idx = [width](int x, int y) { return static_cast<std::size_t>(x) * width + y; };
    std::vector<BigInt> weight(static_cast<std::size_t>(width) * width, BigInt(0));
    weight[idx(1, 1)] = 1;
    for (int m = 1; m < n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(width) * width, BigInt(0));
        const int total = 2 * m + 1;
        for (int x = 1; x <= total - 2; ++x) {
            for (int y = 1; y <= total - 1 - x; ++y) {
                const BigInt& w = weight[idx(x, y)];
                if (w == 0) continue;
                const int z = total - x - y;
                next[idx(x, y + 1)] += w * x;      // ascent drawn: (x, y+1, z+1)
                next[idx(x + 1, y)] += w * y;      // descent drawn: (x+1, y, z+1)
                next[idx(x + 1, y + 1)] += w * z;  // plateau drawn: (x+1, y+1, z)
            }
        }
        weight = std::move(next);
    }
    const BigInt denom = double_factorial(n);
    ExactDist3 out;
    const int total = 2 * n + 1;
    for (int x = 1; x <= total - 2; ++x) {
        for (int y = 1; y <= total - 1 - x; ++y) {
            const BigInt& w = weight[idx(x, y)];
            if (w == 0) continue;
            out.atoms.push_back({x, y, total - x - y, BigRational(w, denom)});
        }
    }
    return out;  // loops emit atoms in lexicographic (x, y) order already
}

CovMatrix3 asymptotic_sigma() {
    CovMatrix3 sigma;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sigma.m[i][j] = (i == j) ? BigRational(2, 18) : BigRational(-1, 18);
    return sigma;
}

BigRational beta_moment(long long k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("beta_moment: k and r must be >= 1");
    BigRational out = 1;
    for (int j = 0; j < r; ++j) out *= BigRational(2 * j + 1, 2 * j + 1 + 2 * k);
    return out;
}

BigRational simplified_model_variance(long long n) {
    if (n < 1) throw std::invalid_argument("simplified_model_variance: n must be >= 1");
    const BigInt nn(n);
    return BigRational(2 * (nn - 1) * (2 * nn + 1), 9 * (3 * nn - 1));
}

}  // namespace stirling
