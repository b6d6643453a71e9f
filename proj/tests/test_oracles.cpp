#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "stirling/generators.hpp"
#include "stirling/oracles.hpp"
#include "stirling/statistics.hpp"

using namespace stirling;

TEST_CASE("double_factorial") {
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(3) == 15);
    CHECK(double_factorial(8) == 2027025);
    CHECK_THROWS_AS(double_factorial(-1), std::invalid_argument);
}

TEST_CASE("eulerian rows") {
    const EulerianRow r2 = eulerian_row(2);
    CHECK(r2.c == std::vector<BigInt>{0, 1, 2});
    const EulerianRow r3 = eulerian_row(3);
    CHECK(r3.c == std::vector<BigInt>{0, 1, 8, 6});
    CHECK(r3.sum() == 15);
    for (int n = 1; n <= 40; ++n) CHECK(eulerian_row(n).sum() == double_factorial(n));
    CHECK_THROWS_AS(eulerian_row(0), std::invalid_argument);
}

TEST_CASE("pmf_L") {
    const ExactDist p3 = pmf_L(3);
    REQUIRE(p3.atoms.size() == 3);
    CHECK(p3.atoms[0] == ExactDist::Atom{1, BigRational(1, 15)});
    CHECK(p3.atoms[1] == ExactDist::Atom{2, BigRational(8, 15)});
    CHECK(p3.atoms[2] == ExactDist::Atom{3, BigRational(6, 15)});
    CHECK(p3.total() == 1);

    const ExactDist p1 = pmf_L(1);
    REQUIRE(p1.atoms.size() == 1);
    CHECK(p1.atoms[0] == ExactDist::Atom{1, BigRational(1)});

    const ExactDist p2 = pmf_L(2);
    CHECK(p2.atoms[0].p == BigRational(1, 3));
    CHECK(p2.atoms[1].p == BigRational(2, 3));
    for (int n = 1; n <= 20; ++n) CHECK(pmf_L(n).total() == 1);
}

TEST_CASE("closed-form moments") {
    CHECK(mean_L(3) == BigRational(7, 3));
    CHECK(var_L(3) == BigRational(16, 45));
    CHECK(var_L(1) == 0);
    CHECK(cov_pair(3) == BigRational(-8, 45));
    CHECK(cov_pair(1) == 0);
    CHECK(cov_pair(2) == BigRational(-1, 9));
    for (long long n : {1LL, 2LL, 10LL, 500LL, 1000000LL}) {
        CHECK(cov_pair(n) * 2 == -var_L(n));
        CHECK(var_L(n) + 2 * cov_pair(n) == 0);
    }
    CHECK(pmf_L(3).mean() == mean_L(3));
    CHECK(pmf_L(3).variance() == var_L(3));
    CHECK_THROWS_AS(mean_L(0), std::invalid_argument);
}

TEST_CASE("joint_pmf base cases") {
    const ExactDist3 j1 = joint_pmf(1);
    REQUIRE(j1.atoms.size() == 1);
    CHECK(j1.atoms[0] == ExactDist3::Atom{1, 1, 1, BigRational(1)});

    const ExactDist3 j2 = joint_pmf(2);
    REQUIRE(j2.atoms.size() == 3);
    for (const auto& atom : j2.atoms) CHECK(atom.p == BigRational(1, 3));
    CHECK(j2.atoms[0] == ExactDist3::Atom{1, 2, 2, BigRational(1, 3)});
    CHECK(j2.atoms[1] == ExactDist3::Atom{2, 1, 2, BigRational(1, 3)});
    CHECK(j2.atoms[2] == ExactDist3::Atom{2, 2, 1, BigRational(1, 3)});

    CHECK_THROWS_AS(joint_pmf(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(joint_pmf(0), std::invalid_argument);
}

TEST_CASE("joint_pmf matches exhaustive adp counting at n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::array<long long, 3>, long long> freq;
        enumerate_stirling(n, [&](const StirlingPermutation& q) {
            const AdpCounts counts = adp_counts(q);
            ++freq[{counts.ascents, counts.descents, counts.plateaux}];
        });
        const BigInt denom = double_factorial(n);
        const ExactDist3 joint = joint_pmf(n);
        REQUIRE(joint.atoms.size() == freq.size());
        for (const auto& atom : joint.atoms) {
            const auto it = freq.find({atom.x, atom.y, atom.z});
            REQUIRE(it != freq.end());
            CHECK(atom.p == BigRational(it->second, denom));
        }
    }
}

TEST_CASE("joint_pmf marginals, exchangeability and moments at a spot size") {
    const ExactDist3 joint = joint_pmf(7);
    CHECK(joint.total() == 1);
    const ExactDist ref = pmf_L(7);
    for (int axis = 0; axis < 3; ++axis) CHECK(joint.marginal(axis) == ref);
    CHECK(joint.permuted({1, 2, 0}) == joint);
    CHECK(joint.permuted({2, 1, 0}) == joint);
    CHECK(joint.mean(0) == mean_L(7));
    CHECK(joint.covariance(1, 1) == var_L(7));
    CHECK(joint.covariance(0, 2) == cov_pair(7));
}

TEST_CASE("asymptotic sigma") {
    const CovMatrix3 sigma = asymptotic_sigma();
    for (int i = 0; i < 3; ++i) {
        BigRational row_sum = 0;
        for (int j = 0; j < 3; ++j) {
            CHECK(sigma.m[i][j] == (i == j ? BigRational(1, 9) : BigRational(-1, 18)));
            CHECK(sigma.m[i][j] == sigma.m[j][i]);
            row_sum += sigma.m[i][j];
        }
        CHECK(row_sum == 0);
    }
}

TEST_CASE("beta moments") {
    CHECK(beta_moment(1, 1) == BigRational(1, 3));
    CHECK(beta_moment(1, 2) == BigRational(1, 5));
    CHECK(beta_moment(2, 1) == BigRational(1, 5));
    CHECK(beta_moment(1, 2) - beta_moment(1, 1) * beta_moment(1, 1) == BigRational(4, 45));
    CHECK_THROWS_AS(beta_moment(0, 1), std::invalid_argument);
}

TEST_CASE("simplified-model variance") {
    CHECK(simplified_model_variance(1) == 0);
    CHECK(simplified_model_variance(2) == BigRational(2, 9));
    const BigRational scaled = simplified_model_variance(1000000) / 1000000;
    CHECK(abs(scaled - BigRational(4, 27)) * 1000 <= BigRational(4, 27));
    const BigRational real_scaled = var_L(1000000) / 1000000;
    CHECK(abs(real_scaled - BigRational(1, 9)) * 1000 <= BigRational(1, 9));
    // the two limits genuinely differ
    CHECK(BigRational(4, 27) != BigRational(1, 9));
}

TEST_CASE("variance over n trends to 1/9") {
    const BigRational limit(1, 9);
    const BigRational d10 = abs(var_L(10) / 10 - limit);
    const BigRational d100 = abs(var_L(100) / 100 - limit);
    const BigRational d1000 = abs(var_L(1000) / 1000 - limit);
    CHECK(d10 > d100);
    CHECK(d100 > d1000);
}

TEST_CASE("rationals are canonical") {
    CHECK(BigRational(6, 15) == BigRational(2, 5));
    CHECK(rat_num(BigRational(6, 15)) == 2);
    CHECK(rat_den(BigRational(6, 15)) == 5);
    // sign normalization through arithmetic; negative-denominator pairs are
    // rejected at construction
    CHECK(rat_den(BigRational(-1) / BigRational(-3)) == 3);
    CHECK(BigRational(-1) / BigRational(-3) == BigRational(1, 3));
    CHECK(rat_str(BigRational(-8, 45)) == "-8/45");
    CHECK(rat_str(BigRational(7)) == "7");
    CHECK(to_double(BigRational(1, 4)) == 0.25);
}
