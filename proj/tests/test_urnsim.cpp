#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "stirling/oracles.hpp"
#include "stirling/urnsim.hpp"

using namespace stirling;

TEST_CASE("urn_a spec") {
    const UrnSpec spec = urn_a();
    CHECK(spec.colors() == 3);
    CHECK(spec.initial == std::vector<long long>{1, 1, 1});
    CHECK(spec.replacement == std::vector<std::vector<long long>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    for (const auto& row : spec.replacement)
        CHECK(row[0] + row[1] + row[2] == 2);
}

TEST_CASE("urn_a is symmetric under color permutations") {
    const UrnSpec spec = urn_a();
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : perms) {
        for (int i = 0; i < 3; ++i) {
            CHECK(spec.initial[static_cast<std::size_t>(perm[i])] == spec.initial[static_cast<std::size_t>(i)]);
            for (int j = 0; j < 3; ++j)
                CHECK(spec.replacement[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])] ==
                      spec.replacement[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("characteristic polynomial of urn_a is (x-2)(x+1)^2") {
    const auto poly = char_poly3(urn_a());
    // expand (x-2)(x+1)^2 by convolution
    std::array<long long, 4> want{};
    const std::array<long long, 2> a{-2, 1}, b{1, 1};
    std::array<long long, 3> ab{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ab[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) want[static_cast<std::size_t>(i + j)] += ab[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    CHECK(poly == want);
    CHECK(poly == std::array<long long, 4>{-2, -3, 0, 1});
    CHECK_THROWS_AS(char_poly3(two_color_urn()), std::invalid_argument);
}

TEST_CASE("two_color_urn spec and forced draws") {
    const UrnSpec spec = two_color_urn();
    CHECK(spec.initial == std::vector<long long>{1, 2});
    CHECK(spec.replacement == std::vector<std::vector<long long>>{{0, 2}, {1, 1}});
    const UrnState s0 = initial_state(spec);
    CHECK(apply_draw(spec, s0, 0).composition == std::vector<long long>{1, 4});
    CHECK(apply_draw(spec, s0, 1).composition == std::vector<long long>{2, 3});
}

TEST_CASE("urn_a forced draws") {
    const UrnSpec spec = urn_a();
    const UrnState s0 = initial_state(spec);
    CHECK(apply_draw(spec, s0, 0).composition == std::vector<long long>{1, 2, 2});
    CHECK(apply_draw(spec, s0, 2).composition == std::vector<long long>{2, 2, 1});
    for (int color = 0; color < 3; ++color) {
        auto comp = apply_draw(spec, s0, color).composition;
        std::sort(comp.begin(), comp.end());
        CHECK(comp == std::vector<long long>{1, 2, 2});
    }
    CHECK_THROWS_AS(apply_draw(spec, s0, 3), std::invalid_argument);
}

TEST_CASE("step draws and totals") {
    const UrnSpec spec = urn_a();
    SeededRng rng(17);
    UrnState s = initial_state(spec);
    for (long long m = 1; m <= 50; ++m) {
        s = step(spec, s, rng);
        CHECK(s.total() == 3 + 2 * m);
        CHECK(s.step == m);
        CHECK(s.last_drawn >= 0);
        for (long long c : s.composition) CHECK(c >= 1);
    }
    const UrnState empty{0, {0, 0, 0}, -1};
    CHECK_THROWS_AS(step(spec, empty, rng), std::invalid_argument);
}

TEST_CASE("run returns the whole trajectory") {
    SeededRng rng(3);
    const auto traj = run(urn_a(), 10, rng);
    REQUIRE(traj.size() == 11);
    CHECK(traj.front().composition == std::vector<long long>{1, 1, 1});
    CHECK(traj.front().last_drawn == -1);
    for (std::size_t i = 0; i < traj.size(); ++i)
        CHECK(traj[i].total() == 3 + 2 * static_cast<long long>(i));

    SeededRng rng2(3);
    CHECK(run(urn_a(), 0, rng2).size() == 1);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(initial_state(UrnSpec{{{0, 1}, {1, 0}}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(initial_state(UrnSpec{{{0, -1}, {1, 0}}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(initial_state(UrnSpec{{{0, 1}}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("merging the non-plateau colors of urn_a gives the two-color urn") {
    const UrnSpec big = urn_a();
    const UrnSpec small = two_color_urn();
    for (int trial = 0; trial < 100; ++trial) {
        SeededRng rng = SeededRng::derive(404, static_cast<std::uint64_t>(trial));
        UrnState a = initial_state(big);
        UrnState b = initial_state(small);
        for (int m = 0; m < 50; ++m) {
            a = step(big, a, rng);
            // replay the induced lumped draw: plateau is urn_a color 2
            b = apply_draw(small, b, a.last_drawn == 2 ? 0 : 1);
            CHECK(b.composition[0] == a.composition[2]);
            CHECK(b.composition[1] == a.composition[0] + a.composition[1]);
        }
    }
}

namespace {

// independent oracle: exact plateau-count law evolved through the two-color urn
ExactDist two_color_exact(int n) {
    std::vector<BigRational> prob(static_cast<std::size_t>(n) + 2, BigRational(0));
    prob[1] = 1;  // (Z_1, other) = (1, 2)
    for (int m = 1; m < n; ++m) {
        std::vector<BigRational> next(static_cast<std::size_t>(n) + 2, BigRational(0));
        const long long total = 2 * m + 1;
        for (int z = 1; z <= m; ++z) {
            if (prob[static_cast<std::size_t>(z)] == 0) continue;
            next[static_cast<std::size_t>(z)] += prob[static_cast<std::size_t>(z)] * BigRational(z, total);
            next[static_cast<std::size_t>(z) + 1] += prob[static_cast<std::size_t>(z)] * BigRational(total - z, total);
        }
        prob = std::move(next);
    }
    ExactDist out;
    for (int z = 1; z <= n; ++z)
        if (prob[static_cast<std::size_t>(z)] != 0) out.atoms.push_back({z, prob[static_cast<std::size_t>(z)]});
    return out;
}

}  // namespace

TEST_CASE("two-color urn law equals pmf_L and the joint marginal, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        const ExactDist lumped = two_color_exact(n);
        CHECK(lumped == pmf_L(n));
        CHECK(lumped == joint_pmf(n).marginal(2));
    }
}

TEST_CASE("coupled growth check") {
    SeededRng rng(0);
    std::vector<long long> comp;
    CHECK(coupled_growth_check(1, rng, &comp));
    CHECK(comp == std::vector<long long>{1, 1, 1});

    std::vector<std::vector<long long>> finals;
    for (GapIndex g = 0; g <= 2; ++g) {
        CHECK(coupled_growth_check_with(2, [g](int, GapIndex) { return g; }, &comp));
        finals.push_back(comp);
    }
    std::sort(finals.begin(), finals.end());
    CHECK(finals == std::vector<std::vector<long long>>{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});

    // all-first and all-last gap choices stress the boundary classifications
    CHECK(coupled_growth_check_with(30, [](int, GapIndex) { return 0; }));
    CHECK(coupled_growth_check_with(30, [](int, GapIndex g) { return g; }));

    for (int i = 0; i < 100; ++i) {
        SeededRng r = SeededRng::derive(0xBEEF, static_cast<std::uint64_t>(i));
        CHECK(coupled_growth_check(100, r));
    }
}
