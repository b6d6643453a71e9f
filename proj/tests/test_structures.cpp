#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "stirling/generators.hpp"
#include "stirling/rng.hpp"
#include "stirling/structures.hpp"

using namespace stirling;

namespace {

PlaneRecursiveTree chain2() { return PlaneRecursiveTree::from_children({{1}, {2}, {}}); }
PlaneRecursiveTree fork2() { return PlaneRecursiveTree::from_children({{1, 2}, {}, {}}); }

}  // namespace

TEST_CASE("tree_to_code walks the depth-first edge sequence") {
    CHECK(tree_to_code(chain2()).seq == Seq{1, 2, 2, 1});
    CHECK(tree_to_code(fork2()).seq == Seq{1, 1, 2, 2});
    CHECK(tree_to_code(PlaneRecursiveTree::from_children({{1}, {}})).seq == Seq{1, 1});
    CHECK(tree_to_code(PlaneRecursiveTree::root_only()).seq.empty());
}

TEST_CASE("code_to_tree inverts the walk") {
    CHECK(code_to_tree(StirlingPermutation{{1, 2, 2, 1}}) == chain2());
    CHECK(code_to_tree(StirlingPermutation{{1, 1, 2, 2}}) == fork2());
    CHECK(code_to_tree(StirlingPermutation{}) == PlaneRecursiveTree::root_only());
    CHECK_THROWS_AS(code_to_tree(StirlingPermutation{{2, 1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("validate_stirling") {
    CHECK(validate_stirling({1, 2, 2, 1}));
    CHECK_FALSE(validate_stirling({1, 2, 1, 2}));
    CHECK(validate_stirling({}));
    CHECK_FALSE(validate_stirling({2, 1, 1, 2}));
    CHECK_FALSE(validate_stirling({1}));           // odd length
    CHECK_FALSE(validate_stirling({2, 2}));        // value out of range for n=1
    CHECK_FALSE(validate_stirling({1, 1, 1, 1}));  // value more than twice
    CHECK_FALSE(validate_stirling({0, 0}));
    CHECK(validate_stirling({1, 1}));
}

TEST_CASE("insert_pair") {
    const StirlingPermutation base{{1, 1}};
    CHECK(insert_pair(base, 1).seq == Seq{1, 2, 2, 1});
    CHECK(insert_pair(base, 0).seq == Seq{2, 2, 1, 1});
    CHECK(insert_pair(base, 2).seq == Seq{1, 1, 2, 2});
    CHECK(insert_pair(StirlingPermutation{}, 0).seq == Seq{1, 1});
    CHECK_THROWS_AS(insert_pair(base, 3), std::invalid_argument);
    CHECK_THROWS_AS(insert_pair(base, -1), std::invalid_argument);
}

TEST_CASE("attach_leaf matches the documented positions") {
    const PlaneRecursiveTree one = PlaneRecursiveTree::from_children({{1}, {}});
    CHECK(attach_leaf(one, 1) == chain2());
    CHECK(attach_leaf(one, 0) == PlaneRecursiveTree::from_children({{2, 1}, {}, {}}));
    CHECK(attach_leaf(one, 2) == fork2());
    CHECK(attach_leaf(PlaneRecursiveTree::root_only(), 0) == one);
    CHECK_THROWS_AS(attach_leaf(one, 3), std::invalid_argument);
    CHECK_THROWS_AS(attach_leaf(one, -1), std::invalid_argument);
}

TEST_CASE("round trip is exact, exhaustively for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_stirling(n, [](const StirlingPermutation& q) {
            CHECK(tree_to_code(code_to_tree(q)) == q);
        });
        enumerate_trees(n, [](const PlaneRecursiveTree& t) {
            CHECK(code_to_tree(tree_to_code(t)) == t);
        });
    }
}

TEST_CASE("round trip is exact on random objects at n = 100") {
    for (int i = 0; i < 100; ++i) {
        SeededRng rng = SeededRng::derive(77, static_cast<std::uint64_t>(i));
        const auto [q, trace] = random_stirling(100, rng);
        REQUIRE(validate_stirling(q.seq));
        CHECK(tree_to_code(code_to_tree(q)) == q);
    }
}

TEST_CASE("insert_pair closure and attach_leaf commutation, exhaustively for n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        enumerate_stirling(n, [n](const StirlingPermutation& q) {
            const PlaneRecursiveTree t = code_to_tree(q);
            for (GapIndex g = 0; g <= 2 * static_cast<GapIndex>(n); ++g) {
                const StirlingPermutation grown = insert_pair(q, g);
                CHECK(validate_stirling(grown.seq));
                CHECK(tree_to_code(attach_leaf(t, g)) == grown);
            }
        });
    }
}

TEST_CASE("text round trip and parse validation") {
    const StirlingPermutation q{{1, 2, 2, 1}};
    CHECK(q.str() == "1 2 2 1");
    CHECK(StirlingPermutation::parse("1 2 2 1") == q);
    CHECK_THROWS_AS(StirlingPermutation::parse("1 2 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(StirlingPermutation::parse("1 x"), std::invalid_argument);

    CHECK(TrapezoidalWord::parse("1 3 2").word == Seq{1, 3, 2});
    CHECK_THROWS_AS(TrapezoidalWord::parse("2"), std::invalid_argument);
    CHECK_THROWS_AS(TrapezoidalWord::parse("1 4"), std::invalid_argument);
}

TEST_CASE("tree rendering and validity") {
    CHECK(chain2().render() == "(0 (1 (2)))");
    CHECK(fork2().render() == "(0 (1) (2))");
    CHECK(PlaneRecursiveTree::root_only().render() == "(0)");
    CHECK(PlaneRecursiveTree::root_only().valid());

    // label must exceed the parent's
    CHECK_THROWS_AS(PlaneRecursiveTree::from_children({{2}, {}, {1}}), std::invalid_argument);
    // duplicated child
    CHECK_THROWS_AS(PlaneRecursiveTree::from_children({{1, 1}, {}}), std::invalid_argument);

    PlaneRecursiveTree broken = chain2();
    broken.parent[2] = 0;
    CHECK_FALSE(broken.valid());
}
