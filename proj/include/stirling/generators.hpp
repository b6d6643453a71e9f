#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "stirling/rng.hpp"
#include "stirling/structures.hpp"

namespace stirling {

// Gap choices made while growing an object, one per step k = 1..n-1; the
// choice at step k is uniform on 0..2k. Replaying the trace through
// insert_pair reproduces the grown permutation.
struct GrowthTrace {
    std::vector<GapIndex> choices;

    bool operator==(const GrowthTrace&) const = default;
};

// Enumeration refuses above this unless a larger cap is passed explicitly;
// n = 8 already means 2,027,025 objects.
inline constexpr int kEnumerationCap = 8;

// Uniform over all (2n-1)!! Stirling permutations of length 2n, by sequential
// uniform gap insertion.
std::pair<StirlingPermutation, GrowthTrace> random_stirling(int n, SeededRng& rng);

// Uniform over all (2n-1)!! plane recursive trees with n+1 vertices.
PlaneRecursiveTree random_tree(int n, SeededRng& rng);

// Each a_i independent uniform on {1,...,2i-1}.
TrapezoidalWord random_trapezoidal(int n, SeededRng& rng);

// Visits every Stirling permutation of length 2n exactly once, in the fixed
// order: recurse on the (n-1)-enumeration, inserting the new pair at gaps
// 0,1,...,2(n-1) in order. Throws when n exceeds the cap.
void enumerate_stirling(int n, const std::function<void(const StirlingPermutation&)>& visit,
                        int cap = kEnumerationCap);
std::vector<StirlingPermutation> enumerate_stirling(int n, int cap = kEnumerationCap);

// Cartesian-product enumeration of [1]x[3]x...x[2n-1], last coordinate fastest.
void enumerate_trapezoidal(int n, const std::function<void(const TrapezoidalWord&)>& visit,
                           int cap = kEnumerationCap);
std::vector<TrapezoidalWord> enumerate_trapezoidal(int n, int cap = kEnumerationCap);

// Direct enumeration of plane recursive trees by recursive leaf attachment at
// every (vertex, slot); independent of the permutation-side enumeration.
void enumerate_trees(int n, const std::function<void(const PlaneRecursiveTree&)>& visit,
                     int cap = kEnumerationCap);
std::vector<PlaneRecursiveTree> enumerate_trees(int n, int cap = kEnumerationCap);

}  // namespace stirling
