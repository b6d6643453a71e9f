#pragma once

#include <map>

#include "stirling/structures.hpp"

namespace stirling {

// Gap classification counts of a Stirling permutation, with sentinel zeros at
// both ends. ascents + descents + plateaux == 2n + 1.
struct AdpCounts {
    long long ascents = 0;
    long long descents = 0;
    long long plateaux = 0;

    long long total() const { return ascents + descents + plateaux; }
    bool operator==(const AdpCounts&) const = default;
};

// counts[d] = number of vertices with outdegree d. Sum of counts is n+1,
// sum of d*counts[d] is n.
using OutdegreeProfile = std::map<int, long long>;

AdpCounts adp_counts(const StirlingPermutation& q);

long long leaves(const PlaneRecursiveTree& t);

OutdegreeProfile outdegree_profile(const PlaneRecursiveTree& t);

// Vertices in the subtree rooted at k, including k itself. 1 <= k <= n.
long long subtree_size(const PlaneRecursiveTree& t, Symbol k);

// Position difference p2 - p1 of the two occurrences of k (1-based positions),
// so occurrence_distance(tree_to_code(t), k) == 2*subtree_size(t, k) - 1.
long long occurrence_distance(const StirlingPermutation& q, Symbol k);

long long root_degree(const PlaneRecursiveTree& t);

// Number of times a stack parse of q returns to depth zero; equals the root
// degree of the corresponding tree.
long long top_block_count(const StirlingPermutation& q);

// Non-root vertices with no left sister, or a label above the nearest left
// sister; equals the ascent count of the code.
long long ascent_vertex_count(const PlaneRecursiveTree& t);

// Mirror rule (right side); equals the descent count of the code.
long long descent_vertex_count(const PlaneRecursiveTree& t);

long long distinct_count(const TrapezoidalWord& w);

}  // namespace stirling
