#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stirling {

// Vertex and edge labels. Vertices are 0..n with root 0; edge j is the edge
// above vertex j, so code symbols run 1..n.
using Symbol = std::int32_t;
using Seq = std::vector<Symbol>;

// Gap g of a length-2n sequence sits between positions g and g+1 (1-based
// positions); g = 0 is before the first element, g = 2n after the last.
using GapIndex = std::int64_t;

// Rooted ordered tree with labels increasing away from the root.
// parent[0] == -1; for j >= 1, parent[j] < j. Child order is significant.
struct PlaneRecursiveTree {
    std::vector<Symbol> parent;
    std::vector<std::vector<Symbol>> children;

    int n() const { return static_cast<int>(parent.size()) - 1; }

    bool operator==(const PlaneRecursiveTree&) const = default;

    static PlaneRecursiveTree root_only();
    // Builds parent pointers from ordered child lists; throws on malformed input.
    static PlaneRecursiveTree from_children(std::vector<std::vector<Symbol>> kids);
    bool valid() const;
    // Nested-parentheses rendering of vertex labels, e.g. (0 (1 (2)) (3)).
    std::string render() const;
};

// Permutation of {1,1,...,n,n} where everything strictly between the two
// copies of i exceeds i.
struct StirlingPermutation {
    Seq seq;

    int n() const { return static_cast<int>(seq.size()) / 2; }

    bool operator==(const StirlingPermutation&) const = default;

    std::string str() const;  // whitespace-separated symbols
    static StirlingPermutation parse(const std::string& text);
};

// Word a_1...a_n with a_i in {1,...,2i-1}.
struct TrapezoidalWord {
    Seq word;

    int n() const { return static_cast<int>(word.size()); }

    bool operator==(const TrapezoidalWord&) const = default;

    bool valid() const;
    std::string str() const;
    static TrapezoidalWord parse(const std::string& text);
};

// Total predicate: true iff seq is a Stirling permutation (any n >= 0).
bool validate_stirling(const Seq& seq) noexcept;

// Edge labels in depth-first-walk order; length 2n.
StirlingPermutation tree_to_code(const PlaneRecursiveTree& t);

// Inverse of tree_to_code via a stack parse; validates before parsing and
// throws std::invalid_argument on a non-Stirling sequence.
PlaneRecursiveTree code_to_tree(const StirlingPermutation& q);

// Inserts the pair (n+1)(n+1) at gap g; the result is always valid.
StirlingPermutation insert_pair(const StirlingPermutation& q, GapIndex g);

// Attaches vertex n+1 at the tree position matching gap g of the code, so
// tree_to_code(attach_leaf(t, g)) == insert_pair(tree_to_code(t), g).
PlaneRecursiveTree attach_leaf(const PlaneRecursiveTree& t, GapIndex g);

}  // namespace stirling
