#include "stirling/statistics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace stirling {

AdpCounts adp_counts(const StirlingPermutation& q) {
    const std::size_t len = q.seq.size();
    AdpCounts c;
    Symbol prev = 0;  // sentinel a_0 = 0
    for (std::size_t i = 0; i <= len; ++i) {
        const Symbol next = (i < len) ? q.seq[i] : 0;  // sentinel a_{2n+1} = 0
        if (prev < next)
            ++c.ascents;
        else if (prev > next)
            ++c.descents;
        else
            ++c.plateaux;
        prev = next;
    }
    return c;
}

long long leaves(const PlaneRecursiveTree& t) {
    long long count = 0;
    for (const auto& kids : t.children)
        if (kids.empty()) ++count;
    return count;
}

OutdegreeProfile outdegree_profile(const PlaneRecursiveTree& t) {
    OutdegreeProfile profile;
    for (const auto& kids : t.children) ++profile[static_cast<int>(kids.size())];
    return profile;
}

long long subtree_size(const PlaneRecursiveTree& t, Symbol k) {
    if (k < 1 || k > static_cast<Symbol>(t.n()))
        throw std::invalid_argument("subtree_size: vertex out of range");
    long long size = 0;
    std::vector<Symbol> stack{k};
    while (!stack.empty()) {
        Symbol v = stack.back();
        stack.pop_back();
        ++size;
        stack.insert(stack.end(), t.children[v].begin(), t.children[v].end());
    }
    return size;
}

long long occurrence_distance(const StirlingPermutation& q, Symbol k) {
    if (k < 1 || k > static_cast<Symbol>(q.n()))
        throw std::invalid_argument("occurrence_distance: value out of range");
    long long first = -1;
    for (std::size_t i = 0; i < q.seq.size(); ++i) {
        if (q.seq[i] == k) {
            if (first < 0)
                first = static_cast<long long>(i);
            else
                return static_cast<long long>(i) - first;
        }
    }
    throw std::invalid_argument("occurrence_distance: value does not occur twice");
}

long long root_degree(const PlaneRecursiveTree& t) {
    return static_cast<long long>(t.children[0].size());
}

long long top_block_count(const StirlingPermutation& q) {
    long long blocks = 0;
    long long depth = 0;
    std::vector<std::uint8_t> open(static_cast<std::size_t>(q.n()) + 1, 0);
    for (Symbol x : q.seq) {
        if (!open[x]) {
            open[x] = 1;
            ++depth;
        } else {
            --depth;
            if (depth == 0) ++blocks;
        }
    }
    return blocks;
}

long long ascent_vertex_count(const PlaneRecursiveTree& t) {
    long long count = 0;
    for (const auto& kids : t.children) {
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i == 0 || kids[i] > kids[i - 1]) ++count;
        }
    }
    return count;
}

long long descent_vertex_count(const PlaneRecursiveTree& t) {
    long long count = 0;
    for (const auto& kids : t.children) {
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i + 1 == kids.size() || kids[i] > kids[i + 1]) ++count;
        }
    }
    return count;
}

long long distinct_count(const TrapezoidalWord& w) {
    std::unordered_set<Symbol> values(w.word.begin(), w.word.end());
    return static_cast<long long>(values.size());
}

}  // namespace stirling
