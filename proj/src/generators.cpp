#include "stirling/generators.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace stirling {

namespace {

// Fenwick tree over slots 1..size, 1 while free; supports "index of k-th
// free slot" in O(log size).
class FreeSlots {
  public:
    explicit FreeSlots(int size) : size_(size), tree_(static_cast<std::size_t>(size) + 1, 0) {
        for (int i = 1; i <= size; ++i) {
            tree_[i] += 1;
            const int j = i + (i & -i);
            if (j <= size) tree_[j] += tree_[i];
        }
    }

    // 1-based index of the k-th free slot; marks it occupied.
    int take_kth(int k) {
        int pos = 0;
        int step = 1;
        while ((step << 1) <= size_) step <<= 1;
        for (; step > 0; step >>= 1) {
            const int next = pos + step;
            if (next <= size_ && tree_[next] < k) {
                pos = next;
                k -= tree_[next];
            }
        }
        const int slot = pos + 1;
        for (int i = slot; i <= size_; i += i & -i) tree_[i] -= 1;
        return slot;
    }

  private:
    int size_;
    std::vector<int> tree_;
};

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
}

}  // namespace

std::pair<StirlingPermutation, GrowthTrace> random_stirling(int n, SeededRng& rng) {
    if (n < 0) throw std::invalid_argument("random_stirling: n must be nonnegative");
    if (n > (std::numeric_limits<int>::max() - 2) / 2)
        throw std::invalid_argument("random_stirling: n too large for a 2n-slot sequence");
    GrowthTrace trace;
    if (n == 0) return {StirlingPermutation{}, trace};
    trace.choices.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = 1; k < n; ++k)
        trace.choices.push_back(static_cast<GapIndex>(rng.below(2 * static_cast<std::uint64_t>(k) + 1)));

    // Materialize the final word by placing pairs in reverse insertion order:
    // once values n..v+1 are placed, the free slots spell out the intermediate
    // word over 1..v, so the pair v sits at its (g+1)-th and (g+2)-th free slots.
    Seq seq(2 * static_cast<std::size_t>(n), 0);
    FreeSlots slots(2 * n);
    for (Symbol v = static_cast<Symbol>(n); v >= 1; --v) {
        const GapIndex g = (v == 1) ? 0 : trace.choices[static_cast<std::size_t>(v) - 2];
        const int p1 = slots.take_kth(static_cast<int>(g) + 1);
        const int p2 = slots.take_kth(static_cast<int>(g) + 1);
        seq[p1 - 1] = v;
        seq[p2 - 1] = v;
    }
    return {StirlingPermutation{std::move(seq)}, std::move(trace)};
}

PlaneRecursiveTree random_tree(int n, SeededRng& rng) {
    if (n == 0) return PlaneRecursiveTree::root_only();
    return code_to_tree(random_stirling(n, rng).first);
}

TrapezoidalWord random_trapezoidal(int n, SeededRng& rng) {
    if (n < 0) throw std::invalid_argument("random_trapezoidal: n must be nonnegative");
    Seq word;
    word.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        word.push_back(static_cast<Symbol>(1 + rng.below(2 * static_cast<std::uint64_t>(i) - 1)));
    return TrapezoidalWord{std::move(word)};
}

namespace {

void enumerate_stirling_rec(Symbol next, Symbol n, Seq& q,
                            const std::function<void(const StirlingPermutation&)>& visit) {
    if (next > n) {
        visit(StirlingPermutation{q});
        return;
    }
    const GapIndex gaps = static_cast<GapIndex>(q.size());
    for (GapIndex g = 0; g <= gaps; ++g) {
        q.insert(q.begin() + g, 2, next);
        enumerate_stirling_rec(next + 1, n, q, visit);
        q.erase(q.begin() + g, q.begin() + g + 2);
    }
}

}  // namespace

void enumerate_stirling(int n, const std::function<void(const StirlingPermutation&)>& visit, int cap) {
    check_cap(n, cap, "enumerate_stirling");
    Seq q;
    enumerate_stirling_rec(1, static_cast<Symbol>(n), q, visit);
}

std::vector<StirlingPermutation> enumerate_stirling(int n, int cap) {
    std::vector<StirlingPermutation> out;
    enumerate_stirling(n, [&](const StirlingPermutation& q) { out.push_back(q); }, cap);
    return out;
}

void enumerate_trapezoidal(int n, const std::function<void(const TrapezoidalWord&)>& visit, int cap) {
    check_cap(n, cap, "enumerate_trapezoidal");
    TrapezoidalWord w;
    w.word.assign(static_cast<std::size_t>(n), 1);
    while (true) {
        visit(w);
        int i = n - 1;
        while (i >= 0 && w.word[i] == static_cast<Symbol>(2 * i + 1)) {
            w.word[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++w.word[i];
    }
}

std::vector<TrapezoidalWord> enumerate_trapezoidal(int n, int cap) {
    std::vector<TrapezoidalWord> out;
    enumerate_trapezoidal(n, [&](const TrapezoidalWord& w) { out.push_back(w); }, cap);
    return out;
}

namespace {

void enumerate_trees_rec(Symbol next, Symbol n, PlaneRecursiveTree& t,
                         const std::function<void(const PlaneRecursiveTree&)>& visit) {
    if (next > n) {
        visit(t);
        return;
    }
    for (Symbol v = 0; v < next; ++v) {
        // index t.children[v] afresh each time: emplace_back below may reallocate
        for (std::size_t slot = 0; slot <= t.children[v].size(); ++slot) {
            t.children[v].insert(t.children[v].begin() + static_cast<std::ptrdiff_t>(slot), next);
            t.parent.push_back(v);
            t.children.emplace_back();
            enumerate_trees_rec(next + 1, n, t, visit);
            t.children.pop_back();
            t.parent.pop_back();
            t.children[v].erase(t.children[v].begin() + static_cast<std::ptrdiff_t>(slot));
        }
    }
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const PlaneRecursiveTree&)>& visit, int cap) {
    check_cap(n, cap, "enumerate_trees");
    PlaneRecursiveTree t = PlaneRecursiveTree::root_only();
    enumerate_trees_rec(1, static_cast<Symbol>(n), t, visit);
}

std::vector<PlaneRecursiveTree> enumerate_trees(int n, int cap) {
    std::vector<PlaneRecursiveTree> out;
    enumerate_trees(n, [&](const PlaneRecursiveTree& t) { out.push_back(t); }, cap);
    return out;
}

}  // namespace stirling
