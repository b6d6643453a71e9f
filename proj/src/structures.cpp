#include "stirling/structures.hpp"

#include <sstream>
#include <stdexcept>

namespace stirling {

PlaneRecursiveTree PlaneRecursiveTree::root_only() {
    PlaneRecursiveTree t;
    t.parent = {-1};
    t.children = {{}};
    return t;
}

PlaneRecursiveTree PlaneRecursiveTree::from_children(std::vector<std::vector<Symbol>> kids) {
    PlaneRecursiveTree t;
    t.children = std::move(kids);
    t.parent.assign(t.children.size(), -1);
    for (std::size_t v = 0; v < t.children.size(); ++v) {
        for (Symbol c : t.children[v]) {
            if (c <= 0 || static_cast<std::size_t>(c) >= t.children.size() || t.parent[c] != -1)
                throw std::invalid_argument("from_children: malformed child lists");
            t.parent[c] = static_cast<Symbol>(v);
        }
    }
    if (!t.valid()) throw std::invalid_argument("from_children: not a plane recursive tree");
    return t;
}

bool PlaneRecursiveTree::valid() const {
    const std::size_t m = parent.size();
    if (m == 0 || children.size() != m) return false;
    if (parent[0] != -1) return false;
    std::size_t child_total = 0;
    for (std::size_t v = 0; v < m; ++v) {
        child_total += children[v].size();
        for (Symbol c : children[v]) {
            if (c <= 0 || static_cast<std::size_t>(c) >= m) return false;
            if (parent[c] != static_cast<Symbol>(v)) return false;
        }
    }
    if (child_total != m - 1) return false;
    for (std::size_t j = 1; j < m; ++j) {
        if (parent[j] < 0 || parent[j] >= static_cast<Symbol>(j)) return false;
    }
    return true;
}

std::string PlaneRecursiveTree::render() const {
    std::string out;
    // iterative pre-order with explicit close markers
    struct Frame {
        Symbol v;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    out += "(0";
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < children[f.v].size()) {
            Symbol c = children[f.v][f.next++];
            out += " (";
            out += std::to_string(c);
            stack.push_back({c, 0});
        } else {
            out += ")";
            stack.pop_back();
        }
    }
    return out;
}

std::string StirlingPermutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(seq[i]);
    }
    return out;
}

StirlingPermutation StirlingPermutation::parse(const std::string& text) {
    Seq seq;
    std::istringstream in(text);
    long long x;
    while (in >> x) seq.push_back(static_cast<Symbol>(x));
    if (!in.eof()) throw std::invalid_argument("StirlingPermutation::parse: non-integer token");
    if (!validate_stirling(seq))
        throw std::invalid_argument("StirlingPermutation::parse: not a Stirling permutation");
    return StirlingPermutation{std::move(seq)};
}

bool TrapezoidalWord::valid() const {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 1 || word[i] > static_cast<Symbol>(2 * i + 1)) return false;
    }
    return true;
}

std::string TrapezoidalWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

TrapezoidalWord TrapezoidalWord::parse(const std::string& text) {
    Seq w;
    std::istringstream in(text);
    long long x;
    while (in >> x) w.push_back(static_cast<Symbol>(x));
    if (!in.eof()) throw std::invalid_argument("TrapezoidalWord::parse: non-integer token");
    TrapezoidalWord word{std::move(w)};
    if (!word.valid()) throw std::invalid_argument("TrapezoidalWord::parse: a_i out of {1,...,2i-1}");
    return word;
}

bool validate_stirling(const Seq& seq) noexcept {
    if (seq.size() % 2 != 0) return false;
    const Symbol n = static_cast<Symbol>(seq.size() / 2);
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Symbol> open;
    open.reserve(n);
    for (Symbol x : seq) {
        if (x < 1 || x > n) return false;
        if (seen[x] == 0) {
            // opening a pair inside pair u requires x > u
            if (!open.empty() && open.back() > x) return false;
            open.push_back(x);
            seen[x] = 1;
        } else if (seen[x] == 1) {
            // pairs must close innermost-first
            if (open.empty() || open.back() != x) return false;
            open.pop_back();
            seen[x] = 2;
        } else {
            return false;
        }
    }
    return open.empty();
}

StirlingPermutation tree_to_code(const PlaneRecursiveTree& t) {
    if (!t.valid()) throw std::invalid_argument("tree_to_code: invalid tree");
    Seq code;
    code.reserve(2 * static_cast<std::size_t>(t.n()));
    struct Frame {
        Symbol v;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < t.children[f.v].size()) {
            Symbol c = t.children[f.v][f.next++];
            code.push_back(c);  // walk down edge c
            stack.push_back({c, 0});
        } else {
            Symbol v = f.v;
            stack.pop_back();
            if (v != 0) code.push_back(v);  // walk back up edge v
        }
    }
    return StirlingPermutation{std::move(code)};
}

PlaneRecursiveTree code_to_tree(const StirlingPermutation& q) {
    if (!validate_stirling(q.seq)) throw std::invalid_argument("code_to_tree: not a Stirling permutation");
    const int n = q.n();
    PlaneRecursiveTree t;
    t.parent.assign(static_cast<std::size_t>(n) + 1, -1);
    t.children.assign(static_cast<std::size_t>(n) + 1, {});
    std::vector<Symbol> stack{0};
    std::vector<std::uint8_t> opened(static_cast<std::size_t>(n) + 1, 0);
    for (Symbol x : q.seq) {
        if (!opened[x]) {
            t.parent[x] = stack.back();
            t.children[stack.back()].push_back(x);
            stack.push_back(x);
            opened[x] = 1;
        } else {
            stack.pop_back();
        }
    }
    return t;
}

StirlingPermutation insert_pair(const StirlingPermutation& q, GapIndex g) {
    const GapIndex len = static_cast<GapIndex>(q.seq.size());
    if (g < 0 || g > len) throw std::invalid_argument("insert_pair: gap out of range");
    StirlingPermutation out = q;
    const Symbol v = static_cast<Symbol>(q.n() + 1);
    out.seq.insert(out.seq.begin() + g, 2, v);
    return out;
}

PlaneRecursiveTree attach_leaf(const PlaneRecursiveTree& t, GapIndex g) {
    const GapIndex len = 2 * static_cast<GapIndex>(t.n());
    if (g < 0 || g > len) throw std::invalid_argument("attach_leaf: gap out of range");
    // Walk the tree as the depth-first code walk would, counting emitted
    // symbols; the moment the count reaches g identifies (vertex, child slot).
    struct Frame {
        Symbol v;
        std::size_t slot;
    };
    std::vector<Frame> stack{{0, 0}};
    GapIndex emitted = 0;
    Symbol at_vertex = 0;
    std::size_t at_slot = 0;
    while (true) {
        Frame& f = stack.back();
        if (emitted == g) {
            at_vertex = f.v;
            at_slot = f.slot;
            break;
        }
        if (f.slot < t.children[f.v].size()) {
            Symbol c = t.children[f.v][f.slot];
            ++f.slot;
            ++emitted;  // first copy of c
            stack.push_back({c, 0});
        } else {
            // g <= 2n guarantees the root frame is never popped here
            stack.pop_back();
            ++emitted;  // second copy of the popped vertex's edge
        }
    }
    PlaneRecursiveTree out = t;
    const Symbol neu = static_cast<Symbol>(t.n() + 1);
    out.parent.push_back(at_vertex);
    out.children[at_vertex].insert(out.children[at_vertex].begin() + static_cast<std::ptrdiff_t>(at_slot), neu);
    out.children.emplace_back();
    return out;
}

}  // namespace stirling
