#include "stirling/urnsim.hpp"

#include <numeric>
#include <stdexcept>

#include "stirling/statistics.hpp"

namespace stirling {

void UrnSpec::validate() const {
    if (initial.empty() || replacement.size() != initial.size())
        throw std::invalid_argument("UrnSpec: replacement must be square and match initial");
    bool any_positive = false;
    for (long long c : initial) {
        if (c < 0) throw std::invalid_argument("UrnSpec: negative initial count");
        if (c > 0) any_positive = true;
    }
    if (!any_positive) throw std::invalid_argument("UrnSpec: initial composition is empty");
    for (const auto& row : replacement) {
        if (row.size() != initial.size())
            throw std::invalid_argument("UrnSpec: replacement must be square and match initial");
        for (long long v : row)
            if (v < 0) throw std::invalid_argument("UrnSpec: negative replacement entry");
    }
}

long long UrnState::total() const {
    return std::accumulate(composition.begin(), composition.end(), 0LL);
}

UrnSpec urn_a() {
    return UrnSpec{{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {1, 1, 1}};
}

UrnSpec two_color_urn() {
    return UrnSpec{{{0, 2}, {1, 1}}, {1, 2}};
}

UrnState initial_state(const UrnSpec& spec) {
    spec.validate();
    return UrnState{0, spec.initial, -1};
}

UrnState apply_draw(const UrnSpec& spec, const UrnState& s, int color) {
    if (color < 0 || color >= spec.colors()) throw std::invalid_argument("apply_draw: bad color");
    UrnState next = s;
    ++next.step;
    next.last_drawn = color;
    for (int j = 0; j < spec.colors(); ++j) next.composition[j] += spec.replacement[color][j];
    return next;
}

UrnState step(const UrnSpec& spec, const UrnState& s, SeededRng& rng) {
    const long long total = s.total();
    if (total <= 0) throw std::invalid_argument("step: empty urn");
    long long u = static_cast<long long>(rng.below(static_cast<std::uint64_t>(total)));
    int color = 0;
    while (u >= s.composition[color]) {
        u -= s.composition[color];
        ++color;
    }
    return apply_draw(spec, s, color);
}

std::vector<UrnState> run(const UrnSpec& spec, long long steps, SeededRng& rng) {
    if (steps < 0) throw std::invalid_argument("run: steps must be nonnegative");
    std::vector<UrnState> trajectory;
    trajectory.reserve(static_cast<std::size_t>(steps) + 1);
    trajectory.push_back(initial_state(spec));
    for (long long i = 0; i < steps; ++i) trajectory.push_back(step(spec, trajectory.back(), rng));
    return trajectory;
}

std::array<long long, 4> char_poly3(const UrnSpec& spec) {
    if (spec.colors() != 3) throw std::invalid_argument("char_poly3: needs exactly 3 colors");
    const auto& a = spec.replacement;
    const long long trace = a[0][0] + a[1][1] + a[2][2];
    // sum of principal 2x2 minors
    const long long minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
                             (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                             (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
    const long long det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                          a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    // det(xI - A) = x^3 - tr x^2 + minors x - det
    return {-det, minors, -trace, 1};
}

namespace {

int classify_gap(const Seq& seq, GapIndex g) {
    const Symbol before = (g == 0) ? 0 : seq[static_cast<std::size_t>(g) - 1];
    const Symbol after = (g == static_cast<GapIndex>(seq.size())) ? 0 : seq[static_cast<std::size_t>(g)];
    if (before < after) return 0;  // ascent
    if (before > after) return 1;  // descent
    return 2;                      // plateau
}

}  // namespace

bool coupled_growth_check_with(int n, const std::function<GapIndex(int, GapIndex)>& choose,
                               std::vector<long long>* final_composition) {
    if (n < 1) throw std::invalid_argument("coupled_growth_check: n must be >= 1");
    const UrnSpec spec = urn_a();
    UrnState urn = initial_state(spec);
    StirlingPermutation q{{1, 1}};

    auto matches = [&] {
        const AdpCounts counts = adp_counts(q);
        return urn.composition[0] == counts.ascents && urn.composition[1] == counts.descents &&
               urn.composition[2] == counts.plateaux;
    };
    bool ok = matches();
    for (int m = 1; ok && m < n; ++m) {
        const GapIndex g = choose(m, 2 * static_cast<GapIndex>(m));
        if (g < 0 || g > 2 * static_cast<GapIndex>(m))
            throw std::invalid_argument("coupled_growth_check: gap choice out of range");
        // the classified gap is the induced urn draw; the gap itself is
        // destroyed and replaced by ascent, plateau, descent
        urn = apply_draw(spec, urn, classify_gap(q.seq, g));
        q = insert_pair(q, g);
        ok = matches();
    }
    if (final_composition) *final_composition = urn.composition;
    return ok;
}

bool coupled_growth_check(int n, SeededRng& rng, std::vector<long long>* final_composition) {
    return coupled_growth_check_with(
        n,
        [&rng](int, GapIndex max_gap) {
            return static_cast<GapIndex>(rng.below(static_cast<std::uint64_t>(max_gap) + 1));
        },
        final_composition);
}

}  // namespace stirling
