#pragma once

#include <array>
#include <functional>
#include <vector>

#include "stirling/rng.hpp"
#include "stirling/structures.hpp"

namespace stirling {

// Generalized Polya urn: when color i is drawn it is returned together with
// replacement[i][j] new balls of each color j. Entries are nonnegative.
struct UrnSpec {
    std::vector<std::vector<long long>> replacement;
    std::vector<long long> initial;

    int colors() const { return static_cast<int>(initial.size()); }
    void validate() const;  // throws std::invalid_argument
};

struct UrnState {
    long long step = 0;
    std::vector<long long> composition;
    int last_drawn = -1;  // color drawn to reach this state, -1 for the initial state

    long long total() const;
};

// Ascent/descent/plateau urn: three colors, zero diagonal, ones elsewhere,
// started at (1,1,1).
UrnSpec urn_a();

// (plateau, non-plateau) lumping of urn_a: rows (0,2) and (1,1), start (1,2).
UrnSpec two_color_urn();

UrnState initial_state(const UrnSpec& spec);

// Adds replacement row `color` without drawing; the deterministic half of step.
UrnState apply_draw(const UrnSpec& spec, const UrnState& s, int color);

// Draws color i with probability composition[i]/total using a single integer
// variate against cumulative counts, then applies its replacement row.
UrnState step(const UrnSpec& spec, const UrnState& s, SeededRng& rng);

// Iterates step; the trajectory includes the initial state, so its length is
// steps+1.
std::vector<UrnState> run(const UrnSpec& spec, long long steps, SeededRng& rng);

// Integer characteristic polynomial of a 3-color replacement matrix,
// coefficients of 1, x, x^2, x^3.
std::array<long long, 4> char_poly3(const UrnSpec& spec);

// Grows a Stirling permutation by uniform gap insertion while advancing urn_a
// by the draws the gap classifications induce; true iff the urn composition
// equals the (ascents, descents, plateaux) of the permutation at every step.
bool coupled_growth_check(int n, SeededRng& rng, std::vector<long long>* final_composition = nullptr);

// Same coupling with injected gap choices: choose(step m, 2m) returns the gap.
bool coupled_growth_check_with(int n, const std::function<GapIndex(int, GapIndex)>& choose,
                               std::vector<long long>* final_composition = nullptr);

}  // namespace stirling
