#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "crr/energy.hpp"

namespace crr {

// A part of a colored partition: an integer value tagged with the index of
// the crystal element coloring it.
struct ColoredPart {
    long long value = 0;
    int color = 0;

    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

// Parts listed top-down (largest first); an admissible partition always ends
// with the ground part {0, phi} and contains it exactly once.
using ColoredPartition = std::vector<ColoredPart>;

// Residue class of a color: values colored by element b must be congruent to
// (-ht_wt(b)) mod ht(delta).
int residue(const Crystal& c, int color);

// Element indices grouped by residue; result[r] lists the colors with
// residue r in canonical order, for r = 0 .. ht(delta)-1.
std::vector<std::vector<int>> congruence_table(const Crystal& c);

// The finitely many excluded nonnegative colored values: 0 with any color
// other than phi, and ht(alpha) colored x_{-alpha}.
std::vector<std::pair<long long, int>> forbidden_parts(const Crystal& c);

bool is_forbidden(const Crystal& c, long long value, int color);

// Full admissibility check: correct ground terminator, residue classes,
// no forbidden part, and adjacent differences bounded below by the matrix
// entry indexed [lower part's color][upper part's color].
bool is_admissible(const Crystal& c, const DifferenceMatrix& m,
                   const ColoredPartition& parts);

// d(p) for p = 0..p_max by dynamic programming over (weight, last value,
// last color) states with prefix sums over the last value.
std::vector<long long> count_admissible(const Crystal& c,
                                        const DifferenceMatrix& m, int p_max);

// Exhaustive listing of the admissible partitions of weight exactly `total`.
// Independent of count_admissible by construction (direct recursive search
// over extensions of the ground part). Throws BudgetError when total exceeds
// the budget; the listing is meant for cross-validation at small weight.
std::vector<ColoredPartition> enumerate_admissible(const Crystal& c,
                                                   const DifferenceMatrix& m,
                                                   int total, int budget = 25);

// The underlying ordinary partition: lambda_k = (value_k + ht_wt(color_k)) /
// ht(delta) for every part, terminator included. Throws IntegrityError when
// a division is not exact or the result is not weakly decreasing to 0.
std::vector<long long> reconstruct_lambda(const Crystal& c,
                                          const ColoredPartition& parts);

}  // namespace crr
