#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crr/crystal.hpp"

namespace crr {

// One lowering arrow of the tensor graph on B (x) B. The signature rule picks
// the factor: node i acts on the left factor when phi_i(left) > eps_i(right),
// otherwise on the right. delta is the change of F along the arrow: -1 when
// the left factor moves, +1 when the right one does.
struct TensorArrow {
    int from_left, from_right;
    int to_left, to_right;
    int node;
    int delta;
};

std::vector<TensorArrow> tensor_arrows(const Crystal& c);

// F on all ordered pairs, grounded at F(phi (x) phi) = 0 and propagated over
// the tensor graph treating arrows as traversable in both directions.
// result[left][right] = F(left (x) right).
//
// A conflicting label throws ConsistencyError; an unreachable pair throws
// CoverageError. When shuffle_seed is set the frontier is consumed in a
// seeded random order instead of FIFO; the result must not depend on it.
std::vector<std::vector<int>> tensor_energy(
    const Crystal& c, std::optional<uint64_t> shuffle_seed = std::nullopt);

// The difference matrix: entries[row][col] = F(row (x) col) in canonical
// element order, with the element names as row/column headers. Row phi obeys
// entries[phi][b] = ht(delta) - ht_wt(b) for b != phi.
struct DifferenceMatrix {
    AffineType type;
    std::vector<std::string> order;
    std::vector<std::vector<int>> entries;

    friend bool operator==(const DifferenceMatrix&, const DifferenceMatrix&) = default;
};

DifferenceMatrix difference_matrix(
    const Crystal& c, std::optional<uint64_t> shuffle_seed = std::nullopt);

// Recovers the underlying level label H(left (x) right) =
// (F - ht_wt(left) + ht_wt(right)) / ht(delta). Throws IntegrityError when
// the division is not exact; values land in {0, 1, 2}.
std::vector<std::vector<int>> energy_levels(const Crystal& c,
                                            const std::vector<std::vector<int>>& F);

}  // namespace crr
