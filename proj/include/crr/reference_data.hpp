#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crr/types.hpp"

// Reference data frozen from independently checked sources. Tests compare
// computed results against these; nothing here feeds the computations except
// coefficient_row, which `check` uses as a third opinion when p_max <= 60.
namespace crr::golden {

// Finite positive roots by length class. Simply laced types carry every root
// in long_roots and an empty short list.
const std::vector<Coeffs>& long_roots(AffineType t);
const std::vector<Coeffs>& short_roots(AffineType t);
std::vector<Coeffs> all_roots(AffineType t);

// Agreed value of c(p) = d(p) for p = 1..60.
const std::vector<long long>& coefficient_row(AffineType t);

// Element names grouped by residue of gamma; index = residue.
const std::vector<std::vector<std::string>>& congruence_rows(AffineType t);

// Forbidden initial colored parts (value, element name), positive values only.
const std::vector<std::pair<int, std::string>>& initial_parts(AffineType t);

struct ReferenceMatrix {
    std::vector<std::string> order;
    std::vector<std::vector<int>> entries;
};

// Difference matrices known cell-for-cell; available for D4_3, G2_1 and E6_2,
// nullptr otherwise.
const ReferenceMatrix* printed_matrix(AffineType t);

// One factor (q^x; q^y)_infinity ^ e of a known product form.
struct PochFactor {
    int x;
    int y;
    int e;
};

// Known product forms: the principal specialization of D over the dual root
// system, its (2,1,...,1) specialization, and the normalized character.
const std::vector<PochFactor>& principal_d_factors(AffineType t);
const std::vector<PochFactor>& shifted_d_factors(AffineType t);
const std::vector<PochFactor>& character_factors(AffineType t);

}  // namespace crr::golden
