#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crr {

// The seven exceptional affine types handled by this library.
enum class AffineType { G2_1, D4_3, F4_1, E6_2, E6_1, E7_1, E8_1 };

inline constexpr std::array<AffineType, 7> kAllTypes = {
    AffineType::G2_1, AffineType::D4_3, AffineType::F4_1, AffineType::E6_2,
    AffineType::E6_1, AffineType::E7_1, AffineType::E8_1,
};

std::string_view type_name(AffineType t);
std::optional<AffineType> parse_type(std::string_view name);

// Root coefficient vector over the finite simple roots (alpha_1 .. alpha_n).
using Coeffs = std::vector<int>;

inline int ht(const Coeffs& a) {
    int s = 0;
    for (int c : a) s += c;
    return s;
}

// Internal invariant violations: a thrown IntegrityError always means a bug,
// not bad user input.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conflicting values met while labeling the tensor graph.
struct ConsistencyError : IntegrityError {
    using IntegrityError::IntegrityError;
};

// Some tensor vertex was never reached.
struct CoverageError : IntegrityError {
    using IntegrityError::IntegrityError;
};

// Request exceeds a deliberate resource bound (e.g. oracle enumeration size).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A truncated-series coefficient left the 64-bit range.
struct SeriesOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace crr
