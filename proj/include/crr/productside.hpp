#pragma once

#include <utility>
#include <vector>

#include "crr/rootsystem.hpp"
#include "crr/types.hpp"

namespace crr {

// An integer power series truncated at a fixed degree. All arithmetic is
// exact modulo q^{N+1}; 64-bit coefficient overflow throws SeriesOverflow
// instead of wrapping. The module-level series builders below additionally
// retry overflowing computations with arbitrary-precision intermediates, so
// they only throw when a final coefficient genuinely exceeds 64 bits.
class TruncatedSeries {
public:
    // The constant series 1 truncated at max_degree.
    explicit TruncatedSeries(int max_degree);
    static TruncatedSeries from_coeffs(std::vector<long long> coeffs);

    int max_degree() const { return static_cast<int>(c_.size()) - 1; }
    long long at(int k) const { return c_.at(k); }
    const std::vector<long long>& coeffs() const { return c_; }

    void multiply_one_minus(int m);  // *= (1 - q^m), m >= 1
    void divide_one_minus(int m);    // /= (1 - q^m), m >= 1
    TruncatedSeries times(const TruncatedSeries& other) const;
    TruncatedSeries inverse() const;  // constant term must be 1

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<long long> c_;
};

// Expansion of prod_{k>=0} (1 - q^{x+ky})^exponent mod q^{N+1}.
// Preconditions: x >= 0, y >= 1, N >= 0; x = 0 with a negative exponent is
// rejected (the constant term would not be a unit).
TruncatedSeries pochhammer_factor(int x, int y, int exponent, int max_degree);

// The (residue, modulus) classes whose union, with multiplicity, gives the
// allowed part sizes of the colored Euler product for this type.
const std::vector<std::pair<int, int>>& congruence_classes(AffineType t);

// Number of classes containing m; the exponent of (1 - q^m)^{-1} in the
// Euler product. m >= 1.
int multiplicity_a(AffineType t, long long m);

// The c-series: prod_{m>=1} (1 - q^m)^{-a_m} mod q^{N+1}.
TruncatedSeries product_side_series(AffineType t, int max_degree);

// Principally specialized denominator product of the affine root system of
// dual_type itself: prod over affine positive roots alpha with
// ht_s(alpha) <= N of (1 - q^{ht_s(alpha)})^{mult(alpha)}. The specialization
// vector s has rank+1 entries, all >= 1, node 0 first.
TruncatedSeries specialized_denominator(AffineType dual_type,
                                        const std::vector<int>& s,
                                        int max_degree);

// The principally specialized normalized character of the basic
// representation: specialized_denominator(dual, (2,1,...,1)) divided by
// specialized_denominator(dual, all-ones), where dual is the transposed-
// Cartan partner of t.
TruncatedSeries normalized_character_series(AffineType t, int max_degree);

// The same character divided by (q^{ht delta}; q^{ht delta})_infty. Equals
// product_side_series for every type; computed independently of it.
TruncatedSeries character_product_series(AffineType t, int max_degree);

}  // namespace crr
