#include "crr/productside.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <string>

namespace crr {
namespace {

void acc_add(long long& a, const long long& b) {
    if (__builtin_add_overflow(a, b, &a))
        throw SeriesOverflow("series coefficient overflow in addition");
}

void acc_sub(long long& a, const long long& b) {
    if (__builtin_sub_overflow(a, b, &a))
        throw SeriesOverflow("series coefficient overflow in subtraction");
}

long long product_of(const long long& a, const long long& b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw SeriesOverflow("series coefficient overflow in multiplication");
    return r;
}

void acc_add(mpz_class& a, const mpz_class& b) { a += b; }
void acc_sub(mpz_class& a, const mpz_class& b) { a -= b; }
mpz_class product_of(const mpz_class& a, const mpz_class& b) { return a * b; }

template <class I>
std::vector<I> series_one(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    std::vector<I> c(max_degree + 1);
    c[0] = 1;
    return c;
}

template <class I>
void mul_one_minus(std::vector<I>& c, int m) {
    if (m < 1) throw std::invalid_argument("factor degree must be >= 1");
    for (int j = static_cast<int>(c.size()) - 1; j >= m; --j) acc_sub(c[j], c[j - m]);
}

template <class I>
void div_one_minus(std::vector<I>& c, int m) {
    if (m < 1) throw std::invalid_argument("factor degree must be >= 1");
    for (int j = m; j < static_cast<int>(c.size()); ++j) acc_add(c[j], c[j - m]);
}

template <class I>
std::vector<I> mul(const std::vector<I>& a, const std::vector<I>& b) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<I> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= n - i; ++j) {
            if (b[j] == 0) continue;
            acc_add(out[i + j], product_of(a[i], b[j]));
        }
    }
    return out;
}

template <class I>
std::vector<I> inv(const std::vector<I>& a) {
    if (a[0] != 1)
        throw std::invalid_argument("series inverse requires constant term 1");
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<I> out(n + 1);
    out[0] = 1;
    for (int k = 1; k <= n; ++k) {
        I acc{};
        for (int j = 1; j <= k; ++j)
            if (a[j] != 0) acc_add(acc, product_of(a[j], out[k - j]));
        I neg{};
        acc_sub(neg, acc);
        out[k] = std::move(neg);
    }
    return out;
}

template <class I>
std::vector<I> pochhammer_core(int x, int y, int exponent, int max_degree) {
    if (x < 0) throw std::invalid_argument("pochhammer offset must be >= 0");
    if (y < 1) throw std::invalid_argument("pochhammer step must be >= 1");
    auto s = series_one<I>(max_degree);
    if (exponent == 0) return s;
    if (x == 0) {
        if (exponent < 0)
            throw std::invalid_argument(
                "pochhammer with zero offset is not invertible");
        s[0] = 0;  // the k = 0 factor is (1 - q^0) = 0
        return s;
    }
    for (long long k = x; k <= max_degree; k += y)
        for (int t = 0; t < std::abs(exponent); ++t)
            (exponent > 0 ? mul_one_minus<I> : div_one_minus<I>)(s, static_cast<int>(k));
    return s;
}

template <class I>
std::vector<I> product_core(AffineType t, int max_degree) {
    auto s = series_one<I>(max_degree);
    for (int m = 1; m <= max_degree; ++m)
        for (int k = 0; k < multiplicity_a(t, m); ++k) div_one_minus(s, m);
    return s;
}

template <class I>
std::vector<I> specialized_core(AffineType dual_type, const std::vector<int>& s,
                                int max_degree) {
    auto out = series_one<I>(max_degree);
    const TypeConfig& config = affine_config(dual_type);
    for (const auto& root : affine_positive_root_heights(config, s, max_degree))
        for (int k = 0; k < root.mult; ++k)
            mul_one_minus(out, static_cast<int>(root.height));
    return out;
}

template <class I>
std::vector<I> character_core(AffineType t, int max_degree) {
    const AffineType dual = affine_config(t).dual;
    std::vector<int> ones(affine_config(dual).rank() + 1, 1);
    std::vector<int> shifted = ones;
    shifted[0] = 2;
    return mul(specialized_core<I>(dual, shifted, max_degree),
               inv(specialized_core<I>(dual, ones, max_degree)));
}

template <class I>
std::vector<I> character_product_core(AffineType t, int max_degree) {
    auto s = character_core<I>(t, max_degree);
    const int hd = affine_config(t).ht_delta();
    for (int m = hd; m <= max_degree; m += hd) div_one_minus(s, m);
    return s;
}

std::vector<long long> narrow(const std::vector<mpz_class>& big) {
    std::vector<long long> out;
    out.reserve(big.size());
    for (const mpz_class& v : big) {
        if (!v.fits_slong_p())
            throw SeriesOverflow("final series coefficient exceeds 64-bit range");
        out.push_back(v.get_si());
    }
    return out;
}

// Runs the 64-bit computation, retrying once with arbitrary-precision
// intermediates when a coefficient guard trips mid-computation.
template <class F>
std::vector<long long> with_escalation(F&& compute) {
    try {
        return compute.template operator()<long long>();
    } catch (const SeriesOverflow&) {
        return narrow(compute.template operator()<mpz_class>());
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int max_degree)
    : c_(series_one<long long>(max_degree)) {}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<long long> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
    TruncatedSeries s(0);
    s.c_ = std::move(coeffs);
    return s;
}

void TruncatedSeries::multiply_one_minus(int m) { mul_one_minus(c_, m); }

void TruncatedSeries::divide_one_minus(int m) { div_one_minus(c_, m); }

TruncatedSeries TruncatedSeries::times(const TruncatedSeries& other) const {
    if (other.max_degree() != max_degree())
        throw std::invalid_argument("series truncation degrees differ");
    return from_coeffs(mul(c_, other.c_));
}

TruncatedSeries TruncatedSeries::inverse() const { return from_coeffs(inv(c_)); }

TruncatedSeries pochhammer_factor(int x, int y, int exponent, int max_degree) {
    return TruncatedSeries::from_coeffs(with_escalation(
        [&]<class I>() { return pochhammer_core<I>(x, y, exponent, max_degree); }));
}

const std::vector<std::pair<int, int>>& congruence_classes(AffineType t) {
    static const std::vector<std::pair<int, int>> tables[7] = {
        /* G2_1 */ {{0, 6}, {1, 6}, {5, 6}, {6, 15}, {9, 15}},
        /* D4_3 */ {{1, 6}, {5, 6}, {0, 4}},
        /* F4_1 */ {{1, 6}, {5, 6}, {8, 20}, {12, 20}, {0, 12}},
        /* E6_2 */ {{1, 6}, {5, 6}, {0, 9}},
        /* E6_1 */ {{1, 6}, {5, 6}, {0, 12}, {4, 12}, {8, 12}},
        /* E7_1 */ {{1, 6}, {5, 6}, {0, 18}, {9, 18}},
        /* E8_1 */ {{0, 30}, {1, 30}, {7, 30}, {11, 30}, {13, 30},
                    {17, 30}, {19, 30}, {23, 30}, {29, 30}},
    };
    return tables[static_cast<int>(t)];
}

int multiplicity_a(AffineType t, long long m) {
    if (m < 1) throw std::invalid_argument("part size must be >= 1");
    int count = 0;
    for (const auto& [r, n] : congruence_classes(t)) count += m % n == r % n;
    return count;
}

TruncatedSeries product_side_series(AffineType t, int max_degree) {
    return TruncatedSeries::from_coeffs(
        with_escalation([&]<class I>() { return product_core<I>(t, max_degree); }));
}

TruncatedSeries specialized_denominator(AffineType dual_type,
                                        const std::vector<int>& s, int max_degree) {
    return TruncatedSeries::from_coeffs(with_escalation(
        [&]<class I>() { return specialized_core<I>(dual_type, s, max_degree); }));
}

TruncatedSeries normalized_character_series(AffineType t, int max_degree) {
    return TruncatedSeries::from_coeffs(
        with_escalation([&]<class I>() { return character_core<I>(t, max_degree); }));
}

TruncatedSeries character_product_series(AffineType t, int max_degree) {
    return TruncatedSeries::from_coeffs(with_escalation(
        [&]<class I>() { return character_product_core<I>(t, max_degree); }));
}

}  // namespace crr
