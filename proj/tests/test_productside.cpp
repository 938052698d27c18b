#include <climits>
#include <vector>

#include "crr/productside.hpp"
#include "crr/reference_data.hpp"
#include "doctest.h"

using namespace crr;

namespace {

TruncatedSeries evaluate(const std::vector<golden::PochFactor>& factors,
                         int max_degree) {
    TruncatedSeries out(max_degree);
    for (const auto& f : factors)
        out = out.times(pochhammer_factor(f.x, f.y, f.e, max_degree));
    return out;
}

std::vector<int> ones_vector(AffineType dual, int first) {
    std::vector<int> s(affine_config(dual).rank() + 1, 1);
    s[0] = first;
    return s;
}

}  // namespace

TEST_CASE("series construction and ring operations") {
    TruncatedSeries one(5);
    CHECK(one.max_degree() == 5);
    CHECK(one.coeffs() == std::vector<long long>{1, 0, 0, 0, 0, 0});

    auto s = TruncatedSeries::from_coeffs({1, 2, 3});
    CHECK(s.max_degree() == 2);
    CHECK(s.at(1) == 2);

    // multiply / divide by the same factor round-trips
    auto t = s;
    t.multiply_one_minus(2);
    CHECK(t.coeffs() == std::vector<long long>{1, 2, 2});
    t.divide_one_minus(2);
    CHECK(t == s);

    // inverse really is a multiplicative inverse
    auto u = TruncatedSeries::from_coeffs({1, -1, 4, 0, 2});
    CHECK(u.times(u.inverse()) == TruncatedSeries(4));

    CHECK_THROWS_AS(TruncatedSeries::from_coeffs({2, 0}).inverse(),
                    std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(3).times(TruncatedSeries(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::from_coeffs({}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(3).multiply_one_minus(0),
                    std::invalid_argument);
}

TEST_CASE("series overflow is detected, not wrapped") {
    auto s = TruncatedSeries::from_coeffs({1, LLONG_MAX});
    CHECK_THROWS_AS(s.divide_one_minus(1), SeriesOverflow);
    auto big = TruncatedSeries::from_coeffs({1, LLONG_MIN});
    CHECK_THROWS_AS(big.multiply_one_minus(1), SeriesOverflow);
}

TEST_CASE("pochhammer factors") {
    CHECK(pochhammer_factor(1, 1, 1, 3).coeffs() ==
          std::vector<long long>{1, -1, -1, 0});
    // exponent 0 is the empty product
    CHECK(pochhammer_factor(3, 2, 0, 4) == TruncatedSeries(4));
    // a factor (1 - q^0) annihilates everything
    CHECK(pochhammer_factor(0, 1, 2, 3).coeffs() ==
          std::vector<long long>{0, 0, 0, 0});
    CHECK_THROWS_AS(pochhammer_factor(0, 1, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer_factor(-1, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer_factor(1, 0, 1, 3), std::invalid_argument);

    // 1 / (q; q)_infty generates the partition numbers
    CHECK(pochhammer_factor(1, 1, -1, 10).coeffs() ==
          std::vector<long long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});

    // inverse pair multiplies back to 1
    auto f = pochhammer_factor(2, 3, 2, 20);
    auto g = pochhammer_factor(2, 3, -2, 20);
    CHECK(f.times(g) == TruncatedSeries(20));
}

TEST_CASE("part size multiplicities") {
    CHECK_THROWS_AS(multiplicity_a(AffineType::G2_1, 0), std::invalid_argument);

    CHECK(multiplicity_a(AffineType::G2_1, 1) == 1);
    CHECK(multiplicity_a(AffineType::G2_1, 2) == 0);
    CHECK(multiplicity_a(AffineType::G2_1, 6) == 2);
    CHECK(multiplicity_a(AffineType::G2_1, 24) == 2);
    CHECK(multiplicity_a(AffineType::G2_1, 30) == 1);

    CHECK(multiplicity_a(AffineType::D4_3, 1) == 1);
    CHECK(multiplicity_a(AffineType::D4_3, 2) == 0);
    CHECK(multiplicity_a(AffineType::D4_3, 4) == 1);

    CHECK(multiplicity_a(AffineType::F4_1, 12) == 2);
    CHECK(multiplicity_a(AffineType::F4_1, 48) == 2);
    CHECK(multiplicity_a(AffineType::E8_1, 1) == 1);
    CHECK(multiplicity_a(AffineType::E8_1, 2) == 0);
    CHECK(multiplicity_a(AffineType::E8_1, 30) == 1);

    // exponent 2 happens exactly on two residues mod 30 resp. 60, and only
    // for the two types whose class lists overlap
    for (long long m = 1; m <= 420; ++m) {
        for (AffineType t : kAllTypes) {
            const int a = multiplicity_a(t, m);
            CHECK(a >= 0);
            if (t == AffineType::G2_1)
                CHECK((a == 2) == (m % 30 == 6 || m % 30 == 24));
            else if (t == AffineType::F4_1)
                CHECK((a == 2) == (m % 60 == 12 || m % 60 == 48));
            else
                CHECK(a <= 1);
        }
    }
}

TEST_CASE("congruence class lists are well-formed") {
    for (AffineType t : kAllTypes) {
        const auto& classes = congruence_classes(t);
        CHECK(!classes.empty());
        for (const auto& [r, mod] : classes) {
            CHECK(mod >= 1);
            CHECK(r >= 0);
            CHECK(r < mod);
        }
    }
}

TEST_CASE("product series matches the embedded coefficients") {
    for (AffineType t : kAllTypes) {
        CAPTURE(type_name(t));
        const auto series = product_side_series(t, 60);
        CHECK(series.at(0) == 1);
        const auto& ref = golden::coefficient_row(t);
        for (int p = 1; p <= 60; ++p) {
            CAPTURE(p);
            CHECK(series.at(p) == ref[p - 1]);
        }
    }
    CHECK(product_side_series(AffineType::D4_3, 4).coeffs() ==
          std::vector<long long>{1, 1, 1, 1, 2});
    CHECK(product_side_series(AffineType::G2_1, 6).at(6) == 4);
    CHECK(product_side_series(AffineType::E8_1, 0).coeffs() ==
          std::vector<long long>{1});
}

TEST_CASE("coefficient coincidences between dual pairs") {
    CHECK(product_side_series(AffineType::D4_3, 60) ==
          product_side_series(AffineType::E6_1, 60));
    CHECK(product_side_series(AffineType::E6_2, 60) ==
          product_side_series(AffineType::E7_1, 60));
    CHECK(product_side_series(AffineType::G2_1, 60) !=
          product_side_series(AffineType::F4_1, 60));
}

TEST_CASE("specialized denominators match their product forms") {
    for (AffineType t : kAllTypes) {
        CAPTURE(type_name(t));
        const AffineType dual = affine_config(t).dual;
        const auto d1 =
            specialized_denominator(dual, ones_vector(dual, 1), 60);
        const auto d2 =
            specialized_denominator(dual, ones_vector(dual, 2), 60);
        CHECK(d1 == evaluate(golden::principal_d_factors(t), 60));
        CHECK(d2 == evaluate(golden::shifted_d_factors(t), 60));
    }
}

TEST_CASE("specialized denominator input validation") {
    CHECK_THROWS_AS(
        specialized_denominator(AffineType::G2_1, {1, 1}, 10),
        std::invalid_argument);
    CHECK_THROWS_AS(
        specialized_denominator(AffineType::G2_1, {1, 0, 1}, 10),
        std::invalid_argument);
}

TEST_CASE("normalized character matches its product form") {
    for (AffineType t : kAllTypes) {
        CAPTURE(type_name(t));
        const AffineType dual = affine_config(t).dual;
        const auto chi = normalized_character_series(t, 60);
        CHECK(chi == evaluate(golden::character_factors(t), 60));
        // chi is the ratio of the two specializations
        const auto d1 =
            specialized_denominator(dual, ones_vector(dual, 1), 60);
        const auto d2 =
            specialized_denominator(dual, ones_vector(dual, 2), 60);
        CHECK(chi.times(d1) == d2);
    }
}

TEST_CASE("character route reproduces the product series") {
    for (AffineType t : kAllTypes) {
        CAPTURE(type_name(t));
        CHECK(character_product_series(t, 60) == product_side_series(t, 60));
    }
}

TEST_CASE("large-degree character escalates and narrows") {
    // at degree 800 the intermediate denominators overflow 64 bits but the
    // character coefficients do not; the retry with wide integers must kick
    // in and produce exact values
    const auto chi = normalized_character_series(AffineType::D4_3, 800);
    CHECK(chi.at(0) == 1);
    CHECK(chi.at(1) == 1);
    CHECK(chi.at(60) == 1038);
    CHECK(chi.at(799) == 2419362300170531LL);
    CHECK(chi.at(800) == 2481246459381805LL);
    const auto small = normalized_character_series(AffineType::D4_3, 60);
    for (int k = 0; k <= 60; ++k) CHECK(chi.at(k) == small.at(k));
}

TEST_CASE("genuinely oversized coefficients still throw") {
    CHECK_THROWS_AS(normalized_character_series(AffineType::D4_3, 1200),
                    SeriesOverflow);
}
