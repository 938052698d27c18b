#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crr/energy.hpp"
#include "crr/productside.hpp"
#include "crr/sumside.hpp"

namespace crr {

enum class OutputFormat { Csv, Json, Md };

std::optional<OutputFormat> parse_format(std::string_view name);

// CSV: header row of element names with an empty leading cell, then one
// name-prefixed row per element. JSON: {type, order, entries}. Markdown: a
// pipe table with the same headers.
std::string render_matrix(const DifferenceMatrix& m, OutputFormat f);

// Reads back the JSON produced by render_matrix. Round-trips exactly.
DifferenceMatrix parse_matrix_json(const std::string& text);

// Residue classes: one row per residue 0 .. ht(delta)-1 listing the element
// names in that class.
std::string render_congruence_table(const Crystal& c, OutputFormat f);

// The excluded positive initial parts as value,name pairs in increasing
// value order.
std::string render_initial_parts(const Crystal& c, OutputFormat f);

// A coefficient series as degree,coefficient rows; label names the
// coefficient column in JSON and Markdown output.
std::string render_series(AffineType t, std::string_view label,
                          const std::vector<long long>& coeffs, OutputFormat f);

// The two specialized denominator series and their ratio, one degree per row.
std::string render_specializations(AffineType t, const TruncatedSeries& principal,
                                   const TruncatedSeries& shifted,
                                   const TruncatedSeries& character,
                                   OutputFormat f);

// Outcome of the end-to-end identity check for one type: the Euler-product
// series c, the partition-count series d, and (when the requested range is
// covered) the embedded reference row, compared coefficient by coefficient.
struct CheckReport {
    AffineType type = AffineType::G2_1;
    int p_max = 0;
    std::vector<long long> c;          // indices 0..p_max
    std::vector<long long> d;          // indices 0..p_max
    std::vector<long long> reference;  // indices 0..p_max, or empty
    bool pass = false;
    int first_mismatch = -1;  // smallest degree with a disagreement, or -1
};

// Computes both sides independently and compares; p_max >= 1. The embedded
// reference row is consulted when p_max is within its range.
CheckReport run_check(AffineType t, int p_max);

std::string render_check(const CheckReport& report, OutputFormat f);
std::string render_checks(const std::vector<CheckReport>& reports, OutputFormat f);

}  // namespace crr
