#include "crr/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "crr/reference_data.hpp"
#include "json.hpp"

namespace crr {
namespace {

using nlohmann::json;

std::string join_row(const std::vector<std::string>& cells,
                     const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << "| " << join_row(header, " | ") << " |\n|";
    for (size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : rows) os << "| " << join_row(row, " | ") << " |\n";
    return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "md") return OutputFormat::Md;
    return std::nullopt;
}

std::string render_matrix(const DifferenceMatrix& m, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            for (const auto& name : m.order) os << "," << name;
            os << "\n";
            for (size_t i = 0; i < m.entries.size(); ++i) {
                os << m.order[i];
                for (int v : m.entries[i]) os << "," << v;
                os << "\n";
            }
            return os.str();
        }
        case OutputFormat::Json: {
            json j;
            j["type"] = std::string(type_name(m.type));
            j["order"] = m.order;
            j["entries"] = m.entries;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Md: {
            std::vector<std::string> header{""};
            header.insert(header.end(), m.order.begin(), m.order.end());
            std::vector<std::vector<std::string>> rows;
            for (size_t i = 0; i < m.entries.size(); ++i) {
                std::vector<std::string> row{m.order[i]};
                for (int v : m.entries[i]) row.push_back(std::to_string(v));
                rows.push_back(std::move(row));
            }
            return md_table(header, rows);
        }
    }
    throw std::invalid_argument("unknown output format");
}

DifferenceMatrix parse_matrix_json(const std::string& text) {
    const json j = json::parse(text);
    const auto name = j.at("type").get<std::string>();
    const auto t = parse_type(name);
    if (!t) throw std::invalid_argument("unknown type name: " + name);
    DifferenceMatrix m;
    m.type = *t;
    m.order = j.at("order").get<std::vector<std::string>>();
    m.entries = j.at("entries").get<std::vector<std::vector<int>>>();
    if (m.entries.size() != m.order.size())
        throw std::invalid_argument("matrix row count does not match order");
    for (const auto& row : m.entries)
        if (row.size() != m.order.size())
            throw std::invalid_argument("matrix is not square");
    return m;
}

std::string render_congruence_table(const Crystal& c, OutputFormat f) {
    const auto table = congruence_table(c);
    switch (f) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            for (size_t r = 0; r < table.size(); ++r) {
                os << r;
                for (int b : table[r]) os << "," << element_name(c.element(b));
                os << "\n";
            }
            return os.str();
        }
        case OutputFormat::Json: {
            json classes = json::array();
            for (size_t r = 0; r < table.size(); ++r) {
                json row;
                row["residue"] = r;
                json elems = json::array();
                for (int b : table[r]) elems.push_back(element_name(c.element(b)));
                row["elements"] = std::move(elems);
                classes.push_back(std::move(row));
            }
            json j;
            j["type"] = std::string(type_name(c.type()));
            j["modulus"] = c.ht_delta();
            j["classes"] = std::move(classes);
            return j.dump(2) + "\n";
        }
        case OutputFormat::Md: {
            std::vector<std::vector<std::string>> rows;
            for (size_t r = 0; r < table.size(); ++r) {
                std::vector<std::string> names;
                for (int b : table[r]) names.push_back(element_name(c.element(b)));
                rows.push_back({std::to_string(r) + " mod " +
                                    std::to_string(c.ht_delta()),
                                join_row(names, " ")});
            }
            return md_table({"residue", "elements"}, rows);
        }
    }
    throw std::invalid_argument("unknown output format");
}

std::string render_initial_parts(const Crystal& c, OutputFormat f) {
    std::vector<std::pair<long long, int>> parts;
    for (const auto& p : forbidden_parts(c))
        if (p.first > 0) parts.push_back(p);
    std::sort(parts.begin(), parts.end());
    switch (f) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            for (const auto& [v, b] : parts)
                os << v << "," << element_name(c.element(b)) << "\n";
            return os.str();
        }
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& [v, b] : parts) {
                json p;
                p["value"] = v;
                p["element"] = element_name(c.element(b));
                arr.push_back(std::move(p));
            }
            json j;
            j["type"] = std::string(type_name(c.type()));
            j["parts"] = std::move(arr);
            return j.dump(2) + "\n";
        }
        case OutputFormat::Md: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [v, b] : parts)
                rows.push_back({std::to_string(v), element_name(c.element(b))});
            return md_table({"value", "element"}, rows);
        }
    }
    throw std::invalid_argument("unknown output format");
}

std::string render_series(AffineType t, std::string_view label,
                          const std::vector<long long>& coeffs, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            for (size_t p = 0; p < coeffs.size(); ++p)
                os << p << "," << coeffs[p] << "\n";
            return os.str();
        }
        case OutputFormat::Json: {
            json j;
            j["type"] = std::string(type_name(t));
            j["label"] = std::string(label);
            j["max"] = coeffs.size() - 1;
            j["coefficients"] = coeffs;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Md: {
            std::vector<std::vector<std::string>> rows;
            for (size_t p = 0; p < coeffs.size(); ++p)
                rows.push_back({std::to_string(p), std::to_string(coeffs[p])});
            return md_table({"p", std::string(label)}, rows);
        }
    }
    throw std::invalid_argument("unknown output format");
}

std::string render_specializations(AffineType t, const TruncatedSeries& principal,
                                   const TruncatedSeries& shifted,
                                   const TruncatedSeries& character,
                                   OutputFormat f) {
    const int n = principal.max_degree();
    switch (f) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            for (int p = 0; p <= n; ++p)
                os << p << "," << principal.at(p) << "," << shifted.at(p) << ","
                   << character.at(p) << "\n";
            return os.str();
        }
        case OutputFormat::Json: {
            json j;
            j["type"] = std::string(type_name(t));
            j["max"] = n;
            j["principal"] = principal.coeffs();
            j["shifted"] = shifted.coeffs();
            j["character"] = character.coeffs();
            return j.dump(2) + "\n";
        }
        case OutputFormat::Md: {
            std::vector<std::vector<std::string>> rows;
            for (int p = 0; p <= n; ++p)
                rows.push_back({std::to_string(p), std::to_string(principal.at(p)),
                                std::to_string(shifted.at(p)),
                                std::to_string(character.at(p))});
            return md_table({"p", "principal", "shifted", "character"}, rows);
        }
    }
    throw std::invalid_argument("unknown output format");
}

CheckReport run_check(AffineType t, int p_max) {
    if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
    CheckReport report;
    report.type = t;
    report.p_max = p_max;

    const Crystal crystal(t);
    const DifferenceMatrix m = difference_matrix(crystal);
    report.d = count_admissible(crystal, m, p_max);
    report.c = product_side_series(t, p_max).coeffs();

    const auto& golden_row = golden::coefficient_row(t);
    if (p_max <= static_cast<int>(golden_row.size())) {
        report.reference.assign(1, 1);  // degree 0
        report.reference.insert(report.reference.end(), golden_row.begin(),
                                golden_row.begin() + p_max);
    }

    report.first_mismatch = -1;
    for (int p = 0; p <= p_max; ++p) {
        const bool bad = report.c[p] != report.d[p] ||
                         (!report.reference.empty() &&
                          report.c[p] != report.reference[p]);
        if (bad) {
            report.first_mismatch = p;
            break;
        }
    }
    report.pass = report.first_mismatch == -1;
    return report;
}

namespace {

json check_to_json(const CheckReport& r) {
    json j;
    j["type"] = std::string(type_name(r.type));
    j["max"] = r.p_max;
    j["pass"] = r.pass;
    if (r.first_mismatch >= 0)
        j["first_mismatch"] = r.first_mismatch;
    else
        j["first_mismatch"] = nullptr;
    j["c"] = r.c;
    j["d"] = r.d;
    if (!r.reference.empty())
        j["reference"] = r.reference;
    else
        j["reference"] = nullptr;
    return j;
}

std::string checks_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        for (int p = 0; p <= r.p_max; ++p) {
            os << type_name(r.type) << "," << p << "," << r.c[p] << "," << r.d[p];
            if (!r.reference.empty()) os << "," << r.reference[p];
            os << "\n";
        }
    }
    return os.str();
}

std::string checks_md(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        std::vector<std::vector<std::string>> rows;
        for (int p = 0; p <= r.p_max; ++p) {
            std::vector<std::string> row{std::to_string(p), std::to_string(r.c[p]),
                                         std::to_string(r.d[p])};
            if (!r.reference.empty()) row.push_back(std::to_string(r.reference[p]));
            rows.push_back(std::move(row));
        }
        std::vector<std::string> header{"p", "c", "d"};
        if (!r.reference.empty()) header.push_back("reference");
        os << "## " << type_name(r.type) << ": "
           << (r.pass ? "pass" : "FAIL at p = " + std::to_string(r.first_mismatch))
           << "\n\n"
           << md_table(header, rows) << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_check(const CheckReport& report, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv:
            return checks_csv({report});
        case OutputFormat::Json:
            return check_to_json(report).dump(2) + "\n";
        case OutputFormat::Md:
            return checks_md({report});
    }
    throw std::invalid_argument("unknown output format");
}

std::string render_checks(const std::vector<CheckReport>& reports, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv:
            return checks_csv(reports);
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(check_to_json(r));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::Md:
            return checks_md(reports);
    }
    throw std::invalid_argument("unknown output format");
}

}  // namespace crr
