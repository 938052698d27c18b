#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crr/crystal.hpp"
#include "crr/energy.hpp"
#include "crr/productside.hpp"
#include "crr/serialize.hpp"
#include "crr/sumside.hpp"

namespace py = pybind11;
using namespace crr;

namespace {

struct Computed {
    Crystal crystal;
    DifferenceMatrix matrix;
    explicit Computed(AffineType t) : crystal(t), matrix(difference_matrix(crystal)) {}
};

AffineType type_for(const std::string& name) {
    const auto t = parse_type(name);
    if (!t) throw py::value_error("unknown type name: " + name);
    return *t;
}

const Computed& computed_for(const std::string& name) {
    static std::map<AffineType, Computed> cache;
    const AffineType t = type_for(name);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, Computed(t)).first;
    return it->second;
}

}  // namespace

PYBIND11_MODULE(crystalrr, m) {
    m.doc() =
        "Level-one crystals for seven exceptional affine types: difference "
        "matrices, colored partition counts and their Euler products.";

    m.def("types", [] {
        std::vector<std::string> out;
        for (AffineType t : kAllTypes) out.emplace_back(type_name(t));
        return out;
    });

    m.def(
        "crystal_size",
        [](const std::string& type) { return computed_for(type).crystal.size(); },
        py::arg("type"));

    m.def(
        "element_names",
        [](const std::string& type) {
            return computed_for(type).crystal.element_names();
        },
        py::arg("type"));

    m.def(
        "difference_matrix",
        [](const std::string& type) {
            const Computed& comp = computed_for(type);
            py::dict out;
            out["order"] = comp.matrix.order;
            out["entries"] = comp.matrix.entries;
            return out;
        },
        py::arg("type"));

    m.def(
        "count_partitions",
        [](const std::string& type, int p_max) {
            const Computed& comp = computed_for(type);
            return count_admissible(comp.crystal, comp.matrix, p_max);
        },
        py::arg("type"), py::arg("p_max"));

    m.def(
        "product_series",
        [](const std::string& type, int p_max) {
            return product_side_series(type_for(type), p_max).coeffs();
        },
        py::arg("type"), py::arg("p_max"));

    m.def(
        "congruence_table",
        [](const std::string& type) {
            const Computed& comp = computed_for(type);
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : congruence_table(comp.crystal)) {
                std::vector<std::string> names;
                for (int b : row)
                    names.push_back(element_name(comp.crystal.element(b)));
                rows.push_back(std::move(names));
            }
            return rows;
        },
        py::arg("type"));

    m.def(
        "initial_parts",
        [](const std::string& type) {
            const Computed& comp = computed_for(type);
            std::vector<std::pair<long long, std::string>> out;
            for (const auto& [v, b] : forbidden_parts(comp.crystal))
                if (v > 0)
                    out.emplace_back(v, element_name(comp.crystal.element(b)));
            std::sort(out.begin(), out.end());
            return out;
        },
        py::arg("type"));

    m.def(
        "check",
        [](const std::string& type, int p_max) {
            const CheckReport report = run_check(type_for(type), p_max);
            py::dict out;
            out["type"] = std::string(type_name(report.type));
            out["max"] = report.p_max;
            out["pass"] = report.pass;
            out["first_mismatch"] =
                report.first_mismatch >= 0
                    ? py::object(py::int_(report.first_mismatch))
                    : py::object(py::none());
            out["c"] = report.c;
            out["d"] = report.d;
            out["reference"] = report.reference;
            return out;
        },
        py::arg("type"), py::arg("p_max"));
}
