// Acceptance gate: each criterion prints one PASS/FAIL verdict line.
// Run with no arguments for all six, or with criterion numbers to select.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "crr/crystal.hpp"
#include "crr/energy.hpp"
#include "crr/productside.hpp"
#include "crr/reference_data.hpp"
#include "crr/rootsystem.hpp"
#include "crr/sumside.hpp"

using namespace crr;

namespace {

struct Computed {
    Crystal crystal;
    DifferenceMatrix matrix;
    explicit Computed(AffineType t) : crystal(t), matrix(difference_matrix(crystal)) {}
};

const Computed& computed(AffineType t) {
    static std::map<AffineType, Computed> cache;
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, Computed(t)).first;
    return it->second;
}

TruncatedSeries evaluate(const std::vector<golden::PochFactor>& factors, int n) {
    TruncatedSeries out(n);
    for (const auto& f : factors)
        out = out.times(pochhammer_factor(f.x, f.y, f.e, n));
    return out;
}

bool coefficient_agreement() {
    bool ok = true;
    for (AffineType t : kAllTypes) {
        const Computed& comp = computed(t);
        const auto d = count_admissible(comp.crystal, comp.matrix, 60);
        const auto c = product_side_series(t, 60);
        const auto& ref = golden::coefficient_row(t);
        int bad = -1;
        for (int p = 1; p <= 60 && bad < 0; ++p)
            if (d[p] != c.at(p) || d[p] != ref[p - 1]) bad = p;
        if (bad >= 0) {
            std::cout << "  " << type_name(t) << ": disagreement at p = " << bad
                      << " (d = " << d[bad] << ", c = " << c.at(bad)
                      << ", reference = " << ref[bad - 1] << ")\n";
            ok = false;
        } else {
            std::cout << "  " << type_name(t)
                      << ": d(p) = c(p) = reference for p = 1..60, d(60) = "
                      << d[60] << "\n";
        }
    }
    return ok;
}

bool matrix_reproduction() {
    bool ok = true;
    for (AffineType t : kAllTypes) {
        const golden::ReferenceMatrix* ref = golden::printed_matrix(t);
        if (!ref) continue;
        const Computed& comp = computed(t);
        if (comp.matrix.order != ref->order) {
            std::cout << "  " << type_name(t) << ": element order differs\n";
            ok = false;
            continue;
        }
        int cells = 0;
        bool same = true;
        for (size_t i = 0; i < ref->entries.size() && same; ++i)
            for (size_t j = 0; j < ref->entries[i].size(); ++j, ++cells)
                if (comp.matrix.entries[i][j] != ref->entries[i][j]) {
                    std::cout << "  " << type_name(t) << ": cell ("
                              << ref->order[i] << ", " << ref->order[j]
                              << ") is " << comp.matrix.entries[i][j]
                              << ", expected " << ref->entries[i][j] << "\n";
                    same = false;
                    ok = false;
                    break;
                }
        if (same)
            std::cout << "  " << type_name(t) << ": all "
                      << ref->entries.size() << "x" << ref->entries.size()
                      << " cells match\n";
    }
    return ok;
}

bool table_reproduction() {
    bool ok = true;
    for (AffineType t : kAllTypes) {
        const Computed& comp = computed(t);
        const Crystal& c = comp.crystal;
        bool type_ok = true;

        const auto table = congruence_table(c);
        const auto& ref_rows = golden::congruence_rows(t);
        if (table.size() != ref_rows.size()) type_ok = false;
        for (size_t r = 0; type_ok && r < table.size(); ++r) {
            std::set<std::string> mine;
            for (int b : table[r]) mine.insert(element_name(c.element(b)));
            if (mine != std::set<std::string>(ref_rows[r].begin(),
                                              ref_rows[r].end())) {
                std::cout << "  " << type_name(t)
                          << ": congruence class " << r << " differs\n";
                type_ok = false;
            }
        }

        std::set<std::pair<long long, std::string>> mine, want;
        for (const auto& [v, b] : forbidden_parts(c))
            if (v > 0) mine.insert({v, element_name(c.element(b))});
        for (const auto& [v, name] : golden::initial_parts(t))
            want.insert({v, name});
        if (mine != want) {
            std::cout << "  " << type_name(t)
                      << ": excluded initial parts differ\n";
            type_ok = false;
        }

        if (type_ok)
            std::cout << "  " << type_name(t)
                      << ": congruence classes and excluded initial parts match\n";
        ok = ok && type_ok;
    }
    return ok;
}

bool specialization_identities() {
    bool ok = true;
    for (AffineType t : kAllTypes) {
        const AffineType dual = affine_config(t).dual;
        std::vector<int> ones(affine_config(dual).rank() + 1, 1);
        std::vector<int> shifted = ones;
        shifted[0] = 2;

        const auto d1 = specialized_denominator(dual, ones, 60);
        const auto d2 = specialized_denominator(dual, shifted, 60);
        const auto chi = normalized_character_series(t, 60);

        bool type_ok = true;
        if (d1 != evaluate(golden::principal_d_factors(t), 60)) {
            std::cout << "  " << type_name(t)
                      << ": principal specialization differs from its product form\n";
            type_ok = false;
        }
        if (d2 != evaluate(golden::shifted_d_factors(t), 60)) {
            std::cout << "  " << type_name(t)
                      << ": shifted specialization differs from its product form\n";
            type_ok = false;
        }
        if (chi != evaluate(golden::character_factors(t), 60)) {
            std::cout << "  " << type_name(t)
                      << ": character differs from its product form\n";
            type_ok = false;
        }
        if (chi.times(d1) != d2) {
            std::cout << "  " << type_name(t)
                      << ": character times principal != shifted\n";
            type_ok = false;
        }
        if (character_product_series(t, 60) != product_side_series(t, 60)) {
            std::cout << "  " << type_name(t)
                      << ": character route disagrees with the Euler product\n";
            type_ok = false;
        }
        if (type_ok)
            std::cout << "  " << type_name(t)
                      << ": all four product-form identities hold to q^60\n";
        ok = ok && type_ok;
    }
    return ok;
}

bool property_suites() {
    bool ok = true;

    // (a) F >= 0 everywhere; (b) recovered levels integral and in {0,1,2}
    for (AffineType t : kAllTypes) {
        const Computed& comp = computed(t);
        const Crystal& c = comp.crystal;
        for (int i = 0; i < c.size() && ok; ++i)
            for (int j = 0; j < c.size(); ++j)
                if (comp.matrix.entries[i][j] < 0) {
                    std::cout << "  " << type_name(t) << ": negative F at ("
                              << element_name(c.element(i)) << ", "
                              << element_name(c.element(j)) << ")\n";
                    ok = false;
                    break;
                }
        try {
            const auto h = energy_levels(c, comp.matrix.entries);
            for (int i = 0; i < c.size() && ok; ++i)
                for (int j = 0; j < c.size(); ++j)
                    if (h[i][j] < 0 || h[i][j] > 2) {
                        std::cout << "  " << type_name(t)
                                  << ": level out of range at ("
                                  << element_name(c.element(i)) << ", "
                                  << element_name(c.element(j)) << ")\n";
                        ok = false;
                        break;
                    }
        } catch (const IntegrityError& e) {
            std::cout << "  " << type_name(t)
                      << ": level recovery failed: " << e.what() << "\n";
            ok = false;
        }
    }
    if (ok) std::cout << "  F >= 0 and levels in {0,1,2} for all types\n";

    // (c) propagation order independence
    bool order_ok = true;
    for (AffineType t : kAllTypes) {
        const Computed& comp = computed(t);
        for (uint64_t seed : {1ull, 2ull, 3ull}) {
            try {
                if (difference_matrix(comp.crystal, seed) != comp.matrix) {
                    std::cout << "  " << type_name(t) << ": traversal seed "
                              << seed << " changed the matrix\n";
                    order_ok = false;
                }
            } catch (const IntegrityError& e) {
                std::cout << "  " << type_name(t) << ": seed " << seed
                          << " raised: " << e.what() << "\n";
                order_ok = false;
            }
        }
    }
    if (order_ok)
        std::cout << "  randomized traversal orders reproduce every matrix\n";
    ok = ok && order_ok;

    // (d) enumeration equals the dynamic program; (e) exact reconstruction
    bool enum_ok = true;
    for (AffineType t : kAllTypes) {
        const Computed& comp = computed(t);
        const Crystal& c = comp.crystal;
        const auto d = count_admissible(c, comp.matrix, 20);
        for (int p = 0; p <= 20 && enum_ok; ++p) {
            const auto parts = enumerate_admissible(c, comp.matrix, p);
            if (static_cast<long long>(parts.size()) != d[p]) {
                std::cout << "  " << type_name(t) << ": enumeration found "
                          << parts.size() << " partitions of " << p
                          << ", dynamic program counted " << d[p] << "\n";
                enum_ok = false;
                break;
            }
            for (const auto& partition : parts) {
                if (!is_admissible(c, comp.matrix, partition)) {
                    std::cout << "  " << type_name(t)
                              << ": enumerated partition fails admissibility\n";
                    enum_ok = false;
                    break;
                }
                try {
                    reconstruct_lambda(c, partition);
                } catch (const IntegrityError& e) {
                    std::cout << "  " << type_name(t)
                              << ": reconstruction failed: " << e.what() << "\n";
                    enum_ok = false;
                    break;
                }
            }
        }
    }
    if (enum_ok)
        std::cout << "  enumeration matches the dynamic program for p <= 20, "
                     "reconstruction exact\n";
    ok = ok && enum_ok;

    // (f) series coincidences
    bool pair_ok = true;
    if (product_side_series(AffineType::D4_3, 60) !=
        product_side_series(AffineType::E6_1, 60)) {
        std::cout << "  series for D4_3 and E6_1 differ\n";
        pair_ok = false;
    }
    if (product_side_series(AffineType::E6_2, 60) !=
        product_side_series(AffineType::E7_1, 60)) {
        std::cout << "  series for E6_2 and E7_1 differ\n";
        pair_ok = false;
    }
    if (pair_ok)
        std::cout << "  series coincide for (D4_3, E6_1) and (E6_2, E7_1)\n";
    return ok && pair_ok;
}

bool shape_checks() {
    static const std::map<AffineType, int> sizes{
        {AffineType::G2_1, 15},  {AffineType::D4_3, 8},  {AffineType::F4_1, 53},
        {AffineType::E6_2, 27},  {AffineType::E6_1, 79}, {AffineType::E7_1, 134},
        {AffineType::E8_1, 249}};
    bool ok = true;
    for (AffineType t : kAllTypes) {
        const Computed& comp = computed(t);
        const Crystal& c = comp.crystal;
        if (c.size() != sizes.at(t)) {
            std::cout << "  " << type_name(t) << ": size " << c.size()
                      << ", expected " << sizes.at(t) << "\n";
            ok = false;
        }
        for (int node = 0; node < c.num_nodes(); ++node)
            for (int b = 0; b < c.size(); ++b) {
                const int len = c.eps(b, node) + c.phi(b, node);
                if (len > 2) {
                    std::cout << "  " << type_name(t) << ": the node-" << node
                              << " string through "
                              << element_name(c.element(b)) << " has length "
                              << len << " (> 2)\n";
                    ok = false;
                }
            }
        const int phi = c.ground();
        for (int b = 0; b < c.size(); ++b) {
            if (b == phi) continue;
            if (comp.matrix.entries[phi][b] != c.ht_delta() - c.ht_wt(b)) {
                std::cout << "  " << type_name(t) << ": ground row at "
                          << element_name(c.element(b)) << " is "
                          << comp.matrix.entries[phi][b] << ", expected "
                          << c.ht_delta() - c.ht_wt(b) << "\n";
                ok = false;
            }
        }
    }
    if (ok) std::cout << "  sizes, string lengths and ground rows all conform\n";
    return ok;
}

bool run_criterion(int n) {
    switch (n) {
        case 1: return coefficient_agreement();
        case 2: return matrix_reproduction();
        case 3: return table_reproduction();
        case 4: return specialization_identities();
        case 5: return property_suites();
        case 6: return shape_checks();
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > 6) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..6]...\n";
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6};

    bool all_ok = true;
    for (int n : selected) {
        bool ok = false;
        try {
            ok = run_criterion(n);
        } catch (const std::exception& e) {
            std::cout << "  unexpected exception: " << e.what() << "\n";
        }
        std::cout << "CRITERION " << n << (ok ? " PASS" : " FAIL") << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
