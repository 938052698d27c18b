#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crr/rootsystem.hpp"
#include "crr/types.hpp"

namespace crr {

enum class ElementKind { Ground, Positive, Mid, Negative };

// One crystal element: the ground element phi, a root element x_alpha or
// x_{-alpha} (root stores the underlying positive root), or a middle element
// r_i sitting between x_{alpha_i} and x_{-alpha_i} (node stores i).
struct CrystalElement {
    ElementKind kind = ElementKind::Ground;
    Coeffs root;
    int node = 0;

    friend bool operator==(const CrystalElement&, const CrystalElement&) = default;
};

// The level-one crystal B for one of the seven types, with arrow tables and
// string statistics for the nodes 0..n precomputed.
//
// Canonical element order: phi, then x_alpha over positive roots in
// lexicographically decreasing coefficient order, then r_i by increasing i,
// then x_{-alpha} in lexicographically increasing order.
class Crystal {
public:
    explicit Crystal(AffineType t);

    AffineType type() const { return config_->type; }
    const TypeConfig& config() const { return *config_; }
    const CrystalRootData& roots() const { return roots_; }
    int ht_delta() const { return config_->ht_delta(); }

    int size() const { return static_cast<int>(elements_.size()); }
    int num_nodes() const { return config_->rank() + 1; }  // Dynkin nodes 0..n
    const CrystalElement& element(int idx) const { return elements_[idx]; }
    const std::vector<CrystalElement>& elements() const { return elements_; }
    int ground() const { return 0; }

    // Arrow tables; -1 when the operator is undefined.
    int f(int idx, int node) const { return f_tab_[node][idx]; }
    int e(int idx, int node) const { return e_tab_[node][idx]; }

    // True string statistics: number of raising / lowering steps available.
    int eps(int idx, int node) const { return eps_tab_[node][idx]; }
    int phi(int idx, int node) const { return phi_tab_[node][idx]; }
    int max_string_length() const;

    // Height of the classical weight: ht(alpha) for x_alpha, -ht(alpha) for
    // x_{-alpha}, 0 for phi and r_i.
    int ht_wt(int idx) const { return ht_wt_[idx]; }

    int index_of(const CrystalElement& el) const;  // -1 when absent

    // Canonical element names, in order.
    std::vector<std::string> element_names() const;

private:
    const TypeConfig* config_;
    CrystalRootData roots_;
    std::vector<CrystalElement> elements_;
    std::vector<std::vector<int>> f_tab_, e_tab_, eps_tab_, phi_tab_;
    std::vector<int> ht_wt_;
};

// ASCII element naming: "phi", "r<i>", "+<coeffs>", "-<coeffs>". Coefficient
// digits are concatenated without separators; every coefficient is a single
// digit for all seven types. Bijective on each crystal.
std::string element_name(const CrystalElement& el);

// Index of the element with the given name, or -1 when no element matches.
int parse_element_index(const Crystal& c, std::string_view name);

}  // namespace crr
