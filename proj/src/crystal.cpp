#include "crr/crystal.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace crr {
namespace {

Coeffs negated(const Coeffs& a) {
    Coeffs out = a;
    for (int& c : out) c = -c;
    return out;
}

}  // namespace

Crystal::Crystal(AffineType t)
    : config_(&affine_config(t)), roots_(crystal_root_data(*config_)) {
    const int n = config_->rank();

    elements_.push_back({ElementKind::Ground, {}, 0});
    std::vector<Coeffs> pos = roots_.rplus;
    std::sort(pos.begin(), pos.end(), std::greater<>());
    for (auto& a : pos) elements_.push_back({ElementKind::Positive, std::move(a), 0});
    for (int i : roots_.sigma) elements_.push_back({ElementKind::Mid, {}, i});
    for (const auto& a : roots_.rplus)  // rplus is already sorted ascending
        elements_.push_back({ElementKind::Negative, a, 0});

    const int sz = size();
    ht_wt_.resize(sz);
    for (int idx = 0; idx < sz; ++idx) {
        const auto& el = elements_[idx];
        ht_wt_[idx] = el.kind == ElementKind::Positive   ? ht(el.root)
                      : el.kind == ElementKind::Negative ? -ht(el.root)
                                                         : 0;
    }

    std::map<Coeffs, int> signed_index;  // signed root vector -> element index
    std::map<int, int> mid_index;        // Dynkin node -> element index
    for (int idx = 1; idx < sz; ++idx) {
        const auto& el = elements_[idx];
        if (el.kind == ElementKind::Positive)
            signed_index[el.root] = idx;
        else if (el.kind == ElementKind::Negative)
            signed_index[negated(el.root)] = idx;
        else
            mid_index[el.node] = idx;
    }

    f_tab_.assign(n + 1, std::vector<int>(sz, -1));
    e_tab_.assign(n + 1, std::vector<int>(sz, -1));
    auto arrow = [&](int node, int src, int dst) {
        if (f_tab_[node][src] != -1 || e_tab_[node][dst] != -1)
            throw IntegrityError("duplicate crystal arrow");
        f_tab_[node][src] = dst;
        e_tab_[node][dst] = src;
    };

    for (int node = 1; node <= n; ++node) {
        for (int idx = 1; idx < sz; ++idx) {
            const auto& el = elements_[idx];
            if (el.kind == ElementKind::Mid) continue;
            Coeffs v = el.kind == ElementKind::Positive ? el.root : negated(el.root);
            v[node - 1] -= 1;
            auto it = signed_index.find(v);
            if (it != signed_index.end()) arrow(node, idx, it->second);
        }
        auto mid = mid_index.find(node);
        if (mid != mid_index.end()) {
            Coeffs simple(n, 0);
            simple[node - 1] = 1;
            arrow(node, signed_index.at(simple), mid->second);
            arrow(node, mid->second, signed_index.at(negated(simple)));
        }
    }

    // Node 0 acts by adding theta to the signed weight vector; the chain
    // through zero weight is x_{-theta} -> phi -> x_theta.
    const Coeffs& theta = roots_.theta;
    for (const auto& a : roots_.rplus) {
        if (a == theta) continue;
        Coeffs target(n);
        for (int i = 0; i < n; ++i) target[i] = theta[i] - a[i];
        auto it = signed_index.find(target);
        if (it != signed_index.end() &&
            elements_[it->second].kind == ElementKind::Positive)
            arrow(0, signed_index.at(negated(a)), it->second);
    }
    arrow(0, signed_index.at(negated(theta)), ground());
    arrow(0, ground(), signed_index.at(theta));

    eps_tab_.assign(n + 1, std::vector<int>(sz, 0));
    phi_tab_.assign(n + 1, std::vector<int>(sz, 0));
    for (int node = 0; node <= n; ++node) {
        for (int idx = 0; idx < sz; ++idx) {
            int k = 0;
            for (int j = e_tab_[node][idx]; j != -1; j = e_tab_[node][j]) ++k;
            eps_tab_[node][idx] = k;
            k = 0;
            for (int j = f_tab_[node][idx]; j != -1; j = f_tab_[node][j]) ++k;
            phi_tab_[node][idx] = k;
        }
    }
}

int Crystal::max_string_length() const {
    int mx = 0;
    for (int node = 0; node < num_nodes(); ++node)
        for (int idx = 0; idx < size(); ++idx)
            mx = std::max(mx, eps_tab_[node][idx] + phi_tab_[node][idx]);
    return mx;
}

int Crystal::index_of(const CrystalElement& el) const {
    for (int idx = 0; idx < size(); ++idx)
        if (elements_[idx] == el) return idx;
    return -1;
}

std::vector<std::string> Crystal::element_names() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (const auto& el : elements_) out.push_back(element_name(el));
    return out;
}

std::string element_name(const CrystalElement& el) {
    switch (el.kind) {
        case ElementKind::Ground:
            return "phi";
        case ElementKind::Mid:
            return "r" + std::to_string(el.node);
        case ElementKind::Positive:
        case ElementKind::Negative: {
            std::string s(1, el.kind == ElementKind::Positive ? '+' : '-');
            for (int c : el.root) {
                if (c < 0 || c > 9)
                    throw IntegrityError("root coefficient outside single digit");
                s += static_cast<char>('0' + c);
            }
            return s;
        }
    }
    throw IntegrityError("unknown element kind");
}

int parse_element_index(const Crystal& c, std::string_view name) {
    for (int idx = 0; idx < c.size(); ++idx)
        if (element_name(c.element(idx)) == name) return idx;
    return -1;
}

}  // namespace crr
