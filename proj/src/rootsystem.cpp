#include "crr/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crr {
namespace {

std::vector<std::vector<int>> chain_cartan(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [u, v] : edges) {
        a[u - 1][v - 1] = -1;
        a[v - 1][u - 1] = -1;
    }
    return a;
}

TypeConfig make_config(AffineType t) {
    switch (t) {
        case AffineType::G2_1:
            return {t, {{2, -1}, {-3, 2}}, {3, 1}, {1, 2, 3},
                    AffineType::D4_3, CrystalRootKind::AllRoots, 1};
        case AffineType::D4_3:
            return {t, {{2, -3}, {-1, 2}}, {1, 3}, {1, 2, 1},
                    AffineType::G2_1, CrystalRootKind::ShortRootsOnly, 3};
        case AffineType::F4_1:
            return {t,
                    {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}},
                    {2, 2, 1, 1},
                    {1, 2, 3, 4, 2},
                    AffineType::E6_2, CrystalRootKind::AllRoots, 1};
        case AffineType::E6_2:
            return {t,
                    {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
                    {1, 1, 2, 2},
                    {1, 2, 3, 2, 1},
                    AffineType::F4_1, CrystalRootKind::ShortRootsOnly, 2};
        case AffineType::E6_1:
            return {t, chain_cartan(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}),
                    std::vector<int>(6, 1), {1, 1, 2, 2, 3, 2, 1},
                    AffineType::E6_1, CrystalRootKind::AllRoots, 1};
        case AffineType::E7_1:
            return {t,
                    chain_cartan(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}),
                    std::vector<int>(7, 1), {1, 2, 2, 3, 4, 3, 2, 1},
                    AffineType::E7_1, CrystalRootKind::AllRoots, 1};
        case AffineType::E8_1:
            return {t,
                    chain_cartan(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                     {7, 8}, {2, 4}}),
                    std::vector<int>(8, 1), {1, 2, 3, 4, 6, 5, 4, 3, 2},
                    AffineType::E8_1, CrystalRootKind::AllRoots, 1};
    }
    throw std::logic_error("unknown AffineType");
}

long long symmetrized_norm(const std::vector<std::vector<int>>& cartan,
                           const std::vector<int>& symmetrizer, const Coeffs& a) {
    const int n = static_cast<int>(cartan.size());
    long long acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += static_cast<long long>(a[i]) * a[j] * symmetrizer[i] * cartan[i][j];
    return acc;
}

}  // namespace

const TypeConfig& affine_config(AffineType t) {
    static const std::array<TypeConfig, 7> cache = [] {
        std::array<TypeConfig, 7> a{};
        for (AffineType t : kAllTypes) a[static_cast<int>(t)] = make_config(t);
        return a;
    }();
    return cache[static_cast<int>(t)];
}

std::vector<ClassifiedRoot> finite_positive_roots(
    const std::vector<std::vector<int>>& cartan,
    const std::vector<int>& symmetrizer) {
    const int n = static_cast<int>(cartan.size());
    std::set<Coeffs> seen;
    std::vector<Coeffs> frontier;
    for (int i = 0; i < n; ++i) {
        Coeffs simple(n, 0);
        simple[i] = 1;
        seen.insert(simple);
        frontier.push_back(std::move(simple));
    }
    while (!frontier.empty()) {
        std::vector<Coeffs> next;
        for (const Coeffs& a : frontier) {
            for (int j = 0; j < n; ++j) {
                long long pairing = 0;
                for (int i = 0; i < n; ++i) pairing += a[i] * cartan[j][i];
                Coeffs b = a;
                b[j] -= static_cast<int>(pairing);
                bool positive = false, negative = false;
                for (int c : b) {
                    positive |= c > 0;
                    negative |= c < 0;
                }
                if (negative || !positive) continue;
                if (seen.insert(b).second) next.push_back(std::move(b));
            }
        }
        frontier = std::move(next);
    }

    long long min_norm = 0, max_norm = 0;
    bool first = true;
    std::map<Coeffs, long long> norms;
    for (const Coeffs& a : seen) {
        long long nm = symmetrized_norm(cartan, symmetrizer, a);
        norms[a] = nm;
        min_norm = first ? nm : std::min(min_norm, nm);
        max_norm = first ? nm : std::max(max_norm, nm);
        first = false;
    }
    std::vector<ClassifiedRoot> out;
    out.reserve(seen.size());
    for (const Coeffs& a : seen) {
        long long nm = norms[a];
        if (min_norm != max_norm && nm != min_norm && nm != max_norm)
            throw IntegrityError("root with intermediate length");
        RootLength len = (min_norm == max_norm || nm == max_norm)
                             ? RootLength::Long
                             : RootLength::Short;
        out.push_back({a, len});
    }
    return out;
}

CrystalRootData crystal_root_data(const TypeConfig& config) {
    const int n = config.rank();
    auto roots = finite_positive_roots(config.cartan, config.symmetrizer);
    const bool short_only =
        config.crystal_root_kind == CrystalRootKind::ShortRootsOnly;

    CrystalRootData out;
    for (const auto& r : roots)
        if (!short_only || r.length == RootLength::Short)
            out.rplus.push_back(r.coeffs);
    std::sort(out.rplus.begin(), out.rplus.end());

    std::set<Coeffs> rset(out.rplus.begin(), out.rplus.end());
    for (int i = 0; i < n; ++i) {
        Coeffs simple(n, 0);
        simple[i] = 1;
        if (rset.count(simple)) out.sigma.push_back(i + 1);
    }

    out.theta = *std::max_element(
        out.rplus.begin(), out.rplus.end(),
        [](const Coeffs& a, const Coeffs& b) {
            return std::pair(ht(a), a) < std::pair(ht(b), b);
        });
    Coeffs delta_tail(config.delta_coeffs.begin() + 1, config.delta_coeffs.end());
    if (out.theta != delta_tail)
        throw IntegrityError("highest crystal root does not match delta tail");
    return out;
}

std::vector<AffineRootHeight> affine_positive_root_heights(
    const TypeConfig& dual_config, const std::vector<int>& s, long long cutoff) {
    const int n = dual_config.rank();
    if (static_cast<int>(s.size()) != n + 1)
        throw std::invalid_argument("specialization vector length != rank + 1");
    for (int si : s)
        if (si < 1) throw std::invalid_argument("specialization entries must be >= 1");
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");

    long long ht_s_delta = 0;
    for (int i = 0; i <= n; ++i)
        ht_s_delta += static_cast<long long>(s[i]) * dual_config.delta_coeffs[i];

    auto ht_s = [&](const Coeffs& a) {
        long long acc = 0;
        for (int i = 0; i < n; ++i) acc += static_cast<long long>(s[i + 1]) * a[i];
        return acc;
    };

    auto roots = finite_positive_roots(dual_config.cartan, dual_config.symmetrizer);
    std::vector<AffineRootHeight> out;

    int n_short_simple = 0;
    for (const auto& r : roots)
        if (r.length == RootLength::Short && ht(r.coeffs) == 1) ++n_short_simple;

    for (const auto& r : roots) {
        // Long roots sit on a coarser delta lattice in the twisted types.
        const long long spacing =
            (r.length == RootLength::Long ? dual_config.long_spacing : 1) *
            ht_s_delta;
        const long long h0 = ht_s(r.coeffs);
        for (long long h = h0; h <= cutoff; h += spacing)
            out.push_back({h, 1, false});
        for (long long h = spacing - h0; h <= cutoff; h += spacing)
            if (h >= 1) out.push_back({h, 1, false});
    }
    for (long long r = 1; r * ht_s_delta <= cutoff; ++r) {
        const bool full = dual_config.long_spacing == 1 ||
                          r % dual_config.long_spacing == 0;
        out.push_back({r * ht_s_delta, full ? n : n_short_simple, true});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.height, a.imaginary, a.mult) <
               std::tuple(b.height, b.imaginary, b.mult);
    });
    return out;
}

}  // namespace crr
