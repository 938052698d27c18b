#include "crr/energy.hpp"

#include <deque>
#include <random>
#include <string>

namespace crr {

std::vector<TensorArrow> tensor_arrows(const Crystal& c) {
    const int sz = c.size();
    std::vector<TensorArrow> out;
    for (int b1 = 0; b1 < sz; ++b1) {
        for (int b2 = 0; b2 < sz; ++b2) {
            for (int node = 0; node < c.num_nodes(); ++node) {
                if (c.phi(b1, node) > c.eps(b2, node)) {
                    if (int t = c.f(b1, node); t != -1)
                        out.push_back({b1, b2, t, b2, node, -1});
                } else {
                    if (int t = c.f(b2, node); t != -1)
                        out.push_back({b1, b2, b1, t, node, +1});
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> tensor_energy(const Crystal& c,
                                            std::optional<uint64_t> shuffle_seed) {
    const int sz = c.size();
    const int pairs = sz * sz;

    struct Half {
        int to;
        int delta;
    };
    std::vector<std::vector<Half>> adj(pairs);
    for (const TensorArrow& a : tensor_arrows(c)) {
        const int u = a.from_left * sz + a.from_right;
        const int v = a.to_left * sz + a.to_right;
        adj[u].push_back({v, a.delta});
        adj[v].push_back({u, -a.delta});
    }

    constexpr int kUnset = INT32_MIN;
    std::vector<int> F(pairs, kUnset);
    const int start = c.ground() * sz + c.ground();
    F[start] = 0;

    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);
    std::deque<int> frontier{start};
    while (!frontier.empty()) {
        int u;
        if (rng) {
            const size_t j = (*rng)() % frontier.size();
            std::swap(frontier[j], frontier.back());
            u = frontier.back();
            frontier.pop_back();
        } else {
            u = frontier.front();
            frontier.pop_front();
        }
        for (const Half& h : adj[u]) {
            const int w = F[u] + h.delta;
            if (F[h.to] == kUnset) {
                F[h.to] = w;
                frontier.push_back(h.to);
            } else if (F[h.to] != w) {
                throw ConsistencyError("conflicting F labels at pair " +
                                       std::to_string(h.to / sz) + "," +
                                       std::to_string(h.to % sz) + ": " +
                                       std::to_string(F[h.to]) + " vs " +
                                       std::to_string(w));
            }
        }
    }
    int missing = 0;
    for (int v : F) missing += v == kUnset;
    if (missing)
        throw CoverageError(std::to_string(missing) +
                            " tensor pairs unreached during propagation");

    std::vector<std::vector<int>> out(sz, std::vector<int>(sz));
    for (int b1 = 0; b1 < sz; ++b1)
        for (int b2 = 0; b2 < sz; ++b2) out[b1][b2] = F[b1 * sz + b2];
    return out;
}

DifferenceMatrix difference_matrix(const Crystal& c,
                                   std::optional<uint64_t> shuffle_seed) {
    return {c.type(), c.element_names(), tensor_energy(c, shuffle_seed)};
}

std::vector<std::vector<int>> energy_levels(const Crystal& c,
                                            const std::vector<std::vector<int>>& F) {
    const int sz = c.size();
    const int hd = c.ht_delta();
    std::vector<std::vector<int>> H(sz, std::vector<int>(sz));
    for (int b1 = 0; b1 < sz; ++b1) {
        for (int b2 = 0; b2 < sz; ++b2) {
            const int num = F[b1][b2] - c.ht_wt(b1) + c.ht_wt(b2);
            if (num % hd != 0)
                throw IntegrityError("energy level not divisible by ht(delta)");
            H[b1][b2] = num / hd;
        }
    }
    return H;
}

}  // namespace crr
