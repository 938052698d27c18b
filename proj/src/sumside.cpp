#include "crr/sumside.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace crr {

int residue(const Crystal& c, int color) {
    const int hd = c.ht_delta();
    return ((-c.ht_wt(color)) % hd + hd) % hd;
}

std::vector<std::vector<int>> congruence_table(const Crystal& c) {
    std::vector<std::vector<int>> out(c.ht_delta());
    for (int b = 0; b < c.size(); ++b) out[residue(c, b)].push_back(b);
    return out;
}

std::vector<std::pair<long long, int>> forbidden_parts(const Crystal& c) {
    std::vector<std::pair<long long, int>> out;
    for (int b = 0; b < c.size(); ++b) {
        if (b == c.ground()) continue;
        out.push_back({0, b});
        const long long v = -c.ht_wt(b);
        if (v > 0) out.push_back({v, b});
    }
    return out;
}

bool is_forbidden(const Crystal& c, long long value, int color) {
    if (color == c.ground()) return false;
    return value == 0 || value == -c.ht_wt(color);
}

bool is_admissible(const Crystal& c, const DifferenceMatrix& m,
                   const ColoredPartition& parts) {
    if (parts.empty()) return false;
    const ColoredPart ground{0, c.ground()};
    if (parts.back() != ground) return false;
    const int hd = c.ht_delta();
    for (size_t k = 0; k + 1 < parts.size(); ++k) {
        const auto& p = parts[k];
        if (p == ground) return false;  // ground part only as terminator
        if (p.value < 1 || is_forbidden(c, p.value, p.color)) return false;
        if (p.value % hd != residue(c, p.color)) return false;
    }
    for (size_t k = 0; k + 1 < parts.size(); ++k) {
        const auto& upper = parts[k];
        const auto& lower = parts[k + 1];
        if (upper.value - lower.value < m.entries[lower.color][upper.color])
            return false;
    }
    return true;
}

std::vector<long long> count_admissible(const Crystal& c,
                                        const DifferenceMatrix& m, int p_max) {
    if (p_max < 0) throw std::invalid_argument("p_max must be >= 0");
    const int N = c.size();
    const int hd = c.ht_delta();
    const int phi = c.ground();

    std::vector<int> gam(N);
    for (int b = 0; b < N; ++b) gam[b] = residue(c, b);

    // f[(w * (p_max+1) + v) * N + b]: admissible stacks of weight w whose
    // topmost (largest, most recently added) part is v colored b.
    const int vdim = p_max + 1;
    std::vector<long long> f(static_cast<size_t>(p_max + 1) * vdim * N, 0);
    auto at = [&](int w, int v, int b) -> long long& {
        return f[(static_cast<size_t>(w) * vdim + v) * N + b];
    };
    at(0, 0, phi) = 1;

    std::vector<long long> d(p_max + 1, 0);
    d[0] = 1;

    std::vector<std::vector<long long>> prefix(N, std::vector<long long>(p_max + 2));
    for (int w = 0; w <= p_max; ++w) {
        bool any = false;
        for (int b = 0; b < N; ++b) {
            long long acc = 0;
            for (int v = 0; v <= p_max; ++v) {
                acc += at(w, v, b);
                prefix[b][v + 1] = acc;
            }
            any |= acc != 0;
        }
        if (!any) continue;
        for (int bn = 0; bn < N; ++bn) {
            const int g = gam[bn];
            for (int vn = 1; vn <= p_max - w; ++vn) {
                if (vn % hd != g || is_forbidden(c, vn, bn)) continue;
                long long tot = 0;
                for (int b = 0; b < N; ++b) {
                    if (prefix[b][p_max + 1] == 0) continue;
                    const int u = vn - m.entries[b][bn];  // need previous v <= u
                    if (u >= 0) tot += prefix[b][std::min(u, p_max) + 1];
                }
                if (tot) {
                    at(w + vn, vn, bn) += tot;
                    d[w + vn] += tot;
                }
            }
        }
    }
    return d;
}

std::vector<ColoredPartition> enumerate_admissible(const Crystal& c,
                                                   const DifferenceMatrix& m,
                                                   int total, int budget) {
    if (total < 0) throw std::invalid_argument("total must be >= 0");
    if (total > budget)
        throw BudgetError("enumeration of weight " + std::to_string(total) +
                          " exceeds budget " + std::to_string(budget));
    const int N = c.size();
    const int hd = c.ht_delta();

    std::vector<int> gam(N);
    for (int b = 0; b < N; ++b) gam[b] = residue(c, b);

    std::vector<ColoredPartition> out;
    ColoredPartition stack{{0, c.ground()}};  // grown bottom-up

    std::function<void(long long, int, int)> rec = [&](long long v, int b, int w) {
        if (w == total) out.emplace_back(stack.rbegin(), stack.rend());
        for (int bn = 0; bn < N; ++bn) {
            const long long lo = std::max<long long>(v + m.entries[b][bn], 1);
            const int g = gam[bn];
            for (long long vn = lo + (((g - lo) % hd + hd) % hd); w + vn <= total;
                 vn += hd) {
                if (is_forbidden(c, vn, bn)) continue;
                stack.push_back({vn, bn});
                rec(vn, bn, w + static_cast<int>(vn));
                stack.pop_back();
            }
        }
    };
    rec(0, c.ground(), 0);
    return out;
}

std::vector<long long> reconstruct_lambda(const Crystal& c,
                                          const ColoredPartition& parts) {
    const int hd = c.ht_delta();
    std::vector<long long> lambda;
    lambda.reserve(parts.size());
    for (const auto& p : parts) {
        const long long num = p.value + c.ht_wt(p.color);
        if (num % hd != 0)
            throw IntegrityError("part value + weight height not divisible");
        lambda.push_back(num / hd);
    }
    for (size_t k = 0; k + 1 < lambda.size(); ++k)
        if (lambda[k] < lambda[k + 1])
            throw IntegrityError("reconstructed partition not weakly decreasing");
    if (!lambda.empty() && lambda.back() != 0)
        throw IntegrityError("reconstructed partition does not end at 0");
    return lambda;
}

}  // namespace crr
