#include "support/classical_taylor.hpp"

#include <algorithm>
#include <bit>

namespace classical_taylor {

Expv lcm_of(const std::vector<Expv>& gens, std::uint64_t mask)
{
    Expv m(gens.empty() ? 0 : gens[0].size(), 0);
    for (unsigned i = 0; i < 64; ++i)
        if (mask >> i & 1)
            for (std::size_t k = 0; k < m.size(); ++k)
                m[k] = std::max(m[k], gens[i][k]);
    return m;
}

Term diff_entry(const std::vector<Expv>& gens, std::uint64_t F, unsigned i)
{
    Expv mf = lcm_of(gens, F);
    Expv mg = lcm_of(gens, F & ~(std::uint64_t(1) << i));
    Expv q(mf.size());
    for (std::size_t k = 0; k < mf.size(); ++k)
        q[k] = mf[k] - mg[k];
    int below = std::popcount(F & ((std::uint64_t(1) << i) - 1));
    return Term{below % 2 ? -1 : 1, q};
}

ProductTerm product_entry(const std::vector<Expv>& gens, std::uint64_t V, std::uint64_t W)
{
    if (V & W)
        return ProductTerm{true, 1, {}};
    Expv mv = lcm_of(gens, V), mw = lcm_of(gens, W), mu = lcm_of(gens, V | W);
    Expv q(mv.size());
    for (std::size_t k = 0; k < mv.size(); ++k)
        q[k] = mv[k] + mw[k] - mu[k];
    int inversions = 0;
    for (unsigned i = 0; i < 64; ++i)
        if (V >> i & 1)
            inversions += std::popcount(W & ((std::uint64_t(1) << i) - 1));
    return ProductTerm{false, inversions % 2 ? -1 : 1, q};
}

namespace {

// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
std::size_t int_rank(std::vector<std::vector<long long>> a)
{
    std::size_t rows = a.size();
    if (rows == 0)
        return 0;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k)
                a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::map<Expv, std::vector<std::uint64_t>> betti_by_multidegree(const std::vector<Expv>& gens)
{
    unsigned s = (unsigned)gens.size();
    std::uint64_t total = std::uint64_t(1) << s;
    std::map<Expv, std::vector<std::vector<std::uint64_t>>> groups;  // alpha -> per-i masks
    for (std::uint64_t F = 0; F < total; ++F) {
        auto& slot = groups[lcm_of(gens, F)];
        if (slot.empty())
            slot.assign(s + 1, {});
        slot[(std::size_t)std::popcount(F)].push_back(F);
    }
    std::map<Expv, std::vector<std::uint64_t>> out;
    for (const auto& [alpha, slot] : groups) {
        std::vector<std::size_t> ranks(s + 2, 0);
        for (unsigned i = 1; i <= s; ++i) {
            if (slot[i].empty() || slot[i - 1].empty())
                continue;
            std::vector<std::vector<long long>> m(slot[i - 1].size(),
                                                  std::vector<long long>(slot[i].size(), 0));
            for (std::size_t col = 0; col < slot[i].size(); ++col) {
                std::uint64_t F = slot[i][col];
                for (unsigned b = 0; b < s; ++b) {
                    if (!(F >> b & 1))
                        continue;
                    std::uint64_t G = F & ~(std::uint64_t(1) << b);
                    if (!(lcm_of(gens, G) == alpha))
                        continue;
                    Term t = diff_entry(gens, F, b);
                    auto it = std::lower_bound(slot[i - 1].begin(), slot[i - 1].end(), G);
                    m[(std::size_t)(it - slot[i - 1].begin())][col] = t.sign;
                }
            }
            ranks[i] = int_rank(std::move(m));
        }
        std::vector<std::uint64_t> betti(s + 1, 0);
        bool any = false;
        for (unsigned i = 0; i <= s; ++i) {
            std::uint64_t b = (std::uint64_t)(slot[i].size() - ranks[i] - ranks[i + 1]);
            betti[i] = b;
            any = any || b;
        }
        if (any)
            out[alpha] = betti;
    }
    return out;
}

std::vector<std::uint64_t> betti_totals(const std::vector<Expv>& gens)
{
    unsigned s = (unsigned)gens.size();
    std::vector<std::uint64_t> totals(s + 1, 0);
    for (const auto& [alpha, betti] : betti_by_multidegree(gens))
        for (unsigned i = 0; i <= s; ++i)
            totals[i] += betti[i];
    return totals;
}

}  // namespace classical_taylor
