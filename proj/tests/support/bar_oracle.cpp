#include "support/bar_oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bar_oracle {

using skewtaylor::Monomial;
using skewtaylor::QuotientAlgebra;

namespace {

using Word = std::vector<Monomial>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return (unsigned __int128)a * b % p;
}

std::size_t modp_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p)
{
    std::size_t rows = a.size();
    if (rows == 0)
        return 0;
    std::size_t cols = a[0].size();
    auto inv = [&](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = mulmod(r, x, p);
            x = mulmod(x, x, p);
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0)
            ++pr;
        if (pr == rows)
            continue;
        std::swap(a[pr], a[r]);
        std::uint64_t iv = inv(a[r][c]);
        for (std::size_t k = c; k < cols; ++k)
            a[r][k] = mulmod(a[r][k], iv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            std::uint64_t f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] = (a[i][k] + p - mulmod(f, a[r][k], p)) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace

std::map<std::pair<int, int>, std::size_t> tor_dims(const QuotientAlgebra& S, int i_max, int d_cap)
{
    const auto& ring = *S.ring();
    if (ring.field().kind != skewtaylor::FieldDesc::Kind::prime)
        throw std::runtime_error("bar oracle: prime fields only");
    std::uint64_t p = ring.field().p;

    std::vector<Monomial> letters;
    for (int d = 1; d <= d_cap; ++d)
        for (const auto& m : S.basis_of_degree(d))
            letters.push_back(m);

    // Words of each length, grouped by total multidegree.
    std::vector<std::map<Monomial, std::vector<Word>>> words((std::size_t)i_max + 2);
    words[0][Monomial::unit(ring.nvars())].push_back({});
    for (int i = 1; i <= i_max + 1; ++i) {
        for (const auto& [alpha, ws] : words[(std::size_t)i - 1]) {
            for (const auto& w : ws) {
                for (const auto& u : letters) {
                    Monomial total = skewtaylor::mul(alpha, u);
                    if (ring.internal_degree(total) > d_cap)
                        continue;
                    Word next = w;
                    next.push_back(u);
                    words[(std::size_t)i][total].push_back(next);
                }
            }
        }
    }
    for (auto& level : words)
        for (auto& [alpha, ws] : level)
            std::sort(ws.begin(), ws.end());

    // Ranks of d_i restricted to each multidegree.
    std::vector<std::map<Monomial, std::size_t>> ranks((std::size_t)i_max + 2);
    for (int i = 2; i <= i_max + 1; ++i) {
        for (const auto& [alpha, cols] : words[(std::size_t)i]) {
            auto rows_it = words[(std::size_t)i - 1].find(alpha);
            if (rows_it == words[(std::size_t)i - 1].end())
                continue;
            const auto& rows = rows_it->second;
            std::vector<std::vector<std::uint64_t>> m(rows.size(),
                                                      std::vector<std::uint64_t>(cols.size(), 0));
            bool any = false;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const Word& w = cols[c];
                for (std::size_t j = 0; j + 1 < w.size(); ++j) {
                    Monomial prod = skewtaylor::mul(w[j], w[j + 1]);
                    if (!S.in_basis(prod))
                        continue;
                    Word merged;
                    merged.reserve(w.size() - 1);
                    for (std::size_t k = 0; k < w.size(); ++k) {
                        if (k == j)
                            merged.push_back(prod);
                        else if (k != j + 1)
                            merged.push_back(w[k]);
                    }
                    auto it = std::lower_bound(rows.begin(), rows.end(), merged);
                    std::size_t r = (std::size_t)(it - rows.begin());
                    std::uint64_t coeff =
                        skewtaylor::c_constant(w[j], w[j + 1], ring).residue() % p;
                    if ((j + 1) % 2)  // (−1)^j with 1-based face index j+1
                        coeff = (p - coeff) % p;
                    m[r][c] = (m[r][c] + coeff) % p;
                    any = any || coeff;
                }
            }
            if (any)
                ranks[(std::size_t)i][alpha] = modp_rank(std::move(m), p);
        }
    }

    std::map<std::pair<int, int>, std::size_t> dims;
    for (int i = 0; i <= i_max; ++i) {
        for (const auto& [alpha, ws] : words[(std::size_t)i]) {
            std::size_t rk_in = 0, rk_out = 0;
            auto it = ranks[(std::size_t)i].find(alpha);
            if (it != ranks[(std::size_t)i].end())
                rk_in = it->second;
            auto jt = ranks[(std::size_t)i + 1].find(alpha);
            if (jt != ranks[(std::size_t)i + 1].end())
                rk_out = jt->second;
            std::size_t h = ws.size() - rk_in - rk_out;
            if (h)
                dims[{i, (int)ring.internal_degree(alpha)}] += h;
        }
    }
    return dims;
}

}  // namespace bar_oracle
