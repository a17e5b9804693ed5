#include "skewtaylor/homres.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "skewtaylor/linalg.hpp"
#include "skewtaylor/util.hpp"

namespace skewtaylor {

QuotientAlgebra::QuotientAlgebra(QMatrixPtr ring, std::vector<Monomial> gens)
    : ring_(ring), ideal_(ring, std::move(gens))
{
    for (const auto& g : ideal_.mingens())
        if (ring_->internal_degree(g) < 2)
            throw input_error("quotient algebra: relations must have internal degree >= 2, got " +
                              g.str());
}

std::vector<Monomial> QuotientAlgebra::basis_of_degree(std::int64_t d) const
{
    std::vector<Monomial> out;
    Monomial cur = Monomial::unit(ring_->nvars());
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
        if (i == ring_->nvars()) {
            if (rem == 0 && in_basis(cur))
                out.push_back(cur);
            return;
        }
        std::int64_t di = ring_->degrees()[i];
        for (std::int64_t e = 0; e * di <= rem; ++e) {
            cur.exps[i] = e;
            rec(i + 1, rem - e * di);
        }
        cur.exps[i] = 0;
    };
    rec(0, d);
    return out;
}

std::int64_t QuotientAlgebra::max_related_degree() const
{
    std::int64_t d = 1;
    for (auto v : ring_->degrees())
        d = std::max(d, v);
    for (const auto& g : ideal_.mingens())
        d = std::max(d, ring_->internal_degree(g));
    return d;
}

namespace {

// All multidegrees of weighted internal degree <= d_max, sorted by
// (degree, lex): the sweep order of the resolution builder.
std::vector<Monomial> degree_window(const QMatrix& ring, std::int64_t d_max, std::size_t max_window)
{
    std::vector<Monomial> window;
    Monomial cur = Monomial::unit(ring.nvars());
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
        if (i == ring.nvars()) {
            window.push_back(cur);
            return;
        }
        for (std::int64_t e = 0; e * ring.degrees()[i] <= rem; ++e) {
            cur.exps[i] = e;
            rec(i + 1, rem - e * ring.degrees()[i]);
            if (window.size() > max_window)
                throw budget_error("resolution: degree window exceeds the multidegree budget");
        }
        cur.exps[i] = 0;
    };
    rec(0, d_max);
    std::sort(window.begin(), window.end(), [&](const Monomial& a, const Monomial& b) {
        return deglex_less(a, b, ring.degrees());
    });
    return window;
}

struct Stage {
    std::vector<Monomial> gens;  // multidegrees of the free generators
    // Differential column of each generator: (row index in previous stage,
    // scalar); the monomial part is implied by the multidegree difference.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
};

}  // namespace

PSeries minimal_resolution_of_k(const QuotientAlgebra& S, int i_max, std::int64_t d_max,
                                const ResolutionBudget& budget)
{
    if (i_max < 0)
        throw input_error("resolution: i_max must be nonnegative");
    if (d_max < i_max)
        throw input_error("resolution: need d_max >= i_max");
    const QMatrix& ring = *S.ring();
    const FieldDesc& field = ring.field();
    std::vector<Monomial> window = degree_window(ring, d_max, budget.max_window);

    PSeries P;
    P.coeffs.assign((std::size_t)i_max + 1, BigInt(0));
    P.coeffs[0] = 1;
    P.bigraded[0][Monomial::unit(ring.nvars())] = 1;

    Stage cur;  // F_0 = S
    cur.gens.push_back(Monomial::unit(ring.nvars()));
    cur.cols.push_back({});
    std::vector<Monomial> prev_gens;  // generators of F_{stage-1}

    for (int stage = 0; stage < i_max; ++stage) {
        Stage next;
        // Kernel bases per multidegree, in the strand coordinates recorded in
        // active_sets; consumed again at γ + e_j while sweeping this stage.
        std::map<Monomial, std::vector<std::vector<Scalar>>> kernels;
        std::map<Monomial, std::vector<std::size_t>> active_sets;

        for (const Monomial& gamma : window) {
            std::vector<std::size_t> act;
            for (std::size_t l = 0; l < cur.gens.size(); ++l)
                if (divides(cur.gens[l], gamma) && S.in_basis(quotient(gamma, cur.gens[l])))
                    act.push_back(l);
            if (act.empty())
                continue;
            active_sets[gamma] = act;

            std::vector<std::vector<Scalar>> K;
            if (stage == 0) {
                // Kernel of the augmentation S -> k: everything of positive degree.
                if (!gamma.is_unit())
                    K.push_back({Scalar::one(field)});
            } else {
                std::vector<std::size_t> rows;
                std::map<std::size_t, std::size_t> row_pos;
                for (std::size_t m = 0; m < prev_gens.size(); ++m) {
                    if (divides(prev_gens[m], gamma) && S.in_basis(quotient(gamma, prev_gens[m]))) {
                        row_pos[m] = rows.size();
                        rows.push_back(m);
                    }
                }
                Matrix M(rows.size(), act.size(), field);
                for (std::size_t c = 0; c < act.size(); ++c) {
                    std::size_t l = act[c];
                    Monomial rest = quotient(gamma, cur.gens[l]);
                    for (const auto& [m, coeff] : cur.cols[l]) {
                        auto it = row_pos.find(m);
                        if (it == row_pos.end())
                            continue;  // image component lands in I
                        Monomial step = quotient(cur.gens[l], prev_gens[m]);
                        M.at(it->second, c) = coeff * c_constant(step, rest, ring);
                    }
                }
                K = kernel_basis(M);
            }
            if (K.empty())
                continue;

            // Old part of the kernel: right multiples of kernels one degree
            // down; new minimal generators extend its span.
            SpanBuilder span(field, act.size());
            std::map<std::size_t, std::size_t> act_pos;
            for (std::size_t c = 0; c < act.size(); ++c)
                act_pos[act[c]] = c;
            for (std::size_t j = 0; j < ring.nvars(); ++j) {
                if (gamma.exps[j] == 0)
                    continue;
                Monomial down = gamma;
                down.exps[j] -= 1;
                auto kit = kernels.find(down);
                if (kit == kernels.end())
                    continue;
                const auto& down_act = active_sets.at(down);
                Monomial ej = Monomial::variable(ring.nvars(), j);
                for (const auto& v : kit->second) {
                    std::vector<Scalar> w(act.size(), Scalar::zero(field));
                    bool nonzero = false;
                    for (std::size_t c = 0; c < down_act.size(); ++c) {
                        if (v[c].is_zero())
                            continue;
                        std::size_t l = down_act[c];
                        auto pos = act_pos.find(l);
                        if (pos == act_pos.end())
                            continue;  // x^{γ−α_l} fell into I
                        Monomial rest = quotient(down, cur.gens[l]);
                        w[pos->second] = v[c] * c_constant(rest, ej, ring);
                        nonzero = true;
                    }
                    if (nonzero)
                        span.add(std::move(w));
                }
            }
            for (const auto& v : K) {
                if (!span.add(v))
                    continue;
                // v is a new minimal generator of the kernel.
                next.gens.push_back(gamma);
                std::vector<std::pair<std::size_t, Scalar>> col;
                for (std::size_t c = 0; c < act.size(); ++c)
                    if (!v[c].is_zero())
                        col.emplace_back(act[c], v[c]);
                next.cols.push_back(std::move(col));
                if (next.gens.size() > budget.max_generators)
                    throw budget_error("resolution: generator count exceeds the stage budget");
                P.coeffs[(std::size_t)stage + 1] += 1;
                P.bigraded[stage + 1][gamma] += 1;
            }
            kernels.emplace(gamma, std::move(K));
        }
        prev_gens = std::move(cur.gens);
        cur = std::move(next);
        if (cur.gens.empty()) {
            // No kernel generators inside the window; all later in-window
            // Betti numbers vanish too (generator degrees strictly increase).
            break;
        }
    }

    std::int64_t D = S.max_related_degree();
    P.exact.assign((std::size_t)i_max + 1, false);
    for (int i = 0; i <= i_max; ++i)
        P.exact[(std::size_t)i] = ((std::int64_t)i * D <= d_max);
    P.exact_through = -1;
    for (int i = 0; i <= i_max && P.exact[(std::size_t)i]; ++i)
        P.exact_through = i;
    if (P.exact_through < 0)
        P.exact_through = 0;
    return P;
}

namespace {

void div_by_one_plus_tj(std::vector<BigInt>& c, int j)
{
    for (std::size_t k = (std::size_t)j; k < c.size(); ++k)
        c[k] -= c[k - (std::size_t)j];
}

void mul_by_one_plus_tj(std::vector<BigInt>& c, int j)
{
    for (std::size_t k = c.size(); k-- > (std::size_t)j;)
        c[k] += c[k - (std::size_t)j];
}

void mul_by_one_minus_tj(std::vector<BigInt>& c, int j)
{
    for (std::size_t k = c.size(); k-- > (std::size_t)j;)
        c[k] -= c[k - (std::size_t)j];
}

void div_by_one_minus_tj(std::vector<BigInt>& c, int j)
{
    for (std::size_t k = (std::size_t)j; k < c.size(); ++k)
        c[k] += c[k - (std::size_t)j];
}

}  // namespace

DeviationRanks deviations(const PSeries& P)
{
    int K = P.exact_through;
    if (P.coeffs.empty() || P.coeffs[0] != 1)
        throw input_error("deviations: series must start with 1");
    std::vector<BigInt> resid(P.coeffs.begin(), P.coeffs.begin() + K + 1);
    DeviationRanks D;
    D.ranks.assign((std::size_t)K + 1, BigInt(0));
    D.exact_through = K;
    for (int j = 1; j <= K; ++j) {
        BigInt eps = resid[(std::size_t)j];
        if (eps < 0)
            throw input_error("deviations: negative rank at degree " + std::to_string(j) +
                              " (inconsistent or insufficiently exact series)");
        D.ranks[(std::size_t)j] = eps;
        long long e = eps.convert_to<long long>();
        for (long long k = 0; k < e; ++k) {
            if (j % 2)
                div_by_one_plus_tj(resid, j);
            else
                mul_by_one_minus_tj(resid, j);
        }
    }
    return D;
}

std::vector<BigInt> series_from_deviations(const DeviationRanks& D, int K)
{
    std::vector<BigInt> c((std::size_t)K + 1, BigInt(0));
    c[0] = 1;
    for (int j = 1; j < (int)D.ranks.size() && j <= K; ++j) {
        long long e = D.ranks[(std::size_t)j].convert_to<long long>();
        for (long long k = 0; k < e; ++k) {
            if (j % 2)
                mul_by_one_plus_tj(c, j);
            else
                div_by_one_minus_tj(c, j);
        }
    }
    return c;
}

std::vector<std::pair<Monomial, GDegree>> pi2_multidegrees(const QuotientAlgebra& S,
                                                           std::int64_t d_max)
{
    if (d_max < 2 * S.max_related_degree())
        throw budget_error("pi2_multidegrees: d_max must cover twice the top relation degree");
    PSeries P = minimal_resolution_of_k(S, 2, d_max);
    const QMatrix& ring = *S.ring();
    std::vector<std::pair<Monomial, GDegree>> out;
    auto it = P.bigraded.find(2);
    if (it == P.bigraded.end())
        return out;
    for (const auto& [alpha, count] : it->second) {
        // Subtract the decomposable classes: the pair products of the
        // degree-one classes sit at α = e_i + e_j, i < j.
        std::uint64_t dec = 0;
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < alpha.exps.size(); ++i)
            if (alpha.exps[i] != 0)
                support.push_back(i);
        if (support.size() == 2 && alpha.exps[support[0]] == 1 && alpha.exps[support[1]] == 1)
            dec = 1;
        if (count < dec)
            throw input_error("pi2_multidegrees: fewer Tor_2 classes than decomposables at " +
                              alpha.str());
        for (std::uint64_t k = 0; k < count - dec; ++k)
            out.emplace_back(alpha, gdegree(alpha, ring));
    }
    return out;
}

std::vector<BigInt> poincare_quotient(const PSeries& P, std::size_t nvars, int K)
{
    if (P.exact_through < K)
        throw input_error("poincare quotient: series exact only through t^" +
                          std::to_string(P.exact_through) + ", need t^" + std::to_string(K));
    std::vector<BigInt> c(P.coeffs.begin(), P.coeffs.begin() + K + 1);
    for (std::size_t j = 0; j < nvars; ++j)
        div_by_one_plus_tj(c, 1);
    return c;
}

std::vector<BigInt> poincare_quotient(const QuotientAlgebra& S, int K, const ResolutionBudget& budget)
{
    std::int64_t d_max = (std::int64_t)K * S.max_related_degree();
    PSeries P = minimal_resolution_of_k(S, K, d_max, budget);
    return poincare_quotient(P, S.ring()->nvars(), K);
}

bool compare_poincare_quotient(const QuotientAlgebra& S1, const QuotientAlgebra& S2, int K,
                               const ResolutionBudget& budget)
{
    return poincare_quotient(S1, K, budget) == poincare_quotient(S2, K, budget);
}

}  // namespace skewtaylor
