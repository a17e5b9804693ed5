#include "skewtaylor/taylor.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "skewtaylor/util.hpp"

namespace skewtaylor {

int sigma_f_i(Subset F, unsigned i)
{
    if (!(F >> i & 1))
        throw input_error("sigma(F,i): index not a member of the subset");
    return std::popcount(F & ((Subset(1) << i) - 1));
}

int sigma_vw(Subset V, Subset W)
{
    int count = 0;
    for (unsigned i = 0; i < 64; ++i)
        if (V >> i & 1)
            count += std::popcount(W & ((Subset(1) << i) - 1));
    return count;
}

std::string subset_str(Subset F)
{
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < 64; ++i) {
        if (!(F >> i & 1))
            continue;
        if (!first)
            out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

TaylorComplex::TaylorComplex(QMatrixPtr ring, std::vector<Monomial> mingens, unsigned max_s)
    : ring_(std::move(ring)), gens_(std::move(mingens))
{
    unsigned s = (unsigned)gens_.size();
    if (s == 0)
        throw input_error("taylor: empty generator list");
    if (s > max_s)
        throw budget_error("taylor: s = " + std::to_string(s) + " exceeds the 2^s memory guard (cap " +
                           std::to_string(max_s) + ")");
    std::size_t total = std::size_t(1) << s;

    mf_.resize(total, Monomial::unit(ring_->nvars()));
    for (Subset m = 1; m < total; ++m) {
        unsigned low = (unsigned)std::countr_zero(m);
        mf_[m] = lcm(mf_[m & (m - 1)], gens_[low]);
    }

    bases_.assign(s + 1, {});
    for (Subset m = 0; m < total; ++m)
        bases_[std::popcount(m)].push_back(m);

    diff_.assign(s + 1, {});
    for (unsigned i = 1; i <= s; ++i) {
        diff_[i].resize(bases_[i].size());
        for (std::size_t k = 0; k < bases_[i].size(); ++k) {
            Subset F = bases_[i][k];
            auto& col = diff_[i][k];
            for (unsigned b = 0; b < s; ++b) {
                if (!(F >> b & 1))
                    continue;
                Subset G = F & ~(Subset(1) << b);
                Monomial q = quotient(mf_[F], mf_[G]);
                Scalar c = c_constant(mf_[G], q, *ring_).inverse();
                if (sigma_f_i(F, b) % 2)
                    c = -c;
                col.push_back({G, SkewPoly::term(ring_, q, c)});
            }
        }
    }
}

TaylorComplex build_taylor(const MonomialIdeal& I, unsigned max_s)
{
    if (I.gens().empty())
        throw input_error("taylor: empty generator list");
    if (!I.was_minimal())
        throw input_error("taylor: generator list is not minimal; minimalize first");
    return TaylorComplex(I.ring(), I.mingens(), max_s);
}

void TaylorElement::add(Subset F, const SkewPoly& p)
{
    if (p.is_zero())
        return;
    auto it = coords_.find(F);
    if (it == coords_.end()) {
        coords_.emplace(F, p);
        return;
    }
    it->second = it->second + p;
    if (it->second.is_zero())
        coords_.erase(it);
}

TaylorElement TaylorElement::operator+(const TaylorElement& o) const
{
    TaylorElement r = *this;
    if (!r.T_)
        r.T_ = o.T_;
    for (const auto& [F, p] : o.coords_)
        r.add(F, p);
    return r;
}

TaylorElement TaylorElement::operator-(const TaylorElement& o) const
{
    TaylorElement r = *this;
    if (!r.T_)
        r.T_ = o.T_;
    for (const auto& [F, p] : o.coords_)
        r.add(F, -p);
    return r;
}

TaylorElement TaylorElement::operator*(const Scalar& c) const
{
    TaylorElement r(T_);
    for (const auto& [F, p] : coords_)
        r.add(F, p * c);
    return r;
}

bool TaylorElement::operator==(const TaylorElement& o) const
{
    return coords_ == o.coords_;
}

std::string TaylorElement::str() const
{
    if (coords_.empty())
        return "0";
    std::string out;
    for (const auto& [F, p] : coords_) {
        if (!out.empty())
            out += " + ";
        out += "e" + subset_str(F) + "*(" + p.str() + ")";
    }
    return out;
}

bool verify_d_squared(const TaylorComplex& T)
{
    for (unsigned i = 2; i <= T.s(); ++i) {
        for (std::size_t k = 0; k < T.bases()[i].size(); ++k) {
            std::map<Subset, SkewPoly> acc;
            for (const auto& [G, p] : T.column(i, k)) {
                std::size_t kg = (std::size_t)(std::lower_bound(T.bases()[i - 1].begin(),
                                                                T.bases()[i - 1].end(), G) -
                                               T.bases()[i - 1].begin());
                for (const auto& [H, p2] : T.column(i - 1, kg)) {
                    auto it = acc.find(H);
                    if (it == acc.end())
                        acc.emplace(H, p2 * p);
                    else
                        it->second = it->second + p2 * p;
                }
            }
            for (const auto& [H, p] : acc)
                if (!p.is_zero())
                    return false;
        }
    }
    return true;
}

TaylorElement diff_element(const TaylorComplex& T, const TaylorElement& a)
{
    TaylorElement out(&T);
    for (const auto& [F, p] : a.coords()) {
        unsigned i = (unsigned)std::popcount(F);
        if (i == 0)
            continue;
        std::size_t k = (std::size_t)(std::lower_bound(T.bases()[i].begin(), T.bases()[i].end(), F) -
                                      T.bases()[i].begin());
        for (const auto& [G, q] : T.column(i, k))
            out.add(G, q * p);
    }
    return out;
}

StrandComplex strand(const TaylorComplex& T, const Monomial& alpha)
{
    for (auto e : alpha.exps)
        if (e < 0)
            throw input_error("strand: multidegree must be componentwise nonnegative");
    StrandComplex S;
    S.alpha = alpha;
    S.bases.assign(T.s() + 1, {});
    for (unsigned i = 0; i <= T.s(); ++i)
        for (Subset F : T.bases()[i])
            if (divides(T.mF(F), alpha))
                S.bases[i].push_back(F);

    const FieldDesc& field = T.ring()->field();
    S.d.reserve(T.s() + 1);
    S.d.emplace_back(0, 0, field);
    for (unsigned i = 1; i <= T.s(); ++i) {
        Matrix m(S.bases[i - 1].size(), S.bases[i].size(), field);
        for (std::size_t col = 0; col < S.bases[i].size(); ++col) {
            Subset F = S.bases[i][col];
            Monomial rest = quotient(alpha, T.mF(F));
            std::size_t k = (std::size_t)(std::lower_bound(T.bases()[i].begin(), T.bases()[i].end(), F) -
                                          T.bases()[i].begin());
            for (const auto& [G, p] : T.column(i, k)) {
                auto it = std::lower_bound(S.bases[i - 1].begin(), S.bases[i - 1].end(), G);
                std::size_t row = (std::size_t)(it - S.bases[i - 1].begin());
                // e_F x^{α−m_F} ↦ e_G · c (m_F/m_G) x^{α−m_F}; the monomial
                // product contributes C(m_F/m_G, x^α/m_F) on top of c.
                const Monomial& q = p.sole_monomial();
                m.at(row, col) = p.sole_coefficient() * c_constant(q, rest, *T.ring());
            }
        }
        S.d.push_back(std::move(m));
    }
    return S;
}

std::vector<std::size_t> StrandComplex::homology_dims() const
{
    std::vector<std::size_t> ranks(d.size() + 1, 0);
    for (std::size_t i = 1; i < d.size(); ++i)
        ranks[i] = rank(d[i]);
    std::vector<std::size_t> h(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        std::size_t dim_ker = i == 0 ? bases[0].size() : bases[i].size() - ranks[i];
        std::size_t next_rank = i + 1 < d.size() ? ranks[i + 1] : 0;
        h[i] = dim_ker - next_rank;
    }
    return h;
}

bool verify_resolution(const TaylorComplex& T, unsigned threads)
{
    Monomial box = T.mF((Subset(1) << T.s()) - 1);
    std::size_t n = box.nvars();
    std::size_t count = 1;
    for (auto e : box.exps) {
        count *= (std::size_t)(e + 1);
        if (count > 50'000'000)
            throw budget_error("verify_resolution: exactness box has more than 5*10^7 multidegrees");
    }

    MonomialIdeal I(T.ring(), T.gens());
    std::atomic<bool> ok(true);
    parallel_for(count, threads, [&](std::size_t idx) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        Monomial alpha = Monomial::unit(n);
        std::size_t rem = idx;
        for (std::size_t j = 0; j < n; ++j) {
            alpha.exps[j] = (std::int64_t)(rem % (std::size_t)(box.exps[j] + 1));
            rem /= (std::size_t)(box.exps[j] + 1);
        }
        StrandComplex S = strand(T, alpha);
        std::vector<std::size_t> h = S.homology_dims();
        if (h[0] != (std::size_t)quotient_dim(I, alpha)) {
            ok.store(false, std::memory_order_relaxed);
            return;
        }
        for (std::size_t j = 1; j < h.size(); ++j) {
            if (h[j] != 0) {
                ok.store(false, std::memory_order_relaxed);
                return;
            }
        }
    });
    return ok.load();
}

std::uint64_t BettiTable::total(int i) const
{
    auto it = by_degree.find(i);
    if (it == by_degree.end())
        return 0;
    std::uint64_t t = 0;
    for (const auto& [a, v] : it->second)
        t += v;
    return t;
}

std::vector<std::uint64_t> BettiTable::totals(int up_to) const
{
    std::vector<std::uint64_t> out;
    for (int i = 0; i <= up_to; ++i)
        out.push_back(total(i));
    return out;
}

BettiTable betti(const TaylorComplex& T)
{
    const FieldDesc& field = T.ring()->field();
    // Reduced complex T ⊗ k decomposes by multidegree; collect, per (i, α),
    // the basis subsets with m_F = α and the surviving ±1 entries.
    std::map<Monomial, std::vector<std::vector<Subset>>> by_alpha;
    for (unsigned i = 0; i <= T.s(); ++i) {
        for (Subset F : T.bases()[i]) {
            auto& slot = by_alpha[T.mF(F)];
            if (slot.empty())
                slot.assign(T.s() + 1, {});
            slot[i].push_back(F);
        }
    }

    BettiTable table;
    for (const auto& [alpha, slots] : by_alpha) {
        std::vector<std::size_t> ranks(T.s() + 2, 0);
        for (unsigned i = 1; i <= T.s(); ++i) {
            if (slots[i].empty() || slots[i - 1].empty())
                continue;
            Matrix m(slots[i - 1].size(), slots[i].size(), field);
            bool any = false;
            for (std::size_t col = 0; col < slots[i].size(); ++col) {
                Subset F = slots[i][col];
                std::size_t k = (std::size_t)(std::lower_bound(T.bases()[i].begin(),
                                                               T.bases()[i].end(), F) -
                                              T.bases()[i].begin());
                for (const auto& [G, p] : T.column(i, k)) {
                    if (!(T.mF(G) == alpha))
                        continue;
                    auto it = std::lower_bound(slots[i - 1].begin(), slots[i - 1].end(), G);
                    m.at((std::size_t)(it - slots[i - 1].begin()), col) = p.sole_coefficient();
                    any = true;
                }
            }
            if (any)
                ranks[i] = rank(m);
        }
        for (unsigned i = 0; i <= T.s(); ++i) {
            if (slots[i].empty())
                continue;
            std::size_t b = slots[i].size() - ranks[i] - ranks[i + 1];
            if (b > 0)
                table.by_degree[(int)i][alpha] = (std::uint64_t)b;
        }
    }
    return table;
}

}  // namespace skewtaylor
