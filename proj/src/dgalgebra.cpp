#include "skewtaylor/dgalgebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

namespace skewtaylor {

ProductEntry product_entry(Subset V, Subset W, const TaylorComplex& T)
{
    ProductEntry e;
    e.coeff = Scalar::one(T.ring()->field());
    if (V & W) {
        e.zero = true;
        return e;
    }
    e.target = V | W;
    e.sign = sigma_vw(V, W) % 2 ? -1 : 1;
    const Monomial& mv = T.mF(V);
    const Monomial& mw = T.mF(W);
    const Monomial& mu = T.mF(V | W);
    e.carrier = quotient(mul(mv, mw), mu);
    e.coeff = c_constant(mv, mw, *T.ring()) * c_constant(mu, e.carrier, *T.ring()).inverse();
    return e;
}

TaylorElement basis_product(Subset V, Subset W, const TaylorComplex& T)
{
    TaylorElement out(&T);
    ProductEntry e = product_entry(V, W, T);
    if (e.zero)
        return out;
    Scalar c = e.sign < 0 ? -e.coeff : e.coeff;
    out.add(e.target, SkewPoly::term(T.ring(), e.carrier, c));
    return out;
}

TaylorElement element_product(const TaylorElement& a, const TaylorElement& b)
{
    const TaylorComplex* T = a.complex() ? a.complex() : b.complex();
    TaylorElement out(T);
    if (a.is_zero() || b.is_zero())
        return out;
    if (a.complex() && b.complex() && a.complex() != b.complex())
        throw input_error("product: elements of different complexes");
    for (const auto& [V, f] : a.coords()) {
        for (const auto& [W, g] : b.coords()) {
            TaylorElement base = basis_product(V, W, *T);
            if (base.is_zero())
                continue;
            // Move each G-homogeneous term of f across e_W: r m = chi(r,m) m r.
            SkewPoly moved(T->ring());
            for (const auto& [mu, cf] : f.terms())
                moved.add_term(mu, cf * chi_monomials(mu, T->mF(W), *T->ring()));
            const auto& [U, p] = *base.coords().begin();
            out.add(U, p * (moved * g));
        }
    }
    return out;
}

Monomial dp_constant(Subset P, const TaylorComplex& T)
{
    std::vector<unsigned> members;
    for (unsigned i = 0; i < 64; ++i)
        if (P >> i & 1)
            members.push_back(i);
    if (members.size() < 2)
        throw input_error("d_P: subset must have at least two members");
    Monomial d = Monomial::unit(T.ring()->nvars());
    Subset prefix = Subset(1) << members[0];
    for (std::size_t l = 1; l < members.size(); ++l) {
        d = mul(d, gcd(T.mF(prefix), T.gens()[members[l]]));
        prefix |= Subset(1) << members[l];
    }
    return d;
}

namespace {

TaylorElement unit_element(const TaylorComplex& T)
{
    TaylorElement one(&T);
    one.add(0, SkewPoly::one(T.ring()));
    return one;
}

}  // namespace

TaylorElement divided_power(const TaylorElement& a, unsigned r)
{
    const TaylorComplex* T = a.complex();
    if (!T)
        throw input_error("divided_power: element has no ambient complex");
    if (r == 0)
        return unit_element(*T);
    if (r == 1)
        return a;

    // Homogeneity: equal even positive subset size, single-term coefficients,
    // and one common total multidegree across the summands.
    std::optional<int> size;
    std::optional<Monomial> total;
    for (const auto& [P, p] : a.coords()) {
        int c = std::popcount(P);
        if (c == 0 || c % 2)
            throw input_error("divided_power: homological degree must be even and positive");
        if (size && *size != c)
            throw input_error("divided_power: inhomogeneous element (mixed homological degrees)");
        size = c;
        if (p.term_count() != 1)
            throw input_error("divided_power: inhomogeneous coefficient");
        Monomial t = mul(p.sole_monomial(), T->mF(P));
        if (total && !(*total == t))
            throw input_error("divided_power: inhomogeneous element (mixed multidegrees)");
        total = t;
    }
    if (!size)
        return TaylorElement(T);  // zero element: zero divided powers for r >= 1

    std::vector<Subset> support;
    for (const auto& [P, p] : a.coords())
        support.push_back(P);
    if (support.size() < r)
        return TaylorElement(T);  // every ordered tuple repeats a subset

    // Sum of (a_{P_1}e_{P_1}) ... (a_{P_r}e_{P_r}) over ordered tuples;
    // tuples with a repeated subset vanish, so range over injective ones.
    TaylorElement out(T);
    std::vector<std::size_t> idx(r, 0);
    std::vector<bool> used(support.size(), false);
    std::function<void(unsigned, const TaylorElement&)> rec = [&](unsigned depth, const TaylorElement& acc) {
        if (acc.is_zero())
            return;
        if (depth == r) {
            out = out + acc;
            return;
        }
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (used[k])
                continue;
            used[k] = true;
            TaylorElement factor(T);
            factor.add(support[k], a.coords().at(support[k]));
            rec(depth + 1, depth == 0 ? factor : element_product(acc, factor));
            used[k] = false;
        }
    };
    rec(0, TaylorElement(T));
    return out;
}

namespace {

TaylorElement basis_element(const TaylorComplex& T, Subset F)
{
    TaylorElement e(&T);
    e.add(F, SkewPoly::one(T.ring()));
    return e;
}

// Visit (V, W) pairs: exhaustive when 4^s fits the budget, else seeded samples.
template <typename Fn>
bool for_pairs(const TaylorComplex& T, const VerifyBudget& budget, Fn&& fn)
{
    std::size_t total = std::size_t(1) << T.s();
    if (total * total <= budget.max_pairs) {
        for (Subset V = 0; V < total; ++V)
            for (Subset W = 0; W < total; ++W)
                if (!fn(V, W))
                    return false;
        return true;
    }
    std::mt19937_64 rng(budget.seed);
    for (std::size_t k = 0; k < budget.max_pairs; ++k)
        if (!fn(rng() % total, rng() % total))
            return false;
    return true;
}

template <typename Fn>
bool for_triples(const TaylorComplex& T, const VerifyBudget& budget, Fn&& fn)
{
    std::size_t total = std::size_t(1) << T.s();
    if (total * total * total <= budget.max_triples) {
        for (Subset U = 0; U < total; ++U)
            for (Subset V = 0; V < total; ++V)
                for (Subset W = 0; W < total; ++W)
                    if (!fn(U, V, W))
                        return false;
        return true;
    }
    std::mt19937_64 rng(budget.seed);
    for (std::size_t k = 0; k < budget.max_triples; ++k)
        if (!fn(rng() % total, rng() % total, rng() % total))
            return false;
    return true;
}

}  // namespace

bool verify_leibniz(const TaylorComplex& T, const VerifyBudget& budget)
{
    return for_pairs(T, budget, [&](Subset V, Subset W) {
        TaylorElement ev = basis_element(T, V);
        TaylorElement ew = basis_element(T, W);
        TaylorElement lhs = diff_element(T, element_product(ev, ew));
        TaylorElement rhs = element_product(diff_element(T, ev), ew);
        TaylorElement tail = element_product(ev, diff_element(T, ew));
        if (std::popcount(V) % 2)
            rhs = rhs - tail;
        else
            rhs = rhs + tail;
        return lhs == rhs;
    });
}

bool verify_associativity(const TaylorComplex& T, const VerifyBudget& budget)
{
    return for_triples(T, budget, [&](Subset U, Subset V, Subset W) {
        TaylorElement eu = basis_element(T, U);
        TaylorElement ev = basis_element(T, V);
        TaylorElement ew = basis_element(T, W);
        return element_product(element_product(eu, ev), ew) ==
               element_product(eu, element_product(ev, ew));
    });
}

bool verify_color_comm(const TaylorComplex& T, const VerifyBudget& budget)
{
    std::size_t total = std::size_t(1) << T.s();
    for (Subset V = 1; V < total; ++V) {
        if (std::popcount(V) % 2 == 0)
            continue;
        TaylorElement ev = basis_element(T, V);
        if (!element_product(ev, ev).is_zero())
            return false;
    }
    return for_pairs(T, budget, [&](Subset V, Subset W) {
        TaylorElement lhs = element_product(basis_element(T, V), basis_element(T, W));
        TaylorElement rhs = element_product(basis_element(T, W), basis_element(T, V));
        Scalar c = chi_monomials(T.mF(V), T.mF(W), *T.ring());
        if ((std::popcount(V) * std::popcount(W)) % 2)
            c = -c;
        return lhs == rhs * c;
    });
}

namespace {

long long binom2(unsigned r)
{
    return (long long)r * (r - 1) / 2;
}

// chi(e_P, x^a)^{C(r,2)} a^r e_P^{(r)}, with a e_P interpreted through the
// bimodule rule a e_P = chi(a, m_P) e_P a.
bool check_scaling_axiom(const TaylorComplex& T, Subset P, const Monomial& a, unsigned r)
{
    Scalar move = chi_monomials(a, T.mF(P), *T.ring());
    TaylorElement scaled(&T);
    scaled.add(P, SkewPoly::term(T.ring(), a, move));
    TaylorElement lhs = divided_power(scaled, r);

    TaylorElement ep(&T);
    ep.add(P, SkewPoly::one(T.ring()));
    TaylorElement rhs = divided_power(ep, r);
    if (!rhs.is_zero()) {
        Scalar chi_pa = chi_monomials(T.mF(P), a, *T.ring()).pow(binom2(r));
        SkewPoly ar = SkewPoly::one(T.ring());
        SkewPoly am = SkewPoly::term(T.ring(), a, Scalar::one(T.ring()->field()));
        for (unsigned k = 0; k < r; ++k)
            ar = ar * am;
        TaylorElement t(&T);
        for (const auto& [F, p] : rhs.coords()) {
            // a^r (e_F p) = chi(a, m_F)^r e_F (a^r p) in canonical right form.
            Scalar move = chi_monomials(a, T.mF(F), *T.ring()).pow((long long)r);
            t.add(F, (ar * p) * (move * chi_pa));
        }
        rhs = t;
    }
    return lhs == rhs;
}

}  // namespace

bool verify_gamma_axioms(const TaylorComplex& T, const VerifyBudget& budget)
{
    std::size_t total = std::size_t(1) << T.s();
    const QMatrixPtr& ring = T.ring();

    std::vector<Monomial> test_scalars;
    for (std::size_t i = 0; i < std::min<std::size_t>(ring->nvars(), 3); ++i)
        test_scalars.push_back(Monomial::variable(ring->nvars(), i));
    if (ring->nvars() >= 2) {
        Monomial m = Monomial::unit(ring->nvars());
        m.exps[0] = 1;
        m.exps[1] = 2;
        test_scalars.push_back(m);
    }

    std::vector<Subset> evens;
    for (Subset P = 1; P < total; ++P)
        if (std::popcount(P) >= 2 && std::popcount(P) % 2 == 0)
            evens.push_back(P);
    if (evens.size() > budget.max_pairs)
        evens.resize(budget.max_pairs);

    for (Subset P : evens) {
        TaylorElement ep(&T);
        ep.add(P, SkewPoly::one(ring));
        for (unsigned r = 2; r <= 3; ++r)
            if (!divided_power(ep, r).is_zero())
                return false;
        for (const auto& a : test_scalars)
            for (unsigned r = 0; r <= 3; ++r)
                if (!check_scaling_axiom(T, P, a, r))
                    return false;

        // d_P e_P = ±c prod_{i in P} e_i: the product of the atoms lands on
        // e_P with carrier exactly d_P.
        Monomial dp = dp_constant(P, T);
        TaylorElement prod;
        bool first = true;
        for (unsigned i = 0; i < 64; ++i) {
            if (!(P >> i & 1))
                continue;
            TaylorElement ei(&T);
            ei.add(Subset(1) << i, SkewPoly::one(ring));
            prod = first ? ei : element_product(prod, ei);
            first = false;
        }
        if (prod.coords().size() != 1)
            return false;
        const auto& [F, p] = *prod.coords().begin();
        if (F != P || p.term_count() != 1 || !(p.sole_monomial() == dp) || p.sole_coefficient().is_zero())
            return false;
        // The axiom-(4) chain: d_P^r e_P^{(r)} = chi(d_P,e_P)^{C(r,2)} (d_P e_P)^{(r)};
        // both sides vanish for r >= 2.
        TaylorElement dpep(&T);
        dpep.add(P, SkewPoly::term(ring, dp, chi_monomials(dp, T.mF(P), *ring)));
        for (unsigned r = 2; r <= 3; ++r)
            if (!divided_power(dpep, r).is_zero())
                return false;
    }

    // Additivity: homogenize pairs of equal-size even subsets and compare the
    // expansion with the plain power (squares vanish, so they coincide).
    std::size_t checked = 0;
    for (std::size_t i = 0; i < evens.size() && checked < 64; ++i) {
        for (std::size_t j = i + 1; j < evens.size() && checked < 64; ++j) {
            Subset P = evens[i], Q = evens[j];
            if (std::popcount(P) != std::popcount(Q))
                continue;
            Monomial top = lcm(T.mF(P), T.mF(Q));
            TaylorElement x(&T);
            x.add(P, SkewPoly::term(ring, quotient(top, T.mF(P)), Scalar::one(ring->field())));
            x.add(Q, SkewPoly::term(ring, quotient(top, T.mF(Q)), Scalar::one(ring->field())));
            TaylorElement sq = element_product(x, x);
            if (!(divided_power(x, 2) == sq))
                return false;
            ++checked;
        }
    }
    return true;
}

}  // namespace skewtaylor
