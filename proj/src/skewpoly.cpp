#include "skewtaylor/skewpoly.hpp"

#include <algorithm>

namespace skewtaylor {

bool same_ring(const QMatrixPtr& a, const QMatrixPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

SkewPoly SkewPoly::one(QMatrixPtr ring)
{
    Monomial u = Monomial::unit(ring->nvars());
    Scalar c = Scalar::one(ring->field());
    return term(std::move(ring), u, c);
}

SkewPoly SkewPoly::term(QMatrixPtr ring, const Monomial& m, const Scalar& c)
{
    SkewPoly p(std::move(ring));
    Monomial mm = m;
    if (mm.nvars() != p.ring_->nvars()) {
        if (mm.is_unit() && mm.nvars() == 0)
            mm = Monomial::unit(p.ring_->nvars());
        else
            throw input_error("skewpoly: monomial dimension mismatch");
    }
    p.add_term(mm, c);
    return p;
}

const Monomial& SkewPoly::sole_monomial() const
{
    if (terms_.size() != 1)
        throw input_error("skewpoly: expected a single term");
    return terms_.begin()->first;
}

const Scalar& SkewPoly::sole_coefficient() const
{
    if (terms_.size() != 1)
        throw input_error("skewpoly: expected a single term");
    return terms_.begin()->second;
}

void SkewPoly::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    for (auto e : m.exps)
        if (e < 0)
            throw input_error("skewpoly: negative exponent");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void SkewPoly::require_compatible(const SkewPoly& o) const
{
    if (!same_ring(ring_, o.ring_))
        throw input_error("skewpoly: ring mismatch");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const
{
    require_compatible(o);
    SkewPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const
{
    require_compatible(o);
    SkewPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const
{
    require_compatible(o);
    // Bilinear extension of x^a x^b = C(a,b) x^{a+b}.
    SkewPoly r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Scalar c = ca * cb * c_constant(ma, mb, *ring_);
            r.add_term(mul(ma, mb), c);
        }
    }
    return r;
}

SkewPoly SkewPoly::operator*(const Scalar& c) const
{
    SkewPoly r(ring_);
    for (const auto& [m, cc] : terms_)
        r.add_term(m, cc * c);
    return r;
}

SkewPoly SkewPoly::operator-() const
{
    SkewPoly r(ring_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, -c);
    return r;
}

bool SkewPoly::operator==(const SkewPoly& o) const
{
    if (!same_ring(ring_, o.ring_))
        return false;
    return terms_ == o.terms_;
}

bool SkewPoly::is_multihomogeneous() const
{
    if (terms_.size() <= 1)
        return true;
    const Monomial& first = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (m != first)
            return false;
    return true;
}

bool deglex_less(const Monomial& a, const Monomial& b, const std::vector<std::int64_t>& degrees)
{
    std::int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        da += a.exps[i] * degrees[i];
    for (std::size_t i = 0; i < b.exps.size(); ++i)
        db += b.exps[i] * degrees[i];
    if (da != db)
        return da < db;
    return a.exps < b.exps;
}

std::string SkewPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const Monomial, Scalar>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_)
        ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* l, auto* r) {
        return deglex_less(l->first, r->first, ring_->degrees());
    });
    std::string out;
    for (auto* t : ts) {
        if (!out.empty())
            out += " + ";
        if (t->first.is_unit())
            out += t->second.str();
        else if (t->second.is_one())
            out += t->first.str();
        else
            out += t->first.str() + "*" + t->second.str();
    }
    return out;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && divides(gens[j], gens[i]))
                redundant = true;
        if (!redundant)
            out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.exps > b.exps;  // descending lex within a degree (x1 > x2 > ...)
    });
    return out;
}

MonomialIdeal::MonomialIdeal(QMatrixPtr ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens))
{
    for (const auto& g : gens_) {
        if (g.nvars() != ring_->nvars())
            throw input_error("ideal: generator dimension mismatch");
        for (auto e : g.exps)
            if (e < 0)
                throw input_error("ideal: negative exponent in generator");
    }
    mingens_ = minimal_generators(gens_);
    std::vector<Monomial> sorted_input = gens_;
    std::sort(sorted_input.begin(), sorted_input.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.exps > b.exps;  // descending lex within a degree (x1 > x2 > ...)
    });
    was_minimal_ = (sorted_input == mingens_);
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    // A monomial lies in I iff it is a multiple of a minimal generator.
    for (const auto& g : mingens_)
        if (divides(g, m))
            return true;
    return false;
}

int quotient_dim(const MonomialIdeal& I, const Monomial& alpha)
{
    return I.contains(alpha) ? 0 : 1;
}

}  // namespace skewtaylor
