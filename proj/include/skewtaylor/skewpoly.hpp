#ifndef SKEWTAYLOR_SKEWPOLY_HPP
#define SKEWTAYLOR_SKEWPOLY_HPP

#include <map>
#include <vector>

#include "skewtaylor/qmatrix.hpp"

namespace skewtaylor {

// Element of R = k_q[x_1..x_n] in normal form: a finite sum of terms
// x^a * c with right coefficients. Zero coefficients are never stored.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(QMatrixPtr ring) : ring_(std::move(ring)) {}
    static SkewPoly zero(QMatrixPtr ring) { return SkewPoly(std::move(ring)); }
    static SkewPoly one(QMatrixPtr ring);
    static SkewPoly term(QMatrixPtr ring, const Monomial& m, const Scalar& c);

    const QMatrixPtr& ring() const { return ring_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Single-term accessors; throw unless term_count() == 1.
    const Monomial& sole_monomial() const;
    const Scalar& sole_coefficient() const;

    void add_term(const Monomial& m, const Scalar& c);  // accumulates, drops zeros

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator*(const SkewPoly& o) const;  // normal-form product
    SkewPoly operator*(const Scalar& c) const;
    SkewPoly operator-() const;
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    // True when every term has the same multidegree (so the element is
    // Z^n-homogeneous, hence G-homogeneous). Vacuously true for zero.
    bool is_multihomogeneous() const;

    std::string str() const;  // terms in degree-lexicographic order

private:
    void require_compatible(const SkewPoly& o) const;

    QMatrixPtr ring_;
    std::map<Monomial, Scalar> terms_;
};

bool same_ring(const QMatrixPtr& a, const QMatrixPtr& b);

// A monomial ideal, normalized to its unique minimal generating set.
class MonomialIdeal {
public:
    MonomialIdeal(QMatrixPtr ring, std::vector<Monomial> gens);

    const QMatrixPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }          // as given
    const std::vector<Monomial>& mingens() const { return mingens_; }    // minimal, sorted
    bool was_minimal() const { return was_minimal_; }
    std::size_t s() const { return mingens_.size(); }

    bool contains(const Monomial& m) const;

private:
    QMatrixPtr ring_;
    std::vector<Monomial> gens_;
    std::vector<Monomial> mingens_;
    bool was_minimal_ = true;
};

// The unique divisibility-minimal subset generating the same ideal,
// deduplicated and sorted (degree, then lex).
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

// Multigraded Hilbert value of R/I at multidegree a: 1 if x^a ∉ I, else 0.
int quotient_dim(const MonomialIdeal& I, const Monomial& alpha);

// Deterministic display/order helper: by internal degree, then lex.
bool deglex_less(const Monomial& a, const Monomial& b, const std::vector<std::int64_t>& degrees);

}  // namespace skewtaylor

#endif
