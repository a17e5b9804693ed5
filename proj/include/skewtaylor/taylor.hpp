#ifndef SKEWTAYLOR_TAYLOR_HPP
#define SKEWTAYLOR_TAYLOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "skewtaylor/linalg.hpp"
#include "skewtaylor/skewpoly.hpp"

namespace skewtaylor {

using Subset = std::uint64_t;  // bitset over the generator indices [s]

// sigma(F,i) = #{j in F : j < i}; i and the members of F are 0-based here.
int sigma_f_i(Subset F, unsigned i);

// sigma(V,W) = #{(i,j) in V x W : j < i}.
int sigma_vw(Subset V, Subset W);

std::string subset_str(Subset F);  // e.g. "{1,2}" in 1-based labels

// The complex T with basis e_F, F ⊆ [s], and differential
//   ∂(e_F) = Σ_{i∈F} e_{F∖i} · (−1)^{σ(F,i)} C(m_{F∖i}, m_F/m_{F∖i})^{-1} (m_F/m_{F∖i}),
// graded by setting deg(e_F) = deg(m_F) in both Z and G.
class TaylorComplex {
public:
    struct DiffTerm {
        Subset target;   // F ∖ {i}
        SkewPoly value;  // single term: scalar * monomial
    };

    TaylorComplex(QMatrixPtr ring, std::vector<Monomial> mingens, unsigned max_s);

    const QMatrixPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    unsigned s() const { return (unsigned)gens_.size(); }

    const std::vector<std::vector<Subset>>& bases() const { return bases_; }
    // Differential columns of hom degree i >= 1, aligned with bases()[i].
    const std::vector<DiffTerm>& column(unsigned i, std::size_t k) const { return diff_[i][k]; }

    const Monomial& mF(Subset F) const { return mf_[F]; }
    std::int64_t internal_degree(Subset F) const { return ring_->internal_degree(mf_[F]); }
    GDegree gdeg(Subset F) const { return gdegree(mf_[F], *ring_); }

private:
    QMatrixPtr ring_;
    std::vector<Monomial> gens_;
    std::vector<Monomial> mf_;                            // indexed by mask, size 2^s
    std::vector<std::vector<Subset>> bases_;              // [i] -> ascending masks
    std::vector<std::vector<std::vector<DiffTerm>>> diff_;  // [i][k] -> terms of ∂(e_F)
};

// Element Σ e_F · a_F with right coefficients in normal form.
class TaylorElement {
public:
    TaylorElement() = default;
    explicit TaylorElement(const TaylorComplex* T) : T_(T) {}

    const TaylorComplex* complex() const { return T_; }
    const std::map<Subset, SkewPoly>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    void add(Subset F, const SkewPoly& p);

    TaylorElement operator+(const TaylorElement& o) const;
    TaylorElement operator-(const TaylorElement& o) const;
    TaylorElement operator*(const Scalar& c) const;
    bool operator==(const TaylorElement& o) const;
    bool operator!=(const TaylorElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    const TaylorComplex* T_ = nullptr;
    std::map<Subset, SkewPoly> coords_;
};

// Builds the complex for a minimally generated ideal; rejects non-minimal
// input rather than silently minimalizing.
TaylorComplex build_taylor(const MonomialIdeal& I, unsigned max_s = 20);

// ∂∘∂ = 0, checked entrywise by exact normal-form multiplication.
bool verify_d_squared(const TaylorComplex& T);

// ∂ extended to elements by right-linearity: ∂(Σ e_F a_F) = Σ ∂(e_F) a_F.
TaylorElement diff_element(const TaylorComplex& T, const TaylorElement& a);

// The multidegree-α strand: a finite complex of k-vector spaces. The basis in
// degree i is {F : |F| = i, m_F | x^α}; the matrix entry on (F∖i, F) is the
// scalar of ∂ acting on the strand basis vector e_F · x^{α−deg m_F}, i.e.
// (−1)^{σ(F,i)} C(m_{F∖i}, m_F/m_{F∖i})^{-1} C(m_F/m_{F∖i}, x^α/m_F).
struct StrandComplex {
    Monomial alpha;
    std::vector<std::vector<Subset>> bases;
    std::vector<Matrix> d;  // d[i]: bases[i-1] x bases[i], valid for i >= 1

    // dim H_j for j = 0..top.
    std::vector<std::size_t> homology_dims() const;
};

StrandComplex strand(const TaylorComplex& T, const Monomial& alpha);

// Checks exactness of every strand in the componentwise box of m_{[s]}
// against the Hilbert function of R/I (dim H_0 = quotient_dim, H_{>=1} = 0).
// Exponent patterns clamp at the box boundary, so the box is exhaustive.
bool verify_resolution(const TaylorComplex& T, unsigned threads = 1);

struct BettiTable {
    std::map<int, std::map<Monomial, std::uint64_t>> by_degree;  // i -> α -> β_{i,α}

    std::uint64_t total(int i) const;
    std::vector<std::uint64_t> totals(int up_to) const;
};

// Multigraded Betti numbers of R/I, read off T ⊗_R k: an entry of ∂ survives
// the reduction iff its monomial part is 1 (m_F = m_{F∖i}).
BettiTable betti(const TaylorComplex& T);

}  // namespace skewtaylor

#endif
