#ifndef SKEWTAYLOR_QMATRIX_HPP
#define SKEWTAYLOR_QMATRIX_HPP

#include <memory>
#include <vector>

#include "skewtaylor/monomial.hpp"
#include "skewtaylor/scalar.hpp"

namespace skewtaylor {

// The commutation data of R = k_q[x_1..x_n]: x_i x_j = q_{ij} x_j x_i,
// with q_ii = 1 and q_ij q_ji = 1, plus the internal degrees deg(x_i) = d_i.
class QMatrix {
public:
    QMatrix(std::size_t n, FieldDesc field, std::vector<Scalar> entries,
            std::vector<std::int64_t> degrees = {});

    static QMatrix commutative(std::size_t n, const FieldDesc& field);

    std::size_t nvars() const { return n_; }
    const FieldDesc& field() const { return field_; }
    const Scalar& q(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    std::int64_t internal_degree(const Monomial& m) const;
    bool is_commutative() const;

    bool operator==(const QMatrix& o) const;

private:
    std::size_t n_;
    FieldDesc field_;
    std::vector<Scalar> entries_;  // row-major n x n
    std::vector<std::int64_t> degrees_;
};

using QMatrixPtr = std::shared_ptr<const QMatrix>;

// G-degree of a monomial, represented by the action of its normalizing
// automorphism on the generators: entry j is chi(x^a, x_j). Two monomials
// have equal G-degree iff these vectors agree.
struct GDegree {
    std::vector<Scalar> chi_row;

    bool operator==(const GDegree& o) const { return chi_row == o.chi_row; }
    bool operator!=(const GDegree& o) const { return !(*this == o); }
    std::string str() const;
};

// C(x^a, x^b): the constant with x^a x^b = C(a,b) x^{a+b}; equals
// prod_{i>j} q_{ij}^{a_i b_j}.
Scalar c_constant(const Monomial& a, const Monomial& b, const QMatrix& Q);

// chi(x^a, x^b) = C(a,b)/C(b,a); the alternating bicharacter on colors.
Scalar chi_monomials(const Monomial& a, const Monomial& b, const QMatrix& Q);

// C extended to the group of monomials in x_i^{±1} via the four-factor
// formula on any decomposition u = α−β, v = γ−δ.
Scalar c_extended(const LaurentMonomial& u, const LaurentMonomial& v, const QMatrix& Q);

GDegree gdegree(const Monomial& a, const QMatrix& Q);
GDegree gdegree_product(const GDegree& a, const GDegree& b);

}  // namespace skewtaylor

#endif
