#ifndef SKEWTAYLOR_DGALGEBRA_HPP
#define SKEWTAYLOR_DGALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "skewtaylor/taylor.hpp"

namespace skewtaylor {

// e_V e_W for basis elements, per the product
//   e_V e_W = e_{V∪W} (−1)^{σ(V,W)} (m_V*m_W)/m_{V∪W} · C(m_V,m_W) C(m_{V∪W}, (m_V*m_W)/m_{V∪W})^{-1}
// and 0 when V ∩ W ≠ ∅.
TaylorElement basis_product(Subset V, Subset W, const TaylorComplex& T);

// Bilinear extension with right coefficients; a coefficient crossing a basis
// element picks up chi once: (e_V f)(e_W g) = chi(f, m_W) e_V e_W (f g) per
// G-homogeneous term of f.
TaylorElement element_product(const TaylorElement& a, const TaylorElement& b);

// One row of the product structure, exposed for inspection and tests.
struct ProductEntry {
    Subset target = 0;       // V ∪ W
    int sign = 1;            // (−1)^{σ(V,W)}
    Scalar coeff;            // the C-constant part
    Monomial carrier;        // (m_V*m_W)/m_{V∪W} = gcd(m_V, m_W)
    bool zero = false;       // V ∩ W ≠ ∅
};

ProductEntry product_entry(Subset V, Subset W, const TaylorComplex& T);

// d_P = prod_{l=1}^{m-1} gcd(m_{i_1..i_l}, m_{i_{l+1}}) for sorted P.
Monomial dp_constant(Subset P, const TaylorComplex& T);

// Divided power of a homogeneous element of even positive homological
// degree; realized as the sum over ordered r-tuples of support subsets
// (terms with a repeated subset vanish since e_V e_W = 0 on overlap).
TaylorElement divided_power(const TaylorElement& a, unsigned r);

struct VerifyBudget {
    std::size_t max_pairs = 1u << 20;    // exhaustive through s = 10
    std::size_t max_triples = 1u << 18;  // exhaustive through s = 6
    std::uint64_t seed = 0;              // sampling beyond the exhaustive range
};

// ∂(ab) = ∂(a)b + (−1)^{|a|} a ∂(b) over basis pairs.
bool verify_leibniz(const TaylorComplex& T, const VerifyBudget& budget = {});
// (ab)c = a(bc) over basis triples.
bool verify_associativity(const TaylorComplex& T, const VerifyBudget& budget = {});
// ab = (−1)^{|a||b|} chi(a,b) ba over basis pairs, and e_V^2 = 0 for odd |V|.
bool verify_color_comm(const TaylorComplex& T, const VerifyBudget& budget = {});

// The divided-power axioms as used in the uniqueness argument:
// e_P^{(r)} = 0 for r >= 2; (a e_P)^{(r)} = chi(e_P,a)^{C(r,2)} a^r e_P^{(r)};
// d_P e_P is a scalar multiple of prod_{i in P} e_i with carrier d_P; and
// x^2 = x^{(2)} (resp. x^3 = x^{(3)}) for homogenized two-term elements,
// which is the surviving part of the additivity expansion.
bool verify_gamma_axioms(const TaylorComplex& T, const VerifyBudget& budget = {});

}  // namespace skewtaylor

#endif
