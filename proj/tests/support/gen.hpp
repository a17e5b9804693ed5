#ifndef SKEWTAYLOR_TESTS_GEN_HPP
#define SKEWTAYLOR_TESTS_GEN_HPP

#include <random>

#include "skewtaylor/qmatrix.hpp"
#include "skewtaylor/skewpoly.hpp"

namespace skewtaylor::testgen {

inline Monomial mono(std::vector<std::int64_t> e)
{
    return Monomial(std::move(e));
}

// Random valid q-matrix over F_p: q_ij uniform in F_p^*, q_ji forced.
QMatrixPtr random_qmatrix(std::mt19937_64& rng, std::size_t n, std::uint64_t p = 101);

QMatrixPtr commutative_ring(std::size_t n, const FieldDesc& field);

// Random antichain of s monomials with exponents <= max_exp (retries until
// the minimalized set has exactly s elements; falls back to fewer).
std::vector<Monomial> random_minimal_gens(std::mt19937_64& rng, std::size_t n, std::size_t s,
                                          std::int64_t max_exp);

struct Instance {
    QMatrixPtr ring;
    std::vector<Monomial> gens;
    MonomialIdeal ideal() const { return MonomialIdeal(ring, gens); }
};

// n in [1,5], s in [1,5], exponents in [0,3], q over F_101.
Instance random_instance(std::mt19937_64& rng, std::size_t max_n = 5, std::size_t max_s = 5,
                         std::int64_t max_exp = 3);

// The three-variable ring of the worked bicharacter example:
// xy = q yx, xz = -zx, yz = -q^{-1} zy.
QMatrixPtr example_ring(const FieldDesc& field, const Scalar& q);

// Two variables with xy = q yx.
QMatrixPtr qplane(const FieldDesc& field, const Scalar& q);

}  // namespace skewtaylor::testgen

#endif
