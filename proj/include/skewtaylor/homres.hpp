#ifndef SKEWTAYLOR_HOMRES_HPP
#define SKEWTAYLOR_HOMRES_HPP

#include <map>
#include <utility>
#include <vector>

#include "skewtaylor/qmatrix.hpp"
#include "skewtaylor/skewpoly.hpp"

namespace skewtaylor {

// S = R/I for a monomial ideal generated in internal degrees >= 2 (the free
// case I = 0 is allowed). Multigraded components of S are spanned by the
// single monomial x^γ when x^γ ∉ I, which is what makes the resolution
// machinery below pure scalar linear algebra.
class QuotientAlgebra {
public:
    QuotientAlgebra(QMatrixPtr ring, std::vector<Monomial> gens);

    const QMatrixPtr& ring() const { return ring_; }
    const MonomialIdeal& ideal() const { return ideal_; }
    bool in_basis(const Monomial& m) const { return !ideal_.contains(m); }
    std::vector<Monomial> basis_of_degree(std::int64_t d) const;

    // Degree window factor: deviations and syzygies of k in homological
    // degree i live in internal degrees <= i * max_related_degree().
    std::int64_t max_related_degree() const;

private:
    QMatrixPtr ring_;
    MonomialIdeal ideal_;
};

// Truncated Poincare series of k over S with per-coefficient exactness
// flags; never extrapolated. The optional bigraded table records β_{i,α}.
struct PSeries {
    std::vector<BigInt> coeffs;  // β_0 .. β_{i_max}
    std::vector<bool> exact;     // coefficient i certified complete
    int exact_through = 0;       // all of β_0..β_K exact
    std::map<int, std::map<Monomial, std::uint64_t>> bigraded;
};

struct ResolutionBudget {
    std::size_t max_window = 5'000'000;   // multidegrees in the d_max window
    std::size_t max_generators = 200'000;  // free-module generators per stage
};

// Minimal graded free resolution of k over S through homological degree
// i_max, restricted to internal degrees <= d_max; iterated multidegreewise
// kernel computation with greedy minimal-generator selection.
PSeries minimal_resolution_of_k(const QuotientAlgebra& S, int i_max, std::int64_t d_max,
                                const ResolutionBudget& budget = {});

// rank_k pi^i(S) for i = 1..K, peeled off the Poincare series through the
// product formula prod (1+t^{2i-1})^{e_{2i-1}} / prod (1-t^{2i})^{e_{2i}}.
struct DeviationRanks {
    std::vector<BigInt> ranks;  // ranks[i] = ε_i, index 0 unused
    int exact_through = 0;
};

DeviationRanks deviations(const PSeries& P);

// Reconstructs the series from deviation ranks (round-trip check).
std::vector<BigInt> series_from_deviations(const DeviationRanks& D, int K);

// Multidegrees (with GDegree) of the dual classes of pi^2: the part of
// Tor_2 not accounted for by products of the degree-one classes. For a
// monomial ideal these sit exactly on the minimal relations.
std::vector<std::pair<Monomial, GDegree>> pi2_multidegrees(const QuotientAlgebra& S,
                                                           std::int64_t d_max);

// P_k^S(t) / (1+t)^n truncated at t^K (exact division of truncated series).
std::vector<BigInt> poincare_quotient(const QuotientAlgebra& S, int K,
                                      const ResolutionBudget& budget = {});
std::vector<BigInt> poincare_quotient(const PSeries& P, std::size_t nvars, int K);

bool compare_poincare_quotient(const QuotientAlgebra& S1, const QuotientAlgebra& S2, int K,
                               const ResolutionBudget& budget = {});

}  // namespace skewtaylor

#endif
