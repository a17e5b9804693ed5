#ifndef SKEWTAYLOR_LATTICE_HPP
#define SKEWTAYLOR_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewtaylor/taylor.hpp"

namespace skewtaylor {

// L_I = {m_F : F ⊆ [s]} ordered by divisibility, with m_∅ = 1 at the bottom
// and join(m_P, m_Q) = m_{P∪Q}. Nodes are deduplicated and sorted.
struct LcmLattice {
    QMatrixPtr ring;
    std::vector<Monomial> gens;             // minimal generators (the atoms' monomials)
    std::vector<Monomial> nodes;            // deduplicated, sorted (degree, lex)
    std::vector<int> node_of_subset;        // 2^s entries: mask -> node index
    std::vector<int> atoms;                 // node index of each m_i
    std::vector<GDegree> node_gdeg;
    std::vector<std::int64_t> node_idegree;
    std::vector<std::vector<bool>> leq;     // leq[p][q]: nodes[p] divides nodes[q]

    std::size_t s() const { return gens.size(); }
    int node_index(const Monomial& m) const;  // -1 if absent
};

// Weighted coprimality graph on the lattice nodes: for gcd(m_P, m_Q) = 1
// there is an edge P -> Q with weight C(m_P, m_Q) and one back with
// C(m_Q, m_P).
struct GcdGraph {
    struct Edge {
        int u, v;          // node indices, u < v
        Scalar w_uv, w_vu;  // C(m_u, m_v) and C(m_v, m_u)
    };
    std::vector<Edge> edges;
    std::vector<bool> unit_loop;  // per node: gcd(m, m) = 1 (only the bottom)

    const Edge* find(int u, int v) const;  // unordered lookup, nullptr if absent
};

LcmLattice build_lcm_lattice(const MonomialIdeal& I, unsigned max_s = 20);
GcdGraph build_gcd_graph(const LcmLattice& L);

// A color-preserving isomorphism: an atom bijection whose induced node map
// preserves divisibility both ways, node G-degrees, and the weighted
// coprimality structure. Internal-degree preservation is tracked separately.
struct LatticeIso {
    std::vector<int> atom_map;  // atom i of L1 -> atom_map[i] of L2
    std::vector<int> node_map;  // node p of L1 -> node_map[p] of L2
    bool idegree_preserving = false;
};

// Exhaustive search over atom bijections (with signature pruning). Returns
// an isomorphism preferring internal-degree-preserving ones, or nullopt.
// Requires equal s and equal variable counts; throws budget_error past the
// permutation cap.
std::optional<LatticeIso> find_color_iso(const LcmLattice& L1, const GcdGraph& G1,
                                         const LcmLattice& L2, const GcdGraph& G2,
                                         unsigned perm_cap = 9);

// The computational consequences of a color iso: equal Betti sequences of
// R/I and R'/I', and equal Poincare quotients P/(1+t)^n through t^K.
struct PredictionReport {
    bool applicable = false;       // iso given, internal degrees preserved, gens in degrees >= 2
    std::string reason;            // why inapplicable, when it is
    bool betti_equal = false;
    bool poincare_quotient_equal = false;
    std::vector<std::uint64_t> betti1, betti2;
    std::vector<BigInt> quotient1, quotient2;  // truncated series coefficients

    bool all_pass() const { return applicable && betti_equal && poincare_quotient_equal; }
};

PredictionReport predict_equalities(const std::optional<LatticeIso>& iso, const TaylorComplex& T1,
                                    const TaylorComplex& T2, int series_k = 8);

// Deterministic text edge list: one "P Q C(P,Q) C(Q,P)" line per coprime
// pair, with a node table in comments.
std::string export_gcd_graph(const LcmLattice& L, const GcdGraph& G);

}  // namespace skewtaylor

#endif
