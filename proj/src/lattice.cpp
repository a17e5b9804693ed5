#include "skewtaylor/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "skewtaylor/homres.hpp"

namespace skewtaylor {

int LcmLattice::node_index(const Monomial& m) const
{
    auto cmp = [&](const Monomial& a, const Monomial& b) { return deglex_less(a, b, ring->degrees()); };
    auto it = std::lower_bound(nodes.begin(), nodes.end(), m, cmp);
    if (it != nodes.end() && *it == m)
        return (int)(it - nodes.begin());
    return -1;
}

LcmLattice build_lcm_lattice(const MonomialIdeal& I, unsigned max_s)
{
    if (I.mingens().empty())
        throw input_error("lattice: empty generator list");
    if (!I.was_minimal())
        throw input_error("lattice: generator list is not minimal");
    std::size_t s = I.mingens().size();
    if (s > max_s)
        throw budget_error("lattice: s = " + std::to_string(s) + " exceeds the subset cap");

    LcmLattice L;
    L.ring = I.ring();
    L.gens = I.mingens();

    std::size_t total = std::size_t(1) << s;
    std::vector<Monomial> mf(total, Monomial::unit(L.ring->nvars()));
    for (Subset m = 1; m < total; ++m)
        mf[m] = lcm(mf[m & (m - 1)], L.gens[(unsigned)std::countr_zero(m)]);

    L.nodes = mf;
    std::sort(L.nodes.begin(), L.nodes.end(), [&](const Monomial& a, const Monomial& b) {
        return deglex_less(a, b, L.ring->degrees());
    });
    L.nodes.erase(std::unique(L.nodes.begin(), L.nodes.end()), L.nodes.end());

    L.node_of_subset.resize(total);
    for (Subset m = 0; m < total; ++m)
        L.node_of_subset[m] = L.node_index(mf[m]);
    for (std::size_t i = 0; i < s; ++i)
        L.atoms.push_back(L.node_of_subset[Subset(1) << i]);

    for (const auto& m : L.nodes) {
        L.node_gdeg.push_back(gdegree(m, *L.ring));
        L.node_idegree.push_back(L.ring->internal_degree(m));
    }
    L.leq.assign(L.nodes.size(), std::vector<bool>(L.nodes.size(), false));
    for (std::size_t p = 0; p < L.nodes.size(); ++p)
        for (std::size_t q = 0; q < L.nodes.size(); ++q)
            L.leq[p][q] = divides(L.nodes[p], L.nodes[q]);
    return L;
}

GcdGraph build_gcd_graph(const LcmLattice& L)
{
    GcdGraph G;
    G.unit_loop.assign(L.nodes.size(), false);
    for (std::size_t u = 0; u < L.nodes.size(); ++u) {
        G.unit_loop[u] = L.nodes[u].is_unit();
        for (std::size_t v = u + 1; v < L.nodes.size(); ++v) {
            if (!coprime(L.nodes[u], L.nodes[v]))
                continue;
            G.edges.push_back({(int)u, (int)v, c_constant(L.nodes[u], L.nodes[v], *L.ring),
                               c_constant(L.nodes[v], L.nodes[u], *L.ring)});
        }
    }
    return G;
}

const GcdGraph::Edge* GcdGraph::find(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    for (const auto& e : edges)
        if (e.u == u && e.v == v)
            return &e;
    return nullptr;
}

namespace {

// Checks that the atom bijection induces a full color/graph isomorphism.
// Fills iso.node_map on success.
bool check_atom_map(const LcmLattice& L1, const GcdGraph& G1, const LcmLattice& L2,
                    const GcdGraph& G2, const std::vector<int>& perm, LatticeIso& iso)
{
    std::size_t s = L1.s();
    std::size_t total = std::size_t(1) << s;
    std::vector<int> node_map(L1.nodes.size(), -1);
    // Induced subset map F -> perm(F); the node map must be well defined,
    // i.e. m_F = m_G forces m'_{perm F} = m'_{perm G}.
    for (Subset F = 0; F < total; ++F) {
        Subset image = 0;
        for (unsigned i = 0; i < s; ++i)
            if (F >> i & 1)
                image |= Subset(1) << (unsigned)perm[i];
        int p = L1.node_of_subset[F];
        int q = L2.node_of_subset[image];
        if (node_map[p] == -1)
            node_map[p] = q;
        else if (node_map[p] != q)
            return false;
    }
    if (L1.nodes.size() != L2.nodes.size())
        return false;
    std::vector<bool> hit(L2.nodes.size(), false);
    for (int q : node_map) {
        if (q < 0 || hit[q])
            return false;
        hit[q] = true;
    }
    // Order preserving in both directions.
    for (std::size_t p = 0; p < L1.nodes.size(); ++p)
        for (std::size_t q = 0; q < L1.nodes.size(); ++q)
            if (L1.leq[p][q] != L2.leq[node_map[p]][node_map[q]])
                return false;
    // Color preserving on every node.
    for (std::size_t p = 0; p < L1.nodes.size(); ++p)
        if (L1.node_gdeg[p] != L2.node_gdeg[node_map[p]])
            return false;
    // Weighted coprimality structure.
    for (std::size_t u = 0; u < L1.nodes.size(); ++u) {
        for (std::size_t v = u + 1; v < L1.nodes.size(); ++v) {
            const GcdGraph::Edge* e1 = G1.find((int)u, (int)v);
            int mu = node_map[u], mv = node_map[v];
            const GcdGraph::Edge* e2 = G2.find(mu, mv);
            if ((e1 == nullptr) != (e2 == nullptr))
                return false;
            if (!e1)
                continue;
            Scalar w1_uv = e1->u == (int)u ? e1->w_uv : e1->w_vu;
            Scalar w1_vu = e1->u == (int)u ? e1->w_vu : e1->w_uv;
            Scalar w2_uv = e2->u == mu ? e2->w_uv : e2->w_vu;
            Scalar w2_vu = e2->u == mu ? e2->w_vu : e2->w_uv;
            if (w1_uv != w2_uv || w1_vu != w2_vu)
                return false;
        }
    }
    iso.atom_map = perm;
    iso.node_map = node_map;
    iso.idegree_preserving = true;
    for (std::size_t p = 0; p < L1.nodes.size(); ++p)
        if (L1.node_idegree[p] != L2.node_idegree[node_map[p]])
            iso.idegree_preserving = false;
    return true;
}

}  // namespace

std::optional<LatticeIso> find_color_iso(const LcmLattice& L1, const GcdGraph& G1,
                                         const LcmLattice& L2, const GcdGraph& G2,
                                         unsigned perm_cap)
{
    if (L1.s() != L2.s())
        throw input_error("find_color_iso: generator counts differ");
    if (L1.ring->nvars() != L2.ring->nvars())
        throw input_error("find_color_iso: variable counts differ (G-degrees are compared "
                          "through the generator action)");
    if (L1.ring->field() != L2.ring->field())
        throw input_error("find_color_iso: scalar fields differ");
    std::size_t s = L1.s();
    if (s > perm_cap)
        throw budget_error("find_color_iso: s! search past the cap s <= " + std::to_string(perm_cap));
    if (L1.nodes.size() != L2.nodes.size())
        return std::nullopt;

    // Atom signatures prune the permutation search.
    auto signature_ok = [&](std::size_t i, std::size_t j) {
        return L1.node_gdeg[L1.atoms[i]] == L2.node_gdeg[L2.atoms[j]];
    };

    std::vector<int> perm(s, -1);
    std::vector<bool> used(s, false);
    std::optional<LatticeIso> found;
    std::function<bool(std::size_t, bool)> rec = [&](std::size_t depth, bool want_idegree) -> bool {
        if (depth == s) {
            LatticeIso iso;
            if (!check_atom_map(L1, G1, L2, G2, perm, iso))
                return false;
            if (want_idegree && !iso.idegree_preserving)
                return false;
            found = iso;
            return true;
        }
        for (std::size_t j = 0; j < s; ++j) {
            if (used[j] || !signature_ok(depth, j))
                continue;
            if (want_idegree &&
                L1.node_idegree[L1.atoms[depth]] != L2.node_idegree[L2.atoms[j]])
                continue;
            perm[depth] = (int)j;
            used[j] = true;
            if (rec(depth + 1, want_idegree))
                return true;
            used[j] = false;
        }
        return false;
    };
    // Prefer an internal-degree-preserving isomorphism when one exists.
    if (rec(0, true))
        return found;
    std::fill(perm.begin(), perm.end(), -1);
    std::fill(used.begin(), used.end(), false);
    if (rec(0, false))
        return found;
    return std::nullopt;
}

PredictionReport predict_equalities(const std::optional<LatticeIso>& iso, const TaylorComplex& T1,
                                    const TaylorComplex& T2, int series_k)
{
    PredictionReport rep;
    if (!iso) {
        rep.reason = "no color-preserving lattice/graph isomorphism found";
        return rep;
    }
    if (!iso->idegree_preserving) {
        rep.reason = "isomorphism does not preserve internal degrees";
        return rep;
    }
    auto min_degree = [](const TaylorComplex& T) {
        std::int64_t d = -1;
        for (const auto& g : T.gens()) {
            std::int64_t gd = T.ring()->internal_degree(g);
            if (d < 0 || gd < d)
                d = gd;
        }
        return d;
    };
    if (min_degree(T1) < 2 || min_degree(T2) < 2) {
        rep.reason = "generators of internal degree < 2";
        return rep;
    }
    rep.applicable = true;

    BettiTable b1 = betti(T1), b2 = betti(T2);
    rep.betti1 = b1.totals((int)T1.s());
    rep.betti2 = b2.totals((int)T2.s());
    rep.betti_equal = (rep.betti1 == rep.betti2);

    QuotientAlgebra S1(T1.ring(), T1.gens());
    QuotientAlgebra S2(T2.ring(), T2.gens());
    rep.quotient1 = poincare_quotient(S1, series_k);
    rep.quotient2 = poincare_quotient(S2, series_k);
    rep.poincare_quotient_equal = (rep.quotient1 == rep.quotient2);
    return rep;
}

std::string export_gcd_graph(const LcmLattice& L, const GcdGraph& G)
{
    std::string out;
    out += "# gcd graph: " + std::to_string(L.nodes.size()) + " nodes, " +
           std::to_string(G.edges.size()) + " coprime pairs\n";
    out += "# field " + L.ring->field().str() + "\n";
    for (std::size_t p = 0; p < L.nodes.size(); ++p)
        out += "# node " + std::to_string(p) + " " + L.nodes[p].str() + " ideg " +
               std::to_string(L.node_idegree[p]) + " gdeg " + L.node_gdeg[p].str() + "\n";
    for (const auto& e : G.edges)
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + e.w_uv.str() + " " +
               e.w_vu.str() + "\n";
    return out;
}

}  // namespace skewtaylor
