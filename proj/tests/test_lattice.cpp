#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "skewtaylor/lattice.hpp"
#include "support/gen.hpp"

using namespace skewtaylor;
using testgen::mono;

TEST_CASE("lcm lattice shapes")
{
    FieldDesc f = FieldDesc::prime_field(101);
    QMatrixPtr R = testgen::commutative_ring(2, f);

    LcmLattice boolean2 = build_lcm_lattice(MonomialIdeal(R, {mono({2, 0}), mono({0, 2})}));
    CHECK(boolean2.nodes.size() == 4);

    LcmLattice chain = build_lcm_lattice(MonomialIdeal(R, {mono({2, 0}), mono({1, 1})}));
    std::vector<Monomial> expect = {mono({0, 0}), mono({2, 0}), mono({1, 1}), mono({2, 1})};
    std::sort(expect.begin(), expect.end(), [&](const Monomial& a, const Monomial& b) {
        return deglex_less(a, b, R->degrees());
    });
    CHECK(chain.nodes == expect);

    QMatrixPtr R3 = testgen::commutative_ring(3, f);
    LcmLattice tri = build_lcm_lattice(
        MonomialIdeal(R3, {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})}));
    CHECK(tri.nodes.size() == 5);  // 1, xy, yz, xz, xyz

    // bottom is 1; joins land in the lattice; atoms are the minimal nonunit nodes
    CHECK(tri.nodes[0].is_unit());
    for (Subset F = 0; F < (Subset(1) << tri.s()); ++F)
        CHECK(tri.node_of_subset[F] >= 0);
    CHECK(tri.atoms.size() == 3);
}

TEST_CASE("gcd graph weights")
{
    FieldDesc f = FieldDesc::prime_field(101);
    Scalar q = Scalar::from_int(5, f);
    QMatrixPtr R = testgen::qplane(f, q);
    MonomialIdeal I(R, {mono({2, 0}), mono({0, 2})});
    LcmLattice L = build_lcm_lattice(I);
    GcdGraph G = build_gcd_graph(L);

    int ix2 = L.node_index(mono({2, 0}));
    int iy2 = L.node_index(mono({0, 2}));
    const GcdGraph::Edge* e = G.find(ix2, iy2);
    REQUIRE(e != nullptr);
    Scalar w_xy = e->u == ix2 ? e->w_uv : e->w_vu;
    Scalar w_yx = e->u == ix2 ? e->w_vu : e->w_uv;
    CHECK(w_xy == c_constant(mono({2, 0}), mono({0, 2}), *R));
    CHECK(w_yx == c_constant(mono({0, 2}), mono({2, 0}), *R));
    // weight ratio law
    CHECK(w_xy / w_yx == chi_monomials(mono({2, 0}), mono({0, 2}), *R));

    // The bottom node is coprime to everything with weight 1 both ways.
    int bottom = L.node_index(mono({0, 0}));
    for (int v = 0; v < (int)L.nodes.size(); ++v) {
        if (v == bottom)
            continue;
        const GcdGraph::Edge* be = G.find(bottom, v);
        REQUIRE(be != nullptr);
        CHECK(be->w_uv.is_one());
        CHECK(be->w_vu.is_one());
    }

    // Edges exist exactly for coprime pairs: x^2 vs x^2y^2 is not coprime.
    CHECK(G.find(ix2, L.node_index(mono({2, 2}))) == nullptr);
}

TEST_CASE("find_color_iso on fixed pairs")
{
    FieldDesc f = FieldDesc::prime_field(101);
    QMatrixPtr R = testgen::commutative_ring(2, f);

    MonomialIdeal I1(R, {mono({2, 0}), mono({0, 2})});
    MonomialIdeal I2(R, {mono({3, 0}), mono({0, 3})});
    LcmLattice L1 = build_lcm_lattice(I1), L2 = build_lcm_lattice(I2);
    GcdGraph G1 = build_gcd_graph(L1), G2 = build_gcd_graph(L2);
    auto iso = find_color_iso(L1, G1, L2, G2);
    REQUIRE(iso.has_value());
    // Boolean lattices on two atoms, all weights 1: identity works, internal
    // degrees differ (2 vs 3), which is reported on the flag.
    CHECK(!iso->idegree_preserving);
    // m_{λ̂(F)} = λ(m_F) over all subsets.
    for (Subset F = 0; F < 4; ++F) {
        Subset image = 0;
        for (unsigned i = 0; i < 2; ++i)
            if (F >> i & 1)
                image |= Subset(1) << (unsigned)iso->atom_map[i];
        CHECK(iso->node_map[(std::size_t)L1.node_of_subset[F]] == L2.node_of_subset[image]);
    }

    MonomialIdeal I3(R, {mono({2, 0}), mono({1, 1})});
    LcmLattice L3 = build_lcm_lattice(I3);
    GcdGraph G3 = build_gcd_graph(L3);
    CHECK(!find_color_iso(L3, G3, L1, G1).has_value());

    auto self_iso = find_color_iso(L1, G1, L1, G1);
    REQUIRE(self_iso.has_value());
    CHECK(self_iso->idegree_preserving);
}

TEST_CASE("skew weights can obstruct an otherwise boolean isomorphism")
{
    FieldDesc f = FieldDesc::prime_field(101);
    QMatrixPtr Rq = testgen::qplane(f, Scalar::from_int(5, f));
    QMatrixPtr Rc = testgen::commutative_ring(2, f);
    MonomialIdeal Iq(Rq, {mono({2, 0}), mono({0, 2})});
    MonomialIdeal Ic(Rc, {mono({2, 0}), mono({0, 2})});
    LcmLattice Lq = build_lcm_lattice(Iq), Lc = build_lcm_lattice(Ic);
    GcdGraph Gq = build_gcd_graph(Lq), Gc = build_gcd_graph(Lc);
    // Same lattice, different weights (q^{±4} vs 1) and different G-degrees.
    CHECK(!find_color_iso(Lq, Gq, Lc, Gc).has_value());
}

TEST_CASE("relabeled and symmetric pairs admit isos and verified predictions")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 8; ++t) {
        // Base ideal in <= 3 variables with degree >= 2 generators.
        std::uniform_int_distribution<std::size_t> nd(2, 3), sd(2, 3);
        std::size_t n = nd(rng), s = sd(rng);
        QMatrixPtr R = testgen::random_qmatrix(rng, n);
        std::vector<Monomial> gens;
        for (int attempt = 0; attempt < 200 && gens.size() != s; ++attempt) {
            gens = testgen::random_minimal_gens(rng, n, s, 3);
            std::erase_if(gens, [&](const Monomial& g) { return R->internal_degree(g) < 2; });
            gens = minimal_generators(gens);
        }
        if (gens.size() < 2)
            continue;

        // Pair by permuting the generator list; same ring.
        std::vector<Monomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        MonomialIdeal I1(R, gens), I2(R, shuffled);
        LcmLattice L1 = build_lcm_lattice(I1), L2 = build_lcm_lattice(I2);
        GcdGraph G1 = build_gcd_graph(L1), G2 = build_gcd_graph(L2);
        auto iso = find_color_iso(L1, G1, L2, G2);
        REQUIRE(iso.has_value());
        CHECK(iso->idegree_preserving);

        TaylorComplex T1 = build_taylor(I1), T2 = build_taylor(I2);
        PredictionReport rep = predict_equalities(iso, T1, T2, 5);
        CHECK(rep.applicable);
        CHECK(rep.betti_equal);
        CHECK(rep.poincare_quotient_equal);
    }
}

TEST_CASE("prediction is inapplicable without an iso")
{
    FieldDesc f = FieldDesc::prime_field(101);
    QMatrixPtr R = testgen::commutative_ring(2, f);
    MonomialIdeal I1(R, {mono({2, 0}), mono({1, 1})});
    MonomialIdeal I2(R, {mono({2, 0}), mono({0, 2})});
    TaylorComplex T1 = build_taylor(I1), T2 = build_taylor(I2);
    LcmLattice L1 = build_lcm_lattice(I1), L2 = build_lcm_lattice(I2);
    GcdGraph G1 = build_gcd_graph(L1), G2 = build_gcd_graph(L2);
    auto iso = find_color_iso(L1, G1, L2, G2);
    CHECK(!iso.has_value());
    PredictionReport rep = predict_equalities(iso, T1, T2, 4);
    CHECK(!rep.applicable);
    CHECK(!rep.reason.empty());
}

TEST_CASE("permutation budget and dimension checks")
{
    FieldDesc f = FieldDesc::prime_field(101);
    QMatrixPtr R = testgen::commutative_ring(2, f);
    MonomialIdeal I(R, {mono({2, 0}), mono({0, 2})});
    LcmLattice L = build_lcm_lattice(I);
    GcdGraph G = build_gcd_graph(L);
    CHECK_THROWS_AS(find_color_iso(L, G, L, G, 1), budget_error);

    QMatrixPtr R3 = testgen::commutative_ring(3, f);
    MonomialIdeal I3(R3, {mono({2, 0, 0}), mono({0, 2, 0})});
    LcmLattice L3 = build_lcm_lattice(I3);
    GcdGraph G3 = build_gcd_graph(L3);
    CHECK_THROWS_AS(find_color_iso(L, G, L3, G3), input_error);
}

TEST_CASE("graph export is deterministic and parseable")
{
    FieldDesc f = FieldDesc::prime_field(101);
    QMatrixPtr R = testgen::qplane(f, Scalar::from_int(5, f));
    MonomialIdeal I(R, {mono({2, 0}), mono({0, 2})});
    LcmLattice L = build_lcm_lattice(I);
    GcdGraph G = build_gcd_graph(L);
    std::string a = export_gcd_graph(L, G);
    std::string b = export_gcd_graph(L, G);
    CHECK(a == b);
    CHECK(a.find("# node 0 1 ") != std::string::npos);
    CHECK(a.find("\n0 ") != std::string::npos);
}
