#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "skewtaylor/skewpoly.hpp"
#include "support/gen.hpp"

using namespace skewtaylor;
using testgen::mono;

namespace {

SkewPoly xterm(const QMatrixPtr& R, std::vector<std::int64_t> e, long long c = 1)
{
    return SkewPoly::term(R, Monomial(std::move(e)), Scalar::from_int(c, R->field()));
}

// Membership oracle: m ∈ I iff m = g * u for a generator g and a monomial u,
// found by enumerating the divisors of m.
bool membership_oracle(const MonomialIdeal& I, const Monomial& m)
{
    for (const auto& g : I.mingens()) {
        Monomial u = Monomial::unit(m.nvars());
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            if (i == m.nvars())
                return mul(g, u) == m;
            for (std::int64_t e = 0; e <= m.exps[i]; ++e) {
                u.exps[i] = e;
                if (rec(i + 1))
                    return true;
            }
            u.exps[i] = 0;
            return false;
        };
        if (rec(0))
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("normal form multiplication in the q-plane")
{
    FieldDesc f = FieldDesc::prime_field(101);
    Scalar q = Scalar::from_int(5, f);
    QMatrixPtr R = testgen::qplane(f, q);

    // (xy) * x = q^{-1} x^2 y
    SkewPoly xy = xterm(R, {1, 1});
    SkewPoly x = xterm(R, {1, 0});
    SkewPoly lhs = xy * x;
    CHECK(lhs == SkewPoly::term(R, mono({2, 1}), q.inverse()));

    SkewPoly one = SkewPoly::one(R);
    SkewPoly zero = SkewPoly::zero(R);
    SkewPoly fpoly = xterm(R, {2, 0}, 3) + xterm(R, {0, 1}, 7);
    CHECK(fpoly * one == fpoly);
    CHECK((fpoly * zero).is_zero());
    CHECK(fpoly - fpoly == zero);

    // x_i x_j = q_ij x_j x_i
    SkewPoly y = xterm(R, {0, 1});
    CHECK(x * y == (y * x) * q);
}

TEST_CASE("multiplication is associative and color commutative on monomials")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> e(0, 3);
    std::uniform_int_distribution<long long> coeff(1, 100);
    for (int t = 0; t < 200; ++t) {
        QMatrixPtr R = testgen::random_qmatrix(rng, 3);
        auto rnd = [&]() {
            SkewPoly p(R);
            for (int k = 0; k < 2; ++k)
                p.add_term(mono({e(rng), e(rng), e(rng)}), Scalar::from_int(coeff(rng), R->field()));
            return p;
        };
        SkewPoly f = rnd(), g = rnd(), h = rnd();
        CHECK((f * g) * h == f * (g * h));

        Monomial a = mono({e(rng), e(rng), e(rng)}), b = mono({e(rng), e(rng), e(rng)});
        SkewPoly ma = SkewPoly::term(R, a, Scalar::one(R->field()));
        SkewPoly mb = SkewPoly::term(R, b, Scalar::one(R->field()));
        CHECK(ma * mb == (mb * ma) * chi_monomials(a, b, *R));
    }
}

TEST_CASE("minimal generators")
{
    std::vector<Monomial> gens = {mono({2, 0}), mono({2, 1}), mono({1, 1})};
    CHECK(minimal_generators(gens) == std::vector<Monomial>{mono({2, 0}), mono({1, 1})});

    std::vector<Monomial> already = {mono({2, 0}), mono({1, 1})};
    CHECK(minimal_generators(already) == already);

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> e(0, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Monomial> set;
        for (int k = 0; k < 6; ++k) {
            Monomial m = mono({e(rng), e(rng), e(rng)});
            if (!m.is_unit())
                set.push_back(m);
        }
        if (set.empty())
            continue;
        auto min1 = minimal_generators(set);
        // Antichain under divisibility.
        for (std::size_t i = 0; i < min1.size(); ++i)
            for (std::size_t j = 0; j < min1.size(); ++j)
                if (i != j)
                    CHECK(!divides(min1[i], min1[j]));
        // Every input is a multiple of some output.
        for (const auto& m : set) {
            bool covered = false;
            for (const auto& g : min1)
                covered = covered || divides(g, m);
            CHECK(covered);
        }
        // Idempotent and order independent.
        CHECK(minimal_generators(min1) == min1);
        std::reverse(set.begin(), set.end());
        CHECK(minimal_generators(set) == min1);
    }
}

TEST_CASE("ideal membership")
{
    QMatrixPtr R = testgen::commutative_ring(2, FieldDesc::prime_field(101));
    MonomialIdeal I(R, {mono({2, 0}), mono({1, 1})});
    CHECK(I.contains(mono({2, 1})));
    CHECK(!I.contains(mono({0, 3})));

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> e(0, 3);
    for (int t = 0; t < 60; ++t) {
        QMatrixPtr R3 = testgen::commutative_ring(3, FieldDesc::prime_field(101));
        MonomialIdeal J(R3, testgen::random_minimal_gens(rng, 3, 3, 3));
        Monomial m = mono({e(rng), e(rng), e(rng)});
        CHECK(J.contains(m) == membership_oracle(J, m));
    }
}

TEST_CASE("quotient_dim and the box count")
{
    QMatrixPtr R = testgen::commutative_ring(2, FieldDesc::prime_field(101));
    MonomialIdeal I(R, {mono({2, 0}), mono({1, 1})});
    CHECK(quotient_dim(I, mono({0, 3})) == 1);
    CHECK(quotient_dim(I, mono({1, 1})) == 0);

    // Brute-force count of the monomials of R/I in the box [0,2]^2:
    // 1, y, y^2, x survive; everything else is divisible by x^2 or xy.
    int count = 0;
    for (std::int64_t a = 0; a <= 2; ++a)
        for (std::int64_t b = 0; b <= 2; ++b)
            count += quotient_dim(I, mono({a, b}));
    CHECK(count == 4);
}

TEST_CASE("non-minimal input is tracked")
{
    QMatrixPtr R = testgen::commutative_ring(2, FieldDesc::prime_field(101));
    MonomialIdeal I(R, {mono({2, 0}), mono({2, 1})});
    CHECK(!I.was_minimal());
    CHECK(I.mingens() == std::vector<Monomial>{mono({2, 0})});
    MonomialIdeal J(R, {mono({2, 0})});
    CHECK(J.was_minimal());
}
