#ifndef SKEWTAYLOR_MONOMIAL_HPP
#define SKEWTAYLOR_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewtaylor/util.hpp"

namespace skewtaylor {

inline constexpr std::int64_t kDefaultExponentCap = 2147483647;  // 2^31 - 1

// x^a = x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector. Doubles as a
// multidegree. Entries are nonnegative; LaurentMonomial below lifts that.
struct Monomial {
    std::vector<std::int64_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::int64_t> e) : exps(std::move(e)) {}
    static Monomial unit(std::size_t n) { return Monomial(std::vector<std::int64_t>(n, 0)); }
    static Monomial variable(std::size_t n, std::size_t i);

    std::size_t nvars() const { return exps.size(); }
    bool is_unit() const;
    std::int64_t total_degree() const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
    // Plain lexicographic order on exponent vectors; a deterministic total
    // order good enough for map keys and canonical node lists.
    bool operator<(const Monomial& o) const { return exps < o.exps; }

    std::string str() const;  // e.g. "x1^2*x3" or "1"
};

// Element of the group of monomials in x_i^{±1}; carries x^{α−β}.
struct LaurentMonomial {
    std::vector<std::int64_t> exps;

    LaurentMonomial() = default;
    explicit LaurentMonomial(std::vector<std::int64_t> e) : exps(std::move(e)) {}
    explicit LaurentMonomial(const Monomial& m) : exps(m.exps) {}
    std::size_t nvars() const { return exps.size(); }
};

void check_same_nvars(const Monomial& a, const Monomial& b);

// Componentwise monoid operations. mul is the * of the monomial monoid
// (exponent addition); the ring product picks up a C-constant on top of it.
Monomial mul(const Monomial& a, const Monomial& b, std::int64_t cap = kDefaultExponentCap);
bool divides(const Monomial& b, const Monomial& a);  // b | a
Monomial quotient(const Monomial& a, const Monomial& b);  // requires b | a
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const std::vector<Monomial>& ms);
Monomial gcd(const std::vector<Monomial>& ms);
bool coprime(const Monomial& a, const Monomial& b);

LaurentMonomial sub(const Monomial& a, const Monomial& b);  // x^{a-b}, any sign

}  // namespace skewtaylor

#endif
