#ifndef SKEWTAYLOR_SCALAR_HPP
#define SKEWTAYLOR_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "skewtaylor/util.hpp"

namespace skewtaylor {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// The coefficient field: exact rationals or a prime field F_p. All scalar
// arithmetic in the engine is exact; there is no floating point anywhere.
struct FieldDesc {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint64_t p = 0;  // modulus when kind == prime

    static FieldDesc rationals() { return FieldDesc{Kind::rational, 0}; }
    static FieldDesc prime_field(std::uint64_t p);

    bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }
    std::string str() const;
};

// One element of the configured field. Fp values are stored as the least
// nonnegative residue; rationals are kept reduced by cpp_rational.
class Scalar {
public:
    Scalar() : field_(FieldDesc::rationals()), q_(0) {}

    static Scalar zero(const FieldDesc& f) { return from_int(0, f); }
    static Scalar one(const FieldDesc& f) { return from_int(1, f); }
    static Scalar from_int(long long v, const FieldDesc& f);
    static Scalar from_rational(const Rational& r, const FieldDesc& f);

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws input_error on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;
    // Exact power with integer exponent; negative exponents invert first.
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical form: reduced fraction "a/b" (or "a"), or least residue digits.
    std::string str() const;

    const Rational& rational_value() const;  // valid for rational fields only
    std::uint64_t residue() const { return v_; }

private:
    void require_same_field(const Scalar& o) const;

    FieldDesc field_;
    Rational q_;          // rational payload
    std::uint64_t v_ = 0;  // prime-field payload
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Least nonnegative a^e mod p, p prime < 2^32.
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace skewtaylor

#endif
