#include "skewtaylor/scalar.hpp"

#include <ostream>

namespace skewtaylor {

FieldDesc FieldDesc::prime_field(std::uint64_t p)
{
    if (p < 2)
        throw input_error("field: modulus must be a prime >= 2, got " + std::to_string(p));
    if (p >= (1ull << 32))
        throw input_error("field: modulus must be < 2^32");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw input_error("field: modulus " + std::to_string(p) + " is not prime");
    return FieldDesc{Kind::prime, p};
}

std::string FieldDesc::str() const
{
    return kind == Kind::rational ? "rational" : ("fp:" + std::to_string(p));
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = (unsigned __int128)r * a % p;
        a = (unsigned __int128)a * a % p;
        e >>= 1;
    }
    return r;
}

Scalar Scalar::from_int(long long v, const FieldDesc& f)
{
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldDesc::Kind::rational) {
        s.q_ = Rational(v);
    } else {
        long long m = v % (long long)f.p;
        if (m < 0)
            m += (long long)f.p;
        s.v_ = (std::uint64_t)m;
    }
    return s;
}

Scalar Scalar::from_rational(const Rational& r, const FieldDesc& f)
{
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldDesc::Kind::rational) {
        s.q_ = r;
        return s;
    }
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt p(f.p);
    BigInt nm = num % p;
    if (nm < 0)
        nm += p;
    BigInt dm = den % p;
    if (dm < 0)
        dm += p;
    if (dm == 0)
        throw input_error("scalar: denominator vanishes mod " + std::to_string(f.p));
    std::uint64_t n64 = nm.convert_to<std::uint64_t>();
    std::uint64_t d64 = dm.convert_to<std::uint64_t>();
    s.v_ = (unsigned __int128)n64 * mod_pow(d64, f.p - 2, f.p) % f.p;
    return s;
}

void Scalar::require_same_field(const Scalar& o) const
{
    if (field_ != o.field_)
        throw input_error("scalar: mixing fields " + field_.str() + " and " + o.field_.str());
}

bool Scalar::is_zero() const
{
    return field_.kind == FieldDesc::Kind::rational ? q_.is_zero() : v_ == 0;
}

bool Scalar::is_one() const
{
    return field_.kind == FieldDesc::Kind::rational ? q_ == 1 : v_ == 1 % field_.p;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    require_same_field(o);
    Scalar r = *this;
    if (field_.kind == FieldDesc::Kind::rational)
        r.q_ += o.q_;
    else
        r.v_ = (v_ + o.v_) % field_.p;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    require_same_field(o);
    Scalar r = *this;
    if (field_.kind == FieldDesc::Kind::rational)
        r.q_ -= o.q_;
    else
        r.v_ = (v_ + field_.p - o.v_) % field_.p;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const
{
    require_same_field(o);
    Scalar r = *this;
    if (field_.kind == FieldDesc::Kind::rational)
        r.q_ *= o.q_;
    else
        r.v_ = (unsigned __int128)v_ * o.v_ % field_.p;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * o.inverse();
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (field_.kind == FieldDesc::Kind::rational)
        r.q_ = -q_;
    else
        r.v_ = v_ == 0 ? 0 : field_.p - v_;
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw input_error("scalar: division by zero");
    Scalar r = *this;
    if (field_.kind == FieldDesc::Kind::rational)
        r.q_ = 1 / q_;
    else
        r.v_ = mod_pow(v_, field_.p - 2, field_.p);
    return r;
}

Scalar Scalar::pow(long long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    if (field_.kind == FieldDesc::Kind::prime) {
        Scalar r = *this;
        r.v_ = mod_pow(v_, (std::uint64_t)e, field_.p);
        return r;
    }
    Scalar r = Scalar::one(field_);
    Scalar base = *this;
    std::uint64_t k = (std::uint64_t)e;
    while (k) {
        if (k & 1)
            r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    if (field_ != o.field_)
        return false;
    return field_.kind == FieldDesc::Kind::rational ? q_ == o.q_ : v_ == o.v_;
}

std::string Scalar::str() const
{
    if (field_.kind == FieldDesc::Kind::prime)
        return std::to_string(v_);
    BigInt num = boost::multiprecision::numerator(q_);
    BigInt den = boost::multiprecision::denominator(q_);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

const Rational& Scalar::rational_value() const
{
    if (field_.kind != FieldDesc::Kind::rational)
        throw input_error("scalar: not a rational value");
    return q_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

}  // namespace skewtaylor
