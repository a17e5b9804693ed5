#include "skewtaylor/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace skewtaylor {

Monomial Monomial::variable(std::size_t n, std::size_t i)
{
    Monomial m = unit(n);
    m.exps.at(i) = 1;
    return m;
}

bool Monomial::is_unit() const
{
    return std::all_of(exps.begin(), exps.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const
{
    return std::accumulate(exps.begin(), exps.end(), (std::int64_t)0);
}

std::string Monomial::str() const
{
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(i + 1);
        if (exps[i] != 1)
            out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

void check_same_nvars(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw input_error("monomial: dimension mismatch (" + std::to_string(a.nvars()) + " vs " +
                          std::to_string(b.nvars()) + ")");
}

Monomial mul(const Monomial& a, const Monomial& b, std::int64_t cap)
{
    check_same_nvars(a, b);
    Monomial m = a;
    for (std::size_t i = 0; i < b.exps.size(); ++i) {
        m.exps[i] += b.exps[i];
        if (m.exps[i] > cap)
            throw input_error("monomial: exponent overflow at x" + std::to_string(i + 1));
    }
    return m;
}

bool divides(const Monomial& b, const Monomial& a)
{
    check_same_nvars(a, b);
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (b.exps[i] > a.exps[i])
            return false;
    return true;
}

Monomial quotient(const Monomial& a, const Monomial& b)
{
    if (!divides(b, a))
        throw input_error("monomial: " + b.str() + " does not divide " + a.str());
    Monomial m = a;
    for (std::size_t i = 0; i < b.exps.size(); ++i)
        m.exps[i] -= b.exps[i];
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    check_same_nvars(a, b);
    Monomial m = a;
    for (std::size_t i = 0; i < b.exps.size(); ++i)
        m.exps[i] = std::max(m.exps[i], b.exps[i]);
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    check_same_nvars(a, b);
    Monomial m = a;
    for (std::size_t i = 0; i < b.exps.size(); ++i)
        m.exps[i] = std::min(m.exps[i], b.exps[i]);
    return m;
}

Monomial lcm(const std::vector<Monomial>& ms)
{
    if (ms.empty())
        throw input_error("lcm: empty monomial list");
    Monomial m = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i)
        m = lcm(m, ms[i]);
    return m;
}

Monomial gcd(const std::vector<Monomial>& ms)
{
    if (ms.empty())
        throw input_error("gcd: empty monomial list");
    Monomial m = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i)
        m = gcd(m, ms[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    return gcd(a, b).is_unit();
}

LaurentMonomial sub(const Monomial& a, const Monomial& b)
{
    check_same_nvars(a, b);
    LaurentMonomial u(a);
    for (std::size_t i = 0; i < b.exps.size(); ++i)
        u.exps[i] -= b.exps[i];
    return u;
}

}  // namespace skewtaylor
