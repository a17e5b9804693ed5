#include "skewtaylor/qmatrix.hpp"

namespace skewtaylor {

QMatrix::QMatrix(std::size_t n, FieldDesc field, std::vector<Scalar> entries,
                 std::vector<std::int64_t> degrees)
    : n_(n), field_(field), entries_(std::move(entries)), degrees_(std::move(degrees))
{
    if (n_ == 0)
        throw input_error("q-matrix: need at least one variable");
    if (entries_.size() != n_ * n_)
        throw input_error("q-matrix: expected " + std::to_string(n_ * n_) + " entries");
    if (degrees_.empty())
        degrees_.assign(n_, 1);
    if (degrees_.size() != n_)
        throw input_error("q-matrix: degree vector length mismatch");
    for (std::size_t i = 0; i < n_; ++i)
        if (degrees_[i] <= 0)
            throw input_error("q-matrix: deg(x" + std::to_string(i + 1) + ") must be positive");
    for (auto& e : entries_) {
        if (e.field() != field_)
            throw input_error("q-matrix: entry field mismatch");
        if (e.is_zero())
            throw input_error("q-matrix: zero entry");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (!q(i, i).is_one())
            throw input_error("q-matrix: q_{" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                              "} must be 1");
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!(q(i, j) * q(j, i)).is_one())
                throw input_error("q-matrix: q_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  "} * q_{" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                  "} != 1");
        }
    }
}

QMatrix QMatrix::commutative(std::size_t n, const FieldDesc& field)
{
    return QMatrix(n, field, std::vector<Scalar>(n * n, Scalar::one(field)));
}

std::int64_t QMatrix::internal_degree(const Monomial& m) const
{
    if (m.nvars() != n_)
        throw input_error("internal_degree: dimension mismatch");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i)
        d += m.exps[i] * degrees_[i];
    return d;
}

bool QMatrix::is_commutative() const
{
    for (const auto& e : entries_)
        if (!e.is_one())
            return false;
    return true;
}

bool QMatrix::operator==(const QMatrix& o) const
{
    return n_ == o.n_ && field_ == o.field_ && entries_ == o.entries_ && degrees_ == o.degrees_;
}

Scalar c_constant(const Monomial& a, const Monomial& b, const QMatrix& Q)
{
    check_same_nvars(a, b);
    if (a.nvars() != Q.nvars())
        throw input_error("c_constant: dimension mismatch against the ring");
    Scalar c = Scalar::one(Q.field());
    for (std::size_t i = 1; i < a.exps.size(); ++i) {
        if (a.exps[i] == 0)
            continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (b.exps[j] == 0)
                continue;
            c = c * Q.q(i, j).pow(a.exps[i] * b.exps[j]);
        }
    }
    return c;
}

Scalar chi_monomials(const Monomial& a, const Monomial& b, const QMatrix& Q)
{
    return c_constant(a, b, Q) / c_constant(b, a, Q);
}

Scalar c_extended(const LaurentMonomial& u, const LaurentMonomial& v, const QMatrix& Q)
{
    if (u.nvars() != v.nvars() || u.nvars() != Q.nvars())
        throw input_error("c_extended: dimension mismatch");
    std::size_t n = u.nvars();
    Monomial al = Monomial::unit(n), be = Monomial::unit(n);
    Monomial ga = Monomial::unit(n), de = Monomial::unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        (u.exps[i] >= 0 ? al.exps[i] : be.exps[i]) = std::abs(u.exps[i]);
        (v.exps[i] >= 0 ? ga.exps[i] : de.exps[i]) = std::abs(v.exps[i]);
    }
    return c_constant(al, ga, Q) * c_constant(al, de, Q).inverse() *
           c_constant(be, ga, Q).inverse() * c_constant(be, de, Q);
}

GDegree gdegree(const Monomial& a, const QMatrix& Q)
{
    if (a.nvars() != Q.nvars())
        throw input_error("gdegree: dimension mismatch");
    GDegree g;
    g.chi_row.reserve(Q.nvars());
    for (std::size_t j = 0; j < Q.nvars(); ++j) {
        // chi(x^a, x_j) = prod_i q_{ij}^{a_i}
        Scalar c = Scalar::one(Q.field());
        for (std::size_t i = 0; i < Q.nvars(); ++i)
            if (a.exps[i] != 0 && i != j)
                c = c * Q.q(i, j).pow(a.exps[i]);
        g.chi_row.push_back(c);
    }
    return g;
}

GDegree gdegree_product(const GDegree& a, const GDegree& b)
{
    if (a.chi_row.size() != b.chi_row.size())
        throw input_error("gdegree: dimension mismatch");
    GDegree g;
    g.chi_row.reserve(a.chi_row.size());
    for (std::size_t j = 0; j < a.chi_row.size(); ++j)
        g.chi_row.push_back(a.chi_row[j] * b.chi_row[j]);
    return g;
}

std::string GDegree::str() const
{
    std::string out = "(";
    for (std::size_t j = 0; j < chi_row.size(); ++j) {
        if (j)
            out += ",";
        out += chi_row[j].str();
    }
    return out + ")";
}

}  // namespace skewtaylor
