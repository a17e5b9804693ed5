#include "skewtaylor/linalg.hpp"

namespace skewtaylor {

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot
// row. First-nonzero pivoting keeps the result canonical.
std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != r)
            for (std::size_t k = c; k < m.cols(); ++k)
                std::swap(m.at(pr, k), m.at(r, k));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k)
            m.at(r, k) = m.at(r, k) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            Scalar f = m.at(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m.at(i, k) = m.at(i, k) - f * m.at(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m)
{
    return rref(m).size();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m)
{
    Matrix e = m;
    std::vector<std::size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
        v[f] = Scalar::one(m.field());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -e.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool SpanBuilder::add(std::vector<Scalar> v)
{
    if (v.size() != dim_)
        throw input_error("span: vector dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (c.is_zero())
            continue;
        for (std::size_t k = 0; k < dim_; ++k)
            v[k] = v[k] - c * rows_[i][k];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero())
        ++p;
    if (p == dim_)
        return false;
    Scalar inv = v[p].inverse();
    for (std::size_t k = 0; k < dim_; ++k)
        v[k] = v[k] * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace skewtaylor
