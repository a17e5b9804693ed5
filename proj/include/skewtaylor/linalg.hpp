#ifndef SKEWTAYLOR_LINALG_HPP
#define SKEWTAYLOR_LINALG_HPP

#include <cstddef>
#include <vector>

#include "skewtaylor/scalar.hpp"

namespace skewtaylor {

// Dense matrix over the exact scalar backend. Sizes here are desk scale
// (strands of multigraded complexes), so plain Gaussian elimination is the
// right tool; every operation is exact.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldDesc& field)
        : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDesc& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    FieldDesc field_;
    std::vector<Scalar> a_;
};

std::size_t rank(Matrix m);  // by value: eliminates a copy

// Basis of {v : M v = 0}, as column-coordinate vectors. Deterministic: the
// reduced echelon form's free columns in increasing index order.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Incremental span of vectors in k^dim; add() reduces against the rows held
// so far and keeps the vector iff it is independent.
class SpanBuilder {
public:
    SpanBuilder(const FieldDesc& field, std::size_t dim) : field_(field), dim_(dim) {}

    // Returns true when v enlarged the span.
    bool add(std::vector<Scalar> v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    FieldDesc field_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;  // reduced, with unit leading pivots
    std::vector<std::size_t> pivots_;
};

}  // namespace skewtaylor

#endif
