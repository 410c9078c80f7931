#pragma once

#include "spanres/rational.hpp"

#include <vector>

namespace spanres {

// Dense matrix of exact rationals, row major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols);  // zero filled
    ExactMatrix(size_t rows, size_t cols, std::vector<Rational> entries);

    static ExactMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Rational& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }

    bool operator==(const ExactMatrix&) const = default;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact determinant via fraction-free (Bareiss) elimination; intermediate
// values stay integral for integral input. Throws DimensionError on
// non-square input.
Rational det_exact(const ExactMatrix& m);

// Exact solution of a*x = rhs. Throws DimensionError on shape mismatch and
// SingularSystemError when the matrix is singular.
std::vector<Rational> solve_exact(const ExactMatrix& a, const std::vector<Rational>& rhs);

// Multi right-hand-side variant: solves a*X = rhs column by column on one
// shared elimination.
ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& rhs);

// Determinant of [[a, b], [c, d]] through det(d) * det(a - b d^-1 c).
// Throws SingularSystemError when d is singular, DimensionError when the
// blocks are not conformal.
Rational schur_det(const ExactMatrix& a, const ExactMatrix& b,
                   const ExactMatrix& c, const ExactMatrix& d);

}  // namespace spanres
