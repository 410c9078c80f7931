#include "spanres/matrix.hpp"

#include "spanres/errors.hpp"

#include <utility>

namespace spanres {

ExactMatrix::ExactMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(size_t rows, size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("matrix entry count does not match rows * cols");
}

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix addition with mismatched shapes");
    ExactMatrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix subtraction with mismatched shapes");
    ExactMatrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product with mismatched shapes");
    ExactMatrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

namespace {

// Integer working copy of a rational matrix (plus optional augmented
// columns), cleared of denominators one row at a time. row_scale[i] > 0 is
// the factor row i was multiplied by.
std::vector<std::vector<BigInt>> to_integer_rows(const ExactMatrix& a, const ExactMatrix* aug,
                                                 std::vector<BigInt>& row_scale) {
    const size_t n = a.rows();
    const size_t extra = aug ? aug->cols() : 0;
    std::vector<std::vector<BigInt>> rows(n);
    row_scale.assign(n, BigInt(1));
    for (size_t i = 0; i < n; ++i) {
        BigInt scale(1);
        for (size_t j = 0; j < a.cols(); ++j) scale = BigInt::lcm(scale, a.at(i, j).den());
        for (size_t j = 0; j < extra; ++j) scale = BigInt::lcm(scale, aug->at(i, j).den());
        rows[i].reserve(a.cols() + extra);
        for (size_t j = 0; j < a.cols(); ++j)
            rows[i].push_back(a.at(i, j).num() * (scale / a.at(i, j).den()));
        for (size_t j = 0; j < extra; ++j)
            rows[i].push_back(aug->at(i, j).num() * (scale / aug->at(i, j).den()));
        row_scale[i] = std::move(scale);
    }
    return rows;
}

struct Eliminated {
    std::vector<std::vector<BigInt>> rows;
    int sign = 1;
    bool singular = false;
};

// Fraction-free Gaussian elimination (Bareiss). Pivot selection is the first
// row with a nonzero entry in the pivot column: determinism over
// conditioning, since the arithmetic is exact. Every division below is exact
// by the Sylvester identity, so entries remain integers of bounded size
// (each is a minor of the input).
Eliminated bareiss_eliminate(std::vector<std::vector<BigInt>> w, size_t n) {
    Eliminated out;
    const size_t cols = w.empty() ? 0 : w[0].size();
    BigInt prev(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && w[pivot][k].is_zero()) ++pivot;
        if (pivot == n) {
            out.singular = true;
            out.rows = std::move(w);
            return out;
        }
        if (pivot != k) {
            std::swap(w[pivot], w[k]);
            out.sign = -out.sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < cols; ++j) {
                w[i][j] = (w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
            }
            w[i][k] = BigInt(0);
        }
        prev = w[k][k];
    }
    out.rows = std::move(w);
    return out;
}

}  // namespace

Rational det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det_exact requires a square matrix");
    const size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<BigInt> row_scale;
    auto rows = to_integer_rows(m, nullptr, row_scale);
    auto elim = bareiss_eliminate(std::move(rows), n);
    if (elim.singular) return Rational(0);

    BigInt num = elim.rows[n - 1][n - 1];
    if (elim.sign < 0) num = -num;
    BigInt den(1);
    for (const BigInt& s : row_scale) den = den * s;
    return Rational(std::move(num), std::move(den));
}

ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& rhs) {
    if (a.rows() != a.cols()) throw DimensionError("solve_exact requires a square matrix");
    if (rhs.rows() != a.rows()) throw DimensionError("right-hand side row count does not match");
    const size_t n = a.rows();
    const size_t k = rhs.cols();
    if (n == 0) return ExactMatrix(0, k);

    std::vector<BigInt> row_scale;
    auto rows = to_integer_rows(a, &rhs, row_scale);
    auto elim = bareiss_eliminate(std::move(rows), n);
    if (elim.singular) throw SingularSystemError("singular system");

    // Back substitution on the integer triangle; results are rational.
    ExactMatrix x(n, k);
    for (size_t c = 0; c < k; ++c) {
        for (size_t ii = n; ii-- > 0;) {
            Rational acc{elim.rows[ii][n + c]};
            for (size_t j = ii + 1; j < n; ++j)
                acc -= Rational(elim.rows[ii][j]) * x.at(j, c);
            x.at(ii, c) = acc / Rational(elim.rows[ii][ii]);
        }
    }
    return x;
}

std::vector<Rational> solve_exact(const ExactMatrix& a, const std::vector<Rational>& rhs) {
    if (rhs.size() != a.rows()) throw DimensionError("right-hand side size does not match");
    ExactMatrix b(rhs.size(), 1, std::vector<Rational>(rhs));
    ExactMatrix x = solve_exact(a, b);
    std::vector<Rational> out(a.rows());
    for (size_t i = 0; i < out.size(); ++i) out[i] = x.at(i, 0);
    return out;
}

Rational schur_det(const ExactMatrix& a, const ExactMatrix& b,
                   const ExactMatrix& c, const ExactMatrix& d) {
    if (a.rows() != a.cols()) throw DimensionError("block a must be square");
    if (d.rows() != d.cols()) throw DimensionError("block d must be square");
    if (b.rows() != a.rows() || b.cols() != d.cols())
        throw DimensionError("block b is not conformal");
    if (c.rows() != d.rows() || c.cols() != a.cols())
        throw DimensionError("block c is not conformal");

    if (d.rows() == 0) return det_exact(a);
    if (a.rows() == 0) return det_exact(d);

    ExactMatrix d_inv_c = solve_exact(d, c);  // throws SingularSystemError when det(d) == 0
    return det_exact(d) * det_exact(a - b * d_inv_c);
}

}  // namespace spanres
