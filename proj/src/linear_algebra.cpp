#include "plumbing/linear_algebra.hpp"

#include "plumbing/errors.hpp"

#include <string>
#include <utility>

namespace plumbing {

namespace {

std::string shape(const QMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const QMatrix& m, const char* op) {
    if (!m.is_square()) {
        throw DimensionError(std::string(op) + ": matrix must be square, got " + shape(m));
    }
}

// Index of the row in [from, n) whose entry in column `col` has the largest
// nonzero |numerator|, or n if the column is zero below `from`.
std::size_t find_pivot(const QMatrix& a, std::size_t col, std::size_t from) {
    std::size_t best = a.rows();
    BigInt best_mag = 0;
    for (std::size_t r = from; r < a.rows(); ++r) {
        const Rational& x = a(r, col);
        if (x.is_zero()) continue;
        BigInt mag = abs(x.numerator());
        if (best == a.rows() || mag > best_mag) {
            best = r;
            best_mag = std::move(mag);
        }
    }
    return best;
}

void swap_rows(QMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(r1, c), a(r2, c));
    }
}

// Reduces the augmented matrix [A | B] to [I | A^-1 B] in place.
void gauss_jordan(QMatrix& aug, std::size_t n, const char* op) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = find_pivot(aug, col, col);
        if (p == aug.rows()) {
            throw SingularMatrixError(std::string(op) + ": matrix is singular");
        }
        swap_rows(aug, col, p);
        Rational inv_pivot = Rational(1) / aug(col, col);
        for (std::size_t c = col; c < aug.cols(); ++c) {
            aug(col, c) *= inv_pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug(r, col).is_zero()) continue;
            Rational factor = aug(r, col);
            for (std::size_t c = col; c < aug.cols(); ++c) {
                aug(r, c) -= factor * aug(col, c);
            }
        }
    }
}

} // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool QMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) return false;
        }
    }
    return true;
}

QMatrix QMatrix::leading_minor(std::size_t k) const {
    if (k > rows_ || k > cols_) {
        throw DimensionError("leading minor larger than matrix");
    }
    QMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) out(r, c) = (*this)(r, c);
    }
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    QMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += a(r, k) * b(k, c);
            }
        }
    }
    return out;
}

QVector operator*(const QMatrix& a, const QVector& x) {
    if (a.cols() != x.size()) {
        throw DimensionError("matrix-vector product: length mismatch");
    }
    QVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!a(r, c).is_zero()) out[r] += a(r, c) * x[c];
        }
    }
    return out;
}

QVector to_qvector(std::span<const BigInt> values) {
    return QVector(values.begin(), values.end());
}

Rational determinant(const QMatrix& m) {
    require_square(m, "determinant");
    QMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = find_pivot(a, col, col);
        if (p == n) return 0;
        if (p != col) {
            swap_rows(a, col, p);
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Rational factor = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
            }
        }
    }
    return det;
}

bool is_negative_definite(const QMatrix& m) {
    require_square(m, "is_negative_definite");
    if (!m.is_symmetric()) {
        throw ValidationError("is_negative_definite: matrix is not symmetric");
    }
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        int expected = (k % 2 == 1) ? -1 : 1;
        if (determinant(m.leading_minor(k)).sign() != expected) return false;
    }
    return m.rows() > 0;
}

QVector solve(const QMatrix& m, const QVector& b) {
    require_square(m, "solve");
    const std::size_t n = m.rows();
    if (b.size() != n) {
        throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) +
                             ", expected " + std::to_string(n));
    }
    QMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    gauss_jordan(aug, n, "solve");
    QVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
    return x;
}

QMatrix inverse(const QMatrix& m) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    gauss_jordan(aug, n, "inverse");
    QMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    }
    return out;
}

BigInt lcm_of_denominators(std::span<const Rational> v) {
    BigInt k = 1;
    for (const Rational& x : v) {
        k = boost::multiprecision::lcm(k, x.denominator());
    }
    return k;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

} // namespace plumbing
