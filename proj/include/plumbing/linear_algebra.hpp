#pragma once

#include "plumbing/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace plumbing {

using QVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> entries() const noexcept { return entries_; }

    // Upper-left k x k block.
    QMatrix leading_minor(std::size_t k) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& x);

QVector to_qvector(std::span<const BigInt> values);

// Gaussian elimination over Q. Pivot rows are chosen by largest |numerator|
// among the nonzero candidates; with exact arithmetic this only affects the
// size of intermediate values, never the result.
Rational determinant(const QMatrix& m);

// Sylvester's criterion on -M. Rejects asymmetric input with ValidationError.
bool is_negative_definite(const QMatrix& m);

QVector solve(const QMatrix& m, const QVector& b);
QMatrix inverse(const QMatrix& m);

// Least positive k such that k * v is integral.
BigInt lcm_of_denominators(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

} // namespace plumbing
