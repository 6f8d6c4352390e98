#pragma once

#include "pte/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pte {

/// A point of Q^r, stored as its coordinate row.
using Point = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Throws InvalidInput on ragged input.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    const std::vector<Rational>& entries() const { return entries_; }

    RationalMatrix transpose() const;
    /// Horizontal concatenation [this other]; row counts must agree.
    RationalMatrix hconcat(const RationalMatrix& other) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

using IntegerRows = std::vector<std::vector<Integer>>;

/// Exact rank over Q. Rows are scaled to integers, a single-prime modular
/// elimination certifies the full-rank case, and anything else goes through
/// fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

/// Exact rank of an integer matrix (rows may be modified by the callee's copy).
std::size_t rank(IntegerRows rows);

/// Fraction-free elimination only; exposed so tests can compare both paths.
std::size_t bareiss_rank(IntegerRows rows);

/// Rank modulo the Mersenne prime 2^61 - 1. A lower bound on the rank over Q.
std::size_t modular_rank(const IntegerRows& rows);

/// Row i multiplied by the lcm of its denominators.
IntegerRows clear_denominators(const RationalMatrix& m);

/// Maps every point x to x*M. Throws InvalidInput unless M is a square,
/// invertible matrix whose size matches the point dimension.
std::vector<Point> gl_transform(const std::vector<Point>& points, const RationalMatrix& m);

} // namespace pte
