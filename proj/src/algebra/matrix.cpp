#include "pte/matrix.hpp"

#include "pte/error.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace pte {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(entries_.size() == rows_ * cols_, "matrix entry count does not match its shape");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        require(r.size() == cols, "ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(entries)};
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& other) const {
    require(rows_ == other.rows_, "hconcat: row counts differ");
    RationalMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntegerRows clear_denominators(const RationalMatrix& m) {
    IntegerRows out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& x = m(i, j).raw();
            out[i][j] = x.get_num() * (l / x.get_den());
        }
    }
    return out;
}

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    const u128 p = static_cast<u128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const Integer& x) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), kPrime);
    return r.get_ui();
}

} // namespace

std::size_t modular_rank(const IntegerRows& rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.size();
    const std::size_t m = rows.front().size();
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = reduce(rows[i][j]);

    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = pow_mod(a[r][col], kPrime - 2);
        for (std::size_t j = col; j < m; ++j) a[r][j] = mul_mod(a[r][j], inv);
        for (std::size_t i = r + 1; i < n; ++i) {
            const std::uint64_t f = a[i][col];
            if (f == 0) continue;
            for (std::size_t j = col; j < m; ++j) {
                const std::uint64_t sub = mul_mod(f, a[r][j]);
                a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + kPrime - sub;
            }
        }
        ++r;
    }
    return r;
}

std::size_t bareiss_rank(IntegerRows a) {
    if (a.empty()) return 0;
    const std::size_t n = a.size();
    const std::size_t m = a.front().size();
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        const Integer& p = a[r][col];
        for (std::size_t i = r + 1; i < n; ++i) {
            const Integer f = a[i][col];
            for (std::size_t j = col + 1; j < m; ++j) {
                // a[i][j] = (p * a[i][j] - f * a[r][j]) / prev, exact.
                tmp = p * a[i][j];
                mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), a[r][j].get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

std::size_t rank(IntegerRows rows) {
    if (rows.empty() || rows.front().empty()) return 0;
    const std::size_t full = std::min(rows.size(), rows.front().size());
    if (modular_rank(rows) == full) return full;
    return bareiss_rank(std::move(rows));
}

std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

std::vector<Point> gl_transform(const std::vector<Point>& points, const RationalMatrix& m) {
    require(m.rows() == m.cols(), "transform matrix must be square");
    require(rank(m) == m.rows(), "transform matrix is singular");
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& x : points) {
        require(x.size() == m.rows(), "point dimension does not match transform");
        Point y(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!x[i].is_zero()) y[j] += x[i] * m(i, j);
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace pte
