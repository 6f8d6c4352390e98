#include "pte/error.hpp"
#include "pte/matrix.hpp"
#include "pte/rational.hpp"
#include "pte/symmetric.hpp"

#include <doctest.h>

#include <random>

using namespace pte;

namespace {

RationalMatrix mat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (auto& row : rows) r.emplace_back(row.begin(), row.end());
    return RationalMatrix::from_rows(r);
}

Rational random_rational(std::mt19937_64& rng, long span = 20, long den_span = 6) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, den_span);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

// Textbook Gaussian elimination over Q, kept deliberately naive.
std::size_t naive_rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Coefficients of prod (z - v); returns e_1..e_n with the usual signs removed.
std::vector<Rational> expand_elementary(const std::vector<Rational>& values) {
    std::vector<Rational> e(values.size() + 1);
    e[0] = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
    return {e.begin() + 1, e.end()};
}

} // namespace

TEST_CASE("rationals are reduced and print canonically") {
    CHECK(Rational(Integer(4), Integer(-6)).str() == "-2/3");
    CHECK(Rational(Integer(0), Integer(-5)).str() == "0");
    CHECK(Rational::parse(" 10/4 ") == Rational(Integer(5), Integer(2)));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidInput);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
    CHECK(Rational(Integer(-2), Integer(3)).pow(3).str() == "-8/27");
    CHECK(Rational(Integer(1), Integer(2)) < Rational(Integer(2), Integer(3)));
}

TEST_CASE("rank examples") {
    CHECK(rank(RationalMatrix::identity(2)) == 2);
    CHECK(rank(mat({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == 3);
    CHECK(rank(mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 0);
    CHECK(rank(RationalMatrix()) == 0);
    CHECK(rank(mat({{1, 2}, {2, 4}, {3, 6}})) == 1);
    RationalMatrix half(1, 2, {Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(3))});
    CHECK(rank(half) == 1);
}

TEST_CASE("power sums") {
    CHECK(power_sums({1, 2, 3}, 2) == std::vector<Rational>{6, 14});
    const Rational c(Integer(-3), Integer(7));
    CHECK(power_sums({c}, 3) == std::vector<Rational>{c, c * c, c * c * c});
    const Rational x = 5;
    CHECK(power_sums({x, -x}, 2) == std::vector<Rational>{0, 2 * x * x});
    CHECK_THROWS_AS(power_sums({}, 2), InvalidInput);
    CHECK_THROWS_AS(power_sums({1}, 0), InvalidInput);
}

TEST_CASE("Newton conversion") {
    CHECK(elementary_from_power_sums({6, 14, 36}) == std::vector<Rational>{6, 11, 6});
    CHECK(elementary_from_power_sums({0}) == std::vector<Rational>{0});
    const Rational x(Integer(3), Integer(2));
    CHECK(elementary_from_power_sums({0, 2 * x * x}) == std::vector<Rational>{0, -(x * x)});
    CHECK(power_sums_from_elementary({6, 11, 6}, 5) == power_sums({1, 2, 3}, 5));

    const auto prof = SymmetricProfile::of({1, 2, 3}, 2);
    CHECK(prof.power_sums == std::vector<Rational>{6, 14});
    CHECK(prof.elementary == std::vector<Rational>{6, 11, 6});
}

TEST_CASE("glTransform examples") {
    const std::vector<Point> pts{{1, 0}, {0, 1}};
    CHECK(gl_transform(pts, RationalMatrix::identity(2)) == pts);
    CHECK(gl_transform(pts, mat({{0, 1}, {1, 0}})) == std::vector<Point>{{0, 1}, {1, 0}});
    CHECK(gl_transform({{1, 2}}, mat({{2, 0}, {0, 3}})) == std::vector<Point>{{2, 6}});
    CHECK_THROWS_AS(gl_transform(pts, mat({{1, 2}, {2, 4}})), InvalidInput);
    CHECK_THROWS_AS(gl_transform(pts, mat({{1, 2, 3}, {2, 4, 5}})), InvalidInput);
}

TEST_CASE("property: Girard-Newton relations hold in both regimes") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> len(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> v(len(rng));
        for (auto& x : v) x = random_rational(rng);
        const std::size_t n = v.size();
        const auto p = power_sums(v, n + 5);
        const auto e = elementary_from_power_sums({p.begin(), p.begin() + n});
        CHECK(e == expand_elementary(v));
        for (std::size_t k = 1; k <= n + 5; ++k) CHECK(girard_newton_residual(p, e, k).is_zero());
        CHECK(power_sums_from_elementary(e, n + 5) == p);
    }
}

TEST_CASE("property: rank is transpose invariant and agrees with naive elimination") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng), inner = dim(rng);
        // Products of random factors give rank-deficient matrices regularly.
        RationalMatrix a(rows, inner), b(inner, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < inner; ++j) a(i, j) = random_rational(rng, 3, 2);
        for (std::size_t i = 0; i < inner; ++i)
            for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_rational(rng, 3, 2);
        const auto m = a * b;
        const auto r = rank(m);
        CHECK(r == rank(m.transpose()));
        CHECK(r == naive_rank(m));
        CHECK(r == bareiss_rank(clear_denominators(m)));
        CHECK(r <= std::min({rows, cols, inner}));
    }
}

TEST_CASE("property: M^T M = aI + bJ with a != 0 and a + rb != 0 forces full column rank") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<int> copies(1, 3), ones(0, 3), coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = dim(rng);
        const int c = copies(rng), d = ones(rng);
        // c signed copies of I_r and d all-ones rows: M^T M = cI + dJ.
        std::vector<std::vector<Rational>> rows;
        for (int k = 0; k < c; ++k)
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<Rational> row(r);
                row[i] = coin(rng) ? 1 : -1;
                rows.push_back(row);
            }
        for (int k = 0; k < d; ++k) rows.emplace_back(r, Rational(1));
        std::shuffle(rows.begin(), rows.end(), rng);
        const auto m = RationalMatrix::from_rows(rows);
        const auto gram = m.transpose() * m;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) REQUIRE(gram(i, j) == Rational(d + (i == j ? c : 0)));
        CHECK(rank(m) == r);
    }
    // Incidence matrix of the Fano plane: N^T N = 2I + J.
    std::vector<std::vector<Rational>> fano;
    for (int a = 0; a < 7; ++a) {
        std::vector<Rational> row(7);
        for (int d : {0, 1, 3}) row[(a + d) % 7] = 1;
        fano.push_back(row);
    }
    const auto n = RationalMatrix::from_rows(fano);
    const auto g = n.transpose() * n;
    CHECK(g(0, 0) == 3);
    CHECK(g(0, 1) == 1);
    CHECK(rank(n) == 7);
}

TEST_CASE("modular rank is a lower bound that matches on small integer matrices") {
    IntegerRows m{{Integer(1), Integer(2)}, {Integer(2), Integer(4)}};
    CHECK(modular_rank(m) == 1);
    CHECK(bareiss_rank(m) == 1);
    IntegerRows big{{Integer("2305843009213693951"), Integer(0)}, {Integer(0), Integer(1)}};
    // The first entry is the modulus itself, so the modular rank drops.
    CHECK(modular_rank(big) == 1);
    CHECK(rank(big) == 2);
}
