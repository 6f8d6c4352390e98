#include "pte/error.hpp"
#include "pte/lifting.hpp"
#include "pte/verify.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pte;

namespace {

PteClass cls(std::vector<std::vector<long>> pts) {
    std::vector<Point> out;
    for (auto& p : pts) out.emplace_back(p.begin(), p.end());
    return PteClass(std::move(out));
}

PteClass ints(std::vector<long> xs) {
    std::vector<Point> out;
    for (long x : xs) out.push_back({x});
    return PteClass(std::move(out));
}

SignedBase borwein_base() { return {{18, -20, 2}, {10, 12, -22}}; }

std::string error_of(const auto& fn) {
    try {
        fn();
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

const std::vector<std::vector<int>> latin3{{1, 3, 2}, {2, 1, 3}, {3, 2, 1}};

PteInstance jacroux_base() { return PteInstance(1, 1, {ints({1, 6}), ints({2, 5}), ints({3, 4})}); }

} // namespace

TEST_CASE("signed base checks") {
    CHECK_NOTHROW(check_signed_base(borwein_base(), 2));
    CHECK(error_of([] { check_signed_base({{18, -20, 3}, {10, 12, -22}}, 2); }).find("sums must vanish") !=
          std::string::npos);
    CHECK_THROWS_AS(check_signed_base({{1, -1}, {2, -2}}, 2), InvalidInput);  // -A_1 = A_2
    CHECK_THROWS_AS(check_signed_base({{18, -20, 2}, {10, 12}}, 2), InvalidInput);
    CHECK(error_of([] { check_signed_base({{-3, 1, 2}, {-2, -1, 3}}, 2); }).find("coincide") != std::string::npos);
    // Four values: sums and squares agree, fourth powers 30818 vs 22754.
    CHECK(error_of([] { check_signed_base({{-12, -1, 3, 10}, {-11, -4, 6, 9}}, 2); }).find("exponent 4") !=
          std::string::npos);
}

TEST_CASE("OA lifting") {
    const auto inst = oa_lift(trivial_oa(3, 2), borwein_base(), 2);
    CHECK(inst.dimension() == 2);
    CHECK(inst.degree() == 5);
    CHECK(inst.class_size() == 18);
    CHECK(verify(inst).holds);
    CHECK(is_proper(inst));
    CHECK(is_symmetric(inst));

    const auto one = oa_lift(trivial_oa(3, 1), borwein_base(), 2);
    CHECK(one.class_size() == 6);
    CHECK(one == borwein1d(2, 7));

    CHECK_THROWS_AS(oa_lift(trivial_oa(3, 2), {{18, -20, 3}, {10, 12, -22}}, 2), InvalidInput);
    CHECK_THROWS_AS(oa_lift(trivial_oa(3, 2), borwein_base(), 3), InvalidInput);
    CHECK_THROWS_AS(oa_lift(trivial_oa(3, 2), borwein_base(), 4), InvalidInput);
    auto weak = trivial_oa(3, 2);
    weak.strength = 1;
    CHECK_THROWS_AS(oa_lift(weak, borwein_base(), 2), InvalidInput);
    // Two symbols cannot carry a three-value base.
    CHECK_THROWS_AS(oa_lift(trivial_oa(2, 2), borwein_base(), 2), InvalidInput);
}

TEST_CASE("Type-I OA lifting") {
    const auto res = type1_oa_lift(type1_permutation_array(), borwein_base(), 2);
    CHECK(res.instance.degree() == 5);
    CHECK(res.instance.class_size() == 12);
    CHECK(verify(res.instance).holds);
    CHECK(res.ranks.size() == 2);
    // All +- permutations of (A1,A2,A3) against those of (B1,B2,B3).
    const auto perms = [](long x, long y, long z) {
        std::vector<std::vector<long>> v{{x, y, z}, {y, z, x}, {z, x, y}, {y, x, z}, {z, y, x}, {x, z, y}};
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) v.push_back({-v[i][0], -v[i][1], -v[i][2]});
        return cls(v);
    };
    CHECK(res.instance[0] == perms(18, -20, 2));
    CHECK(res.instance[1] == perms(10, 12, -22));

    CHECK_THROWS_AS(type1_oa_lift(type1_cyclic_array(), borwein_base(), 2), InvalidInput);
    CHECK_THROWS_AS(type1_oa_lift(type1_permutation_array(), borwein_base(), 4), InvalidInput);
    CHECK_THROWS_AS(type1_oa_lift({{0, 1, 2}, {1, 2, 0}}, borwein_base(), 2), InvalidInput);
}

TEST_CASE("Borwein family") {
    const auto one = borwein1d(2, 7);
    CHECK(one[0] == ints({18, -18, 20, -20, 2, -2}));
    CHECK(one[1] == ints({10, -10, 12, -12, 22, -22}));
    CHECK(is_ideal(one));
    CHECK(is_symmetric(one));
    CHECK(error_of([] { borwein1d(1, 2); }).find("coincide") != std::string::npos);
    CHECK(error_of([] { borwein1d(1, 3); }).find("repeated value -4 inside A") != std::string::npos);

    const auto two = borwein2d(2, 7);
    CHECK(two[0] == cls({{18, -20}, {-20, 2}, {2, 18}, {-18, 20}, {20, -2}, {-2, -18}}));
    CHECK(two[1] == cls({{10, 12}, {12, -22}, {-22, 10}, {-10, -12}, {-12, 22}, {22, -10}}));
    CHECK(is_ideal(two));
    CHECK(is_proper(two));
    CHECK(is_symmetric(two));
    CHECK(is_linear(two).status == LinearityResult::Status::Linear);
    CHECK_THROWS_AS(borwein2d(1, 2), InvalidInput);

    const auto three = borwein3d({18, -20, 2}, {10, 12, -22});
    CHECK(three.degree() == 5);
    CHECK(three.class_size() == 6);
    CHECK(is_ideal(three));
    CHECK(is_symmetric(three));
    CHECK(class_ranks(three) == std::vector<std::size_t>{2, 2});
    CHECK_FALSE(is_proper(three));
    CHECK(three[0].project({0, 1}) == two[0]);
    CHECK(three[1].project({0, 1}) == two[1]);
    CHECK(borwein_triples(2, 7) == std::pair<Triple, Triple>{{18, -20, 2}, {10, 12, -22}});

    CHECK(error_of([] { borwein3d({18, -20, 3}, {10, 12, -22}); }).find("zero-sum") != std::string::npos);
    // Zero-sum triples with equal squares automatically have equal fourth powers.
    CHECK(verify(borwein3d({-3, 1, 2}, {-2, -1, 3})).holds);
    CHECK(error_of([] { borwein3d({1, 2, -3}, {0, 4, -4}); }).find("degree-2") != std::string::npos);
    CHECK(error_of([] { borwein3d({18, -20, 2}, {-20, 2, 18}); }).find("disjointness") != std::string::npos);
}

TEST_CASE("property: Borwein restriction and OA lifting over random parameters") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
    int valid = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        PteInstance two;
        try {
            two = borwein2d(a, b);
        } catch (const InvalidInput&) {
            CHECK_THROWS_AS(borwein1d(a, b), InvalidInput);
            continue;
        }
        ++valid;
        const auto [ta, tb] = borwein_triples(a, b);
        const auto three = borwein3d(ta, tb);
        CHECK(three[0].project({0, 1}) == two[0]);
        CHECK(three[1].project({0, 1}) == two[1]);
        CHECK(class_ranks(three) == std::vector<std::size_t>{2, 2});

        const SignedBase base{{ta.begin(), ta.end()}, {tb.begin(), tb.end()}};
        for (std::size_t r = 1; r <= 3; ++r) {
            const auto lifted = oa_lift(trivial_oa(3, r), base, 2);
            std::size_t rows = 1;
            for (std::size_t i = 0; i < r; ++i) rows *= 3;
            CHECK(lifted.class_size() == 2 * rows);
            CHECK(is_symmetric(lifted));
            CHECK(is_proper(lifted));
        }
    }
    CHECK(valid > 40);
}

TEST_CASE("Cartesian lifting") {
    const auto res = cartesian_lift(jacroux_base(), jacroux_base(), latin3);
    const auto& u = res.instance;
    CHECK(u.dimension() == 2);
    CHECK(u.degree() == 3);
    CHECK(u.class_count() == 3);
    CHECK(u[0] == cls({{1, 1}, {6, 1}, {1, 6}, {6, 6}, {2, 3}, {5, 3}, {2, 4}, {5, 4}, {3, 2}, {4, 2}, {3, 5}, {4, 5}}));
    CHECK(u[1] == cls({{1, 2}, {6, 2}, {1, 5}, {6, 5}, {2, 1}, {5, 1}, {2, 6}, {5, 6}, {3, 3}, {4, 3}, {3, 4}, {4, 4}}));
    CHECK(u[2] == cls({{1, 3}, {6, 3}, {1, 4}, {6, 4}, {2, 2}, {5, 2}, {2, 5}, {5, 5}, {3, 1}, {4, 1}, {3, 6}, {4, 6}}));
    CHECK(verify(u).holds);
    CHECK(res.ranks == std::vector<std::size_t>{2, 2, 2});

    const PteInstance s2(1, 1, {ints({0, 3}), ints({1, 2})});
    const auto small = cartesian_lift(s2, s2, {{1, 2}, {2, 1}});
    CHECK(small.instance.class_size() == 8);
    CHECK(small.instance.degree() == 3);
    CHECK(verify(small.instance).holds);

    CHECK_THROWS_AS(cartesian_lift(s2, s2, latin3), InvalidInput);
    CHECK_THROWS_AS(cartesian_lift(s2, s2, {{1, 2}, {1, 2}}), InvalidInput);
    const PteInstance bad(1, 2, {ints({0, 3}), ints({1, 2})});
    CHECK(error_of([&] { cartesian_lift(bad, s2, {{1, 2}, {2, 1}}); }).find("S classes") != std::string::npos);
}

TEST_CASE("property: Cartesian lifting partitions the product") {
    const std::vector<PteInstance> bases{
        jacroux_base(),
        PteInstance(1, 2, {ints({0, 4, 8}), ints({1, 2, 9}), ints({3, 5, 7})}),  // not a PTE: rejected
        PteInstance(1, 1, {ints({1, 4}), ints({2, 3})}),
        PteInstance(1, 2, {ints({0, 3, 5, 6}), ints({1, 2, 4, 7})}),
        PteInstance(2, 1, {cls({{0, 0}, {1, 1}}), cls({{0, 1}, {1, 0}})}),
    };
    for (const auto& s : bases)
        for (const auto& t : bases) {
            if (s.class_count() != t.class_count()) continue;
            const std::size_t l = s.class_count();
            std::vector<std::vector<int>> latin(l, std::vector<int>(l));
            for (std::size_t a = 0; a < l; ++a)
                for (std::size_t i = 0; i < l; ++i) latin[a][i] = static_cast<int>((a + i) % l) + 1;
            if (!verify(s).holds || !verify(t).holds) {
                CHECK_THROWS_AS(cartesian_lift(s, t, latin), InvalidInput);
                continue;
            }
            const auto res = cartesian_lift(s, t, latin);
            CHECK(res.instance.degree() == s.degree() + t.degree() + 1);
            CHECK(verify(res.instance).holds);
            std::multiset<Point> got, want;
            for (const auto& c : res.instance.classes()) got.insert(c.points().begin(), c.points().end());
            for (const auto& cs : s.classes())
                for (const auto& x : cs.points())
                    for (const auto& ct : t.classes())
                        for (const auto& y : ct.points()) {
                            Point p = x;
                            p.insert(p.end(), y.begin(), y.end());
                            want.insert(p);
                        }
            CHECK(got == want);
        }
}

TEST_CASE("Jacroux reduction") {
    const auto u = cartesian_lift(jacroux_base(), jacroux_base(), latin3).instance;
    const auto bar = jacroux_reduce(u, 3, 2);
    CHECK(bar[0] == ints({1, 6, 31, 36, 14, 17, 20, 23, 9, 10, 27, 28}));
    CHECK(bar[1] == ints({7, 12, 25, 30, 2, 5, 32, 35, 15, 16, 21, 22}));
    CHECK(bar[2] == ints({13, 18, 19, 24, 8, 11, 26, 29, 3, 4, 33, 34}));
    CHECK(bar.degree() == 3);
    CHECK(verify(bar).holds);
    std::set<Point> all;
    for (const auto& c : bar.classes()) all.insert(c.points().begin(), c.points().end());
    CHECK(all.size() == 36);
    CHECK(*all.begin() == Point{1});
    CHECK(*all.rbegin() == Point{36});

    const PteInstance zero(2, 1, {cls({{0, 1}, {3, 1}}), cls({{1, 1}, {2, 1}})});
    CHECK_THROWS_AS(jacroux_reduce(zero, 2, 2), InvalidInput);
    const PteInstance wide(2, 1, {cls({{1, 1}, {5, 1}}), cls({{2, 1}, {4, 1}})});
    CHECK_THROWS_AS(jacroux_reduce(wide, 2, 2), InvalidInput);
    CHECK_NOTHROW(jacroux_reduce(wide, 5, 1));
    const PteInstance low(2, 1, {cls({{1, 0}, {2, 1}}), cls({{2, 0}, {1, 1}})});
    CHECK_THROWS_AS(jacroux_reduce(low, 2, 2), InvalidInput);
}

TEST_CASE("property: Jacroux reduction matches the encoded mixed sums") {
    // sum (u1 + (u2-1) w)^k = sum_j C(k,j) w^j sum u1^(k-j) (u2-1)^j.
    const auto u = cartesian_lift(jacroux_base(), jacroux_base(), latin3).instance;
    const Rational w = 6;
    const auto bar = jacroux_reduce(u, 3, 2);
    for (std::size_t c = 0; c < u.class_count(); ++c)
        for (unsigned k = 1; k <= 3; ++k) {
            Rational direct = class_power_sum(bar[c], {k});
            Rational mixed = 0;
            long binom = 1;
            for (unsigned j = 0; j <= k; ++j) {
                Rational s = 0;
                for (const auto& p : u[c].points()) s += p[0].pow(k - j) * (p[1] - 1).pow(j);
                mixed += Rational(binom) * w.pow(j) * s;
                binom = binom * static_cast<long>(k - j) / static_cast<long>(j + 1);
            }
            CHECK(direct == mixed);
        }
}
