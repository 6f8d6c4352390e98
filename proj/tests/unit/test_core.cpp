#include "pte/error.hpp"
#include "pte/instance.hpp"
#include "pte/json_io.hpp"
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

PteClass cls1(std::vector<long> xs) {
    std::vector<Point> out;
    for (auto x : xs) out.push_back({Rational(x)});
    return PteClass(std::move(out));
}

PteInstance halving() {
    return PteInstance(3, 2,
                       {cls({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                        cls({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}})});
}

PteInstance euler_goldbach() { return PteInstance(1, 2, {cls1({1, 2, 4, 7}), cls1({0, 3, 5, 6})}); }

PteInstance borwein1() {
    return PteInstance(1, 5, {cls1({18, -18, 20, -20, 2, -2}), cls1({10, -10, 12, -12, 22, -22})});
}

PteInstance borwein2() {
    return PteInstance(2, 5,
                       {cls({{18, -20}, {-18, 20}, {-20, 2}, {20, -2}, {2, 18}, {-2, -18}}),
                        cls({{10, 12}, {-10, -12}, {12, -22}, {-12, 22}, {-22, 10}, {22, -10}})});
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t r) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    while (true) {
        RationalMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = Rational(Integer(num(rng)), Integer(den(rng)));
        if (rank(m) == r) return m;
    }
}

long binom(long n, long k) {
    long v = 1;
    for (long i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

} // namespace

TEST_CASE("multi-index enumeration") {
    CHECK(multi_indices(1, 3) == std::vector<Exponent>{{1}, {2}, {3}});
    CHECK(multi_indices(2, 2) == std::vector<Exponent>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    CHECK(multi_indices(3, 1) == std::vector<Exponent>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (long r = 1; r <= 8; ++r)
        for (long m = 1; m <= 8; ++m) {
            const auto ks = multi_indices(r, m);
            CHECK(static_cast<long>(ks.size()) == binom(r + m, m) - 1);
            CHECK(std::set<Exponent>(ks.begin(), ks.end()).size() == ks.size());
        }
}

TEST_CASE("class power sums") {
    CHECK(class_power_sum(cls1({1, 2, 4, 7}), {2}) == 70);
    const auto h = halving()[0];
    CHECK(class_power_sum(h, {1, 0, 0}) == 2);
    CHECK(class_power_sum(h, {1, 1, 0}) == 1);
    CHECK_THROWS_AS(class_power_sum(h, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(class_power_sum(h, {0, 0, 0}), InvalidInput);
}

TEST_CASE("instance shape is validated") {
    CHECK_THROWS_AS(PteInstance(1, 1, {cls1({1})}), InvalidInput);
    CHECK_THROWS_AS(PteInstance(1, 1, {cls1({1}), cls1({2, 3})}), InvalidInput);
    CHECK_THROWS_AS(PteInstance(2, 1, {cls1({1}), cls1({2})}), InvalidInput);
    CHECK_THROWS_AS(PteInstance(1, 0, {cls1({1}), cls1({2})}), InvalidInput);
    CHECK_THROWS_AS(PteClass({{1, 2}, {3}}), InvalidInput);
}

TEST_CASE("verify examples") {
    CHECK(verify(euler_goldbach()).holds);
    CHECK(verify(halving()).holds);

    const auto shared = verify(PteInstance(1, 1, {cls1({1, 2}), cls1({1, 3})}));
    CHECK_FALSE(shared.holds);
    REQUIRE(shared.first_failure);
    CHECK(shared.first_failure->kind == IdentityFailure::Kind::SharedPoint);
    CHECK(shared.first_failure->shared_point == Point{1});

    const auto deg3 = verify(halving().with_degree(3));
    CHECK_FALSE(deg3.holds);
    REQUIRE(deg3.first_failure);
    CHECK(deg3.first_failure->exponent == Exponent{1, 1, 1});
    CHECK(deg3.first_failure->first_value == 0);
    CHECK(deg3.first_failure->second_value == 1);
}

TEST_CASE("verify works with fractional and very large coordinates") {
    const Rational third(Integer(1), Integer(3));
    RationalMatrix scale = RationalMatrix::identity(3);
    scale(0, 0) = third;
    scale(2, 2) = Rational(Integer(5), Integer(7));
    CHECK(verify(transform(halving(), scale)).holds);

    const Rational huge(Integer("1000000000000000000000000000000"));
    RationalMatrix big(1, 1, {huge});
    const auto b = transform(borwein1(), big);
    CHECK(verify(b).holds);
    const auto bad = verify(b.with_degree(6));
    CHECK_FALSE(bad.holds);
    CHECK(bad.first_failure->exponent == Exponent{6});
}

TEST_CASE("max verified degree") {
    CHECK(max_verified_degree(borwein1(), 7) == 5);
    CHECK(max_verified_degree(PteInstance(1, 1, {cls1({1}), cls1({2})}), 3) == 0);
    CHECK(max_verified_degree(halving(), 4) == 2);
    CHECK(max_verified_degree(PteInstance(1, 1, {cls1({1, 2}), cls1({1, 3})}), 3) == 0);
}

TEST_CASE("properness") {
    CHECK(is_proper(halving()));
    CHECK_FALSE(is_proper(PteInstance(2, 1, {cls({{1, 1}, {-1, -1}}), cls({{2, 2}, {-2, -2}})})));
    const auto b3 = PteInstance(3, 5,
                                {cls({{18, -20, 2}, {-20, 2, 18}, {2, 18, -20}, {-18, 20, -2}, {20, -2, -18}, {-2, -18, 20}}),
                                 cls({{10, 12, -22}, {12, -22, 10}, {-22, 10, 12}, {-10, -12, 22}, {-12, 22, -10}, {22, -10, -12}})});
    CHECK(verify(b3).holds);
    CHECK_FALSE(is_proper(b3));
    CHECK(class_ranks(b3) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(borwein2()[0]));
    CHECK_FALSE(is_symmetric(cls({{1, 0}})));
    CHECK(is_symmetric(cls({{0, 0}})));
    CHECK(is_symmetric(borwein2()));
    CHECK_FALSE(is_symmetric(halving()));
}

TEST_CASE("linearity") {
    const auto full = is_linear(borwein2());
    CHECK(full.status == LinearityResult::Status::Linear);
    CHECK(full.subset == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});

    const auto rem = is_linear(PteInstance(1, 1, {cls1({1, 2, -3}), cls1({-4, 0, 4})}));
    CHECK(rem.status == LinearityResult::Status::Linear);
    CHECK(rem.subset.size() == 3);

    const PteInstance none(1, 1, {cls1({1, 2}), cls1({0, 3})});
    CHECK(is_linear(none).status == LinearityResult::Status::NotChecked);
    CHECK(is_linear(none, {true, 16}).status == LinearityResult::Status::NotLinear);
    CHECK(is_linear(none, {true, 1}).status == LinearityResult::Status::NotChecked);

    // Sorted pairing: A = (-3,-1,4,5), B = (-4,2,6,7); positions {0,1,2} give 0 and 4,
    // positions {0,2} give 1 and 2; no subset works for both.
    const PteInstance sub(1, 1, {cls1({-3, -1, 4, 5}), cls1({-4, 2, 6, 7})});
    CHECK(is_linear(sub, {true, 16}).status == LinearityResult::Status::NotLinear);
    // A = (-2,1,2,7), B = (-5,-1,5,9): positions {0,2} sum to 0 in both.
    const PteInstance sub2(1, 1, {cls1({-2, 1, 2, 7}), cls1({-5, -1, 5, 9})});
    const auto s2 = is_linear(sub2, {true, 16});
    CHECK(s2.status == LinearityResult::Status::Linear);
    CHECK(s2.subset == std::vector<std::size_t>{0, 2});
}

TEST_CASE("ideality") {
    CHECK(is_ideal(borwein1()));
    CHECK_FALSE(is_ideal(euler_goldbach()));
    CHECK_FALSE(is_ideal(halving()));
    // Every ideal instance fails one degree higher.
    for (const auto& inst : {borwein1(), borwein2()}) {
        REQUIRE(is_ideal(inst));
        CHECK_FALSE(verify(inst.with_degree(inst.degree() + 1)).holds);
    }
}

TEST_CASE("property: verification is GL-invariant") {
    std::mt19937_64 rng(12345);
    for (const auto& inst : {halving(), euler_goldbach(), borwein2()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = random_invertible(rng, inst.dimension());
            const auto moved = transform(inst, m);
            CHECK(verify(moved).holds);
            CHECK(max_verified_degree(moved, inst.degree() + 1) == inst.degree());
        }
    }
}

TEST_CASE("property: rank of the stacked classes equals each class rank") {
    for (const auto& inst : {halving(), euler_goldbach(), borwein1(), borwein2()}) {
        REQUIRE(verify(inst).holds);
        const auto ranks = class_ranks(inst);
        CHECK(joint_rank(inst) == ranks[0]);
        CHECK(ranks[0] == ranks[1]);
    }
}

TEST_CASE("property: verify ignores point order, class order, and thread count") {
    std::mt19937_64 rng(5);
    for (const auto& inst : {halving(), borwein2(), halving().with_degree(3), borwein2().with_degree(6)}) {
        const auto base = verify(inst);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<PteClass> cs;
            for (const auto& c : inst.classes()) {
                auto pts = c.points();
                std::shuffle(pts.begin(), pts.end(), rng);
                cs.emplace_back(std::move(pts));
            }
            std::shuffle(cs.begin(), cs.end(), rng);
            const auto again = verify(PteInstance(inst.dimension(), inst.degree(), cs));
            CHECK(again.holds == base.holds);
            if (!base.holds) CHECK(again.first_failure->exponent == base.first_failure->exponent);
        }
        for (std::size_t t : {2u, 3u, 8u}) {
            const auto th = verify(inst, t);
            CHECK(th.holds == base.holds);
            if (!base.holds) CHECK(th.first_failure->exponent == base.first_failure->exponent);
        }
    }
}

TEST_CASE("three-class verification compares every class") {
    const PteInstance three(1, 1, {cls1({0, 5, 7}), cls1({1, 3, 8}), cls1({2, 4, 6})});
    CHECK(verify(three).holds);
    const PteInstance broken(1, 1, {cls1({0, 5, 7}), cls1({1, 3, 8}), cls1({2, 4, 9})});
    const auto rep = verify(broken);
    CHECK_FALSE(rep.holds);
    CHECK(rep.first_failure->second_class == 2);
}

TEST_CASE("instance JSON round trip") {
    const auto inst = transform(halving(), RationalMatrix(3, 3,
        {Rational(Integer(1), Integer(2)), 0, 0, 0, 1, 0, 0, 0, -3}));
    const auto j = to_json(inst);
    CHECK(j["classes"][0][1][0] == "0");
    CHECK(instance_from_json(j) == inst.canonical());
    CHECK(dump(to_json(instance_from_json(Json::parse(dump(j))))) == dump(j));

    const auto ragged = Json::parse(R"({"dimension":2,"degree":1,"classes":[[["1","2"]],[["3"]]]})");
    CHECK_THROWS_AS(instance_from_json(ragged), InvalidInput);
    const auto wrong = Json::parse(R"({"dimension":2,"degree":1,"classes":[[["1","x"]],[["3","4"]]]})");
    CHECK_THROWS_AS(instance_from_json(wrong), InvalidInput);
    const auto ints = Json::parse(R"({"dimension":1,"degree":2,"classes":[[[1],[2],[4],[7]],[[0],[3],[5],["6"]]]})");
    CHECK(verify(instance_from_json(ints)).holds);

    const auto rep = to_json(verify(halving().with_degree(3)));
    CHECK(rep["holds"] == false);
    CHECK(rep["firstFailure"]["exponent"] == Json::parse("[1,1,1]"));
}
