#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace nachbin;
using namespace testing_support;

namespace {
const Carrier pq{{"p", "q"}};
const Carrier x123{{"x1", "x2", "x3"}};
} // namespace

TEST_CASE("rationals parse only in canonical form") {
    CHECK(parse_rational("-3") == q(-3));
    CHECK(parse_rational("1/2") == q(1, 2));
    CHECK(parse_rational("0") == q(0));
    for (const char* bad : {"2/4", "+1", "-0", "01", "1/1", "3/0", "1/-2", "", "1.5", "a", "0/5", " 1"})
        CHECK_THROWS_AS(parse_rational(bad), parse_error);
    CHECK(to_string(q(6, 4)) == "3/2");
}

TEST_CASE("pointwise operations") {
    CHECK(join(fn(pq, {1, 0}), fn(pq, {0, 1})) == fn(pq, {1, 1}));
    CHECK(fn(pq, {-3, 2}) + fn(pq, {3, -2}) == RationalFn::zero(pq));
    CHECK(q(1, 2) * fn(pq, {1, 3}) == fn(pq, {q(1, 2), q(3, 2)}));
    CHECK(fn(pq, {2, 3}) * fn(pq, {-1, q(1, 3)}) == fn(pq, {-2, 1}));
    CHECK_THROWS_AS(fn(pq, {1, 2}) + fn(x123, {1, 2, 3}), carrier_mismatch);
}

TEST_CASE("positive and negative parts") {
    auto a = fn(pq, {-3, 2});
    auto parts = pos_neg_abs(a);
    CHECK(parts.positive == fn(pq, {0, 2}));
    CHECK(parts.negative == fn(pq, {3, 0}));
    CHECK(parts.absolute == fn(pq, {3, 2}));
    auto zero = pos_neg_abs(RationalFn::zero(pq));
    CHECK(zero.positive == RationalFn::zero(pq));
    CHECK(zero.absolute == RationalFn::zero(pq));
    auto five = pos_neg_abs(fn(pq, {5, 5}));
    CHECK(five.negative == RationalFn::zero(pq));
    CHECK(five.absolute == fn(pq, {5, 5}));

    SplitMix64 rng(5);
    for (int i = 0; i < 500; ++i) {
        auto f = sample_function(x123, rng);
        auto p = pos_neg_abs(f);
        CHECK(p.positive - p.negative == f);
        CHECK(p.positive + p.negative == p.absolute);
        CHECK(meet(p.positive, p.negative) == RationalFn::zero(x123));
    }
}

TEST_CASE("sup norm") {
    CHECK(sup_norm(fn(pq, {-3, 2})) == 3);
    CHECK(sup_norm(RationalFn::zero(pq)) == 0);
    CHECK(sup_norm(fn(pq, {q(1, 2), q(-3, 4)})) == q(3, 4));
    CHECK_THROWS_AS(sup_norm(RationalFn::zero(Carrier())), empty_carrier);

    SplitMix64 rng(9);
    for (int i = 0; i < 500; ++i) {
        auto a = sample_function(x123, rng);
        auto b = sample_function(x123, rng);
        CHECK(sup_norm(a + b) <= sup_norm(a) + sup_norm(b));
        CHECK(sup_norm(a * b) <= sup_norm(a) * sup_norm(b));
        CHECK(sup_norm(abs_value(a)) == sup_norm(a));
    }
}

TEST_CASE("l-algebra laws on sampled triples") {
    SplitMix64 rng(13);
    for (int i = 0; i < 500; ++i) {
        auto a = sample_function(x123, rng);
        auto b = sample_function(x123, rng);
        auto c = sample_function(x123, rng);
        CHECK(pointwise_leq(a, b) == pointwise_leq(a + c, b + c));
        CHECK(join(a, b) + c == join(a + c, b + c));
        CHECK(meet(a, b) + c == meet(a + c, b + c));
        auto pa = sample_nonnegative(x123, rng);
        auto pb = sample_nonnegative(x123, rng);
        CHECK(is_nonnegative(pa * pb));
        CHECK(pa * (b + c) == pa * b + pa * c);
        // Archimedean: if a(x) > c(x) then a - c >= 1/8 there and d - b <= 4, so n = 33 breaks n a + b <= n c + d.
        auto d = sample_function(x123, rng);
        bool all_n = true;
        for (int n = 1; n <= 64 && all_n; ++n)
            all_n = pointwise_leq(Rational(n) * a + b, Rational(n) * c + d);
        if (all_n) CHECK(pointwise_leq(a, c));
    }
}

TEST_CASE("generate_closed_subalgebra examples") {
    std::vector<RationalFn> g{fn(x123, {0, 1, 1})};
    auto a = generate_closed_subalgebra(x123, g);
    CHECK(a.block_count() == 2);
    CHECK_FALSE(a.separates_points());
    CHECK(a.blocks()[0] == std::vector<std::size_t>{0});
    CHECK(a.blocks()[1] == std::vector<std::size_t>{1, 2});

    std::vector<RationalFn> sep{fn(x123, {0, 1, 2})};
    CHECK(generate_closed_subalgebra(x123, sep).separates_points());

    std::vector<RationalFn> consts{RationalFn::constant(x123, 4)};
    CHECK(generate_closed_subalgebra(x123, consts).block_count() == 1);
    CHECK(generate_closed_subalgebra(x123, std::vector<RationalFn>{}).block_count() == 1);
}

TEST_CASE("generated subalgebra is the coarsest partition containing the generators") {
    SplitMix64 rng(17);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto c = Carrier::numbered(n);
        auto partitions = all_partitions(n);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<RationalFn> gens;
            auto k = rng.uniform(0, 2);
            for (int i = 0; i < k; ++i) {
                std::vector<Rational> v;
                for (std::size_t j = 0; j < n; ++j) v.push_back(q(rng.uniform(0, 2)));
                gens.emplace_back(c, std::move(v));
            }
            auto got = generate_closed_subalgebra(c, gens);
            for (const auto& g : gens) CHECK(got.contains(g));
            // Brute force: the admissible partitions are exactly those refining the answer.
            std::size_t fewest = n + 1;
            for (const auto& ids : partitions) {
                SubalgebraPartition p(c, ids);
                bool admissible = std::all_of(gens.begin(), gens.end(), [&](const RationalFn& g) { return p.contains(g); });
                CHECK(admissible == p.refines(got));
                if (admissible) fewest = std::min(fewest, p.block_count());
            }
            CHECK(fewest == got.block_count());
            // Closure under the operations stays inside the partition.
            if (gens.size() == 2) {
                CHECK(got.contains(gens[0] * gens[1] + join(gens[0], gens[1]) - meet(gens[0], q(1, 2) * gens[1])));
            }
        }
    }
}

TEST_CASE("partitions from labelled blocks") {
    std::vector<std::vector<std::string>> blocks{{"x1"}, {"x2", "x3"}};
    auto a = SubalgebraPartition::from_blocks(x123, blocks);
    CHECK(a.contains(fn(x123, {2, 9, 9})));
    CHECK_FALSE(a.contains(fn(x123, {2, 9, 8})));
    std::vector<std::vector<std::string>> missing{{"x1"}, {"x2"}};
    CHECK_THROWS_AS(SubalgebraPartition::from_blocks(x123, missing), parse_error);
    std::vector<std::vector<std::string>> twice{{"x1", "x2"}, {"x2", "x3"}};
    CHECK_THROWS_AS(SubalgebraPartition::from_blocks(x123, twice), parse_error);
}
