#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace nachbin;
using namespace testing_support;

namespace {
const Carrier pq{{"p", "q"}};
} // namespace

TEST_CASE("positive cone membership") {
    auto plus = positive_cone(SbalSkeleton::monotone(FinitePoset::chain(pq)));
    CHECK(plus.contains(fn(pq, {1, 2})));
    CHECK_FALSE(plus.contains(fn(pq, {-1, 2})));
    CHECK_FALSE(plus.contains(fn(pq, {2, 1})));
    CHECK(plus.difference(fn(pq, {1, 2}), 1) == fn(pq, {0, 1}));
    CHECK_THROWS_AS(plus.difference(fn(pq, {1, 2}), 2), not_in_skeleton);

    auto consts = positive_cone(SbalSkeleton::constants(pq));
    CHECK(consts.contains(fn(pq, {3, 3})));
    CHECK_FALSE(consts.contains(fn(pq, {-3, -3})));
    CHECK_FALSE(consts.contains(fn(pq, {1, 3})));
}

TEST_CASE("difference axiom on sampled members") {
    SplitMix64 rng(47);
    for (const auto& p : enumerate_posets_up_to(4)) {
        auto plus = positive_cone(SbalSkeleton::monotone(p));
        for (int i = 0; i < 50; ++i) {
            auto a = plus.sample_member(rng);
            REQUIRE(plus.contains(a));
            Rational r = a.min() * make_rational(rng.uniform(0, 8), 8);
            auto b = plus.difference(a, r);
            CHECK(plus.contains(b));
            CHECK(b + r == a);
            // Closure of the cone.
            auto c = plus.sample_member(rng);
            CHECK(plus.contains(a + c));
            CHECK(plus.contains(a * c));
            CHECK(plus.contains(join(a, c)));
            CHECK(plus.contains(meet(a, c)));
            CHECK(plus.contains(sample_nonnegative_scalar(rng) * a));
        }
    }
}

TEST_CASE("envelope of the positive cone") {
    auto plus = positive_cone(SbalSkeleton::monotone(FinitePoset::chain(pq)));
    auto qs = q_envelope(plus);
    CHECK(qs.contains(fn(pq, {-1, 0})));
    auto d = q_decompose(plus, fn(pq, {-1, 0}));
    REQUIRE(d);
    CHECK(d->a == fn(pq, {0, 1}));
    CHECK(d->r == 1);
    CHECK_FALSE(q_contains(plus, fn(pq, {0, -1})));

    auto consts = q_envelope(positive_cone(SbalSkeleton::constants(pq)));
    CHECK(consts.contains(fn(pq, {-4, -4})));
    CHECK_FALSE(consts.contains(fn(pq, {-4, 4})));

    // Nonnegative members of Q S come from the cone itself.
    SplitMix64 rng(53);
    for (int i = 0; i < 300; ++i) {
        auto f = qs.sample_member(rng);
        CHECK(q_contains(plus, f));
        if (is_nonnegative(f)) CHECK(plus.contains(f));
    }
}

TEST_CASE("P and Q round trips on all posets up to three points") {
    for (const auto& p : enumerate_posets_up_to(3)) {
        auto s = SbalSkeleton::monotone(p);
        auto report = roundtrip_pq(s, positive_cone(s), 200, 5);
        for (const auto& r : report.results()) {
            INFO(r.name);
            CHECK(r.passed);
        }
        CHECK(report.find("QP")->checked == static_cast<std::size_t>(std::pow(17, p.size())));
    }
    Carrier xy({"x", "y"});
    auto consts = SbalSkeleton::constants(xy);
    CHECK(roundtrip_pq(consts, positive_cone(consts), 50, 1).all_passed());
}

TEST_CASE("extended scalar action") {
    auto plus = positive_cone(SbalSkeleton::monotone(FinitePoset::chain(Carrier::numbered(3))));
    SplitMix64 rng(59);
    for (int i = 0; i < 200; ++i) {
        auto f = q_envelope(plus).sample_member(rng);
        Rational r = sample_nonnegative_scalar(rng);
        CHECK(q_scale(plus, r, f) == r * f);
    }
}
