#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace nachbin;
using namespace testing_support;

namespace {

const Carrier pq{{"p", "q"}};

void check_certificate(const RationalFn& f, const SbalSkeleton& s, const SWCertificate& c) {
    CHECK(s.contains(c.a));
    CHECK(sup_norm(f - c.a) <= c.epsilon);
    for (const auto& m : c.family) {
        CHECK(pointwise_leq(f, m.a));
        CHECK(pointwise_leq(RationalFn::constant(f.carrier(), m.r), m.a));
        CHECK(pointwise_leq(m.a, RationalFn::constant(f.carrier(), c.s)));
        CHECK(m.a[m.y] == m.r);
        CHECK(f[m.y] < m.r);
        for (std::size_t x = 0; x < f.size(); ++x)
            if (f[x] >= m.r) CHECK(m.a[x] == c.s);
        CHECK(s.contains(m.a));
    }
}

} // namespace

TEST_CASE("constant functions short-circuit") {
    auto s = SbalSkeleton::monotone(FinitePoset::chain(pq));
    auto c = sw_approximate(RationalFn::constant(pq, 5), s, q(1, 10));
    CHECK(c.a == RationalFn::constant(pq, 5));
    CHECK(c.family_size() == 0);
}

TEST_CASE("approximation on the 2-chain and the V poset") {
    auto s = SbalSkeleton::monotone(FinitePoset::chain(pq));
    auto f = fn(pq, {0, 1});
    auto c = sw_approximate(f, s, q(1, 100));
    check_certificate(f, s, c);

    Carrier abc({"a", "b", "c"});
    auto v = SbalSkeleton::monotone(make_poset(abc, std::vector<LabelPair>{{"a", "c"}, {"b", "c"}}));
    auto g = fn(abc, {0, 0, 1});
    auto cv = sw_approximate(g, v, q(1, 8));
    check_certificate(g, v, cv);
}

TEST_CASE("approximation preconditions") {
    auto s = SbalSkeleton::monotone(FinitePoset::chain(pq));
    CHECK_THROWS_AS(sw_approximate(fn(pq, {1, 0}), s, q(1, 8)), not_monotone);
    CHECK_THROWS_AS(sw_approximate(fn(pq, {0, 1}), s, q(0)), non_positive_epsilon);
    CHECK_THROWS_AS(sw_approximate(fn(pq, {0, 1}), s, q(-1, 8)), non_positive_epsilon);
}

TEST_CASE("approximation certificates on random instances") {
    SplitMix64 rng(41);
    const Rational eps[] = {q(1, 8), q(1, 64), q(1, 1024), q(3, 5)};
    for (int trial = 0; trial < 150; ++trial) {
        auto p = random_poset(static_cast<std::size_t>(rng.uniform(1, 5)), rng);
        auto s = SbalSkeleton::monotone(p);
        auto f = s.sample_member(rng);
        auto c = sw_approximate(f, s, eps[trial % 4]);
        check_certificate(f, s, c);
    }
    // Quasi-ordered skeletons: f is constant on the equivalence classes.
    for (int trial = 0; trial < 50; ++trial) {
        SbalSkeleton s(random_quasi_order(4, rng));
        auto f = s.sample_member(rng);
        check_certificate(f, s, sw_approximate(f, s, q(1, 16)));
    }
}

TEST_CASE("Dieudonne claim") {
    auto o = ProximityOracle::from_skeleton(SbalSkeleton::monotone(FinitePoset::chain(pq)));
    auto a = dieudonne_claim(fn(pq, {1, 0}), fn(pq, {1, 1}), o, q(1, 2));
    CHECK(a == fn(pq, {q(3, 4), q(3, 4)}));
    CHECK(o.is_reflexive(a));
    CHECK(pointwise_leq(fn(pq, {1, 0}) - q(1, 2), a));
    CHECK(pointwise_leq(a, fn(pq, {1, 1})));

    auto f = fn(pq, {-1, 2});
    auto b = dieudonne_claim(f, f, o, q(1, 3));
    CHECK(pointwise_leq(f - q(1, 3), b));
    CHECK(pointwise_leq(b, f));

    CHECK_THROWS_AS(dieudonne_claim(fn(pq, {1, 0}), fn(pq, {1, q(1, 2)}), o, q(1, 2)), no_approximant_within_tolerance);
}

TEST_CASE("Dieudonne claim with perturbed approximants") {
    auto o = ProximityOracle::from_skeleton(SbalSkeleton::monotone(FinitePoset::chain(pq)));
    auto f = fn(pq, {1, 0});
    auto g = fn(pq, {1, 1});
    for (int k = 1; k <= 12; ++k) {
        auto r = power_of_half(static_cast<std::size_t>(k));
        auto a = dieudonne_claim(f, g, o, r, perturbed_stream(f, g));
        CHECK(o.is_reflexive(a));
        CHECK(pointwise_leq(f - r, a));
        CHECK(pointwise_leq(a, g));
    }
    // A stream that never becomes proximal exhausts the search.
    auto bad = [&](std::uint64_t) { return std::make_pair(f, fn(pq, {1, q(1, 2)})); };
    CHECK_THROWS_AS(dieudonne_claim(f, g, o, q(1, 2), bad, 64), no_approximant_within_tolerance);
}

TEST_CASE("Dieudonne sequence on the 2-chain") {
    auto o = ProximityOracle::from_skeleton(SbalSkeleton::monotone(FinitePoset::chain(pq)));
    auto f = fn(pq, {1, 0});
    auto g = fn(pq, {1, 1});
    auto t = dieudonne_sequence(f, g, o, 10);
    REQUIRE(t.terms.size() == 11);
    CHECK(t.all_ok());
    CHECK(sup_norm(t.terms[10] - t.terms[9]) <= power_of_half(9));
    CHECK(t.limit_witness == fn(pq, {1, 1}));
    CHECK(pointwise_leq(f, t.limit_witness));
    CHECK(pointwise_leq(t.limit_witness, g));

    auto m = fn(pq, {0, 3});
    auto same = dieudonne_sequence(m, m, o, 6);
    CHECK(same.all_ok());
}

TEST_CASE("Dieudonne traces on random proximal pairs") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poset(static_cast<std::size_t>(rng.uniform(1, 4)), rng);
        auto o = ProximityOracle::from_skeleton(SbalSkeleton::monotone(p));
        auto f = sample_function(p.carrier(), rng);
        auto g = o.witness(f) + sample_nonnegative(p.carrier(), rng);
        auto stream = trial % 2 ? perturbed_stream(f, g) : constant_stream(f, g);
        auto t = dieudonne_sequence(f, g, o, 12, stream);
        CHECK(t.all_ok());
        for (const auto& a : t.terms) CHECK(o.is_reflexive(a));
        // Cauchy tail and distance to the order interval [f, g] within the skeleton.
        for (std::size_t n = 1; n < t.terms.size(); ++n) {
            for (std::size_t m = n; m < t.terms.size(); ++m) {
                Rational tail = 0;
                for (std::size_t k = n; k < m; ++k) tail += power_of_half(k);
                CHECK(sup_norm(t.terms[m] - t.terms[n]) <= tail);
            }
            auto w = join(t.terms[n], o.witness(f));
            CHECK(o.is_reflexive(w));
            CHECK(pointwise_leq(f, w));
            CHECK(pointwise_leq(w, g));
            CHECK(sup_norm(w - t.terms[n]) <= power_of_half(n));
        }
    }
}

TEST_CASE("closedness of proximity and skeleton agree") {
    for (const auto& p : enumerate_posets_up_to(3)) {
        auto r = closed_iff_skeleton_closed(SubalgebraPartition::discrete(p.carrier()),
                                            ProximityOracle::from_skeleton(SbalSkeleton::monotone(p)));
        CHECK(r.prox_closed);
        CHECK(r.skeleton_closed);
        CHECK(r.agree);
    }
    Carrier xy({"x", "y"});
    auto r2 = closed_iff_skeleton_closed(SubalgebraPartition::discrete(xy), ProximityOracle::r2());
    CHECK((r2.prox_closed && r2.skeleton_closed && r2.agree));
    auto consts = closed_iff_skeleton_closed(SubalgebraPartition::discrete(xy),
                                             ProximityOracle::from_skeleton(SbalSkeleton::constants(xy)));
    CHECK((consts.prox_closed && consts.skeleton_closed && consts.agree));
}
