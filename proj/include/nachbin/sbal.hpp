#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "order.hpp"
#include "random.hpp"
#include "report.hpp"

namespace nachbin {

/// The sbal-algebra of functions monotone with respect to a quasi-order on a finite carrier.
/// Membership is intensional: the cone itself is infinite.
class SbalSkeleton {
public:
    SbalSkeleton() = default;
    explicit SbalSkeleton(QuasiOrder order) : order_(std::move(order)) {}

    static SbalSkeleton monotone(const FinitePoset& poset) { return SbalSkeleton(poset.order()); }
    static SbalSkeleton constants(const Carrier& carrier) { return SbalSkeleton(QuasiOrder::indiscrete(carrier)); }
    static SbalSkeleton full(const Carrier& carrier) { return SbalSkeleton(QuasiOrder::discrete(carrier)); }

    /// x <= y iff g(x) <= g(y) for every generator g.
    static SbalSkeleton from_generators(const Carrier& carrier, std::span<const RationalFn> generators) {
        for (const auto& g : generators) require_same_carrier(carrier, g.carrier());
        std::vector<QuasiOrder::Pair> pairs;
        for (std::size_t x = 0; x < carrier.size(); ++x)
            for (std::size_t y = 0; y < carrier.size(); ++y) {
                bool below = true;
                for (const auto& g : generators)
                    if (g[x] > g[y]) below = false;
                if (below) pairs.emplace_back(x, y);
            }
        return SbalSkeleton(QuasiOrder::closure(carrier, pairs));
    }

    const QuasiOrder& order() const noexcept { return order_; }
    const Carrier& carrier() const noexcept { return order_.carrier(); }

    bool contains(const RationalFn& f) const { return is_monotone(f, order_); }

    /// Least member above f.
    RationalFn upper_envelope(const RationalFn& f) const { return monotone_envelope(f, order_, Direction::upper); }
    /// Greatest member below f.
    RationalFn lower_envelope(const RationalFn& f) const { return monotone_envelope(f, order_, Direction::lower); }

    RationalFn sample_member(SplitMix64& rng) const { return upper_envelope(sample_function(carrier(), rng)); }
    RationalFn sample_nonnegative_member(SplitMix64& rng) const {
        return upper_envelope(sample_nonnegative(carrier(), rng));
    }

private:
    QuasiOrder order_;
};

/// The members of S that also lie in the algebra A, presented again as a monotone cone:
/// its quasi-order is S's order joined with A's block equivalence.
inline SbalSkeleton restrict_skeleton(const SbalSkeleton& s, const SubalgebraPartition& algebra) {
    require_same_carrier(s.carrier(), algebra.carrier());
    auto pairs = s.order().relation_pairs();
    for (const auto& block : algebra.blocks())
        for (auto x : block)
            for (auto y : block)
                if (x != y) pairs.emplace_back(x, y);
    return SbalSkeleton(QuasiOrder::closure(s.carrier(), pairs));
}

/// [a, b] in the bal-envelope, the class of (a, b) under (a, b) ~ (c, d) iff a + d = b + c.
struct EnvelopePair {
    RationalFn a;
    RationalFn b;
};

inline bool envelope_equivalent(const EnvelopePair& p, const EnvelopePair& q) { return p.a + q.b == p.b + q.a; }

/// [a, b] <= [c, d] iff a + d <= c + b
inline bool envelope_leq(const EnvelopePair& p, const EnvelopePair& q) { return pointwise_leq(p.a + q.b, q.a + p.b); }

inline EnvelopePair envelope_add(const EnvelopePair& p, const EnvelopePair& q) { return {p.a + q.a, p.b + q.b}; }

/// Shifts both coordinates by the same constant so that they are nonnegative: [a, b] = [a + r, b + r].
inline EnvelopePair normalize_nonnegative(const EnvelopePair& p) {
    Rational shift(0);
    if (p.a.size() != 0) {
        Rational low = p.a.min() < p.b.min() ? p.a.min() : p.b.min();
        if (low < 0) shift = -low;
    }
    return {p.a + shift, p.b + shift};
}

/// [a, b] . [c, d] = [ac + bd, ad + bc] on nonnegative representatives.
inline EnvelopePair envelope_mul(const EnvelopePair& p, const EnvelopePair& q) {
    auto x = normalize_nonnegative(p);
    auto y = normalize_nonnegative(q);
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
}

/// [a, b] v [c, d] = [(a + d) v (b + c), b + d]
inline EnvelopePair envelope_join(const EnvelopePair& p, const EnvelopePair& q) {
    return {join(p.a + q.b, p.b + q.a), p.b + q.b};
}

/// [a, b] ^ [c, d] = [(a + d) ^ (b + c), b + d]
inline EnvelopePair envelope_meet(const EnvelopePair& p, const EnvelopePair& q) {
    return {meet(p.a + q.b, p.b + q.a), p.b + q.b};
}

/// r[a, b] = [ra, rb] for r >= 0 and -r[a, b] = r[b, a].
inline EnvelopePair envelope_scale(const Rational& r, const EnvelopePair& p) {
    if (r >= 0) return {r * p.a, r * p.b};
    Rational m = -r;
    return {m * p.b, m * p.a};
}

inline EnvelopePair epsilon_embed(const SbalSkeleton& s, const RationalFn& a) {
    if (!s.contains(a)) throw not_in_skeleton();
    return {a, RationalFn::zero(a.carrier())};
}

/// The unique bal-morphism extending alpha along epsilon: beta[a, b] = alpha(a) - alpha(b).
template <class Alpha>
RationalFn envelope_umt(const Alpha& alpha, const EnvelopePair& p) {
    return alpha(p.a) - alpha(p.b);
}

/// The unital l-algebra morphism R^X -> R^Y, f |-> f o map, for map : Y -> X.
/// At finite scale every unital l-algebra morphism between function algebras has this form.
class PointMapMorphism {
public:
    PointMapMorphism(Carrier source, Carrier target, std::vector<std::size_t> map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
        if (map_.size() != target_.size()) throw carrier_mismatch("point map has wrong length");
        for (auto i : map_)
            if (i >= source_.size()) throw carrier_mismatch("point map leaves the source carrier");
    }

    /// Evaluation at one point, as a morphism into R = R^{point}.
    static PointMapMorphism evaluation(const Carrier& source, std::size_t point) {
        return PointMapMorphism(source, Carrier({source.label(point)}), {point});
    }

    static PointMapMorphism identity(const Carrier& carrier) {
        std::vector<std::size_t> map(carrier.size());
        for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
        return PointMapMorphism(carrier, carrier, std::move(map));
    }

    const Carrier& source() const noexcept { return source_; }
    const Carrier& target() const noexcept { return target_; }
    const std::vector<std::size_t>& map() const noexcept { return map_; }

    RationalFn operator()(const RationalFn& f) const {
        require_same_carrier(source_, f.carrier());
        std::vector<Rational> out;
        out.reserve(map_.size());
        for (auto i : map_) out.push_back(f[i]);
        return RationalFn(target_, std::move(out));
    }

private:
    Carrier source_;
    Carrier target_;
    std::vector<std::size_t> map_;
};

/// Checks the sbal-morphism laws of alpha on sampled members of S; throws not_a_morphism.
template <class Alpha>
void verify_sbal_morphism(const SbalSkeleton& s, const Alpha& alpha, std::size_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = s.sample_member(rng);
        auto b = s.sample_member(rng);
        auto pa = s.sample_nonnegative_member(rng);
        auto pb = s.sample_nonnegative_member(rng);
        Rational r = sample_nonnegative_scalar(rng);
        Rational c = sample_coordinate(rng);
        if (!(alpha(a + b) == alpha(a) + alpha(b))) throw not_a_morphism("addition");
        if (!(alpha(join(a, b)) == join(alpha(a), alpha(b)))) throw not_a_morphism("join");
        if (!(alpha(meet(a, b)) == meet(alpha(a), alpha(b)))) throw not_a_morphism("meet");
        if (!(alpha(pa * pb) == alpha(pa) * alpha(pb))) throw not_a_morphism("product of positives");
        if (!(alpha(r * a) == r * alpha(a))) throw not_a_morphism("scalar action");
        auto image = alpha(RationalFn::constant(s.carrier(), c));
        if (!(image == RationalFn::constant(image.carrier(), c))) throw not_a_morphism("unit");
    }
}

/// beta for a sampled-verified alpha.
template <class Alpha>
class EnvelopeExtension {
public:
    EnvelopeExtension(const SbalSkeleton& s, Alpha alpha, std::size_t samples = 64, std::uint64_t seed = 0)
        : alpha_(std::move(alpha)) {
        verify_sbal_morphism(s, alpha_, samples, seed);
    }

    RationalFn operator()(const EnvelopePair& p) const { return envelope_umt(alpha_, p); }

private:
    Alpha alpha_;
};

struct DifferenceDecomposition {
    RationalFn f;
    RationalFn g;
};

/// Writes h = f - g with f, g in S. Possible iff h is constant on the equivalence classes of S's
/// quasi-order; g = M * rank(block) for a linear extension of the block poset, M = spread(h) + 1.
inline DifferenceDecomposition difference_decompose(const RationalFn& h, const SbalSkeleton& s) {
    require_same_carrier(h.carrier(), s.carrier());
    const auto& q = s.order();
    for (std::size_t x = 0; x < q.size(); ++x)
        for (std::size_t y = x + 1; y < q.size(); ++y)
            if (q.equivalent(x, y) && h[x] != h[y]) throw not_representable(q.carrier().label(x), q.carrier().label(y));
    if (s.contains(h)) return {h, RationalFn::zero(h.carrier())};

    auto blocks = antisymmetrize(q);
    auto rank = linear_extension(blocks.blocks);
    Rational m = h.max() - h.min() + 1;
    std::vector<Rational> g(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) g[x] = m * Rational(static_cast<long>(rank[blocks.projection[x]]));
    RationalFn gf(h.carrier(), std::move(g));
    return {h + gf, gf};
}

/// The closure of the envelope inside R^X: functions constant on the equivalence classes.
inline SubalgebraPartition concrete_envelope(const SbalSkeleton& s) {
    auto blocks = antisymmetrize(s.order());
    return SubalgebraPartition(s.carrier(), blocks.projection);
}

/// Samples the sbal axioms (l-monoid, semialgebra, bounded, archimedean) on members of S.
inline AxiomReport check_skeleton_axioms(const SbalSkeleton& s, std::size_t samples, std::uint64_t seed) {
    AxiomReport report;
    CheckResult s1{"S1"}, s2{"S2"}, s3{"S3"}, s4{"S4"}, s5{"S5"}, s6{"S6"}, s7{"S7"}, s8{"S8"}, s9{"S9"};
    const Carrier& carrier = s.carrier();
    const RationalFn one = RationalFn::constant(carrier, Rational(1));
    SplitMix64 rng(seed);

    for (std::size_t i = 0; i < samples; ++i) {
        auto a = s.sample_member(rng);
        auto b = s.sample_member(rng);
        auto c = s.sample_member(rng);
        auto d = s.sample_member(rng);
        auto pa = s.sample_nonnegative_member(rng);
        auto pb = s.sample_nonnegative_member(rng);
        auto pc = s.sample_nonnegative_member(rng);
        auto cx = [&](std::initializer_list<std::pair<const char*, const RationalFn*>> fs) {
            Counterexample ce;
            for (auto [name, f] : fs) ce.functions.emplace_back(name, *f);
            return ce;
        };

        // S1 with closure under +
        if (rng.coin(2)) b = join(a, b);
        detail::record(s1, true,
                       s.contains(a + c) && pointwise_leq(a, b) == pointwise_leq(a + c, b + c),
                       [&] { return cx({{"a", &a}, {"b", &b}, {"c", &c}}); });
        detail::record(s2, true, s.contains(join(a, b)) && join(a, b) + c == join(a + c, b + c),
                       [&] { return cx({{"a", &a}, {"b", &b}, {"c", &c}}); });
        detail::record(s3, true, s.contains(meet(a, b)) && meet(a, b) + c == meet(a + c, b + c),
                       [&] { return cx({{"a", &a}, {"b", &b}, {"c", &c}}); });
        detail::record(s4, true,
                       s.contains(pa * pb) && is_nonnegative(pa * pb) && pa * pb == pb * pa &&
                           (pa * pb) * pc == pa * (pb * pc) && one * pa == pa,
                       [&] { return cx({{"a", &pa}, {"b", &pb}, {"c", &pc}}); });
        detail::record(s5, true, pa * (pb + pc) == pa * pb + pa * pc,
                       [&] { return cx({{"a", &pa}, {"b", &pb}, {"c", &pc}}); });
        {
            auto upper = join(pa, pb); // 0 <= pa <= upper
            bool hyp = is_nonnegative(pa) && pointwise_leq(pa, upper) && is_nonnegative(pc);
            detail::record(s6, hyp, pointwise_leq(pa * pc, upper * pc),
                           [&] { return cx({{"a", &pa}, {"b", &upper}, {"c", &pc}}); });
        }
        {
            Rational r = sample_coordinate(rng);
            Rational t = sample_coordinate(rng);
            auto rho = [&](const Rational& v) { return RationalFn::constant(carrier, v); };
            bool ok = s.contains(rho(r)) && rho(r + t) == rho(r) + rho(t) &&
                      rho(r < t ? t : r) == join(rho(r), rho(t)) && rho(r < t ? r : t) == meet(rho(r), rho(t)) &&
                      rho(r * t) == rho(r) * rho(t) && s.contains(rho(1)) && pointwise_leq(rho(0), rho(1));
            detail::record(s7, true, ok, [&] {
                Counterexample ce;
                ce.scalars = {{"r", r}, {"s", t}};
                return ce;
            });
        }
        {
            Rational bound = carrier.empty() ? Rational(0) : sup_norm(a);
            detail::record(s8, true,
                           pointwise_leq(RationalFn::constant(carrier, -bound), a) &&
                               pointwise_leq(a, RationalFn::constant(carrier, bound)),
                           [&] { return cx({{"a", &a}}); });
        }
        {
            // Force the hypothesis half the time: a9 <= c9 and b9 <= d9.
            RationalFn a9 = a, b9 = b, c9 = c, d9 = d;
            if (rng.coin(2)) {
                a9 = meet(c9, a);
                b9 = meet(d9, b);
            }
            // n*a + b <= n*c + d for every n >= 1 holds iff, pointwise, a - c <= 0 and a - c <= d - b.
            auto delta = a9 - c9;
            auto slack = d9 - b9;
            bool hyp = pointwise_leq(delta, RationalFn::zero(carrier)) && pointwise_leq(delta, slack);
            bool members = s.contains(a9) && s.contains(b9) && s.contains(c9) && s.contains(d9);
            detail::record(s9, hyp && members, pointwise_leq(a9, c9),
                           [&] { return cx({{"a", &a9}, {"b", &b9}, {"c", &c9}, {"d", &d9}}); });
        }
    }
    for (auto* r : {&s1, &s2, &s3, &s4, &s5, &s6, &s7, &s8, &s9}) report.add(std::move(*r));
    return report;
}

} // namespace nachbin
