#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "sbal.hpp"

namespace nachbin {

/// Nonnegative monotone functions for a quasi-order: the positive cone presentation.
class SbalPlusSkeleton {
public:
    SbalPlusSkeleton() = default;
    explicit SbalPlusSkeleton(QuasiOrder order) : order_(std::move(order)) {}

    const QuasiOrder& order() const noexcept { return order_; }
    const Carrier& carrier() const noexcept { return order_.carrier(); }

    bool contains(const RationalFn& f) const { return is_nonnegative(f) && is_monotone(f, order_); }

    /// For a member a and a constant 0 <= r <= a, the member b with a = b + r.
    RationalFn difference(const RationalFn& a, const Rational& r) const {
        if (!contains(a) || r < 0 || !pointwise_leq(RationalFn::constant(carrier(), r), a)) throw not_in_skeleton();
        return a - r;
    }

    RationalFn sample_member(SplitMix64& rng) const {
        return monotone_envelope(sample_nonnegative(carrier(), rng), order_, Direction::upper);
    }

private:
    QuasiOrder order_;
};

inline SbalPlusSkeleton positive_cone(const SbalSkeleton& s) { return SbalPlusSkeleton(s.order()); }

/// Q S = { a - r : a in S, r real }, presented again as the monotone cone of the same quasi-order.
inline SbalSkeleton q_envelope(const SbalPlusSkeleton& splus) { return SbalSkeleton(splus.order()); }

struct QDecomposition {
    RationalFn a; // member of S+
    Rational r;   // f = a - r
};

/// f = a - r with r = max(0, -min f); f lies in Q S iff this a lies in S+.
inline std::optional<QDecomposition> q_decompose(const SbalPlusSkeleton& splus, const RationalFn& f) {
    require_same_carrier(splus.carrier(), f.carrier());
    Rational r = 0;
    if (f.size() != 0 && f.min() < 0) r = -f.min();
    auto a = f + r;
    if (!splus.contains(a)) return std::nullopt;
    return QDecomposition{std::move(a), r};
}

inline bool q_contains(const SbalPlusSkeleton& splus, const RationalFn& f) { return q_decompose(splus, f).has_value(); }

/// r(a - s) = ra - rs for r >= 0, computed through the decomposition.
inline RationalFn q_scale(const SbalPlusSkeleton& splus, const Rational& r, const RationalFn& f) {
    auto d = q_decompose(splus, f);
    if (!d || r < 0) throw not_in_skeleton();
    return r * d->a - r * d->r;
}

namespace detail {

/// Calls visit on every function with values k/den, k in [lo, hi].
inline void for_each_grid_function(const Carrier& carrier, long lo, long hi, unsigned long den,
                                   const std::function<void(const RationalFn&)>& visit) {
    std::vector<long> k(carrier.size(), lo);
    while (true) {
        std::vector<Rational> v;
        v.reserve(k.size());
        for (auto ki : k) v.push_back(make_rational(ki, den));
        visit(RationalFn(carrier, std::move(v)));
        std::size_t i = 0;
        while (i < k.size() && k[i] == hi) k[i++] = lo;
        if (i == k.size()) return;
        ++k[i];
    }
}

} // namespace detail

/// Membership identity of QP(S) with S and of PQ(S+) with S+ on the grid k/4 in [-2, 2] per coordinate,
/// plus sampled checks of the difference axiom, eps[S+] = (Q S)+, the join/meet shift identities and
/// the extended scalar action.
inline AxiomReport roundtrip_pq(const SbalSkeleton& s, const SbalPlusSkeleton& splus, std::size_t samples,
                                std::uint64_t seed) {
    require_same_carrier(s.carrier(), splus.carrier());
    const Carrier& carrier = s.carrier();
    const auto p_of_s = positive_cone(s);
    const auto q_of_splus = q_envelope(splus);

    CheckResult qp{"QP"}, pq{"PQ"}, diff{"difference"}, eps{"epsilon-image"}, qjoin{"Q-join"}, qmeet{"Q-meet"},
        qscale{"Q-scale"};
    auto one = [](const char* name, const RationalFn& f) {
        Counterexample ce;
        ce.functions.emplace_back(name, f);
        return ce;
    };

    detail::for_each_grid_function(carrier, -8, 8, 4, [&](const RationalFn& f) {
        detail::record(qp, true, s.contains(f) == q_contains(p_of_s, f), [&] { return one("f", f); });
        bool in_pq = is_nonnegative(f) && q_of_splus.contains(f);
        detail::record(pq, true, splus.contains(f) == in_pq, [&] { return one("f", f); });
    });

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = splus.sample_member(rng);
        auto b = splus.sample_member(rng);
        Rational r = a.size() ? a.min() * make_rational(rng.uniform(0, 4), 4) : Rational(0);
        detail::record(diff, true, splus.contains(splus.difference(a, r)) && splus.difference(a, r) + r == a,
                       [&] { return Counterexample{{{"a", a}}, {{"r", r}}}; });

        auto c = q_of_splus.sample_member(rng);
        detail::record(eps, is_nonnegative(c), splus.contains(c), [&] { return one("c", c); });

        Rational r1 = sample_coordinate(rng), s1 = sample_coordinate(rng);
        auto lhs = join(a - r1, b - s1);
        auto rhs = join(a + s1, b + r1) - (r1 + s1);
        detail::record(qjoin, true, lhs == rhs && q_contains(splus, lhs),
                       [&] { return Counterexample{{{"a", a}, {"b", b}}, {{"r", r1}, {"s", s1}}}; });
        auto mlhs = meet(a - r1, b - s1);
        auto mrhs = meet(a + s1, b + r1) - (r1 + s1);
        detail::record(qmeet, true, mlhs == mrhs && q_contains(splus, mlhs),
                       [&] { return Counterexample{{{"a", a}, {"b", b}}, {{"r", r1}, {"s", s1}}}; });

        Rational t = sample_nonnegative_scalar(rng);
        auto f = a - r1;
        detail::record(qscale, true, q_scale(splus, t, f) == t * f,
                       [&] { return Counterexample{{{"f", f}}, {{"r", t}}}; });
    }

    AxiomReport report;
    for (auto* c : {&qp, &pq, &diff, &eps, &qjoin, &qmeet, &qscale}) report.add(std::move(*c));
    return report;
}

} // namespace nachbin
