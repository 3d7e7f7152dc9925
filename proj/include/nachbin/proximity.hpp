#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "sbal.hpp"

namespace nachbin {

/// (a1, a2) < (b1, b2) iff some real r has a1, a2 <= r <= b1, b2, i.e. max(a) <= min(b).
inline bool r2_decide(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
    const Rational& hi = a.first < a.second ? a.second : a.first;
    const Rational& lo = b.first < b.second ? b.first : b.second;
    return hi <= lo;
}

enum class OracleKind { skeleton, r2 };

/// A decision procedure for a proximity on R^X.
///
/// `skeleton` decides a <_S b iff some s in S has a <= s <= b, using the upper monotone
/// envelope of a as the canonical s. `r2` is the two-point proximity whose reflexive
/// elements are the diagonal; it is decided by its closed form, independently of any envelope.
class ProximityOracle {
public:
    static ProximityOracle from_skeleton(SbalSkeleton s) { return ProximityOracle(OracleKind::skeleton, std::move(s)); }

    static ProximityOracle r2() {
        return ProximityOracle(OracleKind::r2, SbalSkeleton::constants(Carrier({"x", "y"})));
    }

    OracleKind kind() const noexcept { return kind_; }
    const Carrier& carrier() const noexcept { return skeleton_.carrier(); }

    /// The skeleton R(A, <); for r2 this is the constants on {x, y}.
    const SbalSkeleton& skeleton() const noexcept { return skeleton_; }

    bool decide(const RationalFn& a, const RationalFn& b) const {
        require_same_carrier(a.carrier(), carrier());
        require_same_carrier(b.carrier(), carrier());
        if (kind_ == OracleKind::r2) return r2_decide({a[0], a[1]}, {b[0], b[1]});
        return pointwise_leq(skeleton_.upper_envelope(a), b);
    }

    /// Least reflexive element above a.
    RationalFn witness(const RationalFn& a) const {
        require_same_carrier(a.carrier(), carrier());
        if (kind_ == OracleKind::r2) return RationalFn::constant(carrier(), a.max());
        return skeleton_.upper_envelope(a);
    }

    /// Greatest reflexive element below b.
    RationalFn lower_witness(const RationalFn& b) const {
        require_same_carrier(b.carrier(), carrier());
        if (kind_ == OracleKind::r2) return RationalFn::constant(carrier(), b.min());
        return skeleton_.lower_envelope(b);
    }

    bool is_reflexive(const RationalFn& a) const {
        require_same_carrier(a.carrier(), carrier());
        if (kind_ == OracleKind::r2) return a[0] == a[1];
        return skeleton_.contains(a);
    }

private:
    ProximityOracle(OracleKind kind, SbalSkeleton s) : kind_(kind), skeleton_(std::move(s)) {}

    OracleKind kind_;
    SbalSkeleton skeleton_;
};

struct ProximityDecision {
    bool holds = false;
    std::optional<RationalFn> witness; // reflexive s with a <= s <= b when holds
};

inline ProximityDecision prox_decide(const ProximityOracle& oracle, const RationalFn& a, const RationalFn& b) {
    if (!oracle.decide(a, b)) return {false, std::nullopt};
    return {true, oracle.witness(a)};
}

namespace detail {

inline Counterexample named(std::initializer_list<std::pair<const char*, const RationalFn*>> fs,
                            std::initializer_list<std::pair<const char*, const Rational*>> rs = {}) {
    Counterexample ce;
    for (auto [name, f] : fs) ce.functions.emplace_back(name, *f);
    for (auto [name, r] : rs) ce.scalars.emplace_back(name, *r);
    return ce;
}

/// Indicator of the principal up-set of y: 1 on {z : y <= z}, 0 elsewhere.
inline RationalFn upset_indicator(const QuasiOrder& q, std::size_t y) {
    std::vector<Rational> v(q.size());
    for (std::size_t z = 0; z < q.size(); ++z) v[z] = q.leq(y, z) ? 1 : 0;
    return RationalFn(q.carrier(), std::move(v));
}

} // namespace detail

/// Samples P1-P9 and RP5 (and, with `include_devries`, P11 and P12) for an oracle.
/// Hypotheses are produced constructively around sampled reflexive elements so that the
/// implications are exercised; a quarter of the draws are unconstrained.
/// Existential axioms (P5, RP5, P12) are certified with explicit witnesses.
inline AxiomReport check_axioms(const ProximityOracle& oracle, std::size_t samples, std::uint64_t seed,
                                bool include_devries) {
    const Carrier& carrier = oracle.carrier();
    SplitMix64 rng(seed);
    auto random_fn = [&] { return sample_function(carrier, rng); };
    auto member = [&] { return oracle.witness(random_fn()); };
    auto below = [&](const RationalFn& s) { return rng.coin(4) ? s : s - sample_nonnegative(carrier, rng); };
    auto above = [&](const RationalFn& s) { return rng.coin(4) ? s : s + sample_nonnegative(carrier, rng); };
    auto constrained = [&] { return !rng.coin(4); };
    auto prox = [&](const RationalFn& a, const RationalFn& b) { return oracle.decide(a, b); };
    const RationalFn zero = RationalFn::zero(carrier);

    CheckResult p1{"P1"}, p2{"P2"}, p3{"P3"}, p4{"P4"}, p5{"P5"}, p6{"P6"}, p7{"P7"}, p8{"P8"}, p9{"P9"},
        rp5{"RP5"}, p11{"P11"}, p12{"P12"};

    if (include_devries && oracle.kind() == OracleKind::skeleton) {
        // Reflexive probes a = b = indicator of a principal up-set.
        for (std::size_t y = 0; y < carrier.size(); ++y) {
            auto c = detail::upset_indicator(oracle.skeleton().order(), y);
            auto nb = -c;
            detail::record(p11, prox(c, c), prox(nb, nb), [&] { return detail::named({{"a", &c}, {"b", &c}}); });
        }
    }

    for (std::size_t i = 0; i < samples; ++i) {
        // P1: a < b implies a <= b
        {
            RationalFn a, b;
            if (constrained()) {
                auto s = member();
                a = below(s);
                b = above(s);
            } else {
                a = random_fn();
                b = random_fn();
            }
            detail::record(p1, prox(a, b), pointwise_leq(a, b), [&] { return detail::named({{"a", &a}, {"b", &b}}); });
        }
        // P2: a <= b < c <= d implies a < d
        {
            RationalFn b, c;
            if (constrained()) {
                auto s = member();
                b = below(s);
                c = above(s);
            } else {
                b = random_fn();
                c = random_fn();
            }
            auto a = b - sample_nonnegative(carrier, rng);
            auto d = c + sample_nonnegative(carrier, rng);
            detail::record(p2, pointwise_leq(a, b) && prox(b, c) && pointwise_leq(c, d), prox(a, d),
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}); });
        }
        // P3: a < b and a < c imply a < b ^ c
        {
            auto a = random_fn();
            RationalFn b, c;
            if (constrained()) {
                auto s = oracle.witness(a);
                b = above(s);
                c = above(join(s, member()));
            } else {
                b = random_fn();
                c = random_fn();
            }
            auto bc = meet(b, c);
            detail::record(p3, prox(a, b) && prox(a, c), prox(a, bc),
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}}); });
        }
        // P4: a < c and b < c imply a v b < c
        {
            RationalFn a, b, c;
            if (constrained()) {
                auto s = member();
                auto t = member();
                a = below(s);
                b = below(t);
                c = above(join(s, t));
            } else {
                a = random_fn();
                b = random_fn();
                c = random_fn();
            }
            auto ab = join(a, b);
            detail::record(p4, prox(a, c) && prox(b, c), prox(ab, c),
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}}); });
        }
        // P5 / RP5: a < b implies a < c < b for the reflexive c = witness(a)
        {
            RationalFn a, b;
            if (constrained()) {
                auto s = member();
                a = below(s);
                b = above(s);
            } else {
                a = random_fn();
                b = random_fn();
            }
            bool hyp = prox(a, b);
            auto c = oracle.witness(a);
            bool interpolates = prox(a, c) && prox(c, b);
            detail::record(p5, hyp, interpolates,
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}}); });
            detail::record(rp5, hyp, interpolates && prox(c, c),
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}}); });
        }
        // P6: a < b and c < d imply a + c < b + d
        {
            RationalFn a, b, c, d;
            if (constrained()) {
                auto s = member();
                auto t = member();
                a = below(s);
                b = above(s);
                c = below(t);
                d = above(t);
            } else {
                a = random_fn();
                b = random_fn();
                c = random_fn();
                d = random_fn();
            }
            auto ac = a + c;
            auto bd = b + d;
            detail::record(p6, prox(a, b) && prox(c, d), prox(ac, bd),
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}); });
        }
        // P7: 0 <= a, b, c, d with a < b and c < d imply ac < bd
        {
            auto lift = [&](RationalFn s) {
                Rational low = s.min();
                return low < 0 ? s - low : s;
            };
            RationalFn a, b, c, d;
            if (constrained()) {
                auto s = lift(member());
                auto t = lift(member());
                a = join(below(s), Rational(0));
                b = above(s);
                c = join(below(t), Rational(0));
                d = above(t);
            } else {
                a = sample_nonnegative(carrier, rng);
                b = sample_nonnegative(carrier, rng);
                c = sample_nonnegative(carrier, rng);
                d = sample_nonnegative(carrier, rng);
            }
            bool hyp = is_nonnegative(a) && is_nonnegative(b) && is_nonnegative(c) && is_nonnegative(d) &&
                       prox(a, b) && prox(c, d);
            auto ac = a * c;
            auto bd = b * d;
            detail::record(p7, hyp, prox(ac, bd),
                           [&] { return detail::named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}); });
        }
        // P8: r < r for constants
        {
            auto r = RationalFn::constant(carrier, sample_coordinate(rng));
            detail::record(p8, true, prox(r, r), [&] { return detail::named({{"r", &r}}); });
        }
        // P9: a < b and r >= 0 imply ra < rb
        {
            RationalFn a, b;
            if (constrained()) {
                auto s = member();
                a = below(s);
                b = above(s);
            } else {
                a = random_fn();
                b = random_fn();
            }
            Rational r = sample_nonnegative_scalar(rng);
            auto ra = r * a;
            auto rb = r * b;
            detail::record(p9, prox(a, b), prox(ra, rb),
                           [&] { return detail::named({{"a", &a}, {"b", &b}}, {{"r", &r}}); });
        }
        if (include_devries) {
            // P11: a < b implies -b < -a
            {
                RationalFn a, b;
                if (constrained()) {
                    auto s = member();
                    a = below(s);
                    b = above(s);
                } else {
                    a = random_fn();
                    b = random_fn();
                }
                auto nb = -b;
                auto na = -a;
                detail::record(p11, prox(a, b), prox(nb, na), [&] { return detail::named({{"a", &a}, {"b", &b}}); });
            }
            // P12: 0 < b implies 0 < a < b for some a. The greatest candidate is
            // lower_witness(b) v 0, so the existential is decided exactly.
            {
                auto b = sample_nonnegative(carrier, rng);
                bool hyp = !(b == zero);
                auto a = join(oracle.lower_witness(b), Rational(0));
                bool ok = !(a == zero) && prox(a, b);
                detail::record(p12, hyp, ok, [&] { return detail::named({{"b", &b}}); });
            }
        }
    }

    AxiomReport report;
    for (auto* r : {&p1, &p2, &p3, &p4, &p5, &p6, &p7, &p8, &p9, &rp5}) report.add(std::move(*r));
    if (include_devries) {
        report.add(std::move(p11));
        report.add(std::move(p12));
    }
    return report;
}

inline const std::vector<std::string>& basic_axiom_names() {
    static const std::vector<std::string> names{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "RP5"};
    return names;
}

/// B R(A, <) is dense in A. At finite scale: the reflexive elements lying in A separate
/// exactly the points A separates.
inline bool is_nachbin(const SubalgebraPartition& algebra, const ProximityOracle& oracle) {
    require_same_carrier(algebra.carrier(), oracle.carrier());
    auto restricted = restrict_skeleton(oracle.skeleton(), algebra);
    return concrete_envelope(restricted) == algebra;
}

} // namespace nachbin
