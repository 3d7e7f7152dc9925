#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "spectrum.hpp"

namespace nachbin {

/// One member a_{r,y} of the approximating family: r in the grid, y with f(y) < r.
struct FamilyMember {
    Rational r;
    std::size_t y = 0;
    RationalFn a;
};

struct SWCertificate {
    RationalFn a;
    Rational epsilon;
    Rational s; // max f
    Rational t; // min f
    std::vector<FamilyMember> family;
    std::vector<std::size_t> cover; // indices into family whose meet is a
    std::size_t family_size() const noexcept { return family.size(); }
};

namespace detail {

/// Least value of the grid {attained values of f} U {t + k eps/2 : k >= 1} U {s} strictly above v.
inline Rational next_grid_value(const RationalFn& f, const Rational& v, const Rational& t, const Rational& s,
                                const Rational& epsilon) {
    Rational best = s;
    for (const auto& w : f.values())
        if (w > v && w < best) best = w;
    Rational half = epsilon / 2;
    mpz_class k(Rational((v - t) / half)); // truncates; v >= t
    Rational step = t + Rational(k + 1) * half;
    if (step > v && step < best) best = step;
    return best;
}

} // namespace detail

/// Approximates a monotone f within epsilon by a meet of functions r + (s - r)(b_y ^ 1).
/// For y with f(y) < r the separating witnesses c_x (x in F_r = {f >= r}) are all the canonical
/// witness c*_y, so b_y = 2 c*_y and a_{r,y} takes value r on the down-set of y and s elsewhere.
/// Each point x below the maximum contributes a_{r',x} with r' the next grid value above f(x);
/// a greedy cover of X by {z : a(z) <= f(z) + eps} selects the members to meet.
inline SWCertificate sw_approximate(const RationalFn& f, const SbalSkeleton& skeleton, const Rational& epsilon) {
    require_same_carrier(f.carrier(), skeleton.carrier());
    if (epsilon <= 0) throw non_positive_epsilon();
    if (!skeleton.contains(f)) throw not_monotone();

    SWCertificate cert{f, epsilon, 0, 0, {}, {}};
    if (f.size() == 0 || f.is_constant()) {
        if (f.size() != 0) cert.s = cert.t = f[0];
        return cert;
    }
    cert.s = f.max();
    cert.t = f.min();
    const auto& q = skeleton.order();
    const std::size_t n = f.size();

    for (std::size_t y = 0; y < n; ++y) {
        if (f[y] == cert.s) continue;
        Rational r = detail::next_grid_value(f, f[y], cert.t, cert.s, epsilon);
        auto cover_join = canonical_witness(q, y); // c_x for every x in F_r
        auto b = Rational(2) * cover_join;
        auto a = (cert.s - r) * meet(b, Rational(1)) + r;
        cert.family.push_back({r, y, std::move(a)});
    }

    std::vector<bool> covered(n, false);
    for (std::size_t x = 0; x < n; ++x)
        if (f[x] == cert.s) covered[x] = true;
    auto within = [&](const RationalFn& a, std::size_t z) { return a[z] <= f[z] + epsilon; };
    while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t i = 0; i < cert.family.size(); ++i) {
            std::size_t gain = 0;
            for (std::size_t z = 0; z < n; ++z)
                if (!covered[z] && within(cert.family[i].a, z)) ++gain;
            if (gain > best_gain) {
                best = i;
                best_gain = gain;
            }
        }
        if (best_gain == 0) throw no_approximant_within_tolerance();
        cert.cover.push_back(best);
        for (std::size_t z = 0; z < n; ++z)
            if (within(cert.family[best].a, z)) covered[z] = true;
    }
    // Points at the maximum are within tolerance of every member, so one member always suffices there.
    if (cert.cover.empty()) cert.cover.push_back(0);
    cert.a = cert.family[cert.cover.front()].a;
    for (auto i : cert.cover) cert.a = meet(cert.a, cert.family[i].a);
    return cert;
}

/// Approximant pairs (f_n, g_n) with f_n < g_n converging to (f, g); indexed from n = 1.
using ApproximantStream = std::function<std::pair<RationalFn, RationalFn>(std::uint64_t)>;

inline ApproximantStream constant_stream(RationalFn f, RationalFn g) {
    return [f = std::move(f), g = std::move(g)](std::uint64_t) { return std::make_pair(f, g); };
}

/// (f - 1/n, g + 1/n)
inline ApproximantStream perturbed_stream(RationalFn f, RationalFn g) {
    return [f = std::move(f), g = std::move(g)](std::uint64_t n) {
        Rational d(1, static_cast<unsigned long>(n));
        return std::make_pair(f - d, g + d);
    };
}

constexpr std::uint64_t default_search_cap = std::uint64_t{1} << 40;

/// Some a in R(A, <) with f - r <= a <= g: the first p in 1, 2, 4, ... with both approximants within
/// r/2 of (f, g) and f_p < g_p gives a = witness(f_p) - r/2.
inline RationalFn dieudonne_claim(const RationalFn& f, const RationalFn& g, const ProximityOracle& oracle,
                                  const Rational& r, const ApproximantStream& stream,
                                  std::uint64_t cap = default_search_cap) {
    require_same_carrier(f.carrier(), oracle.carrier());
    require_same_carrier(g.carrier(), oracle.carrier());
    if (r <= 0) throw non_positive_epsilon();
    const Rational half = r / 2;
    for (std::uint64_t p = 1; p != 0 && p <= cap; p *= 2) {
        auto [fp, gp] = stream(p);
        if (sup_norm(f - fp) > half || sup_norm(g - gp) > half) continue;
        if (!oracle.decide(fp, gp)) continue;
        return oracle.witness(fp) - half;
    }
    throw no_approximant_within_tolerance();
}

inline RationalFn dieudonne_claim(const RationalFn& f, const RationalFn& g, const ProximityOracle& oracle,
                                  const Rational& r) {
    return dieudonne_claim(f, g, oracle, r, constant_stream(f, g));
}

struct DieudonneStep {
    bool lower_ok = false; // f - 1/2^n <= a_n
    bool upper_ok = false; // a_n <= g
    bool step_ok = false;  // a_{n-1} - 1/2^{n-1} <= a_n <= a_{n-1} + 1/2^{n-1}
    bool norm_ok = false;  // ||a_n - a_{n-1}|| <= 1/2^{n-1}
    bool ok() const noexcept { return lower_ok && upper_ok && step_ok && norm_ok; }
};

struct DieudonneTrace {
    std::vector<RationalFn> terms;   // a_0 .. a_N
    std::vector<DieudonneStep> steps; // steps[n - 1] certifies a_n
    RationalFn limit_witness;         // upper envelope of f, met with g

    bool all_ok() const {
        for (const auto& s : steps)
            if (!s.ok()) return false;
        return true;
    }
};

inline Rational power_of_half(std::size_t n) {
    mpz_class den = 1;
    den <<= static_cast<mp_bitcnt_t>(n);
    return Rational(mpz_class(1), den);
}

/// a_1 from the claim with r = 1/2, then a_{m+1} from the claim applied to
/// (f v (a_m - 1/2^{m+1}), g ^ (a_m + 1/2^m)) with r = 1/2^{m+1}; a_0 = a_1.
inline DieudonneTrace dieudonne_sequence(const RationalFn& f, const RationalFn& g, const ProximityOracle& oracle,
                                         std::size_t steps, const ApproximantStream& stream) {
    DieudonneTrace trace;
    auto a1 = dieudonne_claim(f, g, oracle, power_of_half(1), stream);
    trace.terms = {a1, a1};
    for (std::size_t m = 1; m < steps; ++m) {
        const auto& am = trace.terms.back();
        auto lo = am - power_of_half(m + 1);
        auto hi = am + power_of_half(m);
        ApproximantStream derived = [&stream, lo, hi](std::uint64_t n) {
            auto [fn, gn] = stream(n);
            return std::make_pair(join(fn, lo), meet(gn, hi));
        };
        auto next = dieudonne_claim(join(f, lo), meet(g, hi), oracle, power_of_half(m + 1), derived);
        trace.terms.push_back(std::move(next));
    }
    for (std::size_t n = 1; n < trace.terms.size(); ++n) {
        const auto& an = trace.terms[n];
        const auto& prev = trace.terms[n - 1];
        Rational bound = power_of_half(n - 1);
        DieudonneStep s;
        s.lower_ok = pointwise_leq(f - power_of_half(n), an);
        s.upper_ok = pointwise_leq(an, g);
        s.step_ok = pointwise_leq(prev - bound, an) && pointwise_leq(an, prev + bound);
        s.norm_ok = sup_norm(an - prev) <= bound;
        trace.steps.push_back(s);
    }
    trace.limit_witness = meet(oracle.witness(f), g);
    return trace;
}

inline DieudonneTrace dieudonne_sequence(const RationalFn& f, const RationalFn& g, const ProximityOracle& oracle,
                                         std::size_t steps) {
    return dieudonne_sequence(f, g, oracle, steps, constant_stream(f, g));
}

struct ClosednessReport {
    bool prox_closed = true;
    bool skeleton_closed = true;
    bool agree = true;
    std::size_t checked = 0;
};

/// Both sides are closed because they are cut out by weak inequalities. Certified on samples from A:
/// a non-proximal pair (a, b) has gap max(witness(a) - b) > 0 and every pair within a third of the gap
/// stays non-proximal; a non-reflexive a sits at positive distance from R(A, <).
inline ClosednessReport closed_iff_skeleton_closed(const SubalgebraPartition& algebra, const ProximityOracle& oracle,
                                                   std::size_t samples = 256, std::uint64_t seed = 0) {
    require_same_carrier(algebra.carrier(), oracle.carrier());
    ClosednessReport out;
    SplitMix64 rng(seed);
    auto in_algebra = [&] {
        auto f = sample_function(algebra.carrier(), rng);
        for (const auto& block : algebra.blocks())
            for (auto i : block) f[i] = f[block.front()];
        return f;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = in_algebra();
        auto b = in_algebra();
        ++out.checked;
        if (!oracle.decide(a, b)) {
            Rational gap = (oracle.witness(a) - b).max();
            if (gap <= 0) out.prox_closed = false;
            Rational nudge = gap / 3;
            if (oracle.decide(a - nudge, b + nudge)) out.prox_closed = false;
        }
        if (!oracle.is_reflexive(a)) {
            // Distance to the skeleton: half the largest order violation.
            Rational gap = (oracle.witness(a) - oracle.lower_witness(a)).max() / 2;
            if (gap <= 0) out.skeleton_closed = false;
        }
    }
    out.agree = out.prox_closed == out.skeleton_closed;
    return out;
}

} // namespace nachbin
