#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "proximity.hpp"

namespace nachbin {

/// The maximal l-ideal of functions in A vanishing on one block of A's partition.
struct MaxIdeal {
    std::size_t block = 0;
    std::vector<std::size_t> points;
    std::string label;

    bool contains(const RationalFn& f) const {
        for (auto p : points)
            if (f[p] != 0) return false;
        return true;
    }
};

inline std::vector<MaxIdeal> spectrum(const SubalgebraPartition& algebra) {
    std::vector<MaxIdeal> out;
    const auto& carrier = algebra.carrier();
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        const auto& block = algebra.blocks()[b];
        std::string label = "M_";
        if (block.size() == 1) {
            label += carrier.label(block.front());
        } else {
            label += "{";
            for (std::size_t i = 0; i < block.size(); ++i) label += (i ? "," : "") + carrier.label(block[i]);
            label += "}";
        }
        out.push_back({b, block, std::move(label)});
    }
    return out;
}

inline Carrier spectrum_carrier(const SubalgebraPartition& algebra) {
    std::vector<std::string> labels;
    for (auto& ideal : spectrum(algebra)) labels.push_back(std::move(ideal.label));
    return Carrier(std::move(labels));
}

/// c*_y(z) = 0 if z <= y, else 1. Monotone, nonnegative, vanishing at y, and the largest
/// such function with values in [0, 1]; it decides the order on the spectrum.
inline RationalFn canonical_witness(const QuasiOrder& q, std::size_t y) {
    std::vector<Rational> v(q.size());
    for (std::size_t z = 0; z < q.size(); ++z) v[z] = q.leq(z, y) ? 0 : 1;
    return RationalFn(q.carrier(), std::move(v));
}

/// c*_y lies in the double-down-arrow of y but outside the ideal at x, so y's ideal is not below x's.
struct SeparationCertificate {
    std::size_t x = 0;
    std::size_t y = 0;
    RationalFn witness;
};

struct OrderedSpectrum {
    std::vector<MaxIdeal> points;
    QuasiOrder order;
    std::vector<SeparationCertificate> certificates;
};

/// Quasi-order on X whose monotone functions are exactly the reflexive elements of (A, <).
inline QuasiOrder reflexive_order(const SubalgebraPartition& algebra, const ProximityOracle& oracle) {
    require_same_carrier(algebra.carrier(), oracle.carrier());
    return restrict_skeleton(oracle.skeleton(), algebra).order();
}

inline OrderedSpectrum induced_order(const SubalgebraPartition& algebra, const ProximityOracle& oracle) {
    const QuasiOrder q = reflexive_order(algebra, oracle);
    OrderedSpectrum out;
    out.points = spectrum(algebra);
    Carrier labels = spectrum_carrier(algebra);
    std::vector<QuasiOrder::Pair> pairs;
    for (std::size_t x = 0; x < out.points.size(); ++x)
        for (std::size_t y = 0; y < out.points.size(); ++y) {
            auto c = canonical_witness(q, out.points[y].points.front());
            if (out.points[x].contains(c)) {
                if (x != y) pairs.emplace_back(x, y);
            } else {
                out.certificates.push_back({x, y, std::move(c)});
            }
        }
    out.order = QuasiOrder::closure(labels, pairs);
    return out;
}

/// f is in the double-down-arrow of the ideal at block y: |f| is dominated by a nonnegative
/// reflexive element vanishing at y. The least such dominator is the upper envelope of |f|.
inline bool thd_contains(const SubalgebraPartition& algebra, const ProximityOracle& oracle, std::size_t block,
                         const RationalFn& f) {
    if (!algebra.contains(f)) return false;
    auto q = reflexive_order(algebra, oracle);
    auto dominator = monotone_envelope(abs_value(f), q, Direction::upper);
    return dominator[algebra.blocks().at(block).front()] == 0;
}

/// phi_A(a)(M) = the value of a on M's block.
inline RationalFn phi(const SubalgebraPartition& algebra, const RationalFn& a) {
    if (!algebra.contains(a)) throw not_block_constant();
    std::vector<Rational> v;
    for (const auto& block : algebra.blocks()) v.push_back(a[block.front()]);
    return RationalFn(spectrum_carrier(algebra), std::move(v));
}

struct EtaResult {
    std::vector<std::size_t> map; // x -> index of M_x in the spectrum
    bool bijective = false;
    bool preserves = false;
    bool reflects = false;
    std::optional<QuasiOrder::Pair> counterexample;

    bool is_isomorphism() const noexcept { return bijective && preserves && reflects; }
};

/// eta_X : X -> X_{C(X)}, x |-> M_x, against the induced order of the monotone skeleton.
inline EtaResult eta(const FinitePoset& x) {
    const Carrier& carrier = x.carrier();
    auto algebra = SubalgebraPartition::discrete(carrier);
    auto spec = induced_order(algebra, ProximityOracle::from_skeleton(SbalSkeleton::monotone(x)));
    EtaResult out;
    out.map.assign(carrier.size(), 0);
    std::vector<bool> hit(spec.points.size(), false);
    out.bijective = spec.points.size() == carrier.size();
    for (std::size_t p = 0; p < carrier.size(); ++p) {
        std::size_t found = spec.points.size();
        for (std::size_t m = 0; m < spec.points.size(); ++m) {
            auto delta = RationalFn::zero(carrier);
            delta[p] = 1;
            if (!spec.points[m].contains(delta)) {
                if (found != spec.points.size()) out.bijective = false;
                found = m;
            }
        }
        if (found == spec.points.size() || hit[found]) {
            out.bijective = false;
            continue;
        }
        hit[found] = true;
        out.map[p] = found;
    }
    out.preserves = out.reflects = out.bijective;
    if (!out.bijective) return out;
    for (std::size_t a = 0; a < carrier.size(); ++a)
        for (std::size_t b = 0; b < carrier.size(); ++b) {
            bool in_x = x.leq(a, b);
            bool in_spec = spec.order.leq(out.map[a], out.map[b]);
            if (in_x && !in_spec) out.preserves = false;
            if (!in_x && in_spec) out.reflects = false;
            if (in_x != in_spec && !out.counterexample) out.counterexample = QuasiOrder::Pair{a, b};
        }
    return out;
}

using AlgebraMap = std::function<RationalFn(const RationalFn&)>;

/// The spectral map X_B -> X_A of alpha : A -> B, sending the ideal at a block of B to its
/// preimage. Read off from alpha on block indicators: the preimage of M is the ideal at the
/// unique block of A whose indicator alpha does not send into M.
inline std::vector<std::size_t> dual_morphism(const AlgebraMap& alpha, const SubalgebraPartition& source,
                                              const SubalgebraPartition& target) {
    auto target_points = spectrum(target);
    std::vector<std::size_t> out(target_points.size(), 0);
    for (std::size_t m = 0; m < target_points.size(); ++m) {
        std::optional<std::size_t> found;
        for (std::size_t b = 0; b < source.block_count(); ++b) {
            auto indicator = RationalFn::zero(source.carrier());
            for (auto i : source.blocks()[b]) indicator[i] = 1;
            if (target_points[m].contains(alpha(indicator))) continue;
            if (found) throw not_a_morphism("ideal preimage is not maximal");
            found = b;
        }
        if (!found) throw not_a_morphism("unit");
        out[m] = *found;
    }
    return out;
}

inline std::vector<std::size_t> dual_morphism(const PointMapMorphism& alpha) {
    return dual_morphism([&](const RationalFn& f) { return alpha(f); },
                         SubalgebraPartition::discrete(alpha.source()), SubalgebraPartition::discrete(alpha.target()));
}

/// alpha[R(A)] within R(B): probed on the up-set indicators, which generate R(A) under
/// positive combinations, joins and constants, and on sampled members and proximal pairs.
inline bool preserves_proximity(const AlgebraMap& alpha, const ProximityOracle& source, const ProximityOracle& target,
                                std::size_t samples = 32, std::uint64_t seed = 0) {
    const auto& q = source.skeleton().order();
    for (std::size_t y = 0; y < q.size(); ++y)
        if (!target.is_reflexive(alpha(detail::upset_indicator(q, y)))) return false;
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = sample_function(source.carrier(), rng);
        auto s = source.witness(a);
        auto b = s + sample_nonnegative(source.carrier(), rng);
        if (!target.is_reflexive(alpha(s))) return false;
        if (!target.decide(alpha(a), alpha(b))) return false;
    }
    return true;
}

struct AdjunctionReport {
    std::vector<std::vector<std::size_t>> algebra_morphisms; // point maps X -> Y
    std::vector<std::vector<std::size_t>> nach_morphisms;    // monotone maps X -> X_A
    std::vector<std::vector<std::size_t>> theta;             // theta of each algebra morphism
    bool bijective = false;
    bool natural = false;
    std::size_t naturality_checks = 0;
    std::optional<std::string> failure;
};

namespace detail {

inline std::vector<std::size_t> compose(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

} // namespace detail

/// theta : hom(A, C(X)) -> hom_Nach(X, X_A) for A = R^Y with the proximity of `s`.
/// Algebra morphisms are enumerated as point maps X -> Y and kept when they preserve
/// proximity into C(X) with the monotone proximity; theta is computed from each morphism
/// as a black box. Naturality is checked against every endomorphism of X and of A.
inline AdjunctionReport enumerate_adjunction(const FinitePoset& x, const SbalSkeleton& s) {
    constexpr std::size_t cap = 4;
    if (x.size() > cap) throw too_large_to_enumerate(x.size());
    if (s.carrier().size() > cap) throw too_large_to_enumerate(s.carrier().size());

    const Carrier& cx = x.carrier();
    const Carrier& cy = s.carrier();
    const auto ax = SubalgebraPartition::discrete(cx);
    const auto ay = SubalgebraPartition::discrete(cy);
    const auto ox = ProximityOracle::from_skeleton(SbalSkeleton::monotone(x));
    const auto oy = ProximityOracle::from_skeleton(s);
    const auto spec = induced_order(ay, oy);

    auto as_algebra_map = [](const Carrier& from, const Carrier& to, const std::vector<std::size_t>& m) -> AlgebraMap {
        PointMapMorphism pm(from, to, m);
        return [pm](const RationalFn& f) { return pm(f); };
    };
    auto theta = [&](const AlgebraMap& alpha) { return dual_morphism(alpha, ay, ax); };

    AdjunctionReport report;
    for (auto& m : enumerate_maps(cx.size(), cy.size()))
        if (preserves_proximity(as_algebra_map(cy, cx, m), oy, ox)) report.algebra_morphisms.push_back(std::move(m));
    for (auto& m : enumerate_maps(cx.size(), spec.points.size()))
        if (is_order_preserving(m, x.order(), spec.order)) report.nach_morphisms.push_back(std::move(m));

    std::set<std::vector<std::size_t>> image;
    bool lands = true;
    for (const auto& m : report.algebra_morphisms) {
        auto t = theta(as_algebra_map(cy, cx, m));
        if (!is_order_preserving(t, x.order(), spec.order)) {
            lands = false;
            if (!report.failure) report.failure = "theta of a proximity morphism is not monotone";
        }
        image.insert(t);
        report.theta.push_back(std::move(t));
    }
    report.bijective = lands && image.size() == report.algebra_morphisms.size() &&
                       report.algebra_morphisms.size() == report.nach_morphisms.size();
    if (!report.bijective && !report.failure) report.failure = "theta is not a bijection";

    // Endomorphisms g of X act by precomposition C(g); endomorphisms k of A act on the right.
    std::vector<std::vector<std::size_t>> x_endos, a_endos;
    for (auto& g : enumerate_maps(cx.size(), cx.size()))
        if (is_order_preserving(g, x.order(), x.order())) x_endos.push_back(std::move(g));
    for (auto& k : enumerate_maps(cy.size(), cy.size()))
        if (preserves_proximity(as_algebra_map(cy, cy, k), oy, oy)) a_endos.push_back(std::move(k));

    report.natural = true;
    auto fail = [&](const char* what) {
        report.natural = false;
        if (!report.failure) report.failure = what;
    };
    for (std::size_t i = 0; i < report.algebra_morphisms.size(); ++i) {
        AlgebraMap alpha = as_algebra_map(cy, cx, report.algebra_morphisms[i]);
        const auto& t = report.theta[i];
        for (const auto& g : x_endos) {
            AlgebraMap cg = as_algebra_map(cx, cx, g);
            AlgebraMap composite = [&](const RationalFn& f) { return cg(alpha(f)); };
            ++report.naturality_checks;
            if (theta(composite) != detail::compose(t, g)) fail("naturality in X");
        }
        for (const auto& k : a_endos) {
            AlgebraMap beta = as_algebra_map(cy, cy, k);
            AlgebraMap composite = [&](const RationalFn& f) { return alpha(beta(f)); };
            auto xbeta = dual_morphism(beta, ay, ay);
            ++report.naturality_checks;
            if (theta(composite) != detail::compose(xbeta, t)) fail("naturality in A");
        }
    }
    return report;
}

} // namespace nachbin
