#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <nachbin/io.hpp>
#include <nachbin/nachbin.hpp>

namespace nachbin::cli {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct Options {
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    bool expect_quasi = false;
    bool json = false;

    std::string poset;
    std::string target;
    std::string skeleton;
    std::string oracle;
    std::string algebra;
    std::string function;
    std::string lower;
    std::string upper;
    std::string direction = "upper";
    std::string eps;
    std::string stream = "constant";
    std::size_t steps = 10;
    bool quasi = false;
    bool devries = false;
};

namespace detail {

struct Source {
    ProximityOracle oracle;
    std::optional<FinitePoset> poset;
};

inline Source load_source(const Options& o) {
    int given = !o.poset.empty() + !o.skeleton.empty() + !o.oracle.empty();
    if (given != 1) throw parse_error("give exactly one of --poset, --skeleton, --oracle");
    if (!o.oracle.empty()) {
        if (o.oracle != "r2") throw parse_error("unknown oracle '" + o.oracle + "' (known: r2)");
        return {ProximityOracle::r2(), std::nullopt};
    }
    if (!o.poset.empty()) {
        auto p = io::poset_from_json(io::read_json_file(o.poset));
        return {ProximityOracle::from_skeleton(SbalSkeleton::monotone(p)), p};
    }
    return {ProximityOracle::from_skeleton(io::skeleton_from_json(io::read_json_file(o.skeleton))), std::nullopt};
}

inline SubalgebraPartition load_algebra(const Options& o, const Carrier& carrier) {
    if (o.algebra.empty()) return SubalgebraPartition::discrete(carrier);
    return io::algebra_from_json(io::read_json_file(o.algebra), carrier);
}

inline RationalFn load_function(const std::string& path, const char* flag, const Carrier& carrier) {
    if (path.empty()) throw parse_error(std::string("missing ") + flag);
    return io::function_from_json(io::read_json_file(path), carrier);
}

inline void print_counterexample(std::ostream& out, const Counterexample& ce) {
    out << "  counterexample: " << io::to_json(ce).dump() << "\n";
}

inline void print_report(std::ostream& out, const AxiomReport& report, const std::vector<std::string>& informational) {
    for (const auto& r : report.results()) {
        bool info = std::find(informational.begin(), informational.end(), r.name) != informational.end();
        out << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checked << " of " << r.sampled
            << " instances met the hypothesis)" << (info ? " [informational]" : "") << "\n";
        if (r.counterexample) print_counterexample(out, *r.counterexample);
    }
}

inline bool required_pass(const AxiomReport& report, const std::vector<std::string>& informational) {
    for (const auto& r : report.results())
        if (!r.passed && std::find(informational.begin(), informational.end(), r.name) == informational.end())
            return false;
    return true;
}

inline io::Json order_report(const OrderedSpectrum& spec, const Carrier& carrier) {
    io::Json certs = io::Json::array();
    for (const auto& c : spec.certificates) {
        io::Json e;
        e["x"] = spec.order.carrier().label(c.x);
        e["y"] = spec.order.carrier().label(c.y);
        e["witness"] = io::to_json(RationalFn(carrier, c.witness.values()));
        certs.push_back(std::move(e));
    }
    io::Json out;
    out["order"] = io::to_json(spec.order);
    out["separations"] = std::move(certs);
    return out;
}

} // namespace detail

inline int cmd_validate(const Options& o, std::ostream& out) {
    if (o.poset.empty()) throw parse_error("missing --poset");
    auto doc = io::read_json_file(o.poset);
    try {
        auto q = io::order_from_json(doc, !o.quasi);
        out << (o.quasi ? "valid quasi-order: " : "valid poset: ") << q.size() << " elements\n";
        out << io::dump(io::to_json(q));
        return exit_ok;
    } catch (const antisymmetry_violation& e) {
        out << "antisymmetry violation: " << e.first() << " <= " << e.second() << " <= " << e.first() << "\n";
        io::Json ce;
        ce["x"] = e.first();
        ce["y"] = e.second();
        out << "  counterexample: " << ce.dump() << "\n";
        return exit_check_failed;
    }
}

inline int cmd_envelope(const Options& o, std::ostream& out) {
    auto src = detail::load_source(o);
    auto f = detail::load_function(o.function, "--function", src.oracle.carrier());
    if (o.direction != "upper" && o.direction != "lower") throw parse_error("--direction must be upper or lower");
    auto env = o.direction == "upper" ? src.oracle.witness(f) : src.oracle.lower_witness(f);
    out << io::dump(io::to_json(env));
    return exit_ok;
}

inline int cmd_prox(const Options& o, std::ostream& out) {
    auto src = detail::load_source(o);
    auto a = detail::load_function(o.lower, "--lower", src.oracle.carrier());
    auto b = detail::load_function(o.upper, "--upper", src.oracle.carrier());
    auto d = prox_decide(src.oracle, a, b);
    io::Json j;
    j["proximal"] = d.holds;
    if (d.witness) j["witness"] = io::to_json(*d.witness);
    out << io::dump(j);
    return exit_ok;
}

inline int cmd_axioms(const Options& o, std::ostream& out) {
    auto src = detail::load_source(o);
    auto prox = check_axioms(src.oracle, o.samples, o.seed, o.devries);
    auto skel = check_skeleton_axioms(src.oracle.skeleton(), o.samples, SplitMix64(o.seed).split(1)());
    const std::vector<std::string> informational{"P11", "P12"};
    bool ok = detail::required_pass(prox, informational) && skel.all_passed();
    if (o.json) {
        io::Json j;
        j["proximity"] = io::to_json(prox);
        j["skeleton"] = io::to_json(skel);
        j["passed"] = ok;
        out << io::dump(j);
    } else {
        detail::print_report(out, prox, informational);
        detail::print_report(out, skel, {});
        out << (ok ? "all required axioms pass\n" : "axiom violations found\n");
    }
    return ok ? exit_ok : exit_check_failed;
}

inline int cmd_spectrum(const Options& o, std::ostream& out) {
    if (o.poset.empty()) throw parse_error("missing --poset");
    auto p = io::poset_from_json(io::read_json_file(o.poset));
    auto algebra = detail::load_algebra(o, p.carrier());
    io::Json ideals = io::Json::array();
    for (const auto& m : spectrum(algebra)) {
        io::Json e;
        e["ideal"] = m.label;
        io::Json pts = io::Json::array();
        for (auto i : m.points) pts.push_back(p.carrier().label(i));
        e["vanishes_on"] = std::move(pts);
        ideals.push_back(std::move(e));
    }
    out << io::dump(ideals);
    return exit_ok;
}

inline int cmd_induced_order(const Options& o, std::ostream& out) {
    auto src = detail::load_source(o);
    auto algebra = detail::load_algebra(o, src.oracle.carrier());
    auto spec = induced_order(algebra, src.oracle);
    out << io::dump(detail::order_report(spec, src.oracle.carrier()));
    if (auto v = spec.order.antisymmetry_violation()) {
        const auto& c = spec.order.carrier();
        out << "order fails antisymmetry: " << c.label(v->first) << " <= " << c.label(v->second) << " <= "
            << c.label(v->first) << "\n";
        if (o.expect_quasi) {
            out << "expected: quasi-order only\n";
            return exit_ok;
        }
        return exit_check_failed;
    }
    out << "order is a partial order\n";
    if (o.expect_quasi) {
        out << "expected a failure of antisymmetry\n";
        return exit_check_failed;
    }
    return exit_ok;
}

inline int cmd_roundtrip(const Options& o, std::ostream& out) {
    auto src = detail::load_source(o);
    auto algebra = detail::load_algebra(o, src.oracle.carrier());
    bool ok = true;
    if (src.poset && o.algebra.empty()) {
        auto e = eta(*src.poset);
        out << "eta: " << (e.is_isomorphism() ? "order-isomorphism" : "NOT an order-isomorphism") << "\n";
        if (e.counterexample) {
            const auto& c = src.poset->carrier();
            out << "  counterexample: {\"x\":\"" << c.label(e.counterexample->first) << "\",\"y\":\""
                << c.label(e.counterexample->second) << "\"}\n";
        }
        ok = ok && e.is_isomorphism();
    }
    bool nachbin = is_nachbin(algebra, src.oracle);
    out << "nachbin: " << (nachbin ? "yes" : "no") << "\n";
    auto spec = induced_order(algebra, src.oracle);
    auto target = ProximityOracle::from_skeleton(SbalSkeleton(spec.order));
    SplitMix64 rng(o.seed);
    CheckResult preserve{"phi preserves proximity"}, reflect{"phi reflects proximity"};
    auto project = [&](RationalFn f) {
        for (const auto& block : algebra.blocks())
            for (auto i : block) f[i] = f[block.front()];
        return f;
    };
    for (std::size_t i = 0; i < o.samples; ++i) {
        auto a = project(sample_function(algebra.carrier(), rng));
        auto b = rng.coin(2) ? project(src.oracle.witness(a) + sample_nonnegative(algebra.carrier(), rng))
                             : project(sample_function(algebra.carrier(), rng));
        bool here = src.oracle.decide(a, b);
        bool there = target.decide(phi(algebra, a), phi(algebra, b));
        auto ce = [&] { return Counterexample{{{"a", a}, {"b", b}}, {}}; };
        nachbin::detail::record(preserve, here, there, ce);
        nachbin::detail::record(reflect, there, here, ce);
    }
    AxiomReport report;
    report.add(preserve);
    report.add(reflect);
    detail::print_report(out, report, {});
    ok = ok && report.all_passed();
    if (!nachbin && !o.expect_quasi) ok = false;
    return ok ? exit_ok : exit_check_failed;
}

inline int cmd_sw_approx(const Options& o, std::ostream& out) {
    if (!o.oracle.empty()) throw parse_error("sw-approx needs --poset or --skeleton");
    auto src = detail::load_source(o);
    const auto& skeleton = src.oracle.skeleton();
    auto f = detail::load_function(o.function, "--function", skeleton.carrier());
    if (o.eps.empty()) throw parse_error("missing --eps");
    auto cert = sw_approximate(f, skeleton, parse_rational(o.eps));
    bool ok = skeleton.contains(cert.a) && sup_norm(f - cert.a) <= cert.epsilon;
    for (const auto& m : cert.family) {
        bool member_ok = pointwise_leq(f, m.a) && m.a[m.y] == m.r &&
                         pointwise_leq(RationalFn::constant(f.carrier(), m.r), m.a) &&
                         pointwise_leq(m.a, RationalFn::constant(f.carrier(), cert.s));
        for (std::size_t x = 0; x < f.size(); ++x)
            if (f[x] >= m.r && m.a[x] != cert.s) member_ok = false;
        ok = ok && member_ok;
    }
    out << io::dump(io::to_json(cert));
    out << "error: " << to_string(sup_norm(f - cert.a)) << " (epsilon " << to_string(cert.epsilon) << ")\n";
    out << (ok ? "certificate verified\n" : "certificate FAILED\n");
    return ok ? exit_ok : exit_check_failed;
}

inline int cmd_dieudonne(const Options& o, std::ostream& out) {
    auto src = detail::load_source(o);
    auto f = detail::load_function(o.lower, "--lower", src.oracle.carrier());
    auto g = detail::load_function(o.upper, "--upper", src.oracle.carrier());
    if (o.steps < 1) throw parse_error("--steps must be at least 1");
    ApproximantStream stream;
    if (o.stream == "constant")
        stream = constant_stream(f, g);
    else if (o.stream == "perturbed")
        stream = perturbed_stream(f, g);
    else
        throw parse_error("--stream must be constant or perturbed");
    try {
        auto trace = dieudonne_sequence(f, g, src.oracle, o.steps, stream);
        out << io::dump(io::to_json(trace));
        out << (trace.all_ok() ? "all step bounds hold\n" : "step bound FAILED\n");
        return trace.all_ok() ? exit_ok : exit_check_failed;
    } catch (const no_approximant_within_tolerance& e) {
        out << e.what() << "\n";
        auto env = src.oracle.witness(f);
        detail::print_counterexample(out, Counterexample{{{"f", f}, {"g", g}, {"envelope", env}}, {}});
        return exit_check_failed;
    }
}

inline int cmd_adjunction(const Options& o, std::ostream& out) {
    if (o.poset.empty()) throw parse_error("missing --poset");
    auto x = io::poset_from_json(io::read_json_file(o.poset));
    auto y = o.target.empty() ? x : io::poset_from_json(io::read_json_file(o.target));
    auto report = enumerate_adjunction(x, SbalSkeleton::monotone(y));
    io::Json rows = io::Json::array();
    for (std::size_t i = 0; i < report.algebra_morphisms.size(); ++i) {
        io::Json row;
        io::Json point_map = io::Json::object();
        for (std::size_t p = 0; p < x.size(); ++p)
            point_map[x.carrier().label(p)] = y.carrier().label(report.algebra_morphisms[i][p]);
        row["point_map"] = std::move(point_map);
        io::Json theta = io::Json::object();
        for (std::size_t p = 0; p < x.size(); ++p)
            theta[x.carrier().label(p)] = "M_" + y.carrier().label(report.theta[i][p]);
        row["theta"] = std::move(theta);
        rows.push_back(std::move(row));
    }
    io::Json j;
    j["algebra_morphisms"] = report.algebra_morphisms.size();
    j["monotone_maps"] = report.nach_morphisms.size();
    j["bijective"] = report.bijective;
    j["natural"] = report.natural;
    j["naturality_checks"] = report.naturality_checks;
    j["theta"] = std::move(rows);
    if (report.failure) j["failure"] = *report.failure;
    out << io::dump(j);
    return report.bijective && report.natural ? exit_ok : exit_check_failed;
}

inline int cmd_pq_roundtrip(const Options& o, std::ostream& out) {
    if (!o.oracle.empty()) throw parse_error("pq-roundtrip needs --poset or --skeleton");
    auto src = detail::load_source(o);
    const auto& s = src.oracle.skeleton();
    auto report = roundtrip_pq(s, positive_cone(s), o.samples, o.seed);
    if (o.json)
        out << io::dump(io::to_json(report));
    else
        detail::print_report(out, report, {});
    return report.all_passed() ? exit_ok : exit_check_failed;
}

/// Runs one command line (without the program name). Never throws.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Finite Nachbin spaces, proximities and their function algebras"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "random seed (default 0)");
    app.add_option("--samples", o.samples, "sample count for randomized checks")->check(CLI::PositiveNumber);
    app.add_flag("--expect-quasi", o.expect_quasi, "expect the induced order to fail antisymmetry");
    app.add_flag("--json", o.json, "emit reports as JSON");

    auto source = [&](CLI::App* sub) {
        sub->add_option("--poset", o.poset, "poset file; uses its monotone skeleton");
        sub->add_option("--skeleton", o.skeleton, "skeleton file");
        sub->add_option("--oracle", o.oracle, "built-in oracle (r2)");
    };
    auto* validate = app.add_subcommand("validate", "check a poset file");
    validate->add_option("--poset", o.poset, "poset file")->required();
    validate->add_flag("--quasi", o.quasi, "accept quasi-orders");

    auto* envelope = app.add_subcommand("envelope", "monotone envelope of a function");
    source(envelope);
    envelope->add_option("--function", o.function, "function file")->required();
    envelope->add_option("--direction", o.direction, "upper or lower");

    auto* prox = app.add_subcommand("prox", "decide lower < upper");
    source(prox);
    prox->add_option("--lower", o.lower, "function file")->required();
    prox->add_option("--upper", o.upper, "function file")->required();

    auto* axioms = app.add_subcommand("axioms", "sample the proximity and skeleton axioms");
    source(axioms);
    axioms->add_flag("--devries", o.devries, "also sample P11 and P12");

    auto* spec = app.add_subcommand("spectrum", "maximal ideals of an algebra");
    spec->add_option("--poset", o.poset, "poset file")->required();
    spec->add_option("--algebra", o.algebra, "algebra file (default: all functions)");

    auto* induced = app.add_subcommand("induced-order", "order on the spectrum");
    source(induced);
    induced->add_option("--algebra", o.algebra, "algebra file (default: all functions)");

    auto* roundtrip = app.add_subcommand("roundtrip", "eta and phi round trips");
    source(roundtrip);
    roundtrip->add_option("--algebra", o.algebra, "algebra file (default: all functions)");

    auto* sw = app.add_subcommand("sw-approx", "approximate a monotone function by reflexive elements");
    source(sw);
    sw->add_option("--function", o.function, "function file")->required();
    sw->add_option("--eps", o.eps, "tolerance as n or n/d")->required();

    auto* dieudonne = app.add_subcommand("dieudonne", "sequence of reflexive approximants between two functions");
    source(dieudonne);
    dieudonne->add_option("--lower", o.lower, "function file")->required();
    dieudonne->add_option("--upper", o.upper, "function file")->required();
    dieudonne->add_option("--steps", o.steps, "number of terms");
    dieudonne->add_option("--stream", o.stream, "constant or perturbed approximants");

    auto* adjunction = app.add_subcommand("adjunction", "enumerate theta between morphism sets");
    adjunction->add_option("--poset", o.poset, "domain poset file")->required();
    adjunction->add_option("--target", o.target, "poset file for the algebra side (default: the domain)");

    auto* pq = app.add_subcommand("pq-roundtrip", "positive cone and envelope round trips");
    source(pq);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (envelope->parsed()) return cmd_envelope(o, out);
        if (prox->parsed()) return cmd_prox(o, out);
        if (axioms->parsed()) return cmd_axioms(o, out);
        if (spec->parsed()) return cmd_spectrum(o, out);
        if (induced->parsed()) return cmd_induced_order(o, out);
        if (roundtrip->parsed()) return cmd_roundtrip(o, out);
        if (sw->parsed()) return cmd_sw_approx(o, out);
        if (dieudonne->parsed()) return cmd_dieudonne(o, out);
        if (adjunction->parsed()) return cmd_adjunction(o, out);
        if (pq->parsed()) return cmd_pq_roundtrip(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace nachbin::cli
