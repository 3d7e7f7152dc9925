#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "approximation.hpp"
#include "sbal_plus.hpp"

namespace nachbin::io {

/// Documents are written with fixed key order; parsing accepts any key order.
using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

/// Two-space indentation and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw parse_error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string("missing key '") + key + "'");
    return *it;
}

inline std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline Carrier carrier_from(const Json& j) {
    if (!j.is_array()) throw parse_error("carrier must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& e : j) labels.push_back(as_string(e, "element label"));
    return Carrier(std::move(labels));
}

inline Json carrier_to(const Carrier& c) {
    Json out = Json::array();
    for (const auto& l : c.labels()) out.push_back(l);
    return out;
}

} // namespace detail

// Orders: {"elements": [...], "leq": [[x, y], ...]}

/// Closes the listed pairs reflexively and transitively; with `require_antisymmetry`, rejects
/// closures that identify distinct elements.
inline QuasiOrder order_from_json(const Json& j, bool require_antisymmetry) {
    auto elements = detail::carrier_from(detail::member(j, "elements"));
    const auto& leq = detail::member(j, "leq");
    if (!leq.is_array()) throw parse_error("'leq' must be an array of pairs");
    std::vector<LabelPair> pairs;
    for (const auto& p : leq) {
        if (!p.is_array() || p.size() != 2) throw parse_error("each 'leq' entry must be a pair");
        pairs.emplace_back(detail::as_string(p[0], "element label"), detail::as_string(p[1], "element label"));
    }
    return validate_order(elements, pairs, require_antisymmetry);
}

inline FinitePoset poset_from_json(const Json& j) { return FinitePoset(order_from_json(j, true)); }

/// Canonical form lists every strict-or-equivalent pair x != y of the closure in declaration order.
inline Json to_json(const QuasiOrder& q) {
    Json leq = Json::array();
    for (auto [x, y] : q.relation_pairs()) leq.push_back({q.carrier().label(x), q.carrier().label(y)});
    Json out;
    out["elements"] = detail::carrier_to(q.carrier());
    out["leq"] = std::move(leq);
    return out;
}

inline Json to_json(const FinitePoset& p) { return to_json(p.order()); }

// Functions: {"carrier": [...], "values": {"p": "-3", "q": "1/2"}}

inline RationalFn function_from_json(const Json& j) {
    auto carrier = detail::carrier_from(detail::member(j, "carrier"));
    const auto& values = detail::member(j, "values");
    if (!values.is_object()) throw parse_error("'values' must be an object");
    std::map<std::string, Rational> map;
    for (auto it = values.begin(); it != values.end(); ++it) {
        if (!carrier.contains(it.key())) throw unknown_element(it.key());
        map.emplace(it.key(), parse_rational(detail::as_string(it.value(), "value")));
    }
    return RationalFn::from_map(carrier, map);
}

/// Reads a function and re-expresses it over `carrier`, which must list the same labels in the same order.
inline RationalFn function_from_json(const Json& j, const Carrier& carrier) {
    auto f = function_from_json(j);
    if (f.carrier().labels() != carrier.labels()) throw carrier_mismatch("function carrier differs from the order's");
    return RationalFn(carrier, f.values());
}

inline Json to_json(const RationalFn& f) {
    Json values = Json::object();
    for (std::size_t i = 0; i < f.size(); ++i) values[f.carrier().label(i)] = to_string(f[i]);
    Json out;
    out["carrier"] = detail::carrier_to(f.carrier());
    out["values"] = std::move(values);
    return out;
}

// Skeletons: {"quasiorder": <order>} or {"generators": [<function>, ...]}

inline SbalSkeleton skeleton_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("skeleton must be a JSON object");
    if (j.contains("quasiorder")) return SbalSkeleton(order_from_json(j["quasiorder"], false));
    if (j.contains("generators")) {
        const auto& gens = j["generators"];
        if (!gens.is_array() || gens.empty()) throw parse_error("'generators' must be a nonempty array");
        auto first = function_from_json(gens[0]);
        std::vector<RationalFn> fs{first};
        for (std::size_t i = 1; i < gens.size(); ++i) fs.push_back(function_from_json(gens[i], first.carrier()));
        return SbalSkeleton::from_generators(first.carrier(), fs);
    }
    throw parse_error("skeleton needs 'quasiorder' or 'generators'");
}

inline Json to_json(const SbalSkeleton& s) {
    Json out;
    out["quasiorder"] = to_json(s.order());
    return out;
}

// Algebras: {"carrier": [...], "blocks": [[...], ...]} or {"generators": [<function>, ...]}

inline SubalgebraPartition algebra_from_json(const Json& j, const Carrier& carrier) {
    if (!j.is_object()) throw parse_error("algebra must be a JSON object");
    if (j.contains("blocks")) {
        auto c = detail::carrier_from(detail::member(j, "carrier"));
        if (c.labels() != carrier.labels()) throw carrier_mismatch("algebra carrier differs from the order's");
        const auto& blocks = j["blocks"];
        if (!blocks.is_array()) throw parse_error("'blocks' must be an array");
        std::vector<std::vector<std::string>> labels;
        for (const auto& b : blocks) {
            if (!b.is_array()) throw parse_error("each block must be an array");
            std::vector<std::string> block;
            for (const auto& e : b) block.push_back(detail::as_string(e, "element label"));
            labels.push_back(std::move(block));
        }
        return SubalgebraPartition::from_blocks(carrier, labels);
    }
    if (j.contains("generators")) {
        const auto& gens = j["generators"];
        if (!gens.is_array()) throw parse_error("'generators' must be an array");
        std::vector<RationalFn> fs;
        for (const auto& g : gens) fs.push_back(function_from_json(g, carrier));
        return generate_closed_subalgebra(carrier, fs);
    }
    throw parse_error("algebra needs 'blocks' or 'generators'");
}

inline Json to_json(const SubalgebraPartition& a) {
    Json blocks = Json::array();
    for (const auto& b : a.blocks()) {
        Json block = Json::array();
        for (auto i : b) block.push_back(a.carrier().label(i));
        blocks.push_back(std::move(block));
    }
    Json out;
    out["carrier"] = detail::carrier_to(a.carrier());
    out["blocks"] = std::move(blocks);
    return out;
}

// Reports and certificates

inline Json to_json(const Counterexample& ce) {
    Json functions = Json::object();
    for (const auto& [name, f] : ce.functions) functions[name] = to_json(f);
    Json scalars = Json::object();
    for (const auto& [name, r] : ce.scalars) scalars[name] = to_string(r);
    Json out;
    out["functions"] = std::move(functions);
    out["scalars"] = std::move(scalars);
    return out;
}

inline Json to_json(const CheckResult& r) {
    Json out;
    out["name"] = r.name;
    out["passed"] = r.passed;
    out["checked"] = r.checked;
    out["sampled"] = r.sampled;
    if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
    return out;
}

inline Json to_json(const AxiomReport& report) {
    Json out = Json::array();
    for (const auto& r : report.results()) out.push_back(to_json(r));
    return out;
}

inline Json to_json(const SWCertificate& c) {
    Json family = Json::array();
    for (const auto& m : c.family) {
        Json e;
        e["r"] = to_string(m.r);
        e["y"] = m.a.carrier().label(m.y);
        e["a"] = to_json(m.a);
        family.push_back(std::move(e));
    }
    Json out;
    out["epsilon"] = to_string(c.epsilon);
    out["max"] = to_string(c.s);
    out["min"] = to_string(c.t);
    out["family_size"] = c.family_size();
    out["family"] = std::move(family);
    out["cover"] = c.cover;
    out["a"] = to_json(c.a);
    return out;
}

inline Json to_json(const DieudonneTrace& t) {
    Json terms = Json::array();
    for (const auto& a : t.terms) terms.push_back(to_json(a));
    Json steps = Json::array();
    for (std::size_t n = 0; n < t.steps.size(); ++n) {
        const auto& s = t.steps[n];
        Json e;
        e["n"] = n + 1;
        e["within_bounds"] = s.lower_ok && s.upper_ok;
        e["step_bounded"] = s.step_ok;
        e["norm"] = s.norm_ok;
        steps.push_back(std::move(e));
    }
    Json out;
    out["terms"] = std::move(terms);
    out["steps"] = std::move(steps);
    out["limit_witness"] = to_json(t.limit_witness);
    return out;
}

} // namespace nachbin::io
