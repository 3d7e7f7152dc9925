#pragma once

// Generators and brute-force reference implementations shared by the test suites.
// The references deliberately avoid the library's algorithms (no envelopes, no Warshall closure).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <nachbin/nachbin.hpp>

namespace testing_support {

using namespace nachbin;

inline RationalFn fn(const Carrier& c, std::vector<Rational> v) { return RationalFn(c, std::move(v)); }

inline Rational q(long n, unsigned long d = 1) { return make_rational(n, d); }

/// Random poset on n points: random strict edges i -> j for i < j in a shuffled numbering.
inline FinitePoset random_poset(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, i - 1))]);
    std::vector<QuasiOrder::Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.coin(3)) pairs.emplace_back(perm[i], perm[j]);
    return FinitePoset(QuasiOrder::closure(Carrier::numbered(n), pairs));
}

/// Random quasi-order: arbitrary random pairs, closed.
inline QuasiOrder random_quasi_order(std::size_t n, SplitMix64& rng) {
    std::vector<QuasiOrder::Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rng.coin(5)) pairs.emplace_back(i, j);
    return QuasiOrder::closure(Carrier::numbered(n), pairs);
}

/// Relation set by naive fixpoint iteration.
inline std::set<std::pair<std::size_t, std::size_t>> naive_closure(std::size_t n,
                                                                   std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    std::set<std::pair<std::size_t, std::size_t>> rel(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < n; ++i) rel.emplace(i, i);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>(rel.begin(), rel.end()))
            for (auto [c, d] : std::vector<std::pair<std::size_t, std::size_t>>(rel.begin(), rel.end()))
                if (b == c && rel.emplace(a, d).second) grew = true;
    }
    return rel;
}

/// Upper envelope by repeated relaxation g(x) = max(g(x), g(y)) over y <= x until stable.
inline RationalFn relaxed_upper_envelope(const RationalFn& f, const QuasiOrder& order) {
    auto g = f;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < f.size(); ++x)
            for (std::size_t y = 0; y < f.size(); ++y)
                if (order.leq(y, x) && g[y] > g[x]) {
                    g[x] = g[y];
                    changed = true;
                }
    }
    return g;
}

/// Monotonicity straight from the relation.
inline bool brute_monotone(const RationalFn& f, const QuasiOrder& order) {
    for (auto [x, y] : order.relation_pairs())
        if (f[x] > f[y]) return false;
    return true;
}

/// Every function with values drawn from `values`.
inline void for_each_function(const Carrier& c, const std::vector<Rational>& values,
                              const std::function<void(const RationalFn&)>& visit) {
    std::vector<std::size_t> idx(c.size(), 0);
    while (true) {
        std::vector<Rational> v;
        for (auto i : idx) v.push_back(values[i]);
        visit(RationalFn(c, std::move(v)));
        std::size_t k = 0;
        while (k < idx.size() && idx[k] + 1 == values.size()) idx[k++] = 0;
        if (k == idx.size()) return;
        ++idx[k];
    }
}

/// a <_S b by searching for a monotone s between them with values among those of a and b.
inline bool brute_prox(const RationalFn& a, const RationalFn& b, const QuasiOrder& order) {
    std::set<Rational> vals(a.values().begin(), a.values().end());
    vals.insert(b.values().begin(), b.values().end());
    std::vector<Rational> values(vals.begin(), vals.end());
    bool found = false;
    for_each_function(a.carrier(), values, [&](const RationalFn& s) {
        if (!found && brute_monotone(s, order) && pointwise_leq(a, s) && pointwise_leq(s, b)) found = true;
    });
    return found;
}

/// Every set partition of {0..n-1} as block ids (restricted growth strings).
inline std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t next_block) {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b <= next_block; ++b) {
            cur.push_back(b);
            rec(std::max(next_block, b + 1));
            cur.pop_back();
        }
    };
    if (n == 0) return {{}};
    cur.push_back(0);
    rec(1);
    return out;
}

} // namespace testing_support
