#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "fnalg.hpp"

namespace nachbin {

/// A reflexive, transitive relation on a finite carrier. Instances are always closed.
class QuasiOrder {
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    QuasiOrder() = default;

    /// Reflexive-transitive closure of `pairs` (x, y) meaning x <= y.
    static QuasiOrder closure(Carrier carrier, std::span<const Pair> pairs) {
        const std::size_t n = carrier.size();
        std::vector<std::uint8_t> rel(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
        for (auto [x, y] : pairs) {
            if (x >= n || y >= n) throw unknown_element("#" + std::to_string(x >= n ? x : y));
            rel[x * n + y] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (rel[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (rel[k * n + j]) rel[i * n + j] = 1;
        return QuasiOrder(std::move(carrier), std::move(rel));
    }

    /// Only the reflexive pairs: every function is monotone.
    static QuasiOrder discrete(Carrier carrier) { return closure(std::move(carrier), {}); }

    /// Every pair related: only constants are monotone.
    static QuasiOrder indiscrete(Carrier carrier) {
        const std::size_t n = carrier.size();
        return QuasiOrder(std::move(carrier), std::vector<std::uint8_t>(n * n, 1));
    }

    const Carrier& carrier() const noexcept { return carrier_; }
    std::size_t size() const noexcept { return carrier_.size(); }

    bool leq(std::size_t x, std::size_t y) const { return rel_[x * size() + y] != 0; }
    bool less(std::size_t x, std::size_t y) const { return leq(x, y) && !leq(y, x); }
    bool equivalent(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }

    /// First pair x != y with x <= y <= x, in declaration order.
    std::optional<Pair> antisymmetry_violation() const {
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = x + 1; y < size(); ++y)
                if (equivalent(x, y)) return Pair{x, y};
        return std::nullopt;
    }

    bool is_antisymmetric() const { return !antisymmetry_violation().has_value(); }

    /// Non-reflexive related pairs in lexicographic index order.
    std::vector<Pair> relation_pairs() const {
        std::vector<Pair> out;
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                if (x != y && leq(x, y)) out.emplace_back(x, y);
        return out;
    }

    friend bool operator==(const QuasiOrder& a, const QuasiOrder& b) {
        return a.carrier_ == b.carrier_ && a.rel_ == b.rel_;
    }

private:
    QuasiOrder(Carrier carrier, std::vector<std::uint8_t> rel)
        : carrier_(std::move(carrier)), rel_(std::move(rel)) {}

    Carrier carrier_;
    std::vector<std::uint8_t> rel_;
};

/// A finite partial order: a finite Nachbin space under the discrete topology.
class FinitePoset {
public:
    FinitePoset() = default;

    explicit FinitePoset(QuasiOrder order) : order_(std::move(order)) {
        if (auto bad = order_.antisymmetry_violation())
            throw antisymmetry_violation(order_.carrier().label(bad->first), order_.carrier().label(bad->second));
    }

    static FinitePoset chain(const Carrier& carrier) {
        std::vector<QuasiOrder::Pair> pairs;
        for (std::size_t i = 1; i < carrier.size(); ++i) pairs.emplace_back(i - 1, i);
        return FinitePoset(QuasiOrder::closure(carrier, pairs));
    }

    static FinitePoset antichain(const Carrier& carrier) { return FinitePoset(QuasiOrder::discrete(carrier)); }

    const QuasiOrder& order() const noexcept { return order_; }
    const Carrier& carrier() const noexcept { return order_.carrier(); }
    std::size_t size() const noexcept { return order_.size(); }
    bool leq(std::size_t x, std::size_t y) const { return order_.leq(x, y); }
    bool less(std::size_t x, std::size_t y) const { return x != y && order_.leq(x, y); }

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.order_ == b.order_; }

private:
    QuasiOrder order_;
};

using LabelPair = std::pair<std::string, std::string>;

/// Closes `pairs` reflexively and transitively over `elements`, then validates.
/// With `require_antisymmetry` a closure with x <= y <= x, x != y, is rejected.
inline QuasiOrder validate_order(const Carrier& elements, std::span<const LabelPair> pairs,
                                 bool require_antisymmetry) {
    std::vector<QuasiOrder::Pair> idx;
    idx.reserve(pairs.size());
    for (const auto& [x, y] : pairs) idx.emplace_back(elements.index_of(x), elements.index_of(y));
    auto order = QuasiOrder::closure(elements, idx);
    if (require_antisymmetry) {
        if (auto bad = order.antisymmetry_violation())
            throw antisymmetry_violation(elements.label(bad->first), elements.label(bad->second));
    }
    return order;
}

inline FinitePoset make_poset(const Carrier& elements, std::span<const LabelPair> pairs) {
    return FinitePoset(validate_order(elements, pairs, true));
}

inline bool is_monotone(const RationalFn& f, const QuasiOrder& q) {
    require_same_carrier(f.carrier(), q.carrier());
    for (std::size_t x = 0; x < q.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y)
            if (q.leq(x, y) && f[x] > f[y]) return false;
    return true;
}

enum class Direction { upper, lower };

/// upper: the least Q-monotone g >= f, g(x) = max{f(y) : y <= x}.
/// lower: the greatest Q-monotone g <= f, g(x) = min{f(y) : x <= y}.
inline RationalFn monotone_envelope(const RationalFn& f, const QuasiOrder& q, Direction direction) {
    require_same_carrier(f.carrier(), q.carrier());
    std::vector<Rational> out(f.size());
    for (std::size_t x = 0; x < q.size(); ++x) {
        Rational best = f[x];
        for (std::size_t y = 0; y < q.size(); ++y) {
            if (direction == Direction::upper) {
                if (q.leq(y, x) && f[y] > best) best = f[y];
            } else {
                if (q.leq(x, y) && f[y] < best) best = f[y];
            }
        }
        out[x] = best;
    }
    return RationalFn(f.carrier(), std::move(out));
}

/// The partial order of equivalence classes x ~ y iff x <= y <= x.
struct Antisymmetrization {
    FinitePoset blocks;
    std::vector<std::size_t> projection; // element index -> block index
    std::vector<std::vector<std::size_t>> members;
};

inline Antisymmetrization antisymmetrize(const QuasiOrder& q) {
    const std::size_t n = q.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> projection(n, unset);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t x = 0; x < n; ++x) {
        if (projection[x] != unset) continue;
        projection[x] = members.size();
        members.push_back({x});
        for (std::size_t y = x + 1; y < n; ++y)
            if (q.equivalent(x, y)) {
                projection[y] = projection[x];
                members.back().push_back(y);
            }
    }
    std::vector<std::string> labels;
    for (const auto& block : members) {
        if (block.size() == 1) {
            labels.push_back(q.carrier().label(block.front()));
            continue;
        }
        std::string label = "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) label += ",";
            label += q.carrier().label(block[i]);
        }
        labels.push_back(label + "}");
    }
    std::vector<QuasiOrder::Pair> pairs;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = 0; b < members.size(); ++b)
            if (a != b && q.leq(members[a].front(), members[b].front())) pairs.emplace_back(a, b);
    FinitePoset blocks(QuasiOrder::closure(Carrier(std::move(labels)), pairs));
    return {std::move(blocks), std::move(projection), std::move(members)};
}

/// A topological numbering: injective, with x < y implying rank(x) < rank(y).
/// Among the available minimal elements the earliest declared is taken first.
inline std::vector<std::size_t> linear_extension(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> rank(n, 0);
    std::vector<bool> placed(n, false);
    for (std::size_t next = 0; next < n; ++next) {
        for (std::size_t x = 0; x < n; ++x) {
            if (placed[x]) continue;
            bool minimal = true;
            for (std::size_t y = 0; y < n && minimal; ++y)
                if (!placed[y] && p.less(y, x)) minimal = false;
            if (minimal) {
                rank[x] = next;
                placed[x] = true;
                break;
            }
        }
    }
    return rank;
}

} // namespace nachbin
