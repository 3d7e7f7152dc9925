#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "carrier.hpp"
#include "rational.hpp"

namespace nachbin {

/// An element of R^X: one exact rational per carrier point.
class RationalFn {
public:
    RationalFn() = default;

    RationalFn(Carrier carrier, std::vector<Rational> values)
        : carrier_(std::move(carrier)), values_(std::move(values)) {
        if (values_.size() != carrier_.size())
            throw carrier_mismatch("expected " + std::to_string(carrier_.size()) + " values, got " +
                                   std::to_string(values_.size()));
    }

    static RationalFn constant(Carrier carrier, const Rational& r) {
        std::vector<Rational> v(carrier.size(), r);
        return RationalFn(std::move(carrier), std::move(v));
    }

    static RationalFn zero(Carrier carrier) { return constant(std::move(carrier), Rational(0)); }

    static RationalFn from_map(Carrier carrier, const std::map<std::string, Rational>& values) {
        std::vector<Rational> v(carrier.size());
        std::vector<bool> seen(carrier.size(), false);
        for (const auto& [label, q] : values) {
            auto i = carrier.index_of(label);
            v[i] = q;
            seen[i] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) throw carrier_mismatch("no value for '" + carrier.label(i) + "'");
        return RationalFn(std::move(carrier), std::move(v));
    }

    const Carrier& carrier() const noexcept { return carrier_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    Rational& operator[](std::size_t i) { return values_[i]; }
    const Rational& at(std::string_view label) const { return values_[carrier_.index_of(label)]; }

    bool is_constant() const {
        return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>{}) == values_.end();
    }

    Rational min() const {
        if (values_.empty()) throw empty_carrier();
        return *std::min_element(values_.begin(), values_.end());
    }

    Rational max() const {
        if (values_.empty()) throw empty_carrier();
        return *std::max_element(values_.begin(), values_.end());
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.carrier_ == b.carrier_ && a.values_ == b.values_;
    }

private:
    Carrier carrier_;
    std::vector<Rational> values_;
};

namespace detail {

template <class Op>
RationalFn zip(const RationalFn& a, const RationalFn& b, Op op) {
    require_same_carrier(a.carrier(), b.carrier());
    std::vector<Rational> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(op(a[i], b[i]));
    return RationalFn(a.carrier(), std::move(out));
}

template <class Op>
RationalFn map(const RationalFn& a, Op op) {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto& v : a.values()) out.push_back(op(v));
    return RationalFn(a.carrier(), std::move(out));
}

} // namespace detail

inline RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return detail::zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
inline RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return detail::zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
inline RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return detail::zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}
inline RationalFn operator-(const RationalFn& a) {
    return detail::map(a, [](const Rational& x) { return Rational(-x); });
}
inline RationalFn operator+(const RationalFn& a, const Rational& r) {
    return detail::map(a, [&](const Rational& x) { return Rational(x + r); });
}
inline RationalFn operator-(const RationalFn& a, const Rational& r) {
    return detail::map(a, [&](const Rational& x) { return Rational(x - r); });
}
inline RationalFn operator*(const Rational& r, const RationalFn& a) {
    return detail::map(a, [&](const Rational& x) { return Rational(r * x); });
}

inline RationalFn join(const RationalFn& a, const RationalFn& b) {
    return detail::zip(a, b, [](const Rational& x, const Rational& y) { return x < y ? y : x; });
}
inline RationalFn meet(const RationalFn& a, const RationalFn& b) {
    return detail::zip(a, b, [](const Rational& x, const Rational& y) { return y < x ? y : x; });
}
inline RationalFn join(const RationalFn& a, const Rational& r) {
    return detail::map(a, [&](const Rational& x) { return x < r ? r : x; });
}
inline RationalFn meet(const RationalFn& a, const Rational& r) {
    return detail::map(a, [&](const Rational& x) { return r < x ? r : x; });
}

/// The pointwise order of R^X.
inline bool pointwise_leq(const RationalFn& a, const RationalFn& b) {
    require_same_carrier(a.carrier(), b.carrier());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool is_nonnegative(const RationalFn& a) {
    return std::all_of(a.values().begin(), a.values().end(), [](const Rational& x) { return x >= 0; });
}

/// a+ = a v 0
inline RationalFn positive_part(const RationalFn& a) { return join(a, Rational(0)); }
/// a- = (-a) v 0, so that a = a+ - a-
inline RationalFn negative_part(const RationalFn& a) { return join(-a, Rational(0)); }
/// |a| = a v (-a)
inline RationalFn abs_value(const RationalFn& a) { return join(a, -a); }

struct PosNegAbs {
    RationalFn positive;
    RationalFn negative;
    RationalFn absolute;
};

inline PosNegAbs pos_neg_abs(const RationalFn& a) {
    return {positive_part(a), negative_part(a), abs_value(a)};
}

/// inf{r : |a| <= r}, which over a finite carrier is attained: max |a(x)|.
inline Rational sup_norm(const RationalFn& a) {
    if (a.size() == 0) throw empty_carrier();
    Rational best(0);
    for (const auto& v : a.values()) {
        Rational m = abs(v);
        if (m > best) best = m;
    }
    return best;
}

/// A closed unital l-subalgebra of R^X, given as the functions constant on each block.
class SubalgebraPartition {
public:
    /// `block_of[i]` is an arbitrary tag; blocks are renumbered by first appearance.
    SubalgebraPartition(Carrier carrier, const std::vector<std::size_t>& block_of)
        : carrier_(std::move(carrier)) {
        if (block_of.size() != carrier_.size()) throw carrier_mismatch();
        std::map<std::size_t, std::size_t> renumber;
        block_of_.reserve(block_of.size());
        for (std::size_t i = 0; i < block_of.size(); ++i) {
            auto [it, inserted] = renumber.try_emplace(block_of[i], blocks_.size());
            if (inserted) blocks_.emplace_back();
            blocks_[it->second].push_back(i);
            block_of_.push_back(it->second);
        }
    }

    static SubalgebraPartition discrete(const Carrier& carrier) {
        std::vector<std::size_t> ids(carrier.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
        return SubalgebraPartition(carrier, ids);
    }

    static SubalgebraPartition single_block(const Carrier& carrier) {
        return SubalgebraPartition(carrier, std::vector<std::size_t>(carrier.size(), 0));
    }

    /// Builds a partition from labelled blocks; blocks must be nonempty, disjoint and cover the carrier.
    static SubalgebraPartition from_blocks(const Carrier& carrier,
                                           const std::vector<std::vector<std::string>>& blocks) {
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> ids(carrier.size(), unset);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw parse_error("empty block");
            for (const auto& label : blocks[b]) {
                auto i = carrier.index_of(label);
                if (ids[i] != unset) throw parse_error("element '" + label + "' appears in two blocks");
                ids[i] = b;
            }
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == unset) throw parse_error("element '" + carrier.label(i) + "' is in no block");
        return SubalgebraPartition(carrier, ids);
    }

    const Carrier& carrier() const noexcept { return carrier_; }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::size_t block_of(std::size_t i) const { return block_of_.at(i); }
    bool separates_points() const noexcept { return blocks_.size() == carrier_.size(); }

    bool contains(const RationalFn& f) const {
        require_same_carrier(carrier_, f.carrier());
        for (const auto& block : blocks_)
            for (auto i : block)
                if (f[i] != f[block.front()]) return false;
        return true;
    }

    /// True when every block of *this lies inside a block of `coarser`.
    bool refines(const SubalgebraPartition& coarser) const {
        require_same_carrier(carrier_, coarser.carrier_);
        for (const auto& block : blocks_)
            for (auto i : block)
                if (coarser.block_of_[i] != coarser.block_of_[block.front()]) return false;
        return true;
    }

    friend bool operator==(const SubalgebraPartition& a, const SubalgebraPartition& b) {
        return a.carrier_ == b.carrier_ && a.block_of_ == b.block_of_;
    }

private:
    Carrier carrier_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// The uniformly closed unital l-subalgebra generated by `generators`: the functions
/// constant on the kernel partition x ~ y iff g(x) = g(y) for every generator g.
inline SubalgebraPartition generate_closed_subalgebra(const Carrier& carrier,
                                                      std::span<const RationalFn> generators) {
    for (const auto& g : generators) require_same_carrier(carrier, g.carrier());
    const std::size_t n = carrier.size();
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
            bool same = std::all_of(generators.begin(), generators.end(),
                                    [&](const RationalFn& g) { return g[i] == g[j]; });
            if (same) {
                ids[i] = ids[j];
                break;
            }
        }
    }
    return SubalgebraPartition(carrier, ids);
}

} // namespace nachbin
