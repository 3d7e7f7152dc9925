#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "order.hpp"

namespace nachbin {

namespace detail {

inline std::uint32_t relation_bits(const std::vector<std::uint8_t>& strict, std::size_t n,
                                   const std::vector<std::size_t>& perm) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (strict[perm[i] * n + perm[j]]) bits |= std::uint32_t{1} << (i * n + j);
    return bits;
}

} // namespace detail

/// One representative per isomorphism class of posets on n elements, labelled "0".."n-1".
/// Candidates are strict orders contained in the natural order (every poset has a linear
/// extension), deduplicated by the minimal relation matrix over all relabellings.
inline std::vector<FinitePoset> enumerate_posets(std::size_t n) {
    if (n > 5) throw too_large_to_enumerate(n);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    const Carrier carrier = Carrier::numbered(n);
    std::set<std::uint32_t> seen;
    std::vector<FinitePoset> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        std::vector<std::uint8_t> strict(n * n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1U) strict[slots[s].first * n + slots[s].second] = 1;
        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i)
            for (std::size_t j = 0; j < n && transitive; ++j)
                for (std::size_t k = 0; k < n && transitive; ++k)
                    if (strict[i * n + j] && strict[j * n + k] && !strict[i * n + k]) transitive = false;
        if (!transitive) continue;

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t canonical = ~std::uint32_t{0};
        do {
            canonical = std::min(canonical, detail::relation_bits(strict, n, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canonical).second) continue;

        std::vector<QuasiOrder::Pair> pairs;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1U) pairs.push_back(slots[s]);
        out.emplace_back(QuasiOrder::closure(carrier, pairs));
    }
    return out;
}

/// All isomorphism classes with 1..max_size elements, smallest first.
inline std::vector<FinitePoset> enumerate_posets_up_to(std::size_t max_size) {
    std::vector<FinitePoset> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        auto level = enumerate_posets(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Every map X -> Y (as index vectors), in lexicographic order.
inline std::vector<std::vector<std::size_t>> enumerate_maps(std::size_t from, std::size_t to) {
    std::vector<std::vector<std::size_t>> out;
    if (to == 0) {
        if (from == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> current(from, 0);
    while (true) {
        out.push_back(current);
        std::size_t i = from;
        while (i > 0) {
            --i;
            if (++current[i] < to) break;
            current[i] = 0;
            if (i == 0) return out;
        }
        if (from == 0) return out;
    }
}

inline bool is_order_preserving(const std::vector<std::size_t>& map, const QuasiOrder& from, const QuasiOrder& to) {
    for (std::size_t x = 0; x < from.size(); ++x)
        for (std::size_t y = 0; y < from.size(); ++y)
            if (from.leq(x, y) && !to.leq(map[x], map[y])) return false;
    return true;
}

} // namespace nachbin
