#pragma once

#include <cstdint>
#include <vector>

#include "fnalg.hpp"

namespace nachbin {

/// SplitMix64. `split(i)` derives an independent stream from the current state and an index,
/// so per-worker or per-instance generators stay reproducible from one 64-bit seed.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split(std::uint64_t index) const {
        SplitMix64 mixer(state_ ^ (index * 0xd1b54a32d192ed03ULL));
        return SplitMix64(mixer());
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>((*this)() % span);
    }

    bool coin(unsigned one_in = 2) { return (*this)() % one_in == 0; }

private:
    std::uint64_t state_;
};

/// Coordinates k/8 with k uniform in [-16, 16].
inline Rational sample_coordinate(SplitMix64& rng) { return make_rational(rng.uniform(-16, 16), 8); }

inline RationalFn sample_function(const Carrier& carrier, SplitMix64& rng) {
    std::vector<Rational> v;
    v.reserve(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) v.push_back(sample_coordinate(rng));
    return RationalFn(carrier, std::move(v));
}

/// Nonnegative coordinates k/8 with k uniform in [0, 16].
inline RationalFn sample_nonnegative(const Carrier& carrier, SplitMix64& rng) {
    std::vector<Rational> v;
    v.reserve(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) v.push_back(make_rational(rng.uniform(0, 16), 8));
    return RationalFn(carrier, std::move(v));
}

inline Rational sample_nonnegative_scalar(SplitMix64& rng) { return make_rational(rng.uniform(0, 16), 8); }

} // namespace nachbin
