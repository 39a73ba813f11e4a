// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>

namespace fsorf::mc {

/// Counter-based 64-bit generator: output k of stream (seed, key) is a SplitMix64 finalizer applied
/// to a counter, so any substream can be reproduced without touching the others.
class CounterEngine {
public:
    using result_type = std::uint64_t;

    CounterEngine(std::uint64_t seed, std::uint64_t key) : base_(mix(seed ^ mix(key + 0x9E3779B97F4A7C15ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(base_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

    std::uint64_t counter() const { return counter_; }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

/// Antithetic companion: emits the bitwise complement of the wrapped stream (u -> 1 - u).
template <class Engine>
class Reflected {
public:
    using result_type = typename Engine::result_type;

    explicit Reflected(Engine e) : engine_(e) {}

    static constexpr result_type min() { return Engine::min(); }
    static constexpr result_type max() { return Engine::max(); }

    result_type operator()() { return Engine::max() - (engine_() - Engine::min()); }

private:
    Engine engine_;
};

}  // namespace fsorf::mc
