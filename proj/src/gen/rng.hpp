#pragma once

#include <cstdint>

namespace graphbench {

// Splittable 64-bit generator (splitmix64). Streams are derived by mixing the
// seed with a stream id, so every vertex owns an independent sequence and
// parallel generation draws the same numbers as the serial loop.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed, uint64_t stream = 0)
        : state_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform draw in (0, 1]; never returns 0.
    double next_unit_open_closed() {
        return 1.0 - static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform draw in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) via rejection-free 128-bit multiply.
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

} // namespace graphbench
