// SplitMix64 with the standard additive and mixing constants. The state
// advances by the Weyl increment once per draw, so jumping J draws equals
// adding J * kGamma to the state.

#pragma once

#include <cstdint>

namespace ldio {

struct SplitMix64 {
    uint64_t state = 0;

    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    uint64_t next() {
        uint64_t z = (state += kGamma);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Stream for one sample: the run seed jumped by sample_index * 2^32 draws.
// Samples never draw anywhere near 2^32 values, so streams cannot overlap
// and every sample is reproducible in isolation.
inline SplitMix64 sample_stream(uint64_t seed, uint32_t sample_index) {
    return SplitMix64{seed + (static_cast<uint64_t>(sample_index) << 32) * SplitMix64::kGamma};
}

}  // namespace ldio
