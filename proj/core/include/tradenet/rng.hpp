#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tradenet {

// All randomness flows from one master seed through named streams:
//
//   stream(seed, tag, index) = mix(mix(seed ^ fnv1a64(tag)) ^ index)
//
// with mix the SplitMix64 finalizer. Stage name + sample index identify a
// stream, so any stage (and any single sample) is reproducible on its own.
namespace seeding {

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    return mix(mix(seed ^ fnv1a64(tag)) ^ index);
}

} // namespace seeding

// mt19937_64 with hand-rolled bounded draws. std::uniform_int_distribution
// is implementation-defined, so sampling goes through these helpers to keep
// ensembles byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased uniform draw in [0, bound) by rejection on the top range.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool next_bool() { return (engine_() & 1ULL) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace tradenet
