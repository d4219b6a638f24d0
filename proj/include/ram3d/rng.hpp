// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace ram3d {

// Splitmix64 stream. Bit-stable across platforms, which keeps whole training
// runs reproducible from a single seed; <random> distributions are not
// guaranteed identical between standard library implementations.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // Box-Muller; u clamped away from 0 so log() stays finite.
        double u = next_uniform();
        double v = next_uniform();
        if (u < 0x1.0p-53) u = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 2.0 * 3.14159265358979323846 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// FNV-1a over the purpose tag, folded with the numeric keys through splitmix
// steps. Streams for distinct (purpose, a, b) are statistically independent.
inline uint64_t derive_seed(uint64_t root, std::string_view purpose, uint64_t a = 0, uint64_t b = 0) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : purpose) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    auto mix = [](uint64_t x) {
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    h = mix(h ^ root);
    h = mix(h + 0x9e3779b97f4a7c15ull * (a + 1));
    h = mix(h + 0x9e3779b97f4a7c15ull * (b + 1));
    return h;
}

inline RngStream derive_stream(uint64_t root, std::string_view purpose, uint64_t a = 0, uint64_t b = 0) {
    return RngStream(derive_seed(root, purpose, a, b));
}

} // namespace ram3d
