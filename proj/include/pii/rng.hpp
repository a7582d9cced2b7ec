#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace pii {

// SplitMix64 finalizer. Also used as the seed-mixing primitive: all seed
// derivations in this library reduce to compositions of this function, so
// datasets are reproducible from the documented recipe alone (see README).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// derive_seed(base, i) gives an independent stream seed for sub-stream i.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base ^ ((index + 1) * 0xD1B54A32D192ED03ULL));
}

/// seed for frame k of scan position p under a master seed
constexpr std::uint64_t frame_seed(std::uint64_t master, int position_index, int frame_index) {
    return derive_seed(derive_seed(master, static_cast<std::uint64_t>(position_index)),
                       static_cast<std::uint64_t>(frame_index));
}

/// SplitMix64 sequence generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// uniform double in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// uniform double in (0, 1]
    double next_open_unit() { return 1.0 - next_unit(); }

    /// standard normal pair via Box-Muller (consumes exactly two draws)
    std::pair<double, double> next_gauss_pair() {
        const double u1 = next_open_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::uint64_t state_;
};

}  // namespace pii
