#pragma once

#include <cstdint>

namespace rcdkit {

// Generator identifier echoed in reports; bump when the stream layout changes.
inline constexpr const char* kGeneratorVersion = "splitmix64-v1";

// splitmix64 (Steele, Lea, Flood 2014).  Small, fast, and trivially seedable,
// which is what matters here: every random choice must be reproducible from
// (seed, trial index) alone.
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

    // Uniform in [0, bound) via rejection, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

private:
    std::uint64_t state_;
};

// Per-trial stream: trial i of a run seeded with s draws from stream_seed(s, i).
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (trial + 1)));
    return g.next();
}

}  // namespace rcdkit
