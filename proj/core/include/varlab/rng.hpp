#pragma once

#include <cstdint>
#include <random>

namespace varlab {

/// Seed used by every randomized probe unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 123456789ull;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic uniform stream. Doubles are derived from the raw 64-bit
/// output, so sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Independent substream of a master seed.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(splitmix64(seed ^ splitmix64(stream_id)));
    }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0,1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace varlab
