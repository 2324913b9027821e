#pragma once

#include <cmath>
#include <cstdint>

namespace extremal {

// Deterministic, portable RNG. std::mt19937 + std::uniform_*_distribution are
// not bit-reproducible across standard libraries, and reproducibility of
// solver runs / discovery trajectories given a seed is a hard requirement
// here, so we carry our own generator: xoshiro256** seeded via splitmix64.

inline std::uint64_t splitmix64_next(std::uint64_t &state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto &word : state_)
            word = splitmix64_next(sm);
    }

    // Independent substream: stream(seed, a) and stream(seed, b) are
    // decorrelated for a != b, and both differ from Rng(seed). Used to give
    // every solver start / loop round its own generator so results do not
    // depend on scheduling.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) noexcept {
        std::uint64_t sm = seed;
        const std::uint64_t root = splitmix64_next(sm);
        return Rng(root ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, bound). bound == 0 is a caller bug; returns 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        return bound == 0 ? 0 : next_u64() % bound;
    }

    // Box-Muller (cosine branch only, so one call consumes exactly two draws).
    double normal(double mean = 0.0, double stddev = 1.0) noexcept {
        const double u1 = 1.0 - next_double(); // (0, 1]: keeps log() finite
        const double u2 = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * radius * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace extremal
