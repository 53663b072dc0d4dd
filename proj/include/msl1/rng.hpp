#ifndef MSL1_RNG_HPP
#define MSL1_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace msl1 {

// The one generator used everywhere in this project: xoshiro256++ seeded
// through splitmix64. Implemented here rather than taken from <random> so
// that streams are bit-identical across standard libraries; golden tests
// regenerate matrices from (kind, seed, M, N) instead of storing them.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform integer in [0, bound) by rejection.
    std::uint64_t uniform_int(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    // Stable derivation of per-trial seeds from (base, a, b).
    static std::uint64_t derive(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = base;
        s = splitmix64(s) ^ (a * 0x9e3779b97f4a7c15ull);
        s = splitmix64(s) ^ (b * 0xbf58476d1ce4e5b9ull);
        return splitmix64(s);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& s) {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace msl1

#endif
