#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fods {

/// One SplitMix64 step, used to whiten seeds before they reach an engine.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Derives the seed of an independent substream from a base seed and up to
/// three lane indices (trial index, sample index, ...). The mix is iterated
/// SplitMix64, so the derivation is order-sensitive and collision-resistant
/// for practical lane counts. Parallel lanes seeded this way produce
/// schedule-independent results.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::uint64_t a,
                                    std::uint64_t b = 0,
                                    std::uint64_t c = 0) noexcept {
    std::uint64_t s = splitmix64(base ^ 0x243F6A8885A308D3ull);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

/// Deterministic random source: std::mt19937_64 (fully specified by the
/// standard) combined with explicit uniform and Gaussian transforms, so the
/// produced streams do not depend on the standard library's distribution
/// implementations. Gaussian draws use the Marsaglia polar method with a
/// cached spare.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal draw.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    double normal(double stddev) { return stddev * normal(); }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace fods
