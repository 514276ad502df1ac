#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "netope/errors.hpp"

namespace netope {

// Deterministic random source. All distributions are implemented by hand on
// top of mt19937_64 so that a given seed produces the same stream on every
// platform and standard library (std:: distributions are not portable).
class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the second deviate is cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0,1] so log() is finite.
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    // Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
    uint64_t uniform_below(uint64_t bound) {
        if (bound == 0) throw parameter_error("uniform_below: bound must be positive");
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return draw % bound;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        if (hi < lo) throw parameter_error("uniform_int: hi < lo");
        return lo + static_cast<int>(uniform_below(static_cast<uint64_t>(hi - lo) + 1));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Draw an index from a probability vector by inverse CDF. The final
    // bucket absorbs rounding slack so the draw always lands.
    int categorical(std::span<const double> probs) {
        if (probs.empty()) throw parameter_error("categorical: empty probability vector");
        const double u = uniform01();
        double cum = 0.0;
        for (size_t k = 0; k + 1 < probs.size(); ++k) {
            cum += probs[k];
            if (u < cum) return static_cast<int>(k);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    // Independent substream derived from this source's seed and a stream id.
    Rng child(uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ULL))); }

  private:
    static uint64_t mix(uint64_t x) {  // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    uint64_t seed_;
    std::mt19937_64 engine_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace netope
