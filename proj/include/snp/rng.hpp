#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "snp/constants.hpp"

namespace snp {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic per-stream generator: the (seed, stream) pair fully defines the
// sequence, so parallel work keyed by stream index is schedule-independent.
// Gaussians use an explicit Box-Muller so results do not depend on the C++
// library's unspecified normal_distribution.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed ^ (0xA5A5A5A5A5A5A5A5ULL + stream * 0x9E3779B97F4A7C15ULL);
        std::seed_seq seq{static_cast<unsigned>(splitmix64(s) >> 32),
                          static_cast<unsigned>(splitmix64(s)),
                          static_cast<unsigned>(splitmix64(s) >> 32),
                          static_cast<unsigned>(splitmix64(s))};
        engine_.seed(seq);
    }

    // uniform in [0, 1)
    double uniform() {
        return (engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = constants::two_pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace snp
