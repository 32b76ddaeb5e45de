// rng.hpp
// Deterministic random number generation. mt19937_64 is fully specified by
// the standard; the uniform/normal transforms are implemented here so that
// streams replay bit-identically across standard libraries.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>

namespace statarb {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for a (master seed, counter) pair; used to make
    // per-simulation draws independent of execution order.
    static Rng stream(std::uint64_t master, std::uint64_t counter) {
        return Rng(splitmix64(master + 0x9E3779B97F4A7C15ull * (counter + 1)));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1].
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the pair's second draw is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Index drawn from a discrete distribution (weights summing to ~1).
    int categorical(std::span<const double> probs) {
        double u = uniform();
        double cum = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            cum += probs[i];
            if (u <= cum) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace statarb
