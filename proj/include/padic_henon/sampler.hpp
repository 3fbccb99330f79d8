#pragma once

#include <cstdint>
#include <random>

#include "padic_henon/rational.hpp"

namespace padic_henon {

// Seeded source of random digits. Each worker owns its own instance.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// p^{-a} * u with u uniform among integers in [1, p^digit_count) prime to p,
// so norm_exponent of the result is exactly a.
PadicRational sample_with_norm(std::int64_t a, std::int64_t digit_count, Sampler& sampler, Prime p);

}  // namespace padic_henon
