#include "padic_henon/sampler.hpp"

#include <stdexcept>

namespace padic_henon {

PadicRational sample_with_norm(std::int64_t a, std::int64_t digit_count, Sampler& sampler, Prime p) {
    if (digit_count < 1) throw std::invalid_argument("digit_count must be at least 1");
    const auto pv = static_cast<std::int64_t>(p.value());
    const mpz_class pz = p.as_mpz();
    // Horner from the most significant digit down; digit 0 is a nonzero unit digit.
    mpz_class u = 0;
    for (std::int64_t i = digit_count - 1; i >= 1; --i) {
        u = u * pz + static_cast<unsigned long>(sampler.uniform(0, pv - 1));
    }
    u = u * pz + static_cast<unsigned long>(sampler.uniform(1, pv - 1));
    return PadicRational(u, 1, p) * prime_power(p, -a);
}

}  // namespace padic_henon
