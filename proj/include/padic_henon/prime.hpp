#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace padic_henon {

// An odd prime, validated at construction. p = 2 is rejected.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    mpz_class as_mpz() const { return mpz_class(static_cast<unsigned long>(p_)); }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint64_t p_;
};

bool is_odd_prime(std::uint64_t p);

}  // namespace padic_henon
