#include "padic_henon/prime.hpp"

#include <stdexcept>
#include <string>

namespace padic_henon {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    mpz_class z(static_cast<unsigned long>(p));
    // GMP's BPSW test is deterministic below 2^64.
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (p == 2) throw std::invalid_argument("p = 2 is not supported; p must be an odd prime");
    if (!is_odd_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

}  // namespace padic_henon
