#pragma once

// Fibonacci numbers with the shifted indexing F_{-2} = 1, F_{-1} = 0,
// F_0 = F_1 = 1, F_n = F_{n-1} + F_{n-2}.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace padic_henon {

// Exact F_n for n >= -2 (memoized). Throws std::out_of_range for n < -2.
mpz_class fib(std::int64_t n);

// Largest index for which fib64 is available.
inline constexpr int kFib64Max = 90;

// F_n as a signed 64-bit value for -2 <= n <= kFib64Max.
std::int64_t fib64(int n);

// F_n F_{n-2} - F_{n-1}^2, equal to (-1)^n.
mpz_class cassini(std::int64_t n);

// F_{n+1} F_{n-2} - F_n F_{n-1}, equal to (-1)^n.
mpz_class cassini2(std::int64_t n);

// Growth exponents from the |c| < 1 escape argument:
// K_0 = K_1 = 1, K_{2i} = K_{2i-1} + 1, K_{2i+1} = K_{2i} + K_{2i-1}.
std::vector<mpz_class> k_sequence(std::size_t count);

}  // namespace padic_henon
