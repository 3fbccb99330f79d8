#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "padic_henon/point.hpp"
#include "padic_henon/prime.hpp"
#include "padic_henon/rational.hpp"

namespace testing_support {

inline padic_henon::PadicRational Q(const std::string& text, std::uint64_t p) {
    return padic_henon::parse_rational(text, padic_henon::Prime(p));
}

inline padic_henon::Point Pt(const std::string& x, const std::string& y, std::uint64_t p) {
    return {Q(x, p), Q(y, p)};
}

// v_p of a nonzero rational, computed by repeated division.
inline std::int64_t naive_valuation(const mpq_class& q, std::uint64_t p) {
    mpz_class num = q.get_num(), den = q.get_den();
    std::int64_t v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

inline mpq_class pow_q(std::uint64_t p, std::int64_t k) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? mpq_class(1, z) : mpq_class(z);
}

}  // namespace testing_support
