#pragma once

// Exact elements of Q viewed inside Q_p.
//
// A PadicRational is a reduced fraction together with the odd prime p that
// fixes which absolute value |.|_p applies. The p-adic valuation is computed
// once at construction (cheaply, from the operands, where the ultrametric
// law allows it) so that norm queries along long orbits are O(1).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "padic_henon/prime.hpp"

namespace padic_henon {

// log_p |x|_p, i.e. -v_p(x). std::nullopt is the zero marker (|0| = 0).
// std::optional orders nullopt below every engaged value, which matches
// treating the zero marker as -infinity in max/min and comparisons.
using NormExponent = std::optional<std::int64_t>;

class PadicRational {
public:
    explicit PadicRational(Prime p);                       // zero
    PadicRational(long value, Prime p);                    // integer
    PadicRational(const mpz_class& num, const mpz_class& den, Prime p);
    PadicRational(const mpq_class& value, Prime p);

    Prime prime() const noexcept { return p_; }
    const mpq_class& value() const noexcept { return q_; }
    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return !valuation_.has_value(); }

    // v_p(x); nullopt means +infinity (x = 0).
    std::optional<std::int64_t> valuation() const noexcept { return valuation_; }
    NormExponent norm_exponent() const noexcept {
        return valuation_ ? NormExponent(-*valuation_) : std::nullopt;
    }

    // x / p^v(x): numerator and denominator both prime to p. Requires x != 0.
    mpq_class unit_part() const;

    // Bits in numerator plus bits in denominator.
    std::size_t bit_size() const;

    std::string to_string() const;  // "num/den"

    PadicRational operator-() const;
    friend PadicRational operator+(const PadicRational& x, const PadicRational& y);
    friend PadicRational operator-(const PadicRational& x, const PadicRational& y);
    friend PadicRational operator*(const PadicRational& x, const PadicRational& y);
    friend PadicRational operator/(const PadicRational& x, const PadicRational& y);

    friend bool operator==(const PadicRational& x, const PadicRational& y) {
        return x.p_ == y.p_ && x.q_ == y.q_;
    }

private:
    struct Trusted {};
    PadicRational(mpq_class value, Prime p, std::optional<std::int64_t> valuation, Trusted);

    static std::optional<std::int64_t> compute_valuation(const mpq_class& q, Prime p);

    Prime p_;
    mpq_class q_;
    std::optional<std::int64_t> valuation_;
};

// Validating constructor: rejects den = 0 and p that is not an odd prime.
PadicRational make_rational(const mpz_class& num, const mpz_class& den, std::uint64_t p);

inline NormExponent norm_exponent(const PadicRational& x) { return x.norm_exponent(); }

// Parses "num/den" or "num" (decimal, optional sign).
PadicRational parse_rational(std::string_view text, Prime p);

// p^k as an exact rational, k of either sign.
PadicRational prime_power(Prime p, std::int64_t k);

// Squares in Q_p (p odd): x = p^v u is a nonzero square iff v is even and u
// is a quadratic residue mod p.
enum class SquareClass { Zero, Square, OddValuation, NonResidue };

SquareClass square_class(const PadicRational& x);
const char* to_string(SquareClass c);

// True for nonzero squares and for 0 (which is reported as degenerate by square_class).
bool is_square(const PadicRational& x);

// Exact square root in Q when numerator and denominator are perfect squares;
// the root returned is the one whose leading p-adic digit lies in 1..(p-1)/2.
std::optional<PadicRational> rational_sqrt(const PadicRational& x);

}  // namespace padic_henon
