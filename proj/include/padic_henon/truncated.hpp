#pragma once

// Finite-precision p-adic expansions, used only where a value is forced to be
// irrational over Q (square roots and the fixed points built from them).
//
// A nonzero value is p^valuation * (d_0 + d_1 p + ... + d_{N-1} p^{N-1} + O(p^N))
// with d_0 != 0; N is the relative precision. Zero is a distinguished marker
// that carries the absolute precision k to which the value is known to vanish
// (x = O(p^k)).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padic_henon/prime.hpp"
#include "padic_henon/rational.hpp"

namespace padic_henon {

class TruncatedPadic {
public:
    // Zero known modulo p^absolute_precision.
    static TruncatedPadic zero(Prime p, std::int64_t absolute_precision);

    // Expansion of an exact rational to `precision` digits (x = 0 gives the zero
    // marker with absolute precision `precision`).
    static TruncatedPadic from_rational(const PadicRational& x, std::int64_t precision);

    // p^valuation * unit with unit an integer in [1, p^precision) prime to p.
    static TruncatedPadic from_unit(Prime p, std::int64_t valuation, const mpz_class& unit,
                                    std::int64_t precision);

    Prime prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return zero_; }
    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t precision() const noexcept { return zero_ ? 0 : precision_; }
    // Exponent k such that the value is known modulo p^k.
    std::int64_t absolute_precision() const noexcept {
        return zero_ ? valuation_ : valuation_ + precision_;
    }
    NormExponent norm_exponent() const {
        return zero_ ? std::nullopt : NormExponent(-valuation_);
    }

    std::vector<std::uint64_t> digits() const;
    const mpz_class& unit() const noexcept { return unit_; }

    // True when the known digits match on the overlap of the two precisions.
    bool agrees_with(const PadicRational& x) const;

    TruncatedPadic operator-() const;
    friend TruncatedPadic operator+(const TruncatedPadic& x, const TruncatedPadic& y);
    friend TruncatedPadic operator-(const TruncatedPadic& x, const TruncatedPadic& y);
    friend TruncatedPadic operator*(const TruncatedPadic& x, const TruncatedPadic& y);
    // Division by a unit-normalised value; y must be nonzero.
    friend TruncatedPadic operator/(const TruncatedPadic& x, const TruncatedPadic& y);

    // Equal valuations and digits agree on the overlap of the precisions.
    friend bool operator==(const TruncatedPadic& x, const TruncatedPadic& y);

private:
    TruncatedPadic(Prime p) : p_(p) {}

    Prime p_;
    bool zero_ = true;
    std::int64_t valuation_ = 0;  // absolute precision for the zero marker
    std::int64_t precision_ = 0;
    mpz_class unit_;              // in [1, p^precision), prime to p
};

// Hensel-lifted square root to `precision` digits. The returned root has
// leading digit in 1..(p-1)/2; the other root is its negation.
// Throws std::domain_error naming the obstruction when x is not a square.
TruncatedPadic sqrt(const PadicRational& x, std::int64_t precision);

// A square root of u modulo p for a quadratic residue u (Tonelli-Shanks).
mpz_class sqrt_mod_prime(const mpz_class& u, const mpz_class& p);

}  // namespace padic_henon
