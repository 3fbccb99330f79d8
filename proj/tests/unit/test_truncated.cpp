#include <gtest/gtest.h>

#include <stdexcept>

#include "padic_henon/sampler.hpp"
#include "padic_henon/truncated.hpp"
#include "helpers.hpp"

using namespace padic_henon;
using testing_support::Q;

namespace {

// Base-p digits of the unit part of x modulo p^n, by long division over Q.
std::vector<std::uint64_t> oracle_digits(const mpq_class& x, std::uint64_t p, int n) {
    const std::int64_t v = testing_support::naive_valuation(x, p);
    mpq_class u = x / testing_support::pow_q(p, v);
    u.canonicalize();
    mpz_class mod = 1;
    for (int i = 0; i < n; ++i) mod *= p;
    mpz_class inv;
    mpz_class den = u.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class r = (u.get_num() * inv) % mod;
    if (r < 0) r += mod;
    std::vector<std::uint64_t> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(mpz_class(r % p).get_ui());
        r /= p;
    }
    return out;
}

}  // namespace

TEST(Truncated, DigitsOfRationals) {
    const auto x = TruncatedPadic::from_rational(Q("-1", 3), 6);
    EXPECT_EQ(x.digits(), (std::vector<std::uint64_t>{2, 2, 2, 2, 2, 2}));
    EXPECT_EQ(x.valuation(), 0);
    const auto y = TruncatedPadic::from_rational(Q("2/75", 5), 5);
    EXPECT_EQ(y.valuation(), -2);
    EXPECT_EQ(y.digits(), oracle_digits(mpq_class(2, 75), 5, 5));
}

TEST(Truncated, ArithmeticAgreesWithExactRationals) {
    const Prime p(7);
    Sampler s(3);
    for (int i = 0; i < 300; ++i) {
        const auto x = sample_with_norm(s.uniform(-3, 3), 6, s, p);
        const auto y = sample_with_norm(s.uniform(-3, 3), 6, s, p);
        const auto tx = TruncatedPadic::from_rational(x, 20), ty = TruncatedPadic::from_rational(y, 20);
        ASSERT_TRUE((tx * ty).agrees_with(x * y));
        ASSERT_TRUE((tx / ty).agrees_with(x / y));
        ASSERT_TRUE((tx + ty).agrees_with(x + y));
        ASSERT_TRUE((tx - ty).agrees_with(x - y));
        ASSERT_EQ((tx * ty).precision(), 20);
    }
}

TEST(Truncated, CancellationLosesPrecision) {
    const auto a = TruncatedPadic::from_rational(Q("1", 3), 5);
    const auto b = TruncatedPadic::from_rational(Q("10", 3), 5);  // 1 + 9: agrees to 2 digits
    const auto diff = a - b;
    EXPECT_EQ(diff.valuation(), 2);
    EXPECT_EQ(diff.absolute_precision(), 5);
    EXPECT_EQ(diff.precision(), 3);
    const auto z = a - a;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.absolute_precision(), 5);
    EXPECT_FALSE(z.norm_exponent().has_value());
}

TEST(Truncated, DivisionByZeroMarkerThrows) {
    const auto a = TruncatedPadic::from_rational(Q("1", 3), 5);
    EXPECT_ANY_THROW(a / (a - a));
}

TEST(Truncated, SqrtModPrime) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 97u, 101u})
        for (std::uint64_t u = 1; u < p; ++u) {
            const mpz_class r = sqrt_mod_prime(mpz_class(static_cast<unsigned long>(u * u % p)),
                                               mpz_class(static_cast<unsigned long>(p)));
            ASSERT_EQ(mpz_class(r * r - u * u) % p, 0) << p << " " << u;
        }
}

TEST(Truncated, HenselSqrtAgreesWithRationalRoots) {
    for (std::uint64_t pv : {3u, 5u, 7u, 13u}) {
        const Prime p(pv);
        Sampler s(pv);
        for (int i = 0; i < 100; ++i) {
            const auto r = sample_with_norm(s.uniform(-4, 4), 5, s, p);
            const auto root = sqrt(r * r, 20);
            ASSERT_EQ(root.precision(), 20);
            ASSERT_TRUE(root.agrees_with(r) || root.agrees_with(-r));
            ASSERT_LE(root.digits()[0], (pv - 1) / 2);
            ASSERT_EQ(root * root, TruncatedPadic::from_rational(r * r, 20));
        }
    }
}

TEST(Truncated, SqrtRejectsNonSquares) {
    EXPECT_THROW(sqrt(Q("2", 5), 10), std::domain_error);  // non-residue
    EXPECT_THROW(sqrt(Q("5", 5), 10), std::domain_error);  // odd valuation
    EXPECT_THROW(sqrt(Q("-1", 3), 10), std::domain_error);
}

TEST(Truncated, SqrtOfIrrationalSquares) {
    // -1 is a square in Q_5 but not in Q.
    const auto i = sqrt(Q("-1", 5), 20);
    EXPECT_EQ(i * i, TruncatedPadic::from_rational(Q("-1", 5), 20));
    EXPECT_EQ(i.digits()[0], 2u);
}
