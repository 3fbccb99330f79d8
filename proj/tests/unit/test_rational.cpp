#include <gtest/gtest.h>

#include <stdexcept>

#include "padic_henon/errors.hpp"
#include "padic_henon/prime.hpp"
#include "padic_henon/rational.hpp"
#include "padic_henon/sampler.hpp"
#include "helpers.hpp"

using namespace padic_henon;
using testing_support::naive_valuation;
using testing_support::Q;

TEST(Prime, RejectsTwoAndComposites) {
    EXPECT_THROW(Prime(2), std::invalid_argument);
    EXPECT_THROW(Prime(9), std::invalid_argument);
    EXPECT_THROW(Prime(1), std::invalid_argument);
    EXPECT_THROW(Prime(0), std::invalid_argument);
    EXPECT_EQ(Prime(3).value(), 3u);
    EXPECT_EQ(Prime(1000003).value(), 1000003u);
}

TEST(Rational, ValuationAndNorm) {
    EXPECT_EQ(Q("255/1", 5).valuation(), 1);
    EXPECT_EQ(Q("255/1", 5).norm_exponent(), -1);
    EXPECT_EQ(Q("2/75", 5).valuation(), -2);
    EXPECT_EQ(Q("2/75", 5).norm_exponent(), 2);
    EXPECT_EQ(Q("-7/3", 3).norm_exponent(), 1);
    EXPECT_FALSE(Q("0", 3).norm_exponent().has_value());
    EXPECT_FALSE(Q("0", 3).valuation().has_value());
}

TEST(Rational, ZeroNormOrdersBelowEverything) {
    const NormExponent zero = std::nullopt;
    EXPECT_LT(zero, NormExponent(-1000000));
    EXPECT_EQ(std::max(zero, NormExponent(-3)), NormExponent(-3));
}

TEST(Rational, ParsingRejectsMalformedInput) {
    const Prime p(3);
    EXPECT_THROW(parse_rational("1/0", p), ArithmeticError);
    EXPECT_THROW(parse_rational("abc", p), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5", p), std::invalid_argument);
    EXPECT_THROW(parse_rational("", p), std::invalid_argument);
    EXPECT_EQ(parse_rational("6/4", p), parse_rational("3/2", p));
    EXPECT_EQ(parse_rational("-5", p).to_string(), "-5/1");
}

TEST(Rational, ArithmeticIsExact) {
    const auto a = Q("1/3", 3), b = Q("9", 3);
    EXPECT_EQ((a + b).to_string(), "28/3");
    EXPECT_EQ((a * b).to_string(), "3/1");
    EXPECT_EQ((b / a).to_string(), "27/1");
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_THROW(a / Q("0", 3), ArithmeticError);
}

TEST(Rational, MixingPrimesIsRejected) {
    EXPECT_THROW(Q("1", 3) + Q("1", 5), std::invalid_argument);
}

TEST(Rational, UltrametricPropertyOnSamples) {
    const Prime p(5);
    Sampler s(7);
    for (int i = 0; i < 500; ++i) {
        const auto x = sample_with_norm(s.uniform(-6, 6), 4, s, p);
        const auto y = sample_with_norm(s.uniform(-6, 6), 4, s, p);
        const auto sum = x + y;
        const NormExponent top = std::max(x.norm_exponent(), y.norm_exponent());
        ASSERT_LE(sum.norm_exponent(), top);
        if (x.norm_exponent() != y.norm_exponent()) ASSERT_EQ(sum.norm_exponent(), top);
        ASSERT_EQ(*(x * y).norm_exponent(), *x.norm_exponent() + *y.norm_exponent());
        ASSERT_EQ(*x.valuation(), naive_valuation(x.value(), 5));
    }
}

TEST(Rational, PrimePower) {
    const Prime p(3);
    EXPECT_EQ(prime_power(p, 2).to_string(), "9/1");
    EXPECT_EQ(prime_power(p, -2).to_string(), "1/9");
    EXPECT_EQ(prime_power(p, -2).norm_exponent(), 2);
}

TEST(Rational, SquareClasses) {
    EXPECT_EQ(square_class(Q("0", 5)), SquareClass::Zero);
    EXPECT_EQ(square_class(Q("4/9", 5)), SquareClass::Square);
    EXPECT_EQ(square_class(Q("5", 5)), SquareClass::OddValuation);
    EXPECT_EQ(square_class(Q("2", 5)), SquareClass::NonResidue);
    EXPECT_EQ(square_class(Q("-1", 5)), SquareClass::Square);  // 2^2 = -1 mod 5
    EXPECT_EQ(square_class(Q("-1", 3)), SquareClass::NonResidue);
    EXPECT_TRUE(is_square(Q("25/4", 7)));
}

TEST(Rational, SamplerHitsRequestedNorm) {
    const Prime p(3);
    Sampler s(1);
    for (std::int64_t a = -10; a <= 10; ++a)
        for (int rep = 0; rep < 10; ++rep) ASSERT_EQ(sample_with_norm(a, 6, s, p).norm_exponent(), a);
}

TEST(Rational, SamplerIsDeterministic) {
    const Prime p(7);
    Sampler s1(42), s2(42);
    for (int i = 0; i < 50; ++i) ASSERT_EQ(sample_with_norm(3, 5, s1, p), sample_with_norm(3, 5, s2, p));
}
