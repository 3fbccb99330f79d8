#include <gtest/gtest.h>

#include <stdexcept>

#include "padic_henon/fibonacci.hpp"

using namespace padic_henon;

TEST(Fibonacci, ShiftedIndexing) {
    EXPECT_EQ(fib(-2), 1);
    EXPECT_EQ(fib(-1), 0);
    EXPECT_EQ(fib(0), 1);
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(2), 2);
    EXPECT_EQ(fib(12), 233);
    EXPECT_THROW(fib(-3), std::out_of_range);
}

TEST(Fibonacci, RecurrenceAgainstNaiveLoop) {
    mpz_class a = 1, b = 0;  // F(-2), F(-1)
    for (int n = 0; n <= 300; ++n) {
        const mpz_class c = a + b;
        a = b;
        b = c;
        ASSERT_EQ(fib(n), c) << n;
    }
}

TEST(Fibonacci, SixtyFourBitTableMatches) {
    for (int n = -2; n <= kFib64Max; ++n) ASSERT_EQ(mpz_class(std::to_string(fib64(n))), fib(n)) << n;
    EXPECT_THROW(fib64(kFib64Max + 1), std::out_of_range);
}

TEST(Fibonacci, CassiniIdentities) {
    for (int n = 1; n <= 400; ++n) {
        const int sign = n % 2 == 0 ? 1 : -1;
        ASSERT_EQ(cassini(n), sign) << n;
        ASSERT_EQ(cassini2(n), sign) << n;
    }
}

TEST(Fibonacci, KSequence) {
    const auto k = k_sequence(10);
    ASSERT_EQ(k.size(), 10u);
    const std::vector<long> want{1, 1, 2, 3, 4, 7, 8, 15, 16, 31};
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(k[i], want[i]) << i;
}
