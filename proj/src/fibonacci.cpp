#include "padic_henon/fibonacci.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

namespace padic_henon {
namespace {

struct FibMemo {
    std::mutex mu;
    std::vector<mpz_class> values{1, 0};  // F_{-2}, F_{-1}
};

FibMemo& memo() {
    static FibMemo m;
    return m;
}

constexpr std::array<std::int64_t, kFib64Max + 3> make_fib64() {
    std::array<std::int64_t, kFib64Max + 3> t{};
    t[0] = 1;
    t[1] = 0;
    for (std::size_t i = 2; i < t.size(); ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
}

constexpr auto kFib64 = make_fib64();

}  // namespace

mpz_class fib(std::int64_t n) {
    if (n < -2) throw std::out_of_range("fib index below -2: " + std::to_string(n));
    auto& m = memo();
    std::lock_guard lock(m.mu);
    const auto idx = static_cast<std::size_t>(n + 2);
    while (m.values.size() <= idx) {
        const std::size_t k = m.values.size();
        m.values.push_back(m.values[k - 1] + m.values[k - 2]);
    }
    return m.values[idx];
}

std::int64_t fib64(int n) {
    if (n < -2 || n > kFib64Max) throw std::out_of_range("fib64 index out of range: " + std::to_string(n));
    return kFib64[static_cast<std::size_t>(n + 2)];
}

mpz_class cassini(std::int64_t n) {
    if (n < 1) throw std::out_of_range("cassini requires n >= 1");
    const mpz_class f1 = fib(n - 1);
    return fib(n) * fib(n - 2) - f1 * f1;
}

mpz_class cassini2(std::int64_t n) {
    if (n < 1) throw std::out_of_range("cassini2 requires n >= 1");
    return fib(n + 1) * fib(n - 2) - fib(n) * fib(n - 1);
}

std::vector<mpz_class> k_sequence(std::size_t count) {
    std::vector<mpz_class> k;
    k.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i < 2)
            k.emplace_back(1);
        else if (i % 2 == 0)
            k.push_back(k[i - 1] + 1);
        else
            k.push_back(k[i - 1] + k[i - 2]);
    }
    return k;
}

}  // namespace padic_henon
