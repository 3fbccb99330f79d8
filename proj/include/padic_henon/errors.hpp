#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic_henon {

// Thrown for division by zero and other undefined field operations.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// f^{-1}(x, y) requested at a point with y = 0.
class UndefinedInverse : public std::domain_error {
public:
    UndefinedInverse() : std::domain_error("inverse undefined: y = 0") {}
};

// An operand or result exceeded the configured numerator+denominator bit budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t bits, std::size_t budget)
        : std::runtime_error("bit budget exceeded: " + std::to_string(bits) + " > " +
                             std::to_string(budget)),
          bits_(bits), budget_(budget) {}

    std::size_t bits() const noexcept { return bits_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t bits_;
    std::size_t budget_;
};

// The requested region has no admissible norm profile for the given parameters.
class EmptyRegion : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace padic_henon
