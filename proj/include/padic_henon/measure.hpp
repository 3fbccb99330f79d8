#pragma once

// Haar measure on Q_p normalised by mu(Z_p) = 1, and its product on Q_p^2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padic_henon/prime.hpp"
#include "padic_henon/region_types.hpp"

namespace padic_henon {

class MeasureValue {
public:
    static MeasureValue infinity() { return MeasureValue(); }
    explicit MeasureValue(mpq_class v);

    bool is_infinite() const noexcept { return !v_; }
    const mpq_class& value() const;  // throws std::domain_error when infinite

    std::string exact_string() const;   // "num/den" or "inf"
    std::string decimal_hint() const;   // scientific notation, 6 significant digits

    friend MeasureValue operator+(const MeasureValue& x, const MeasureValue& y);
    friend MeasureValue operator*(const MeasureValue& x, const MeasureValue& y);
    friend bool operator==(const MeasureValue& x, const MeasureValue& y);
    friend bool operator<(const MeasureValue& x, const MeasureValue& y);

private:
    MeasureValue() = default;
    std::optional<mpq_class> v_;
};

// Closed ball {|x| <= p^a}: p^a.
MeasureValue ball_measure(std::int64_t a, Prime p);
// Sphere {|x| = p^a}: p^a (1 - 1/p).
MeasureValue sphere_measure(std::int64_t a, Prime p);

// T_n = {|x| = p^{(k-1)F_{n+1}}, |y| = p^{(k-1)F_n}}: p^{(k-1)F_{n+2}} (1 - 1/p)^2.
MeasureValue tn_measure(std::int64_t n, std::int64_t k, Prime p);
// The ball-product value p^{(k-1)F_{n+2}}, larger than the exact one by 1/(1 - 1/p)^2.
MeasureValue tn_ball_product(std::int64_t n, std::int64_t k, Prime p);

struct TnRow {
    std::int64_t n;
    MeasureValue exact;
    MeasureValue ball_product;
    MeasureValue partial_sum;  // sum of exact over 0..n
};

std::vector<TnRow> tn_table(std::int64_t n_max, std::int64_t k, Prime p);

// Sum of sphere(a) * sphere(b) over the region's integer profiles with |a|, |b| <= window.
MeasureValue region_window_measure(const RegionLabel& label, std::int64_t d, Prime p, std::int64_t window);

}  // namespace padic_henon
