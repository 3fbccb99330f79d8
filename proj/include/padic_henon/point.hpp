#pragma once

#include <algorithm>
#include <stdexcept>

#include "padic_henon/rational.hpp"

namespace padic_henon {

struct Point {
    PadicRational x;
    PadicRational y;

    Point(PadicRational x_, PadicRational y_) : x(std::move(x_)), y(std::move(y_)) {
        if (!(x.prime() == y.prime())) throw std::invalid_argument("point coordinates in different Q_p");
    }

    Prime prime() const noexcept { return x.prime(); }
    friend bool operator==(const Point&, const Point&) = default;
};

// (log_p|x|, log_p|y|); nullopt marks a zero coordinate.
struct NormProfile {
    NormExponent a;
    NormExponent b;

    friend bool operator==(const NormProfile&, const NormProfile&) = default;
};

inline NormProfile profile_of(const Point& pt) { return {pt.x.norm_exponent(), pt.y.norm_exponent()}; }

// log_p of max(|x|, |y|).
inline NormExponent sup_exponent(const NormProfile& pr) { return std::max(pr.a, pr.b); }

}  // namespace padic_henon
