#pragma once

// f(x, y) = (xy + c, x) and f^{-1}(x, y) = (y, (x - c)/y) over Q inside Q_p.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "padic_henon/point.hpp"
#include "padic_henon/rational.hpp"
#include "padic_henon/region_types.hpp"
#include "padic_henon/truncated.hpp"

namespace padic_henon {

inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 24;

class MapParams {
public:
    explicit MapParams(PadicRational c);

    const PadicRational& c() const noexcept { return c_; }
    Prime prime() const noexcept { return c_.prime(); }
    // log_p|c|; nullopt for c = 0.
    NormExponent log_c() const noexcept { return c_.norm_exponent(); }
    // d as used by the region tables. Throws std::domain_error for c = 0.
    std::int64_t d() const;
    Regime regime() const noexcept { return regime_; }
    // c = 0 reduces f to (xy, x); it is filed under SMALL but flagged.
    bool degenerate() const noexcept { return c_.is_zero(); }

    // 8 for SMALL/UNIT, 8 d F_12 for LARGE.
    std::int64_t default_escape_exponent() const;

private:
    PadicRational c_;
    Regime regime_;
};

// Throws BudgetExceeded when the result's numerator+denominator bits exceed bit_budget.
Point forward(const Point& pt, const MapParams& params, std::size_t bit_budget = kDefaultBitBudget);
// Throws UndefinedInverse when y = 0.
Point inverse(const Point& pt, const MapParams& params, std::size_t bit_budget = kDefaultBitBudget);

enum class Direction { Forward, Backward };

struct OrbitStep {
    std::int64_t n;  // the point is f^{-n} (backward) or f^{n} (forward) of the start
    Point point;
    NormProfile profile;
    std::optional<RegionLabel> region;
};

namespace verdict {
struct Completed {
    NormExponent max_exponent;  // largest max(a, b) seen
};
struct EscapedThreshold {
    std::int64_t step;
    std::int64_t exponent;
};
// y was 0 at step - 1, so step could not be computed.
struct UndefinedInverse {
    std::int64_t step;
};
struct BudgetExceeded {
    std::int64_t step;
};
}  // namespace verdict

using Verdict = std::variant<verdict::Completed, verdict::EscapedThreshold, verdict::UndefinedInverse,
                             verdict::BudgetExceeded>;

const char* verdict_name(const Verdict& v);

struct OrbitRecord {
    Direction direction;
    std::vector<OrbitStep> steps;
    Verdict verdict;
    // Set when the orbit visited a region that is invariant under f^{-1}
    // (Z for |c| < 1, J0 for |c| > 1). An annotation, not a boundedness proof.
    std::optional<RegionLabel> entered_invariant;
};

struct OrbitOptions {
    std::int64_t max_steps = 50;
    std::optional<std::int64_t> escape_exponent;  // default: params.default_escape_exponent()
    std::size_t bit_budget = kDefaultBitBudget;
    bool label_regions = true;  // ignored for c = 0
};

// Iterates f^{-1} from n = 0 until max_steps, escape (max(a, b) > E), y = 0, or the budget.
OrbitRecord backward_orbit(const Point& start, const MapParams& params, const OrbitOptions& opts = {});
OrbitRecord forward_orbit(const Point& start, const MapParams& params, const OrbitOptions& opts = {});

// Continues a backward orbit in truncated arithmetic once exact rationals grow
// too large. Each coordinate keeps `precision` significant digits and tracks
// its absolute precision, so every recorded norm is exact; the run stops with
// PrecisionLost when a coordinate is only known to vanish mod some p^k.
struct TruncatedOrbit {
    enum class Outcome { Escaped, Horizon, PrecisionLost };
    std::vector<NormProfile> profiles;  // profiles[i] belongs to step first_step + i
    Outcome outcome = Outcome::Horizon;
    std::int64_t last_step = 0;
};

TruncatedOrbit backward_orbit_truncated(const Point& start, std::int64_t first_step, const MapParams& params,
                                        std::int64_t max_steps, std::int64_t escape_exponent,
                                        std::int64_t precision);

// A fixed point (alpha, alpha); alpha is exact when sqrt(1 - 4c) is rational.
struct FixedPoint {
    TruncatedPadic alpha;
    std::optional<PadicRational> exact;
};

// Roots of x^2 - x + c: none if 1 - 4c is a non-square, (1/2, 1/2) if 1 - 4c = 0,
// otherwise (1 - q)/2 and (1 + q)/2 with q = sqrt(1 - 4c).
std::vector<FixedPoint> fixed_points(const MapParams& params, std::int64_t precision);

// rho = (-1, -1), f(rho) = (1 + c, -1), f^2(rho) = (-1, 1 + c).
std::array<Point, 3> three_cycle(const MapParams& params);

}  // namespace padic_henon
