#include "padic_henon/dynamics.hpp"

#include <stdexcept>

#include "padic_henon/errors.hpp"
#include "padic_henon/fibonacci.hpp"
#include "padic_henon/regions.hpp"

namespace padic_henon {

MapParams::MapParams(PadicRational c) : c_(std::move(c)) {
    const auto lc = c_.norm_exponent();
    regime_ = lc ? regime_of(*lc) : Regime::Small;
}

std::int64_t MapParams::d() const {
    if (c_.is_zero()) throw std::domain_error("c = 0 has no finite log_p|c|");
    return *c_.norm_exponent();
}

std::int64_t MapParams::default_escape_exponent() const {
    if (regime_ != Regime::Large) return 8;
    return 8 * d() * fib64(12);
}

namespace {

void check_budget(const Point& pt, std::size_t budget) {
    const std::size_t bits = pt.x.bit_size() + pt.y.bit_size();
    if (bits > budget) throw BudgetExceeded(bits, budget);
}

}  // namespace

Point forward(const Point& pt, const MapParams& params, std::size_t bit_budget) {
    Point out(pt.x * pt.y + params.c(), pt.x);
    check_budget(out, bit_budget);
    return out;
}

Point inverse(const Point& pt, const MapParams& params, std::size_t bit_budget) {
    if (pt.y.is_zero()) throw UndefinedInverse();
    Point out(pt.y, (pt.x - params.c()) / pt.y);
    check_budget(out, bit_budget);
    return out;
}

const char* verdict_name(const Verdict& v) {
    struct {
        const char* operator()(const verdict::Completed&) const { return "Completed"; }
        const char* operator()(const verdict::EscapedThreshold&) const { return "EscapedThreshold"; }
        const char* operator()(const verdict::UndefinedInverse&) const { return "UndefinedInverse"; }
        const char* operator()(const verdict::BudgetExceeded&) const { return "BudgetExceeded"; }
    } name;
    return std::visit(name, v);
}

namespace {

OrbitRecord run_orbit(const Point& start, const MapParams& params, const OrbitOptions& opts,
                      Direction dir) {
    if (opts.max_steps < 0) throw std::invalid_argument("max_steps must be nonnegative");
    if (!(start.prime() == params.prime())) throw std::invalid_argument("point and c in different Q_p");
    const std::int64_t escape = opts.escape_exponent.value_or(params.default_escape_exponent());
    const Classifier* cls =
        (opts.label_regions && !params.degenerate()) ? &classifier_for(params.d()) : nullptr;

    OrbitRecord rec{dir, {}, verdict::Completed{std::nullopt}, std::nullopt};
    NormExponent max_seen;
    Point cur = start;
    for (std::int64_t n = 0;; ++n) {
        const NormProfile pr = profile_of(cur);
        std::optional<RegionLabel> label;
        if (cls) {
            try {
                label = cls->classify(pr);
            } catch (const std::out_of_range&) {
                // exponents beyond the classifier range: leave unlabelled
            }
        }
        if (label && !rec.entered_invariant &&
            ((label->regime == Regime::Small && label->name == RegionName::Z) ||
             (label->regime == Regime::Large && label->name == RegionName::J && label->index == 0)))
            rec.entered_invariant = label;
        rec.steps.push_back({n, cur, pr, label});

        const NormExponent top = sup_exponent(pr);
        max_seen = std::max(max_seen, top);
        if (top && *top > escape) {
            rec.verdict = verdict::EscapedThreshold{n, *top};
            return rec;
        }
        if (n >= opts.max_steps) {
            rec.verdict = verdict::Completed{max_seen};
            return rec;
        }
        if (dir == Direction::Backward && cur.y.is_zero()) {
            rec.verdict = verdict::UndefinedInverse{n + 1};
            return rec;
        }
        try {
            cur = dir == Direction::Backward ? inverse(cur, params, opts.bit_budget)
                                             : forward(cur, params, opts.bit_budget);
        } catch (const BudgetExceeded&) {
            rec.verdict = verdict::BudgetExceeded{n + 1};
            return rec;
        }
    }
}

}  // namespace

OrbitRecord backward_orbit(const Point& start, const MapParams& params, const OrbitOptions& opts) {
    return run_orbit(start, params, opts, Direction::Backward);
}

OrbitRecord forward_orbit(const Point& start, const MapParams& params, const OrbitOptions& opts) {
    return run_orbit(start, params, opts, Direction::Forward);
}

std::vector<FixedPoint> fixed_points(const MapParams& params, std::int64_t precision) {
    const Prime p = params.prime();
    const PadicRational one(1, p), two(2, p);
    const PadicRational disc = one - PadicRational(4, p) * params.c();
    std::vector<FixedPoint> out;
    if (disc.is_zero()) {
        const PadicRational half = one / two;
        out.push_back({TruncatedPadic::from_rational(half, precision), half});
        return out;
    }
    if (!is_square(disc)) return out;
    if (const auto q = rational_sqrt(disc)) {
        for (const PadicRational& alpha : {(one - *q) / two, (one + *q) / two})
            out.push_back({TruncatedPadic::from_rational(alpha, precision), alpha});
        return out;
    }
    const TruncatedPadic q = sqrt(disc, precision);
    const auto t1 = TruncatedPadic::from_rational(one, precision);
    const auto t2 = TruncatedPadic::from_rational(two, precision);
    out.push_back({(t1 - q) / t2, std::nullopt});
    out.push_back({(t1 + q) / t2, std::nullopt});
    return out;
}

std::array<Point, 3> three_cycle(const MapParams& params) {
    const Prime p = params.prime();
    const Point rho(PadicRational(-1, p), PadicRational(-1, p));
    const Point r1 = forward(rho, params);
    const Point r2 = forward(r1, params);
    return {rho, r1, r2};
}

TruncatedOrbit backward_orbit_truncated(const Point& start, std::int64_t first_step, const MapParams& params,
                                        std::int64_t max_steps, std::int64_t escape_exponent,
                                        std::int64_t precision) {
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    auto lift = [&](const PadicRational& v) { return TruncatedPadic::from_rational(v, precision); };
    const TruncatedPadic c = lift(params.c());
    TruncatedPadic x = lift(start.x), y = lift(start.y);
    TruncatedOrbit out;
    for (std::int64_t n = first_step;; ++n) {
        out.last_step = n;
        // x is the previous y, so only y can lose its last digit.
        if (y.is_zero()) {
            out.outcome = TruncatedOrbit::Outcome::PrecisionLost;
            return out;
        }
        const NormProfile pr{x.norm_exponent(), y.norm_exponent()};
        out.profiles.push_back(pr);
        if (const auto top = sup_exponent(pr); top && *top > escape_exponent) {
            out.outcome = TruncatedOrbit::Outcome::Escaped;
            return out;
        }
        if (n >= max_steps) {
            out.outcome = TruncatedOrbit::Outcome::Horizon;
            return out;
        }
        TruncatedPadic nx = y;
        TruncatedPadic ny = (x - c) / y;
        x = std::move(nx);
        y = std::move(ny);
    }
}

}  // namespace padic_henon
