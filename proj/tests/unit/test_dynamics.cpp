#include <gtest/gtest.h>

#include "padic_henon/dynamics.hpp"
#include "padic_henon/errors.hpp"
#include "padic_henon/sampler.hpp"
#include "helpers.hpp"

using namespace padic_henon;
using testing_support::Pt;
using testing_support::Q;

namespace {

// Backward orbit over plain mpq_class.
std::vector<std::pair<mpq_class, mpq_class>> oracle_backward(mpq_class x, mpq_class y, const mpq_class& c,
                                                             int steps) {
    std::vector<std::pair<mpq_class, mpq_class>> out{{x, y}};
    for (int i = 0; i < steps && y != 0; ++i) {
        mpq_class nx = y;
        mpq_class ny = (x - c) / y;
        x = nx;
        y = ny;
        out.emplace_back(x, y);
    }
    return out;
}

}  // namespace

TEST(MapParams, RegimeAndEscapeDefaults) {
    const MapParams small(Q("3", 3)), unit(Q("2", 3)), large(Q("1/9", 3));
    EXPECT_EQ(small.d(), -1);
    EXPECT_EQ(small.regime(), Regime::Small);
    EXPECT_EQ(unit.d(), 0);
    EXPECT_EQ(unit.regime(), Regime::Unit);
    EXPECT_EQ(large.d(), 2);
    EXPECT_EQ(large.regime(), Regime::Large);
    EXPECT_EQ(small.default_escape_exponent(), 8);
    EXPECT_EQ(unit.default_escape_exponent(), 8);
    EXPECT_EQ(large.default_escape_exponent(), 8 * 2 * 233);
}

TEST(MapParams, ZeroParameterIsDegenerate) {
    const MapParams zero(Q("0", 3));
    EXPECT_TRUE(zero.degenerate());
    EXPECT_THROW(zero.d(), std::domain_error);
    // f(x, y) = (xy, x) still iterates.
    const Point p = forward(Pt("2", "3", 3), zero);
    EXPECT_EQ(p, Pt("6", "2", 3));
    EXPECT_EQ(inverse(p, zero), Pt("2", "3", 3));
}

TEST(Map, InverseUndoesForward) {
    const Prime p(5);
    Sampler s(9);
    for (int i = 0; i < 300; ++i) {
        const MapParams params(sample_with_norm(s.uniform(-3, 3), 4, s, p));
        const Point pt(sample_with_norm(s.uniform(-5, 5), 4, s, p), sample_with_norm(s.uniform(-5, 5), 4, s, p));
        ASSERT_EQ(inverse(forward(pt, params), params), pt);
        ASSERT_EQ(forward(inverse(pt, params), params), pt);
    }
}

TEST(Map, InverseOfYZeroIsUndefined) {
    const MapParams params(Q("1", 3));
    EXPECT_THROW(inverse(Pt("1", "0", 3), params), UndefinedInverse);
}

TEST(Map, BudgetIsEnforced) {
    const MapParams params(Q("1/3", 3));
    const Point big(Q("123456789123456789/987654321987654321", 3), Q("11/13", 3));
    EXPECT_THROW(inverse(big, params, 32), BudgetExceeded);
    try {
        inverse(big, params, 32);
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.budget(), 32u);
        EXPECT_GT(e.bits(), 32u);
    }
}

TEST(Orbit, BackwardMatchesPlainRationalLoop) {
    const Prime p(3);
    Sampler s(5);
    for (int i = 0; i < 40; ++i) {
        const MapParams params(sample_with_norm(s.uniform(-2, 2), 3, s, p));
        const Point start(sample_with_norm(s.uniform(-3, 3), 3, s, p), sample_with_norm(s.uniform(-3, 3), 3, s, p));
        OrbitOptions opts;
        opts.max_steps = 12;
        opts.escape_exponent = 1000000;
        const OrbitRecord rec = backward_orbit(start, params, opts);
        const auto want = oracle_backward(start.x.value(), start.y.value(), params.c().value(), 12);
        ASSERT_EQ(rec.steps.size(), want.size());
        for (std::size_t n = 0; n < want.size(); ++n) {
            ASSERT_EQ(rec.steps[n].n, static_cast<std::int64_t>(n));
            ASSERT_EQ(rec.steps[n].point.x.value(), want[n].first);
            ASSERT_EQ(rec.steps[n].point.y.value(), want[n].second);
            ASSERT_EQ(rec.steps[n].profile, profile_of(rec.steps[n].point));
        }
    }
}

TEST(Orbit, VerdictsAndStepNumbering) {
    const MapParams params(Q("1", 3));
    OrbitOptions opts;
    opts.max_steps = 5;

    auto undefined = backward_orbit(Pt("1", "0", 3), params, opts);
    ASSERT_TRUE(std::holds_alternative<verdict::UndefinedInverse>(undefined.verdict));
    EXPECT_EQ(std::get<verdict::UndefinedInverse>(undefined.verdict).step, 1);
    EXPECT_EQ(undefined.steps.size(), 1u);

    // x = c with y != 0 gives y_{-1} = 0, so step 2 is undefined.
    auto later = backward_orbit(Pt("1", "5", 3), params, opts);
    ASSERT_TRUE(std::holds_alternative<verdict::UndefinedInverse>(later.verdict));
    EXPECT_EQ(std::get<verdict::UndefinedInverse>(later.verdict).step, 2);

    auto done = backward_orbit(Pt("-1", "-1", 3), params, opts);
    ASSERT_TRUE(std::holds_alternative<verdict::Completed>(done.verdict));
    EXPECT_EQ(done.steps.size(), 6u);
    EXPECT_EQ(std::get<verdict::Completed>(done.verdict).max_exponent, 0);

    opts.escape_exponent = 2;
    auto esc = backward_orbit(Pt("1/27", "1", 3), params, opts);
    ASSERT_TRUE(std::holds_alternative<verdict::EscapedThreshold>(esc.verdict));
    EXPECT_EQ(std::get<verdict::EscapedThreshold>(esc.verdict).step, 0);
    EXPECT_EQ(std::get<verdict::EscapedThreshold>(esc.verdict).exponent, 3);

    opts.escape_exponent.reset();
    opts.bit_budget = 8;
    auto budget = backward_orbit(Pt("-1", "-3", 3), params, opts);
    EXPECT_TRUE(std::holds_alternative<verdict::BudgetExceeded>(budget.verdict));
}

TEST(Orbit, RegionLabelsAndInvariantEntry) {
    const MapParams params(Q("3", 3));  // d = -1
    OrbitOptions opts;
    opts.max_steps = 4;
    const auto rec = backward_orbit(Pt("1", "2", 3), params, opts);
    for (const auto& st : rec.steps) {
        ASSERT_TRUE(st.region.has_value());
        EXPECT_EQ(st.region->name, RegionName::Z);
    }
    EXPECT_TRUE(rec.entered_invariant);
}

TEST(Orbit, ForwardIteratesF) {
    const MapParams params(Q("1", 3));
    OrbitOptions opts;
    opts.max_steps = 3;
    const auto rec = forward_orbit(Pt("-1", "-1", 3), params, opts);
    ASSERT_EQ(rec.steps.size(), 4u);
    EXPECT_EQ(rec.steps[1].point, Pt("2", "-1", 3));
    EXPECT_EQ(rec.steps[2].point, Pt("-1", "2", 3));
    EXPECT_EQ(rec.steps[3].point, Pt("-1", "-1", 3));
}

TEST(Orbit, TruncatedContinuationKeepsExactNorms) {
    const MapParams params(Q("1/9", 3));
    const Point start = Pt("5753277465569273307051", "8151", 3);
    OrbitOptions opts;
    opts.max_steps = 14;
    opts.escape_exponent = 1 << 30;
    const auto exact = backward_orbit(start, params, opts);
    const auto tail = backward_orbit_truncated(start, 0, params, 14, 1 << 30, 40);
    ASSERT_EQ(tail.outcome, TruncatedOrbit::Outcome::Horizon);
    ASSERT_EQ(tail.profiles.size(), exact.steps.size());
    for (std::size_t i = 0; i < tail.profiles.size(); ++i) ASSERT_EQ(tail.profiles[i], exact.steps[i].profile) << i;
}

TEST(FixedPoints, RationalCase) {
    for (std::uint64_t pv : {3u, 5u, 7u}) {
        const Prime p(pv);
        const auto P = PadicRational(static_cast<long>(pv), p);
        const MapParams params(P - P * P);
        const auto fps = fixed_points(params, 20);
        ASSERT_EQ(fps.size(), 2u);
        std::vector<PadicRational> roots;
        for (const auto& fp : fps) {
            ASSERT_TRUE(fp.exact.has_value());
            ASSERT_TRUE(fp.alpha.agrees_with(*fp.exact));
            const Point a(*fp.exact, *fp.exact);
            ASSERT_EQ(forward(a, params), a);
            roots.push_back(*fp.exact);
        }
        const auto one = PadicRational(1, p);
        EXPECT_TRUE((roots[0] == P && roots[1] == one - P) || (roots[1] == P && roots[0] == one - P));
    }
}

TEST(FixedPoints, DoubleRootAndNone) {
    const auto quarter = fixed_points(MapParams(Q("1/4", 3)), 20);
    ASSERT_EQ(quarter.size(), 1u);
    EXPECT_EQ(*quarter[0].exact, Q("1/2", 3));
    EXPECT_TRUE(fixed_points(MapParams(Q("1/2", 3)), 20).empty());   // 1 - 4c = -1, non-residue mod 3
    EXPECT_TRUE(fixed_points(MapParams(Q("-1/2", 5)), 20).empty());  // 1 - 4c = 3, non-residue mod 5
    EXPECT_TRUE(fixed_points(MapParams(Q("-1", 5)), 20).empty());    // 1 - 4c = 5, odd valuation
}

TEST(FixedPoints, IrrationalRootsSatisfyTheQuadratic) {
    // p = 5, c = 1/2: 1 - 4c = -1, a square in Q_5 but not in Q.
    const MapParams params(Q("1/2", 5));
    const auto fps = fixed_points(params, 20);
    ASSERT_EQ(fps.size(), 2u);
    const auto c = TruncatedPadic::from_rational(params.c(), 30);
    for (const auto& fp : fps) {
        EXPECT_FALSE(fp.exact.has_value());
        const auto lhs = fp.alpha * fp.alpha - fp.alpha + c;
        EXPECT_TRUE(lhs.is_zero() || lhs.valuation() >= 20);
    }
}

TEST(ThreeCycle, ClosesExactly) {
    for (const char* c : {"1", "1/3", "7/2", "-5"}) {
        const MapParams params(Q(c, 3));
        const auto cyc = three_cycle(params);
        EXPECT_EQ(cyc[0], Pt("-1", "-1", 3));
        EXPECT_EQ(forward(cyc[0], params), cyc[1]);
        EXPECT_EQ(forward(cyc[1], params), cyc[2]);
        EXPECT_EQ(forward(cyc[2], params), cyc[0]);
    }
}
