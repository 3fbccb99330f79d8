#include "padic_henon/verifier.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <stdexcept>

#include "padic_henon/errors.hpp"
#include "padic_henon/fibonacci.hpp"
#include "padic_henon/region_sampler.hpp"
#include "padic_henon/regions.hpp"
#include "padic_henon/sampler.hpp"
#include "padic_henon/transitions.hpp"

namespace padic_henon {
namespace {

using Clock = std::chrono::steady_clock;

// Significant digits kept when an escaping orbit outgrows exact arithmetic.
constexpr std::int64_t kContinuationDigits = 64;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Backward orbit profiles: exact rationals up to the bit budget, then truncated
// digits (norms stay exact while any digit is known).
struct Trace {
    enum class End { Escaped, Horizon, Undefined, PrecisionLost };
    std::vector<NormProfile> profiles;
    End end = End::Horizon;
    bool continued = false;
    std::string why;
};

Trace trace_backward(const Point& start, const MapParams& params, std::int64_t steps, std::int64_t E,
                     std::size_t bit_budget) {
    OrbitOptions opts;
    opts.max_steps = steps;
    opts.escape_exponent = E;
    opts.bit_budget = bit_budget;
    opts.label_regions = false;
    const OrbitRecord orbit = backward_orbit(start, params, opts);
    Trace t;
    for (const auto& st : orbit.steps) t.profiles.push_back(st.profile);
    t.why = verdict_name(orbit.verdict);
    if (std::holds_alternative<verdict::EscapedThreshold>(orbit.verdict)) t.end = Trace::End::Escaped;
    else if (std::holds_alternative<verdict::UndefinedInverse>(orbit.verdict)) t.end = Trace::End::Undefined;
    else if (std::holds_alternative<verdict::Completed>(orbit.verdict)) t.end = Trace::End::Horizon;
    else {
        t.continued = true;
        const auto& last = orbit.steps.back();
        const TruncatedOrbit tail =
            backward_orbit_truncated(last.point, last.n, params, steps, E, kContinuationDigits);
        t.profiles.insert(t.profiles.end(), tail.profiles.begin() + 1, tail.profiles.end());
        switch (tail.outcome) {
            case TruncatedOrbit::Outcome::Escaped: t.end = Trace::End::Escaped; break;
            case TruncatedOrbit::Outcome::Horizon: t.end = Trace::End::Horizon; break;
            case TruncatedOrbit::Outcome::PrecisionLost: t.end = Trace::End::PrecisionLost; break;
        }
        t.why = t.end == Trace::End::PrecisionLost
                    ? "precision lost in truncated continuation at step " + std::to_string(tail.last_step)
                    : (t.end == Trace::End::Escaped ? "EscapedThreshold" : "Completed") +
                          std::string(" (truncated continuation)");
    }
    return t;
}

bool is_overlay(const RegionLabel& l) {
    return l.name == RegionName::T ||
           (l.regime == Regime::Large && (l.name == RegionName::A || l.name == RegionName::B));
}

// Whether the image profile lies in one of the expected regions; `got` is its label.
bool lands(const Classifier& cls, const std::vector<RegionLabel>& expected, const NormProfile& img,
           RegionLabel& got) {
    got = cls.classify(img);
    bool wants_t = false;
    for (const auto& t : expected) {
        if (is_overlay(t)) {
            wants_t = wants_t || t.name == RegionName::T;
            if (cls.contains(t, img)) {
                got = t;
                return true;
            }
        } else if (t == got) {
            return true;
        }
    }
    if (wants_t)
        if (auto n = cls.t_index(img)) got = {Regime::Large, RegionName::T, *n};
    return false;
}

void record(VerificationReport& rep, Counterexample cx) {
    ++rep.failures;
    if (rep.counterexamples.size() < kMaxStoredCounterexamples) rep.counterexamples.push_back(std::move(cx));
}

std::string profile_text(const NormProfile& pr) {
    auto s = [](const NormExponent& e) { return e ? std::to_string(*e) : std::string("-inf"); };
    return "(" + s(pr.a) + "," + s(pr.b) + ")";
}

}  // namespace

MapParams params_for(std::int64_t d, std::uint64_t p, const std::optional<std::string>& c) {
    const Prime prime(p);
    if (!c) return MapParams(prime_power(prime, -d));
    MapParams params(parse_rational(*c, prime));
    if (params.log_c() != NormExponent(d))
        throw std::invalid_argument("c = " + *c + " does not have log_p|c| = " + std::to_string(d));
    return params;
}

// ------------------------------------------------------------------ transitions

VerificationReport verify_transition(const LemmaSpec& spec) {
    const auto t0 = Clock::now();
    const LemmaInfo& info = lemma_info(spec.id);
    if (spec.depth != info.depth)
        throw std::invalid_argument("lemma " + spec.id + " is a depth-" + std::to_string(info.depth) + " claim");
    if (info.regime != regime_of(spec.d))
        throw std::invalid_argument("lemma " + spec.id + " does not apply to d = " + std::to_string(spec.d));
    const MapParams params = params_for(spec.d, spec.p, spec.c);
    const Prime p(spec.p);
    const Classifier& cls = classifier_for(spec.d);

    VerificationReport rep;
    rep.kind = "transition";
    rep.id = spec.id;
    rep.d = spec.d;
    rep.p = spec.p;
    rep.c = params.c().to_string();
    rep.spec = spec;
    rep.samples = spec.samples;

    const std::vector<RegionLabel> sources =
        spec.sources.empty() ? lemma_sources(spec.id, spec.d, spec.max_index) : spec.sources;
    std::vector<RegionLabel> live;
    for (const auto& s : sources) {
        if (admissible_profiles(s, spec.d, spec.window).empty())
            rep.notes.push_back(short_name(s) + " is empty for d = " + std::to_string(spec.d) +
                                " within window " + std::to_string(spec.window));
        else
            live.push_back(s);
    }
    if (live.empty()) {
        rep.skipped = spec.samples;
        rep.notes.push_back("no nonempty source region; all samples skipped");
        rep.wall_seconds = seconds_since(t0);
        return rep;
    }

    Sampler sampler(spec.seed);
    for (std::int64_t i = 0; i < spec.samples; ++i) {
        const RegionLabel& src = live[static_cast<std::size_t>(i) % live.size()];
        const Point start = sample_in_region(src, spec.d, p, spec.window, spec.digits, sampler);
        const std::vector<RegionLabel> expected =
            spec.targets ? *spec.targets : expected_preimage_regions(src, spec.depth);
        std::vector<Point> images;
        bool undefined = false;
        Point cur = start;
        for (int k = 0; k < spec.depth; ++k) {
            if (cur.y.is_zero()) {
                undefined = true;
                break;
            }
            cur = inverse(cur, params);
            images.push_back(cur);
        }
        if (undefined || cur.y.is_zero()) {
            // the point (or its image) leaves Q
            ++rep.undefined;
            ++rep.skipped;
            continue;
        }
        RegionLabel got{};
        if (lands(cls, expected, profile_of(cur), got)) {
            ++rep.passes;
            continue;
        }
        Counterexample cx{src, profile_of(start), start, {}, images, expected, got, {}};
        for (const auto& im : images) cx.image_profiles.push_back(profile_of(im));
        record(rep, std::move(cx));
    }
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

std::vector<VerificationReport> verify_exhaustive(std::int64_t d, std::int64_t window,
                                                  const std::vector<std::string>& ids) {
    const auto t0 = Clock::now();
    const Regime regime = regime_of(d);
    std::vector<std::string> chosen = ids;
    if (chosen.empty())
        for (const auto& l : lemmas())
            if (l.regime == regime) chosen.push_back(l.id);
    std::vector<VerificationReport> reps;
    for (const auto& id : chosen) {
        const LemmaInfo& info = lemma_info(id);
        if (info.regime != regime)
            throw std::invalid_argument("lemma " + id + " does not apply to d = " + std::to_string(d));
        VerificationReport r;
        r.kind = "exhaustive";
        r.id = id;
        r.d = d;
        r.notes.push_back("profile-level check over |a|,|b| <= " + std::to_string(window) +
                          ", cancellation outcomes down to e = " + std::to_string(d - window));
        reps.push_back(std::move(r));
    }
    auto report_for = [&](const std::string& id) -> VerificationReport* {
        for (auto& r : reps)
            if (r.id == id) return &r;
        return nullptr;
    };

    const Classifier& cls = classifier_for(d);
    const std::int64_t e_min = d - window;

    auto check = [&](VerificationReport& rep, const RegionLabel& src, int depth, const NormProfile& pr) {
        const std::vector<RegionLabel> expected = expected_preimage_regions(src, depth);
        std::vector<std::vector<NormProfile>> paths{{pr}};
        for (int k = 0; k < depth; ++k) {
            std::vector<std::vector<NormProfile>> next;
            for (auto& path : paths) {
                const NormProfile& last = path.back();
                if (!last.b) {
                    next.push_back(path);  // already left Q; carried to the end
                    continue;
                }
                for (const auto& im : abstract_inverse(last, d).enumerate(e_min, true)) {
                    auto ext = path;
                    ext.push_back(im);
                    next.push_back(std::move(ext));
                }
            }
            paths = std::move(next);
        }
        for (const auto& path : paths) {
            ++rep.samples;
            const NormProfile& img = path.back();
            if (!img.b || static_cast<int>(path.size()) != depth + 1) {
                ++rep.undefined;
                ++rep.skipped;
                continue;
            }
            RegionLabel got{};
            if (lands(cls, expected, img, got)) {
                ++rep.passes;
            } else {
                Counterexample cx{src, pr, std::nullopt, {}, {}, expected, got, {}};
                cx.image_profiles.assign(path.begin() + 1, path.end());
                record(rep, std::move(cx));
            }
        }
    };

    for (std::int64_t a = -window; a <= window; ++a) {
        for (std::int64_t b = -window; b <= window; ++b) {
            const NormProfile pr{a, b};
            const RegionLabel label = cls.classify(pr);
            for (int depth : {1, 2}) {
                if (auto id = lemma_for(label, depth))
                    if (auto* rep = report_for(*id)) check(*rep, label, depth, pr);
            }
            if (auto n = cls.t_index(pr); n && *n >= 1)
                if (auto* rep = report_for("large-T-descent"))
                    check(*rep, {Regime::Large, RegionName::T, *n}, 1, pr);
        }
    }
    const double secs = seconds_since(t0);
    for (auto& r : reps) {
        r.wall_seconds = secs;
        if (r.samples == 0) r.notes.push_back("no source profile in the window");
    }
    return reps;
}

// ------------------------------------------------------------------ escape

VerificationReport verify_escape(const EscapeSpec& spec) {
    const auto t0 = Clock::now();
    const MapParams params = params_for(spec.d, spec.p, spec.c);
    const Prime p(spec.p);
    const std::int64_t E = spec.threshold.value_or(params.default_escape_exponent());

    VerificationReport rep;
    rep.kind = "escape";
    rep.id = to_string(spec.label);
    rep.d = spec.d;
    rep.p = spec.p;
    rep.c = params.c().to_string();
    rep.samples = spec.samples;
    rep.notes.push_back("threshold E = " + std::to_string(E) + ", horizon " + std::to_string(spec.steps) +
                        " steps");

    if (admissible_profiles(spec.label, spec.d, spec.window).empty()) {
        rep.skipped = spec.samples;
        rep.notes.push_back(short_name(spec.label) + " is empty within the window; all samples skipped");
        rep.wall_seconds = seconds_since(t0);
        return rep;
    }

    const bool doubling = spec.label.regime == Regime::Large && spec.label.name == RegionName::G;
    const bool k_schedule = spec.label.regime == Regime::Small && spec.label.name == RegionName::A &&
                            spec.label.index == 1;
    if (doubling) rep.notes.push_back("checking max(a_n, b_n) >= 2^floor(n/2) (b - d) + d");
    if (k_schedule) rep.notes.push_back("checking the K_n schedule of the A1 escape argument");
    std::vector<std::int64_t> K;
    if (k_schedule)
        for (const auto& k : k_sequence(static_cast<std::size_t>(spec.steps) + 4)) K.push_back(k.get_si());

    Sampler sampler(spec.seed);
    const std::int64_t d = spec.d;
    std::int64_t continued = 0;
    for (std::int64_t i = 0; i < spec.samples; ++i) {
        const Point start = sample_in_region(spec.label, d, p, spec.window, spec.digits, sampler);
        const Trace tr = trace_backward(start, params, spec.steps, E, spec.bit_budget);
        const auto& profiles = tr.profiles;
        auto fail = [&](std::string detail) {
            Counterexample cx{spec.label, profile_of(start), start, {}, {}, {}, std::nullopt, std::move(detail)};
            cx.image_profiles.push_back(profiles.back());
            record(rep, std::move(cx));
        };
        continued += tr.continued;
        if (tr.end == Trace::End::Undefined) {
            ++rep.undefined;
            ++rep.skipped;
            continue;
        }
        if (tr.end != Trace::End::Escaped) {
            fail("no escape: " + tr.why);
            continue;
        }
        std::string bad;
        if (doubling) {
            const std::int64_t b0 = *profiles.front().b;
            for (std::size_t n = 0; n < profiles.size(); ++n) {
                if (n / 2 > 100) break;
                const __int128 bound = (static_cast<__int128>(1) << (n / 2)) * (b0 - d) + d;
                const NormExponent top = sup_exponent(profiles[n]);
                if (!top || *top < bound) {
                    bad = "doubling bound fails at step " + std::to_string(n) + ": " + profile_text(profiles[n]);
                    break;
                }
            }
        }
        if (k_schedule) {
            const std::int64_t D = -d;
            auto at = [&](std::int64_t n) -> const NormProfile* {
                return n < static_cast<std::int64_t>(profiles.size()) ? &profiles[static_cast<std::size_t>(n)] : nullptr;
            };
            for (std::int64_t ii = 1; bad.empty() && 2 * ii < static_cast<std::int64_t>(profiles.size()); ++ii) {
                const auto k = [&](std::int64_t j) { return K[static_cast<std::size_t>(j)]; };
                if (const auto* s = at(2 * ii); s && s->a && *s->a > d * k(2 * ii - 2))
                    bad = "|x_{-2i}| <= |c|^K_{2i-2} fails at i = " + std::to_string(ii);
                if (const auto* s = at(2 * ii + 2); s && (!s->b || *s->b < D * k(2 * ii - 1)))
                    bad = "|y_{-2i-2}| >= |c|^-K_{2i-1} fails at i = " + std::to_string(ii);
                if (const auto* s = at(2 * ii + 1); s && (!s->a || *s->a < D * k(2 * ii - 1)))
                    bad = "|x_{-2i-1}| >= |c|^-K_{2i-1} fails at i = " + std::to_string(ii);
                if (const auto* s = at(2 * ii + 1); s && s->b && *s->b > d * k(2 * ii))
                    bad = "|y_{-2i-1}| <= |c|^K_{2i} fails at i = " + std::to_string(ii);
            }
        }
        if (bad.empty())
            ++rep.passes;
        else
            fail(bad);
    }
    if (continued > 0)
        rep.notes.push_back(std::to_string(continued) + " orbits finished in truncated arithmetic (" +
                            std::to_string(kContinuationDigits) + " digits) after the exact bit budget");
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

// ------------------------------------------------------------------ worked orbits

VerificationReport verify_remark_orbits(std::uint64_t p_value, std::size_t bit_budget) {
    const auto t0 = Clock::now();
    const Prime p(p_value);
    const PadicRational P(static_cast<long>(p_value), p);
    const PadicRational one(1, p);
    auto q = [&](long v) { return PadicRational(v, p); };

    VerificationReport rep;
    rep.kind = "remark-orbits";
    rep.id = "worked-orbits";
    rep.p = p_value;

    constexpr std::int64_t kMinDepth = 10;
    using Check = std::function<std::string(const OrbitRecord&)>;  // empty string: ok
    struct Example {
        std::string name;
        PadicRational c;
        Point start;
        std::int64_t steps;
        Check check;
    };

    auto pow2 = [](std::int64_t m) { return std::int64_t{1} << m; };
    auto expect_profile = [](const OrbitRecord& o, std::int64_t n, std::int64_t a, std::int64_t b) -> std::string {
        if (n >= static_cast<std::int64_t>(o.steps.size())) return {};
        const NormProfile& pr = o.steps[static_cast<std::size_t>(n)].profile;
        if (pr == NormProfile{a, b}) return {};
        return "step " + std::to_string(n) + ": profile " + profile_text(pr) + ", expected (" + std::to_string(a) +
               "," + std::to_string(b) + ")";
    };
    auto expect_point = [](const OrbitRecord& o, std::int64_t n, const Point& want) -> std::string {
        if (n >= static_cast<std::int64_t>(o.steps.size())) return "orbit too short";
        const Point& got = o.steps[static_cast<std::size_t>(n)].point;
        if (got == want) return {};
        return "step " + std::to_string(n) + ": (" + got.x.to_string() + ", " + got.y.to_string() + ") expected (" +
               want.x.to_string() + ", " + want.y.to_string() + ")";
    };

    std::vector<Example> examples;
    // |c| < 1: c = p, start (p + 2p^3, 2p), escaping with norms doubling.
    examples.push_back({"c=p escape", P, Point(P + q(2) * P * P * P, q(2) * P), 22, [&](const OrbitRecord& o) {
                            std::string e = expect_point(o, 1, Point(q(2) * P, P * P));
                            if (e.empty()) e = expect_point(o, 2, Point(P * P, one / P));
                            for (std::int64_t m = 1; e.empty() && 2 * m + 2 <= 22; ++m) {
                                e = expect_profile(o, 2 * m + 1, pow2(m) - 1, -pow2(m));
                                if (e.empty()) e = expect_profile(o, 2 * m + 2, -pow2(m), pow2(m + 1) - 1);
                            }
                            return e;
                        }});
    // |c| < 1: c = p - p^2 fixes (p, p).
    examples.push_back({"c=p-p^2 fixed point", P - P * P, Point(P, P), 50, [&](const OrbitRecord& o) {
                            for (const auto& st : o.steps)
                                if (!(st.point == Point(P, P))) return "left (p,p) at step " + std::to_string(st.n);
                            return std::string();
                        }});
    // |c| > 1: c = 1/p, start (1/p + p^2, 1).
    examples.push_back({"c=1/p escape", one / P, Point(one / P + P * P, one), 20, [&](const OrbitRecord& o) {
                            std::string e = expect_profile(o, 1, 0, -2);
                            if (e.empty()) e = expect_profile(o, 2, -2, 3);
                            for (std::int64_t m = 1; e.empty() && 2 * m + 2 <= 20; ++m) {
                                e = expect_profile(o, 2 * m + 1, pow2(m) + 1, -pow2(m));
                                if (e.empty()) e = expect_profile(o, 2 * m + 2, -pow2(m), pow2(m + 1) + 1);
                            }
                            return e;
                        }});
    // |c| > 1: c = 1/p, start (1, 1), claimed to stay in the closed ball of radius p.
    examples.push_back({"c=1/p bounded", one / P, Point(one, one), 50, [&](const OrbitRecord& o) {
                            for (const auto& st : o.steps) {
                                const NormExponent top = sup_exponent(st.profile);
                                if (top && *top > 1)
                                    return "max exponent " + std::to_string(*top) + " at step " + std::to_string(st.n);
                            }
                            return std::string();
                        }});
    // |c| = 1: c = 1, start (-1, -p).
    examples.push_back({"c=1 escape", one, Point(-one, -P), 20, [&](const OrbitRecord& o) {
                            std::string e = expect_point(o, 1, Point(-P, q(2) / P));
                            for (std::int64_t m = 1; e.empty() && 2 * m + 1 <= 20; ++m) {
                                e = expect_profile(o, 2 * m, pow2(m - 1), -pow2(m - 1));
                                if (e.empty()) e = expect_profile(o, 2 * m + 1, -pow2(m - 1), pow2(m));
                            }
                            return e;
                        }});
    // |c| = 1: the 3-cycle through (-1, -1).
    examples.push_back({"c=1 period 3", one, Point(-one, -one), 300, [&](const OrbitRecord& o) {
                            if (o.steps.size() > 2 && (o.steps[1].point == o.steps[0].point ||
                                                       o.steps[2].point == o.steps[0].point))
                                return std::string("period shorter than 3");
                            for (const auto& st : o.steps)
                                if (!(st.point == o.steps[static_cast<std::size_t>(st.n % 3)].point))
                                    return "period 3 broken at step " + std::to_string(st.n);
                            return std::string();
                        }});

    OrbitOptions opts;
    opts.escape_exponent = std::numeric_limits<std::int64_t>::max();
    opts.bit_budget = bit_budget;
    opts.label_regions = false;
    for (const auto& ex : examples) {
        ++rep.samples;
        const MapParams params(ex.c);
        opts.max_steps = ex.steps;
        const OrbitRecord o = backward_orbit(ex.start, params, opts);
        const auto depth = static_cast<std::int64_t>(o.steps.size()) - 1;
        std::string problem = ex.check(o);
        if (problem.empty()) {
            if (const auto* u = std::get_if<verdict::UndefinedInverse>(&o.verdict))
                problem = "orbit leaves Q: y = 0 at step " + std::to_string(u->step - 1);
            else if (std::holds_alternative<verdict::BudgetExceeded>(o.verdict) && depth < kMinDepth)
                problem = "bit budget exhausted after " + std::to_string(depth) + " steps";
        }
        rep.notes.push_back(ex.name + ": " + std::to_string(depth) + " steps, " + verdict_name(o.verdict) +
                            (problem.empty() ? "" : ", " + problem));
        if (problem.empty()) {
            ++rep.passes;
        } else {
            Counterexample cx{{}, profile_of(ex.start), ex.start, {o.steps.back().profile}, {}, {}, std::nullopt,
                              ex.name + " (c = " + ex.c.to_string() + "): " + problem};
            cx.source = classify(profile_of(ex.start), params.d());
            record(rep, std::move(cx));
        }
    }
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

// ------------------------------------------------------------------ sandwich

VerificationReport verify_theorem_sandwich(const SandwichSpec& spec) {
    const auto t0 = Clock::now();
    const Regime want = spec.theorem == 1 ? Regime::Small : spec.theorem == 2 ? Regime::Large : Regime::Unit;
    if (spec.theorem < 1 || spec.theorem > 3) throw std::invalid_argument("theorem must be 1, 2 or 3");
    if (regime_of(spec.d) != want)
        throw std::invalid_argument("theorem " + std::to_string(spec.theorem) + " needs the " + to_string(want) +
                                    " regime");
    const MapParams params = params_for(spec.d, spec.p, spec.c);
    const Prime p(spec.p);
    const std::int64_t E = spec.threshold.value_or(params.default_escape_exponent());

    VerificationReport rep;
    rep.kind = "sandwich";
    rep.id = "theorem-" + std::to_string(spec.theorem);
    rep.d = spec.d;
    rep.p = spec.p;
    rep.c = params.c().to_string();
    rep.notes.push_back("finite-horizon boundedness is evidence for individual points, not proof; "
                        "the assertable claim is invariance of the lower-bound region under f^-1");

    // Lower side: invariant region.
    std::optional<RegionLabel> inv;
    if (want == Regime::Small) inv = RegionLabel{Regime::Small, RegionName::Z, std::nullopt};
    if (want == Regime::Large) inv = RegionLabel{Regime::Large, RegionName::J, 0};
    Sampler sampler(spec.seed);
    const Classifier& cls = classifier_for(spec.d);
    std::int64_t continued = 0;
    if (inv && admissible_profiles(*inv, spec.d, spec.window).empty()) {
        rep.samples += spec.samples;
        rep.skipped += spec.samples;
        rep.notes.push_back("lower side: " + short_name(*inv) + " is empty for d = " + std::to_string(spec.d));
    } else if (inv) {
        for (std::int64_t i = 0; i < spec.samples; ++i) {
            ++rep.samples;
            const Point start = sample_in_region(*inv, spec.d, p, spec.window, spec.digits, sampler);
            const Trace tr = trace_backward(start, params, spec.steps, E, spec.bit_budget);
            continued += tr.continued;
            if (tr.end == Trace::End::Undefined) {
                ++rep.undefined;
                ++rep.skipped;
                continue;
            }
            std::optional<RegionLabel> left;
            for (const auto& pr : tr.profiles)
                if (const RegionLabel l = cls.classify(pr); l != *inv) {
                    left = l;
                    break;
                }
            if (tr.end == Trace::End::Horizon && !left) {
                ++rep.passes;
            } else {
                record(rep, {*inv, profile_of(start), start, {tr.profiles.back()}, {}, {*inv}, left,
                             "left the invariant region: " + tr.why});
            }
        }
    } else {
        rep.notes.push_back("lower side: none (upper bound only)");
    }

    // Upper side: every region proved to escape.
    std::vector<RegionLabel> escaping;
    for (const auto& l : cls.labels(spec.max_index)) {
        const bool esc = want == Regime::Small ? (l.name == RegionName::A || l.name == RegionName::B ||
                                                  l.name == RegionName::P)
                                               : (l.name == RegionName::F || l.name == RegionName::G ||
                                                  l.name == RegionName::H || l.name == RegionName::M);
        if (esc && !admissible_profiles(l, spec.d, spec.window).empty()) escaping.push_back(l);
    }
    for (std::int64_t i = 0; i < spec.samples && !escaping.empty(); ++i) {
        ++rep.samples;
        const RegionLabel& src = escaping[static_cast<std::size_t>(i) % escaping.size()];
        const Point start = sample_in_region(src, spec.d, p, spec.window, spec.digits, sampler);
        const Trace tr = trace_backward(start, params, spec.steps, E, spec.bit_budget);
        continued += tr.continued;
        if (tr.end == Trace::End::Escaped) {
            ++rep.passes;
        } else if (tr.end == Trace::End::Undefined) {
            ++rep.undefined;
            ++rep.skipped;
        } else {
            record(rep, {src, profile_of(start), start, {tr.profiles.back()}, {}, {}, std::nullopt,
                         "no escape: " + tr.why});
        }
    }
    if (continued > 0)
        rep.notes.push_back(std::to_string(continued) + " orbits finished in truncated arithmetic (" +
                            std::to_string(kContinuationDigits) + " digits) after the exact bit budget");
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

}  // namespace padic_henon
