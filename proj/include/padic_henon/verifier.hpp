#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic_henon/dynamics.hpp"
#include "padic_henon/point.hpp"
#include "padic_henon/region_types.hpp"

namespace padic_henon {

struct LemmaSpec {
    std::string id;                                   // lemma identifier, see lemmas()
    std::int64_t d = 0;
    std::uint64_t p = 3;
    std::optional<std::string> c;                     // "num/den"; default p^{-d}
    std::vector<RegionLabel> sources;                 // empty: every source of the lemma
    std::optional<std::vector<RegionLabel>> targets;  // replaces the lemma's targets (negative controls)
    int depth = 1;
    std::int64_t samples = 1000;
    std::int64_t window = 60;
    std::int64_t digits = 8;
    int max_index = 8;
    std::uint64_t seed = 1;
};

struct Counterexample {
    RegionLabel source;
    NormProfile start_profile;
    std::optional<Point> start;
    std::vector<NormProfile> image_profiles;
    std::vector<Point> images;
    std::vector<RegionLabel> expected;
    std::optional<RegionLabel> got;
    std::string detail;
};

struct VerificationReport {
    std::string kind;  // transition, exhaustive, escape, remark-orbits, sandwich
    std::string id;
    std::int64_t d = 0;
    std::uint64_t p = 0;
    std::string c;     // "num/den", so counterexamples can be replayed
    std::optional<LemmaSpec> spec;
    std::int64_t samples = 0;
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    std::int64_t skipped = 0;    // includes the undefined ones
    std::int64_t undefined = 0;  // hit y = 0 (the point is not in Q)
    std::vector<Counterexample> counterexamples;  // first few only; failures counts all
    std::vector<std::string> notes;
    double wall_seconds = 0;

    bool ok() const noexcept { return failures == 0; }
    bool consistent() const noexcept { return passes + failures + skipped == samples; }
};

inline constexpr std::size_t kMaxStoredCounterexamples = 16;

// c = p^{-d} unless spec.c is given.
MapParams params_for(std::int64_t d, std::uint64_t p, const std::optional<std::string>& c = std::nullopt);

// Samples points in the source regions, applies f^{-depth}, checks the target set.
VerificationReport verify_transition(const LemmaSpec& spec);

// Profile-level check of every lemma of d's regime (or only `ids`) over
// |a|, |b| <= window, enumerating cancellation outcomes e = d, d-1, ..., d-window.
std::vector<VerificationReport> verify_exhaustive(std::int64_t d, std::int64_t window,
                                                  const std::vector<std::string>& ids = {});

struct EscapeSpec {
    RegionLabel label;
    std::int64_t d = 1;
    std::uint64_t p = 3;
    std::optional<std::string> c;
    std::int64_t samples = 500;
    std::int64_t steps = 60;
    std::optional<std::int64_t> threshold;  // default MapParams::default_escape_exponent
    std::int64_t window = 60;
    std::int64_t digits = 8;
    std::uint64_t seed = 1;
    std::size_t bit_budget = std::size_t{1} << 16;  // past this, orbits continue in truncated digits
};

// Every sampled backward orbit must exceed the threshold within `steps`. G
// (|c| > 1) orbits are also checked against p^{2^{floor(n/2)}(b-d)+d}, and A1
// (|c| < 1) orbits against the K_n schedule.
VerificationReport verify_escape(const EscapeSpec& spec);

// Replays the worked orbits with exact arithmetic.
VerificationReport verify_remark_orbits(std::uint64_t p, std::size_t bit_budget = kDefaultBitBudget);

struct SandwichSpec {
    int theorem = 1;  // 1: |c| < 1, 2: |c| > 1, 3: |c| = 1
    std::int64_t d = -1;
    std::uint64_t p = 3;
    std::optional<std::string> c;
    std::int64_t samples = 500;
    std::int64_t steps = 60;
    std::optional<std::int64_t> threshold;
    std::int64_t window = 40;
    std::int64_t digits = 8;
    int max_index = 8;
    std::uint64_t seed = 1;
    std::size_t bit_budget = std::size_t{1} << 16;  // past this, orbits continue in truncated digits
};

// Lower side: samples of the invariant region (Z or J0) stay there for `steps`.
// Upper side: samples of every escaping region exceed the threshold.
VerificationReport verify_theorem_sandwich(const SandwichSpec& spec);

}  // namespace padic_henon
