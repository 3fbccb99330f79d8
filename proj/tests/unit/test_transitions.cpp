#include <gtest/gtest.h>

#include <algorithm>

#include "padic_henon/dynamics.hpp"
#include "padic_henon/regions.hpp"
#include "padic_henon/sampler.hpp"
#include "padic_henon/transitions.hpp"
#include "helpers.hpp"

using namespace padic_henon;

namespace {

RegionLabel L(const char* text, Regime r) { return parse_label(text, r); }

std::vector<std::string> names(const std::vector<RegionLabel>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) out.push_back(short_name(l));
    std::sort(out.begin(), out.end());
    return out;
}

using V = std::vector<std::string>;

}  // namespace

TEST(Transitions, SmallRegimeTargets) {
    const auto S = Regime::Small;
    EXPECT_EQ(names(expected_preimage_regions(L("Z", S))), V{"Z"});
    EXPECT_EQ(names(expected_preimage_regions(L("A1", S))), V{"A2"});
    EXPECT_EQ(names(expected_preimage_regions(L("A2", S))), V{"A1"});
    EXPECT_EQ(names(expected_preimage_regions(L("A3", S))), V{"A4"});
    EXPECT_EQ(names(expected_preimage_regions(L("A4", S))), (V{"A2", "A5"}));
    EXPECT_EQ(names(expected_preimage_regions(L("A5", S))), V{"A6"});
    EXPECT_EQ(names(expected_preimage_regions(L("A6", S))), (V{"A2", "A5"}));
    EXPECT_EQ(names(expected_preimage_regions(L("A5", S), 2)), V{"A2"});
    EXPECT_EQ(names(expected_preimage_regions(L("B1", S))), V{"B2"});
    EXPECT_EQ(names(expected_preimage_regions(L("B2", S))), (V{"A2", "A3", "A5", "B1"}));
    EXPECT_EQ(names(expected_preimage_regions(L("P1", S))), V{"A1"});
    EXPECT_EQ(names(expected_preimage_regions(L("P2", S))), V{"A1"});
    EXPECT_EQ(names(expected_preimage_regions(L("P3", S))), (V{"P4", "P5"}));
    EXPECT_EQ(names(expected_preimage_regions(L("P4", S))), (V{"A6", "P5"}));
    EXPECT_EQ(names(expected_preimage_regions(L("P5", S))), V{"P4"});
    EXPECT_EQ(names(expected_preimage_regions(L("P6", S))), (V{"A1", "P1", "P2", "P3", "P4", "P5"}));
    EXPECT_THROW(expected_preimage_regions(L("R", S)), std::invalid_argument);
}

TEST(Transitions, LargeRegimeTargets) {
    const auto G = Regime::Large;
    EXPECT_EQ(names(expected_preimage_regions(L("J0", G))), V{"J0"});
    EXPECT_EQ(names(expected_preimage_regions(L("J5", G))), V{"J4"});
    EXPECT_EQ(names(expected_preimage_regions(L("F", G))), V{"G"});
    EXPECT_EQ(names(expected_preimage_regions(L("G", G))), V{"H"});
    EXPECT_EQ(names(expected_preimage_regions(L("H", G))), V{"G"});
    EXPECT_EQ(names(expected_preimage_regions(L("M1", G))), V{"G"});
    EXPECT_EQ(names(expected_preimage_regions(L("M2", G))), (V{"H", "M1"}));
    EXPECT_EQ(names(expected_preimage_regions(L("M3", G))), V{"M2"});
    EXPECT_EQ(names(expected_preimage_regions(L("M6", G))), (V{"H", "M1", "M3", "M5"}));
    EXPECT_EQ(names(expected_preimage_regions(L("T4", G))), V{"T3"});
}

TEST(Transitions, UnitRegimeTargets) {
    const auto U = Regime::Unit;
    EXPECT_EQ(names(expected_preimage_regions(L("F", U))), V{"G"});
    EXPECT_EQ(names(expected_preimage_regions(L("M1", U))), V{"H"});
    EXPECT_EQ(names(expected_preimage_regions(L("M2", U))), V{"M1"});
    EXPECT_EQ(names(expected_preimage_regions(L("M7", U))), V{"M6"});
    EXPECT_THROW(expected_preimage_regions(L("C0", U)), std::invalid_argument);
}

TEST(Transitions, LemmaCatalogue) {
    EXPECT_EQ(lemma_info("small-A5-depth2").depth, 2);
    EXPECT_EQ(lemma_info("large-J-descent").regime, Regime::Large);
    EXPECT_THROW(lemma_info("no-such-lemma"), std::invalid_argument);
    EXPECT_EQ(lemma_for(L("J3", Regime::Large)), "large-J-descent");
    EXPECT_EQ(lemma_for(L("A5", Regime::Small), 2), "small-A5-depth2");
    for (const auto& info : lemmas()) {
        const std::int64_t d = info.regime == Regime::Small ? -2 : info.regime == Regime::Unit ? 0 : 3;
        const auto sources = lemma_sources(info.id, d, 6);
        EXPECT_FALSE(sources.empty()) << info.id;
        for (const auto& s : sources) EXPECT_EQ(lemma_for(s, info.depth), info.id) << short_name(s);
    }
}

TEST(Transitions, AbstractInverseShapes) {
    const auto plain = abstract_inverse({5, 2}, 1);
    EXPECT_FALSE(plain.cancellation());
    EXPECT_EQ(plain.x, 2);
    EXPECT_EQ(plain.y, 3);
    const auto smaller = abstract_inverse({-3, 2}, 1);  // max(a, d) = d
    EXPECT_EQ(smaller.y, -1);
    const auto cancel = abstract_inverse({1, 2}, 1);
    EXPECT_TRUE(cancel.cancellation());
    const auto imgs = cancel.enumerate(-2, true);
    ASSERT_EQ(imgs.size(), 5u);  // e = 1, 0, -1, -2 and y = 0
    const auto zero_x = abstract_inverse({std::nullopt, 4}, 2);
    EXPECT_EQ(zero_x.y, -2);
}

TEST(Transitions, AbstractInverseMatchesRealPoints) {
    const Prime p(3);
    Sampler s(23);
    for (int i = 0; i < 3000; ++i) {
        const std::int64_t d = s.uniform(-3, 3);
        const MapParams params(prime_power(p, -d) * PadicRational(s.uniform(0, 1) ? 1 : 2, p));
        const Point pt(sample_with_norm(s.uniform(-5, 5), 2, s, p), sample_with_norm(s.uniform(-5, 5), 2, s, p));
        const NormProfile pr = profile_of(pt);
        const auto ai = abstract_inverse(pr, d);
        NormProfile img;
        try {
            img = profile_of(inverse(pt, params));
        } catch (...) {
            FAIL() << "inverse of a point with y != 0 failed";
        }
        if (!ai.cancellation()) {
            ASSERT_EQ(img, (NormProfile{ai.x, ai.y})) << i;
        } else {
            const auto options = ai.enumerate(-60, true);
            ASSERT_NE(std::find(options.begin(), options.end(), img), options.end()) << i;
        }
    }
}
