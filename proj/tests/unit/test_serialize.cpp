#include <gtest/gtest.h>

#include "padic_henon/measure.hpp"
#include "padic_henon/serialize.hpp"
#include "padic_henon/verifier.hpp"
#include "helpers.hpp"

using namespace padic_henon;
using testing_support::Pt;
using testing_support::Q;

TEST(Serialize, RationalAndPointRoundTrip) {
    for (const char* s : {"0", "1", "-7/9", "123456789012345678901234567890/7"}) {
        const auto x = Q(s, 7);
        EXPECT_EQ(rational_from_json(json::parse(to_json(x).dump())), x);
    }
    const Point pt = Pt("1/3", "-81", 3);
    EXPECT_EQ(point_from_json(json::parse(to_json(pt).dump())), pt);
}

TEST(Serialize, LabelRoundTrip) {
    for (const char* s : {"SMALL:Z", "UNIT:M4", "LARGE:J0", "LARGE:T2", "LARGE:OutsideQ"}) {
        const auto l = parse_label(s);
        EXPECT_EQ(label_from_json(json::parse(to_json(l).dump())), l);
    }
}

TEST(Serialize, ProfileUsesNullForZero) {
    const json j = to_json(NormProfile{std::nullopt, 3});
    EXPECT_TRUE(j.at("a").is_null());
    EXPECT_EQ(j.at("b"), 3);
}

TEST(Serialize, OrbitRecordShape) {
    const MapParams params(Q("1", 3));
    OrbitOptions opts;
    opts.max_steps = 3;
    const json j = to_json(backward_orbit(Pt("-1", "-1", 3), params, opts));
    ASSERT_EQ(j.at("steps").size(), 4u);
    EXPECT_EQ(j.at("verdict").at("type"), "Completed");
    for (const auto& st : j.at("steps")) {
        EXPECT_TRUE(st.contains("n"));
        EXPECT_NO_THROW(parse_rational(st.at("x").get<std::string>(), Prime(3)));
    }
}

TEST(Serialize, LemmaSpecRoundTrip) {
    LemmaSpec s;
    s.id = "large-J-descent";
    s.d = 3;
    s.p = 5;
    s.c = "1/125";
    s.samples = 77;
    s.seed = 9;
    s.sources = {parse_label("LARGE:J2")};
    s.targets = std::vector<RegionLabel>{parse_label("LARGE:J1")};
    const LemmaSpec t = lemma_spec_from_json(json::parse(to_json(s).dump()));
    EXPECT_EQ(to_json(t), to_json(s));
}

TEST(Serialize, TnReportHasBothQuantities) {
    const json j = tn_report(tn_table(3, 2, Prime(3)), 2, Prime(3));
    ASSERT_EQ(j.at("rows").size(), 4u);
    EXPECT_EQ(j.at("ratio_exact_over_ball_product"), "4/9");
    for (const auto& row : j.at("rows")) {
        EXPECT_TRUE(row.contains("exact"));
        EXPECT_TRUE(row.contains("ball_product"));
    }
}

TEST(Serialize, TablesCoverEveryRegime) {
    const json t = region_table_json();
    bool small = false, unit = false, large = false;
    for (const auto& r : t) {
        small = small || r.at("regime") == "SMALL";
        unit = unit || r.at("regime") == "UNIT";
        large = large || r.at("regime") == "LARGE";
    }
    EXPECT_TRUE(small && unit && large);
    EXPECT_FALSE(transition_table_json(2, 4).empty());
}
