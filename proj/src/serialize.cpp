#include "padic_henon/serialize.hpp"

#include <stdexcept>

#include "padic_henon/regions.hpp"
#include "padic_henon/transitions.hpp"

namespace padic_henon {

json to_json(const PadicRational& x) {
    return {{"num", x.numerator().get_str()}, {"den", x.denominator().get_str()}, {"p", x.prime().value()}};
}

PadicRational rational_from_json(const json& j) {
    const Prime p(j.at("p").get<std::uint64_t>());
    mpz_class num, den;
    if (num.set_str(j.at("num").get<std::string>(), 10) != 0 || den.set_str(j.at("den").get<std::string>(), 10) != 0)
        throw std::invalid_argument("malformed rational in JSON");
    return PadicRational(num, den, p);
}

json to_json(const TruncatedPadic& x) {
    return {{"p", x.prime().value()},
            {"val", x.valuation()},
            {"digits", x.digits()},
            {"zero", x.is_zero()}};
}

json to_json(const Point& pt) { return {{"x", to_json(pt.x)}, {"y", to_json(pt.y)}}; }

Point point_from_json(const json& j) { return Point(rational_from_json(j.at("x")), rational_from_json(j.at("y"))); }

namespace {
json exponent_json(const NormExponent& e) { return e ? json(*e) : json(nullptr); }
}  // namespace

json to_json(const NormProfile& pr) { return {{"a", exponent_json(pr.a)}, {"b", exponent_json(pr.b)}}; }

json to_json(const RegionLabel& l) {
    return {{"regime", to_string(l.regime)},
            {"name", to_string(l.name)},
            {"index", l.index ? json(*l.index) : json(nullptr)}};
}

RegionLabel label_from_json(const json& j) {
    RegionLabel l{parse_regime(j.at("regime").get<std::string>()),
                  parse_region_name(j.at("name").get<std::string>()), std::nullopt};
    if (j.contains("index") && !j.at("index").is_null()) l.index = j.at("index").get<int>();
    return l;
}

json to_json(const Verdict& v) {
    json j{{"type", verdict_name(v)}};
    if (const auto* c = std::get_if<verdict::Completed>(&v)) j["max_exponent"] = exponent_json(c->max_exponent);
    if (const auto* e = std::get_if<verdict::EscapedThreshold>(&v)) {
        j["step"] = e->step;
        j["exponent"] = e->exponent;
    }
    if (const auto* u = std::get_if<verdict::UndefinedInverse>(&v)) j["step"] = u->step;
    if (const auto* b = std::get_if<verdict::BudgetExceeded>(&v)) j["step"] = b->step;
    return j;
}

json to_json(const OrbitRecord& rec) {
    json steps = json::array();
    for (const auto& st : rec.steps) {
        steps.push_back({{"n", st.n},
                         {"x", st.point.x.to_string()},
                         {"y", st.point.y.to_string()},
                         {"a", exponent_json(st.profile.a)},
                         {"b", exponent_json(st.profile.b)},
                         {"region", st.region ? to_json(*st.region) : json(nullptr)}});
    }
    return {{"direction", rec.direction == Direction::Backward ? "backward" : "forward"},
            {"steps", steps},
            {"verdict", to_json(rec.verdict)},
            {"entered_invariant", rec.entered_invariant ? to_json(*rec.entered_invariant) : json(nullptr)}};
}

json to_json(const FixedPoint& fp) {
    return {{"alpha", to_json(fp.alpha)}, {"exact", fp.exact ? to_json(*fp.exact) : json(nullptr)}};
}

json measure_report(const RegionLabel& label, std::int64_t d, Prime p, std::int64_t window, const MeasureValue& m) {
    return {{"label", to_json(label)},
            {"d", d},
            {"p", p.value()},
            {"window", window},
            {"exact", m.exact_string()},
            {"decimal_hint", m.decimal_hint()}};
}

json tn_report(const std::vector<TnRow>& rows, std::int64_t k, Prime p) {
    const mpq_class f(p.as_mpz() - 1, p.as_mpz());
    const MeasureValue ratio{mpq_class(f * f)};
    json out{{"k", k}, {"p", p.value()}, {"ratio_exact_over_ball_product", ratio.exact_string()}, {"rows", json::array()}};
    for (const auto& r : rows) {
        out["rows"].push_back({{"n", r.n},
                               {"exact", r.exact.exact_string()},
                               {"ball_product", r.ball_product.exact_string()},
                               {"partial_sum", r.partial_sum.exact_string()},
                               {"decimal_hint", r.partial_sum.decimal_hint()}});
    }
    return out;
}

namespace {

json labels_json(const std::vector<RegionLabel>& ls) {
    json a = json::array();
    for (const auto& l : ls) a.push_back(short_name(l));
    return a;
}

std::vector<RegionLabel> labels_from_json(const json& j, Regime g) {
    std::vector<RegionLabel> out;
    for (const auto& s : j) out.push_back(parse_label(s.get<std::string>(), g));
    return out;
}

}  // namespace

json to_json(const LemmaSpec& s) {
    json j{{"id", s.id},         {"d", s.d},           {"p", s.p},
           {"depth", s.depth},   {"samples", s.samples}, {"window", s.window},
           {"digits", s.digits}, {"max_index", s.max_index}, {"seed", s.seed},
           {"regime", to_string(regime_of(s.d))}};
    if (s.c) j["c"] = *s.c;
    if (!s.sources.empty()) j["sources"] = labels_json(s.sources);
    if (s.targets) j["targets"] = labels_json(*s.targets);
    return j;
}

LemmaSpec lemma_spec_from_json(const json& j) {
    LemmaSpec s;
    s.id = j.at("id").get<std::string>();
    s.d = j.at("d").get<std::int64_t>();
    s.p = j.value("p", std::uint64_t{3});
    if (j.contains("c")) s.c = j.at("c").get<std::string>();
    s.depth = j.value("depth", lemma_info(s.id).depth);
    s.samples = j.value("samples", std::int64_t{1000});
    s.window = j.value("window", std::int64_t{60});
    s.digits = j.value("digits", std::int64_t{8});
    s.max_index = j.value("max_index", 8);
    s.seed = j.value("seed", std::uint64_t{1});
    const Regime g = regime_of(s.d);
    if (j.contains("regime") && parse_regime(j.at("regime").get<std::string>()) != g)
        throw std::invalid_argument("campaign entry " + s.id + ": regime does not match d");
    if (j.contains("sources")) s.sources = labels_from_json(j.at("sources"), g);
    if (j.contains("targets")) s.targets = labels_from_json(j.at("targets"), g);
    return s;
}

json to_json(const Counterexample& cx) {
    json images = json::array();
    for (const auto& pr : cx.image_profiles) images.push_back(to_json(pr));
    json pts = json::array();
    for (const auto& pt : cx.images) pts.push_back(to_json(pt));
    return {{"source", to_json(cx.source)},
            {"start_profile", to_json(cx.start_profile)},
            {"start", cx.start ? to_json(*cx.start) : json(nullptr)},
            {"image_profiles", images},
            {"images", pts},
            {"expected", labels_json(cx.expected)},
            {"got", cx.got ? to_json(*cx.got) : json(nullptr)},
            {"detail", cx.detail}};
}

json to_json(const VerificationReport& r) {
    json cxs = json::array();
    for (const auto& cx : r.counterexamples) cxs.push_back(to_json(cx));
    return {{"kind", r.kind},
            {"id", r.id},
            {"d", r.d},
            {"p", r.p},
            {"c", r.c},
            {"spec", r.spec ? to_json(*r.spec) : json(nullptr)},
            {"samples", r.samples},
            {"passes", r.passes},
            {"failures", r.failures},
            {"skipped", r.skipped},
            {"undefined", r.undefined},
            {"counterexamples", cxs},
            {"notes", r.notes},
            {"wall_seconds", r.wall_seconds}};
}

json region_table_json() {
    json out = json::array();
    auto add = [&](const table::RegionDef& def, const char* role) {
        json idx;
        switch (def.index.kind) {
            case table::IndexKind::None: idx = nullptr; break;
            case table::IndexKind::Fixed: idx = def.index.fixed; break;
            case table::IndexKind::Series:
                idx = {{"step", def.index.step}, {"offset", def.index.offset}, {"n_min", def.index.n_min}};
                break;
        }
        out.push_back({{"regime", to_string(def.regime)},
                       {"name", to_string(def.name)},
                       {"index", idx},
                       {"role", role},
                       {"definition", def.text}});
    };
    for (const auto& def : table::partition()) add(def, "partition");
    for (const auto& def : table::j_refinement()) add(def, "J refinement");
    add(table::t_overlay(), "overlay");
    return out;
}

json transition_table_json(std::int64_t d, int max_index) {
    json out = json::array();
    for (const auto& info : lemmas()) {
        if (info.regime != regime_of(d)) continue;
        json claims = json::array();
        for (const auto& src : lemma_sources(info.id, d, max_index))
            claims.push_back({{"source", short_name(src)},
                              {"depth", info.depth},
                              {"targets", labels_json(expected_preimage_regions(src, info.depth))}});
        out.push_back({{"id", info.id}, {"statement", info.statement}, {"claims", claims}});
    }
    return out;
}

}  // namespace padic_henon
