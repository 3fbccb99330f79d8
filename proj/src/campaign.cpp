#include "padic_henon/campaign.hpp"

#include <fstream>
#include <stdexcept>

#include "padic_henon/regions.hpp"
#include "padic_henon/transitions.hpp"

namespace padic_henon {
namespace {

CampaignEntry parse_entry(const json& j, std::size_t pos) {
    CampaignEntry e;
    e.kind = j.value("kind", std::string("transition"));
    e.note = j.value("note", std::string());
    const std::string expect = j.value("expect", std::string("pass"));
    if (expect != "pass" && expect != "counterexample")
        throw std::invalid_argument("entry " + std::to_string(pos) + ": expect must be pass or counterexample");
    e.expect_counterexample = expect == "counterexample";

    if (e.kind == "transition") {
        e.lemma = lemma_spec_from_json(j);
        e.label = e.lemma.id + " d=" + std::to_string(e.lemma.d);
        const LemmaInfo& info = lemma_info(e.lemma.id);
        if (info.regime != regime_of(e.lemma.d))
            throw std::invalid_argument("entry " + std::to_string(pos) + ": lemma " + e.lemma.id + " does not apply to d");
        params_for(e.lemma.d, e.lemma.p, e.lemma.c);  // validates p and c
    } else if (e.kind == "exhaustive") {
        e.d = j.at("d").get<std::int64_t>();
        e.window = j.value("window", std::int64_t{200});
        if (j.contains("ids")) e.ids = j.at("ids").get<std::vector<std::string>>();
        for (const auto& id : e.ids)
            if (lemma_info(id).regime != regime_of(e.d))
                throw std::invalid_argument("entry " + std::to_string(pos) + ": lemma " + id + " does not apply to d");
        e.label = "exhaustive d=" + std::to_string(e.d);
    } else if (e.kind == "escape") {
        EscapeSpec s;
        s.d = j.at("d").get<std::int64_t>();
        s.label = parse_label(j.at("region").get<std::string>(), regime_of(s.d));
        s.p = j.value("p", std::uint64_t{3});
        if (j.contains("c")) s.c = j.at("c").get<std::string>();
        s.samples = j.value("samples", std::int64_t{500});
        s.steps = j.value("steps", std::int64_t{60});
        if (j.contains("threshold")) s.threshold = j.at("threshold").get<std::int64_t>();
        s.window = j.value("window", std::int64_t{60});
        s.digits = j.value("digits", std::int64_t{8});
        s.seed = j.value("seed", std::uint64_t{1});
        params_for(s.d, s.p, s.c);
        e.escape = s;
        e.label = "escape " + short_name(s.label) + " d=" + std::to_string(s.d);
    } else if (e.kind == "remark-orbits") {
        e.p = j.value("p", std::uint64_t{3});
        Prime check(e.p);
        e.label = "worked orbits p=" + std::to_string(e.p);
    } else if (e.kind == "sandwich") {
        SandwichSpec s;
        s.theorem = j.at("theorem").get<int>();
        s.d = j.at("d").get<std::int64_t>();
        s.p = j.value("p", std::uint64_t{3});
        if (j.contains("c")) s.c = j.at("c").get<std::string>();
        s.samples = j.value("samples", std::int64_t{500});
        s.steps = j.value("steps", std::int64_t{60});
        if (j.contains("threshold")) s.threshold = j.at("threshold").get<std::int64_t>();
        s.window = j.value("window", std::int64_t{40});
        s.seed = j.value("seed", std::uint64_t{1});
        params_for(s.d, s.p, s.c);
        e.sandwich = s;
        e.label = "sandwich theorem " + std::to_string(s.theorem) + " d=" + std::to_string(s.d);
    } else {
        throw std::invalid_argument("entry " + std::to_string(pos) + ": unknown kind '" + e.kind + "'");
    }
    if (j.contains("name")) e.label = j.at("name").get<std::string>();
    return e;
}

}  // namespace

Campaign load_campaign(const json& j) {
    Campaign c;
    c.name = j.value("name", std::string("campaign"));
    const auto& entries = j.at("entries");
    for (std::size_t i = 0; i < entries.size(); ++i) c.entries.push_back(parse_entry(entries.at(i), i));
    return c;
}

Campaign load_campaign_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open campaign file " + path);
    return load_campaign(json::parse(in));
}

CampaignResult run_campaign(const Campaign& c) {
    CampaignResult res;
    res.name = c.name;
    for (const auto& e : c.entries) {
        EntryOutcome out{&e, {}, true, {}};
        if (e.kind == "transition") out.reports.push_back(verify_transition(e.lemma));
        else if (e.kind == "exhaustive") out.reports = verify_exhaustive(e.d, e.window, e.ids);
        else if (e.kind == "escape") out.reports.push_back(verify_escape(e.escape));
        else if (e.kind == "remark-orbits") out.reports.push_back(verify_remark_orbits(e.p));
        else if (e.kind == "sandwich") out.reports.push_back(verify_theorem_sandwich(e.sandwich));

        std::int64_t passes = 0, failures = 0, skipped = 0, samples = 0;
        for (const auto& r : out.reports) {
            passes += r.passes;
            failures += r.failures;
            skipped += r.skipped;
            samples += r.samples;
        }
        if (e.expect_counterexample) {
            out.ok = failures > 0;
            out.summary = out.ok ? "expected counterexamples found (" + std::to_string(failures) + ")"
                                 : "expected counterexamples were NOT found";
        } else {
            out.ok = failures == 0;
            out.summary = std::to_string(passes) + " passed, " + std::to_string(failures) + " failed, " +
                          std::to_string(skipped) + " skipped of " + std::to_string(samples);
            if (samples > 0 && skipped == samples) out.summary += " (skipped: empty region)";
        }
        res.ok = res.ok && out.ok;
        res.outcomes.push_back(std::move(out));
    }
    return res;
}

json to_json(const CampaignResult& r) {
    json entries = json::array();
    for (const auto& o : r.outcomes) {
        json reps = json::array();
        for (const auto& rep : o.reports) reps.push_back(to_json(rep));
        entries.push_back({{"name", o.entry->label},
                           {"kind", o.entry->kind},
                           {"expect", o.entry->expect_counterexample ? "counterexample" : "pass"},
                           {"note", o.entry->note},
                           {"ok", o.ok},
                           {"summary", o.summary},
                           {"reports", reps}});
    }
    return {{"campaign", r.name}, {"ok", r.ok}, {"entries", entries}};
}

}  // namespace padic_henon
