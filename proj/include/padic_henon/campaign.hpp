#pragma once

// Declarative verification campaigns loaded from JSON:
//
//   {"name": "...", "entries": [ {"kind": "transition", "id": "large-J-descent",
//                                 "d": 2, "p": 3, "samples": 1000, "seed": 7, "window": 60}, ... ]}
//
// kind is one of transition (default), exhaustive, escape, remark-orbits, sandwich.
// "expect": "counterexample" marks an entry whose claim is known to fail; the
// entry then succeeds only if counterexamples are actually found.

#include <string>
#include <vector>

#include "padic_henon/serialize.hpp"
#include "padic_henon/verifier.hpp"

namespace padic_henon {

struct CampaignEntry {
    std::string kind = "transition";
    std::string label;   // display name
    bool expect_counterexample = false;
    std::string note;

    LemmaSpec lemma;       // transition
    EscapeSpec escape;     // escape
    SandwichSpec sandwich; // sandwich
    std::int64_t d = 0;    // exhaustive
    std::int64_t window = 0;
    std::vector<std::string> ids;
    std::uint64_t p = 3;   // remark-orbits
};

struct Campaign {
    std::string name;
    std::vector<CampaignEntry> entries;
};

// Validates every entry (unknown lemma identifiers, mismatched regimes, bad labels).
Campaign load_campaign(const json& j);
Campaign load_campaign_file(const std::string& path);

struct EntryOutcome {
    const CampaignEntry* entry;
    std::vector<VerificationReport> reports;
    bool ok;
    std::string summary;
};

struct CampaignResult {
    std::string name;
    std::vector<EntryOutcome> outcomes;
    bool ok = true;
};

CampaignResult run_campaign(const Campaign& c);
json to_json(const CampaignResult& r);

}  // namespace padic_henon
