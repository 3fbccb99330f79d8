#pragma once

// JSON forms of the library's values. Rationals travel as decimal strings.

#include <json.hpp>

#include "padic_henon/dynamics.hpp"
#include "padic_henon/measure.hpp"
#include "padic_henon/point.hpp"
#include "padic_henon/rational.hpp"
#include "padic_henon/region_table.hpp"
#include "padic_henon/truncated.hpp"
#include "padic_henon/verifier.hpp"

namespace padic_henon {

using json = nlohmann::json;

json to_json(const PadicRational& x);            // {"num", "den", "p"}
PadicRational rational_from_json(const json& j);

json to_json(const TruncatedPadic& x);           // {"p", "val", "digits", "zero"}
json to_json(const Point& pt);                   // {"x": rational, "y": rational}
Point point_from_json(const json& j);
json to_json(const NormProfile& pr);             // {"a", "b"}, null for a zero coordinate
json to_json(const RegionLabel& l);              // {"regime", "name", "index"}
RegionLabel label_from_json(const json& j);
json to_json(const Verdict& v);
json to_json(const OrbitRecord& rec);            // {"direction", "steps": [{n, x, y, a, b, region}], "verdict"}
json to_json(const FixedPoint& fp);

json measure_report(const RegionLabel& label, std::int64_t d, Prime p, std::int64_t window, const MeasureValue& m);
json tn_report(const std::vector<TnRow>& rows, std::int64_t k, Prime p);

json to_json(const LemmaSpec& s);
LemmaSpec lemma_spec_from_json(const json& j);
json to_json(const Counterexample& cx);
json to_json(const VerificationReport& r);

// Every partition/refinement/overlay definition and every lemma's claims.
json region_table_json();
json transition_table_json(std::int64_t d, int max_index);

}  // namespace padic_henon
