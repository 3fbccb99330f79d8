#pragma once

// Which regions f^{-1} (or f^{-2}) may send each region to, as claimed by the
// transition lemmas, and the profile-level inverse used to check them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic_henon/point.hpp"
#include "padic_henon/region_types.hpp"

namespace padic_henon {

struct LemmaInfo {
    std::string id;
    Regime regime;
    int depth;
    std::string statement;
};

// Every lemma identifier known to the verifier.
const std::vector<LemmaInfo>& lemmas();
const LemmaInfo& lemma_info(const std::string& id);  // throws std::invalid_argument

// Lemma that makes a claim about `label` at the given depth; nullopt if none.
std::optional<std::string> lemma_for(const RegionLabel& label, int depth = 1);

// Admissible regions for f^{-depth}(label). Throws std::invalid_argument for
// labels no lemma speaks about.
std::vector<RegionLabel> expected_preimage_regions(const RegionLabel& label, int depth = 1);

// Source labels of a lemma in the regime of d, indexed families up to max_index.
std::vector<RegionLabel> lemma_sources(const std::string& id, std::int64_t d, int max_index);

// f^{-1} on norm profiles. For a != d the image is the single profile
// (b, max(a, d) - b). For a = d, x - c may cancel: the image is
// {(b, e - b) : e <= d} together with the y = 0 case (x = c).
struct AbstractInverse {
    NormExponent x;                       // = b
    std::optional<std::int64_t> y;        // set when the image is a single profile
    std::optional<std::int64_t> e_max;    // set for the cancellation case (= d)

    bool cancellation() const noexcept { return e_max.has_value(); }
    // Concrete images, enumerating e from e_min to e_max; the y = 0 image is
    // included when include_zero is set.
    std::vector<NormProfile> enumerate(std::int64_t e_min, bool include_zero = true) const;
};

// Requires pr.b to be present.
AbstractInverse abstract_inverse(const NormProfile& pr, std::int64_t d);

}  // namespace padic_henon
