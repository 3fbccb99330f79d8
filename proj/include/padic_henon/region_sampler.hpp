#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "padic_henon/point.hpp"
#include "padic_henon/region_types.hpp"
#include "padic_henon/sampler.hpp"

namespace padic_henon {

// Integer profiles (a, b) with |a|, |b| <= window lying in the region. Cached.
const std::vector<std::pair<std::int64_t, std::int64_t>>& admissible_profiles(const RegionLabel& label,
                                                                              std::int64_t d,
                                                                              std::int64_t window);

// A point whose profile is drawn uniformly from admissible_profiles, with
// coordinates from sample_with_norm. Throws EmptyRegion when there is none.
Point sample_in_region(const RegionLabel& label, std::int64_t d, Prime p, std::int64_t window,
                       std::int64_t digit_count, Sampler& sampler);

}  // namespace padic_henon
