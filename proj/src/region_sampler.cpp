#include "padic_henon/region_sampler.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "padic_henon/errors.hpp"
#include "padic_henon/regions.hpp"

namespace padic_henon {

const std::vector<std::pair<std::int64_t, std::int64_t>>& admissible_profiles(const RegionLabel& label,
                                                                              std::int64_t d,
                                                                              std::int64_t window) {
    using Key = std::tuple<RegionLabel, std::int64_t, std::int64_t>;
    static std::mutex mu;
    static std::map<Key, std::vector<std::pair<std::int64_t, std::int64_t>>> cache;
    if (window < 0) throw std::invalid_argument("window must be nonnegative");

    std::lock_guard lock(mu);
    const Key key{label, d, window};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (label.regime == regime_of(d)) {
        const Classifier& cls = classifier_for(d);
        for (std::int64_t a = -window; a <= window; ++a)
            for (std::int64_t b = -window; b <= window; ++b)
                if (cls.contains(label, {a, b})) out.emplace_back(a, b);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

Point sample_in_region(const RegionLabel& label, std::int64_t d, Prime p, std::int64_t window,
                       std::int64_t digit_count, Sampler& sampler) {
    const auto& profiles = admissible_profiles(label, d, window);
    if (profiles.empty())
        throw EmptyRegion("region " + to_string(label) + " has no profile with |a|,|b| <= " +
                          std::to_string(window) + " for d = " + std::to_string(d));
    const auto idx = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(profiles.size()) - 1));
    const auto [a, b] = profiles[idx];
    Point pt(sample_with_norm(a, digit_count, sampler, p), sample_with_norm(b, digit_count, sampler, p));
    const Classifier& cls = classifier_for(d);
    const bool overlay = label.name == RegionName::T ||
                         (label.regime == Regime::Large && (label.name == RegionName::A || label.name == RegionName::B));
    if (!cls.contains(label, profile_of(pt)) || (!overlay && cls.classify(profile_of(pt)) != label))
        throw std::logic_error("sampled point left its region " + to_string(label));
    return pt;
}

}  // namespace padic_henon
