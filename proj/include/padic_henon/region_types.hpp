#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace padic_henon {

// SMALL: |c| < 1 (d < 0), UNIT: |c| = 1 (d = 0), LARGE: |c| > 1 (d > 0).
enum class Regime { Small, Unit, Large };

inline Regime regime_of(std::int64_t d) {
    return d < 0 ? Regime::Small : d == 0 ? Regime::Unit : Regime::Large;
}

const char* to_string(Regime r);
Regime parse_regime(std::string_view s);

// OutsideQ is the label for profiles with y = 0, where the inverse is undefined.
enum class RegionName { Z, R, A, B, P, C, D, F, G, H, J, M, T, OutsideQ };

const char* to_string(RegionName n);
RegionName parse_region_name(std::string_view s);

struct RegionLabel {
    Regime regime;
    RegionName name;
    std::optional<int> index;

    friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
    friend auto operator<=>(const RegionLabel&, const RegionLabel&) = default;
};

// "J3", "C0", "Z", "OutsideQ" (no regime prefix).
std::string short_name(const RegionLabel& l);
// "LARGE:J3".
std::string to_string(const RegionLabel& l);
// Accepts "J3" (with the regime supplied separately) or "LARGE:J3".
RegionLabel parse_label(std::string_view text, std::optional<Regime> regime = std::nullopt);

}  // namespace padic_henon
