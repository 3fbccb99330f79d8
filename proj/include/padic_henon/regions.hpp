#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "padic_henon/point.hpp"
#include "padic_henon/region_table.hpp"
#include "padic_henon/region_types.hpp"

namespace padic_henon {

// Largest |a|, |b|, |d| accepted by the classifier. Larger exponents would
// need coordinates with more than 2^40 digits, so they never arise in practice.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;

// Region evaluation for one value of d, with the declarative table
// instantiated once. A zero x coordinate (a = nullopt) is evaluated as the
// limit a -> -infinity; a profile with y = 0 is labelled OutsideQ.
class Classifier {
public:
    explicit Classifier(std::int64_t d);
    ~Classifier();
    Classifier(Classifier&&) noexcept;
    Classifier& operator=(Classifier&&) noexcept;

    std::int64_t d() const noexcept { return d_; }
    Regime regime() const noexcept { return regime_of(d_); }

    // First matching partition region, searching indexed families by ascending n.
    RegionLabel classify(const NormProfile& pr) const;

    // Every partition region whose predicate holds (totality/overlap checks).
    std::vector<RegionLabel> all_matches(const NormProfile& pr) const;

    // Membership test for any partition, refinement or overlay label of this regime.
    bool contains(const RegionLabel& label, const NormProfile& pr) const;

    // B_i / A_i subregion of a LARGE J_i (i >= 1) profile.
    std::optional<RegionLabel> refine_j(const NormProfile& pr) const;

    // n with the profile in T_n (LARGE, d >= 2 only).
    std::optional<int> t_index(const NormProfile& pr) const;

    // Partition labels of this regime, indexed families listed up to max_index.
    std::vector<RegionLabel> labels(int max_index) const;

private:
    struct Impl;
    std::int64_t d_;
    std::unique_ptr<Impl> impl_;
};

// Shared, lazily built classifier for d.
const Classifier& classifier_for(std::int64_t d);

RegionLabel classify(const NormProfile& pr, std::int64_t d);

// True when F_{2n+1}/F_{2n} < F_{2n+3}/F_{2n+2} < beta < F_{2n+4}/F_{2n+3} < F_{2n+2}/F_{2n+1}
// holds, checked by integer cross-multiplication and exact comparison with beta.
bool golden_bracket_holds(int n);

// Sign of b*beta - a, exact. Never 0 for (a, b) != (0, 0).
int golden_sign(std::int64_t a, std::int64_t b);

}  // namespace padic_henon
