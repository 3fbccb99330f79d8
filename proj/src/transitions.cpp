#include "padic_henon/transitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic_henon/regions.hpp"

namespace padic_henon {
namespace {

using R = RegionName;

RegionLabel L(Regime g, RegionName n, std::optional<int> i = std::nullopt) { return {g, n, i}; }

}  // namespace

const std::vector<LemmaInfo>& lemmas() {
    static const std::vector<LemmaInfo> t = {
        {"small-A", Regime::Small, 1,
         "f^-1(A1) in A2, f^-1(A2) in A1, f^-1(A3) in A4, f^-1(A4) in A2 u A5, "
         "f^-1(A5) in A6, f^-1(A6) in A2 u A5"},
        {"small-A5-depth2", Regime::Small, 2, "f^-2(A5) in A2"},
        {"small-B", Regime::Small, 1, "f^-1(B1) in B2, f^-1(B2) in B1 u A2 u A3 u A5"},
        {"small-P", Regime::Small, 1,
         "f^-1(P1 u P2) in A1, f^-1(P3) in P4 u P5, f^-1(P4) in P5 u A6, f^-1(P5) in P4, "
         "f^-1(P6) in P1 u P2 u P3 u P4 u P5 u A1"},
        {"small-Z-invariant", Regime::Small, 1, "f^-1(Z) in Z"},
        {"large-J0-invariant", Regime::Large, 1, "f^-1(J0) in J0"},
        {"large-J-descent", Regime::Large, 1, "f^-1(J_i) in J_{i-1} for i >= 1"},
        {"large-FGH", Regime::Large, 1, "f^-1(F) in G, f^-1(G) in H, f^-1(H) in G"},
        {"large-M", Regime::Large, 1,
         "f^-1(M1) in G, f^-1(M_{2n+2}) in H u M1 u M3 u ... u M_{2n+1}, "
         "f^-1(M_{2n+1}) in M_{2n} (n >= 1)"},
        {"large-T-descent", Regime::Large, 1, "f^-1(T_n) in T_{n-1} for n >= 1 (d >= 2)"},
        {"unit-FGH", Regime::Unit, 1, "f^-1(F) in G, f^-1(G) in H, f^-1(H) in G"},
        {"unit-M", Regime::Unit, 1, "f^-1(M1) in H, f^-1(M_i) in M_{i-1} for i >= 2"},
    };
    return t;
}

const LemmaInfo& lemma_info(const std::string& id) {
    for (const auto& l : lemmas())
        if (l.id == id) return l;
    throw std::invalid_argument("unknown lemma identifier: " + id);
}

std::optional<std::string> lemma_for(const RegionLabel& l, int depth) {
    const int i = l.index.value_or(-1);
    if (depth == 2)
        return (l.regime == Regime::Small && l.name == R::A && i == 5)
                   ? std::optional<std::string>("small-A5-depth2")
                   : std::nullopt;
    if (depth != 1) return std::nullopt;
    switch (l.regime) {
        case Regime::Small:
            if (l.name == R::A && i >= 1 && i <= 6) return "small-A";
            if (l.name == R::B && (i == 1 || i == 2)) return "small-B";
            if (l.name == R::P && i >= 1 && i <= 6) return "small-P";
            if (l.name == R::Z) return "small-Z-invariant";
            break;
        case Regime::Large:
            if (l.name == R::J && i == 0) return "large-J0-invariant";
            if (l.name == R::J && i >= 1) return "large-J-descent";
            if (l.name == R::F || l.name == R::G || l.name == R::H) return "large-FGH";
            if (l.name == R::M && i >= 1) return "large-M";
            if (l.name == R::T && i >= 1) return "large-T-descent";
            break;
        case Regime::Unit:
            if (l.name == R::F || l.name == R::G || l.name == R::H) return "unit-FGH";
            if (l.name == R::M && i >= 1) return "unit-M";
            break;
    }
    return std::nullopt;
}

std::vector<RegionLabel> expected_preimage_regions(const RegionLabel& l, int depth) {
    if (!lemma_for(l, depth))
        throw std::invalid_argument("no transition lemma for " + to_string(l) + " at depth " +
                                    std::to_string(depth));
    const Regime g = l.regime;
    const int i = l.index.value_or(-1);
    if (depth == 2) return {L(g, R::A, 2)};

    switch (g) {
        case Regime::Small:
            if (l.name == R::Z) return {L(g, R::Z)};
            if (l.name == R::A) {
                switch (i) {
                    case 1: return {L(g, R::A, 2)};
                    case 2: return {L(g, R::A, 1)};
                    case 3: return {L(g, R::A, 4)};
                    case 4: return {L(g, R::A, 2), L(g, R::A, 5)};
                    case 5: return {L(g, R::A, 6)};
                    case 6: return {L(g, R::A, 2), L(g, R::A, 5)};
                }
            }
            if (l.name == R::B) {
                if (i == 1) return {L(g, R::B, 2)};
                return {L(g, R::B, 1), L(g, R::A, 2), L(g, R::A, 3), L(g, R::A, 5)};
            }
            if (l.name == R::P) {
                switch (i) {
                    case 1:
                    case 2: return {L(g, R::A, 1)};
                    case 3: return {L(g, R::P, 4), L(g, R::P, 5)};
                    case 4: return {L(g, R::P, 5), L(g, R::A, 6)};
                    case 5: return {L(g, R::P, 4)};
                    case 6:
                        // |y| < |c| gives P1 u P3 u A1, |c| < |y| < 1 gives P2 u P4 u P5.
                        return {L(g, R::P, 1), L(g, R::P, 2), L(g, R::P, 3),
                                L(g, R::P, 4), L(g, R::P, 5), L(g, R::A, 1)};
                }
            }
            break;
        case Regime::Large:
            if (l.name == R::J) return {L(g, R::J, i == 0 ? 0 : i - 1)};
            if (l.name == R::F) return {L(g, R::G)};
            if (l.name == R::G) return {L(g, R::H)};
            if (l.name == R::H) return {L(g, R::G)};
            if (l.name == R::T) return {L(g, R::T, i - 1)};
            if (l.name == R::M) {
                if (i == 1) return {L(g, R::G)};
                if (i % 2 == 1) return {L(g, R::M, i - 1)};
                std::vector<RegionLabel> out{L(g, R::H)};
                for (int k = 1; k < i; k += 2) out.push_back(L(g, R::M, k));
                return out;
            }
            break;
        case Regime::Unit:
            if (l.name == R::F) return {L(g, R::G)};
            if (l.name == R::G) return {L(g, R::H)};
            if (l.name == R::H) return {L(g, R::G)};
            if (l.name == R::M) return {i == 1 ? L(g, R::H) : L(g, R::M, i - 1)};
            break;
    }
    throw std::logic_error("transition table out of sync for " + to_string(l));
}

std::vector<RegionLabel> lemma_sources(const std::string& id, std::int64_t d, int max_index) {
    const LemmaInfo& info = lemma_info(id);
    if (info.regime != regime_of(d))
        throw std::invalid_argument("lemma " + id + " concerns the " + to_string(info.regime) +
                                    " regime, not d = " + std::to_string(d));
    std::vector<RegionLabel> out;
    for (const auto& l : classifier_for(d).labels(max_index))
        if (lemma_for(l, info.depth) == id) out.push_back(l);
    if (id == "large-T-descent" && d >= 2)
        for (int n = 1; n <= max_index; ++n) out.push_back(L(Regime::Large, R::T, n));
    return out;
}

std::vector<NormProfile> AbstractInverse::enumerate(std::int64_t e_min, bool include_zero) const {
    std::vector<NormProfile> out;
    if (!cancellation()) {
        out.push_back({x, y});
        return out;
    }
    for (std::int64_t e = *e_max; e >= e_min; --e) out.push_back({x, e - *x});
    if (include_zero) out.push_back({x, std::nullopt});
    return out;
}

AbstractInverse abstract_inverse(const NormProfile& pr, std::int64_t d) {
    if (!pr.b) throw std::invalid_argument("abstract_inverse: y = 0 has no preimage");
    AbstractInverse out;
    out.x = pr.b;
    if (pr.a && *pr.a == d) {
        out.e_max = d;
    } else {
        // |x - c| = max(|x|, |c|) when |x| != |c|; x = 0 gives |c|.
        const std::int64_t e = pr.a ? std::max(*pr.a, d) : d;
        out.y = e - *pr.b;
    }
    return out;
}

}  // namespace padic_henon
