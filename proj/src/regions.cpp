#include "padic_henon/regions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "padic_henon/fibonacci.hpp"

namespace padic_henon {

// ---------------------------------------------------------------- labels

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Small: return "SMALL";
        case Regime::Unit: return "UNIT";
        case Regime::Large: return "LARGE";
    }
    return "?";
}

Regime parse_regime(std::string_view s) {
    if (s == "SMALL") return Regime::Small;
    if (s == "UNIT") return Regime::Unit;
    if (s == "LARGE") return Regime::Large;
    throw std::invalid_argument("unknown regime: " + std::string(s));
}

namespace {
constexpr std::pair<RegionName, const char*> kNames[] = {
    {RegionName::Z, "Z"}, {RegionName::R, "R"}, {RegionName::A, "A"}, {RegionName::B, "B"},
    {RegionName::P, "P"}, {RegionName::C, "C"}, {RegionName::D, "D"}, {RegionName::F, "F"},
    {RegionName::G, "G"}, {RegionName::H, "H"}, {RegionName::J, "J"}, {RegionName::M, "M"},
    {RegionName::T, "T"}, {RegionName::OutsideQ, "OutsideQ"},
};
}  // namespace

const char* to_string(RegionName n) {
    for (const auto& [k, v] : kNames)
        if (k == n) return v;
    return "?";
}

RegionName parse_region_name(std::string_view s) {
    for (const auto& [k, v] : kNames)
        if (s == v) return k;
    throw std::invalid_argument("unknown region name: " + std::string(s));
}

std::string short_name(const RegionLabel& l) {
    std::string s = to_string(l.name);
    if (l.index) s += std::to_string(*l.index);
    return s;
}

std::string to_string(const RegionLabel& l) { return std::string(to_string(l.regime)) + ":" + short_name(l); }

RegionLabel parse_label(std::string_view text, std::optional<Regime> regime) {
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        regime = parse_regime(text.substr(0, colon));
        text = text.substr(colon + 1);
    }
    if (!regime) throw std::invalid_argument("region label without regime: " + std::string(text));
    if (text == "OutsideQ") return {*regime, RegionName::OutsideQ, std::nullopt};
    std::size_t i = 0;
    while (i < text.size() && !(text[i] >= '0' && text[i] <= '9')) ++i;
    RegionLabel l{*regime, parse_region_name(text.substr(0, i)), std::nullopt};
    if (i < text.size()) {
        const std::string digits(text.substr(i));
        if (digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed region label: " + std::string(text));
        l.index = std::stoi(digits);
    }
    return l;
}

// ---------------------------------------------------------------- golden ratio

int golden_sign(std::int64_t a, std::int64_t b) {
    // 2(b*beta - a) = (b - 2a) + b*sqrt5
    const __int128 u = static_cast<__int128>(b) - 2 * static_cast<__int128>(a);
    const __int128 v = b;
    if (u >= 0 && v >= 0) return (u > 0 || v > 0) ? 1 : 0;
    if (u <= 0 && v <= 0) return -1;
    const __int128 u2 = u * u, v2 = 5 * v * v;
    if (u > 0) return u2 > v2 ? 1 : -1;
    return v2 > u2 ? 1 : -1;
}

bool golden_bracket_holds(int n) {
    if (n < 0 || 2 * n + 4 > kFib64Max) throw std::out_of_range("golden_bracket_holds: n out of range");
    const __int128 f0 = fib64(2 * n), f1 = fib64(2 * n + 1), f2 = fib64(2 * n + 2),
                   f3 = fib64(2 * n + 3), f4 = fib64(2 * n + 4);
    const bool ratios = f1 * f2 < f3 * f0 && f4 * f1 < f2 * f3;
    // F_{2n+3}/F_{2n+2} < beta  <=>  F_{2n+2} beta - F_{2n+3} > 0
    const bool below = golden_sign(fib64(2 * n + 3), fib64(2 * n + 2)) > 0;
    const bool above = golden_sign(fib64(2 * n + 4), fib64(2 * n + 3)) < 0;
    return ratios && below && above;
}

// ---------------------------------------------------------------- classifier

namespace {

using i128 = __int128;
using table::Rel;

struct CAtom {
    bool golden = false;
    Rel rel = Rel::Eq;
    i128 ca = 0, cb = 0, k = 0;  // ca*a + cb*b + k  rel  0
};

struct CRegion {
    RegionLabel label;
    std::vector<std::vector<CAtom>> any_of;
};

bool holds(Rel rel, int sign) {
    switch (rel) {
        case Rel::Lt: return sign < 0;
        case Rel::Le: return sign <= 0;
        case Rel::Eq: return sign == 0;
        case Rel::Ge: return sign >= 0;
        case Rel::Gt: return sign > 0;
    }
    return false;
}

int sgn(i128 v) { return (v > 0) - (v < 0); }

bool eval_atom(const CAtom& at, const NormExponent& a, std::int64_t b) {
    if (at.golden) {
        if (!a) return at.rel == Rel::Gt;  // b > -infinity
        return holds(at.rel, golden_sign(*a, b));
    }
    if (!a) {
        // a -> -infinity: the a-term dominates whenever its coefficient is nonzero.
        if (at.ca != 0) return holds(at.rel, -sgn(at.ca));
        return holds(at.rel, sgn(at.cb * b + at.k));
    }
    return holds(at.rel, sgn(at.ca * *a + at.cb * b + at.k));
}

bool eval_region(const CRegion& r, const NormExponent& a, std::int64_t b) {
    for (const auto& clause : r.any_of) {
        bool all = true;
        for (const auto& at : clause) {
            if (!eval_atom(at, a, b)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

int max_offset(const table::RegionDef& def) {
    int m = 0;
    auto upd = [&](const table::Coef& c) {
        if (c.m != 0) m = std::max(m, c.off);
    };
    for (const auto& cl : def.any_of)
        for (const auto& at : cl)
            if (const auto* l = std::get_if<table::Linear>(&at)) {
                for (const auto* f : {&l->lhs, &l->rhs}) {
                    upd(f->a);
                    upd(f->b);
                    upd(f->d);
                    upd(f->one);
                }
            }
    return m;
}

int n_cap(const table::RegionDef& def) {
    return (kFib64Max - max_offset(def)) / def.index.step;
}

CRegion compile(const table::RegionDef& def, int n, std::int64_t d) {
    using table::value;
    const int step = def.index.step;
    CRegion r;
    r.label.regime = def.regime;
    r.label.name = def.name;
    if (def.index.kind == table::IndexKind::Fixed) r.label.index = def.index.fixed;
    if (def.index.kind == table::IndexKind::Series) r.label.index = step * n + def.index.offset;
    for (const auto& cl : def.any_of) {
        std::vector<CAtom> out;
        for (const auto& at : cl) {
            CAtom c;
            if (const auto* g = std::get_if<table::Golden>(&at)) {
                c.golden = true;
                c.rel = g->rel;
            } else {
                const auto& l = std::get<table::Linear>(at);
                c.rel = l.rel;
                c.ca = static_cast<i128>(value(l.lhs.a, step, n)) - value(l.rhs.a, step, n);
                c.cb = static_cast<i128>(value(l.lhs.b, step, n)) - value(l.rhs.b, step, n);
                const i128 cd = static_cast<i128>(value(l.lhs.d, step, n)) - value(l.rhs.d, step, n);
                const i128 c1 = static_cast<i128>(value(l.lhs.one, step, n)) - value(l.rhs.one, step, n);
                c.k = cd * d + c1;
            }
            out.push_back(c);
        }
        r.any_of.push_back(std::move(out));
    }
    return r;
}

void check_range(const NormProfile& pr, std::int64_t d) {
    auto bad = [](std::int64_t v) { return v > kMaxExponent || v < -kMaxExponent; };
    if ((pr.a && bad(*pr.a)) || (pr.b && bad(*pr.b)) || bad(d))
        throw std::out_of_range("norm exponent beyond classifier range (2^40)");
}

// Compiled family: either a fixed region, or a series with one entry per n.
struct Family {
    const table::RegionDef* def;
    std::vector<CRegion> members;  // Series: members[n - n_min]
};

std::vector<Family> compile_all(const std::vector<table::RegionDef>& defs, Regime regime,
                                std::int64_t d) {
    std::vector<Family> out;
    for (const auto& def : defs) {
        if (def.regime != regime) continue;
        Family f{&def, {}};
        if (def.index.kind == table::IndexKind::Series) {
            for (int n = def.index.n_min; n <= n_cap(def); ++n) f.members.push_back(compile(def, n, d));
        } else {
            f.members.push_back(compile(def, 0, d));
        }
        out.push_back(std::move(f));
    }
    return out;
}

const CRegion* find_member(const std::vector<Family>& fams, const RegionLabel& l) {
    for (const auto& f : fams) {
        if (f.def->name != l.name || f.def->regime != l.regime) continue;
        const auto& ix = f.def->index;
        switch (ix.kind) {
            case table::IndexKind::None:
                if (!l.index) return &f.members[0];
                break;
            case table::IndexKind::Fixed:
                if (l.index && *l.index == ix.fixed) return &f.members[0];
                break;
            case table::IndexKind::Series: {
                if (!l.index) break;
                const int rem = *l.index - ix.offset;
                if (rem < 0 || rem % ix.step != 0) break;
                const int n = rem / ix.step;
                if (n >= ix.n_min && n - ix.n_min < static_cast<int>(f.members.size()))
                    return &f.members[static_cast<std::size_t>(n - ix.n_min)];
                break;
            }
        }
    }
    return nullptr;
}

// Fixed regions first, then indexed families interleaved by ascending n.
std::optional<RegionLabel> first_match(const std::vector<Family>& fams, const NormExponent& a,
                                       std::int64_t b) {
    int max_n = 0;
    for (const auto& f : fams) {
        if (f.def->index.kind != table::IndexKind::Series) {
            if (eval_region(f.members[0], a, b)) return f.members[0].label;
        } else {
            max_n = std::max(max_n, f.def->index.n_min + static_cast<int>(f.members.size()) - 1);
        }
    }
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& f : fams) {
            if (f.def->index.kind != table::IndexKind::Series) continue;
            const int k = n - f.def->index.n_min;
            if (k < 0 || k >= static_cast<int>(f.members.size())) continue;
            if (eval_region(f.members[static_cast<std::size_t>(k)], a, b))
                return f.members[static_cast<std::size_t>(k)].label;
        }
    }
    return std::nullopt;
}

}  // namespace

struct Classifier::Impl {
    std::vector<Family> partition;
    std::vector<Family> refinement;
    std::vector<Family> overlay;
};

Classifier::Classifier(std::int64_t d) : d_(d), impl_(std::make_unique<Impl>()) {
    check_range({0, 0}, d);
    const Regime r = regime_of(d);
    impl_->partition = compile_all(table::partition(), r, d);
    if (r == Regime::Large) {
        impl_->refinement = compile_all(table::j_refinement(), r, d);
        static const std::vector<table::RegionDef> overlay{table::t_overlay()};
        if (d >= 2) impl_->overlay = compile_all(overlay, r, d);
    }
}

Classifier::~Classifier() = default;
Classifier::Classifier(Classifier&&) noexcept = default;
Classifier& Classifier::operator=(Classifier&&) noexcept = default;

RegionLabel Classifier::classify(const NormProfile& pr) const {
    if (!pr.b) return {regime(), RegionName::OutsideQ, std::nullopt};
    check_range(pr, d_);
    if (auto l = first_match(impl_->partition, pr.a, *pr.b)) return *l;
    throw std::logic_error("profile matched no region (partition table incomplete)");
}

std::vector<RegionLabel> Classifier::all_matches(const NormProfile& pr) const {
    std::vector<RegionLabel> out;
    if (!pr.b) {
        out.push_back({regime(), RegionName::OutsideQ, std::nullopt});
        return out;
    }
    check_range(pr, d_);
    for (const auto& f : impl_->partition)
        for (const auto& m : f.members)
            if (eval_region(m, pr.a, *pr.b)) out.push_back(m.label);
    return out;
}

bool Classifier::contains(const RegionLabel& label, const NormProfile& pr) const {
    if (label.regime != regime()) return false;
    if (label.name == RegionName::OutsideQ) return !pr.b;
    if (!pr.b) return false;
    check_range(pr, d_);
    for (const auto* fams : {&impl_->partition, &impl_->refinement, &impl_->overlay}) {
        if (const CRegion* r = find_member(*fams, label)) return eval_region(*r, pr.a, *pr.b);
    }
    return false;
}

std::optional<RegionLabel> Classifier::refine_j(const NormProfile& pr) const {
    if (regime() != Regime::Large || !pr.b) return std::nullopt;
    const RegionLabel l = classify(pr);
    if (l.name != RegionName::J || l.index.value_or(0) < 1) return std::nullopt;
    return first_match(impl_->refinement, pr.a, *pr.b);
}

std::optional<int> Classifier::t_index(const NormProfile& pr) const {
    if (impl_->overlay.empty() || !pr.b) return std::nullopt;
    check_range(pr, d_);
    if (auto l = first_match(impl_->overlay, pr.a, *pr.b)) return l->index;
    return std::nullopt;
}

std::vector<RegionLabel> Classifier::labels(int max_index) const {
    std::vector<RegionLabel> out;
    for (const auto& f : impl_->partition)
        for (const auto& m : f.members)
            if (!m.label.index || *m.label.index <= max_index) out.push_back(m.label);
    std::sort(out.begin(), out.end());
    return out;
}

const Classifier& classifier_for(std::int64_t d) {
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<Classifier>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<Classifier>(d);
    return *slot;
}

RegionLabel classify(const NormProfile& pr, std::int64_t d) { return classifier_for(d).classify(pr); }

}  // namespace padic_henon
