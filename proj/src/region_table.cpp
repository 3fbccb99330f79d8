#include "padic_henon/region_table.hpp"

#include <stdexcept>

#include "padic_henon/fibonacci.hpp"

namespace padic_henon::table {
namespace {

// --- a small expression language so the table reads like inequalities ---

Coef Fn(int off) { return {0, 1, off}; }
Coef K(std::int64_t v) { return {v, 0, 0}; }

Coef add(const Coef& x, const Coef& y) {
    Coef r{x.c0 + y.c0, 0, 0};
    if (x.m == 0) {
        r.m = y.m;
        r.off = y.off;
    } else if (y.m == 0 || x.off == y.off) {
        r.m = x.m + y.m;
        r.off = x.off;
    } else {
        throw std::logic_error("region table: mixed Fibonacci offsets in one coefficient");
    }
    return r;
}

Coef scale(const Coef& x, const Coef& s) {
    if (s.m == 0) return {x.c0 * s.c0, x.m * s.c0, x.off};
    if (x.m == 0) return {s.c0 * x.c0, s.m * x.c0, s.off};
    throw std::logic_error("region table: product of two Fibonacci coefficients");
}

Form operator+(const Form& x, const Form& y) {
    return {add(x.a, y.a), add(x.b, y.b), add(x.d, y.d), add(x.one, y.one)};
}
Form operator*(const Coef& s, const Form& f) {
    return {scale(f.a, s), scale(f.b, s), scale(f.d, s), scale(f.one, s)};
}
Form operator*(std::int64_t s, const Form& f) { return K(s) * f; }
Form operator-(const Form& f) { return -1 * f; }
Form operator-(const Form& x, const Form& y) { return x + (-y); }

const Form a{K(1), K(0), K(0), K(0)};
const Form b{K(0), K(1), K(0), K(0)};
const Form d{K(0), K(0), K(1), K(0)};
const Form zero{K(0), K(0), K(0), K(0)};

Atom operator<(const Form& x, const Form& y) { return Linear{x, Rel::Lt, y}; }
Atom operator<=(const Form& x, const Form& y) { return Linear{x, Rel::Le, y}; }
Atom operator==(const Form& x, const Form& y) { return Linear{x, Rel::Eq, y}; }
Atom operator>=(const Form& x, const Form& y) { return Linear{x, Rel::Ge, y}; }
Atom operator>(const Form& x, const Form& y) { return Linear{x, Rel::Gt, y}; }

const Atom b_below_golden = Golden{Rel::Lt};
const Atom b_above_golden = Golden{Rel::Gt};

IndexRule none() { return {}; }
IndexRule fixed(int i) { return {IndexKind::Fixed, i, 0, 0, 0}; }
IndexRule series(int offset, int n_min, int step = 2) { return {IndexKind::Series, 0, step, offset, n_min}; }

// --- rendering ---

std::string coef_text(const Coef& c, int step) {
    std::string fibterm;
    if (c.m != 0) {
        std::string idx = step == 1 ? "n" : std::to_string(step) + "n";
        if (c.off > 0) idx += "+" + std::to_string(c.off);
        if (c.off < 0) idx += std::to_string(c.off);
        fibterm = "F(" + idx + ")";
        if (c.m == -1) fibterm = "-" + fibterm;
        else if (c.m != 1) fibterm = std::to_string(c.m) + "*" + fibterm;
    }
    if (c.c0 == 0) return fibterm.empty() ? "0" : fibterm;
    if (fibterm.empty()) return std::to_string(c.c0);
    return "(" + std::to_string(c.c0) + (fibterm[0] == '-' ? "" : "+") + fibterm + ")";
}

bool is_zero(const Coef& c) { return c.c0 == 0 && c.m == 0; }
bool is_one(const Coef& c) { return c.c0 == 1 && c.m == 0; }

std::string form_text(const Form& f, int step) {
    std::string out;
    auto term = [&](const Coef& c, const char* var) {
        if (is_zero(c)) return;
        std::string t = var[0] ? (is_one(c) ? std::string(var)
                                  : (c.c0 == -1 && c.m == 0) ? "-" + std::string(var)
                                                             : coef_text(c, step) + "*" + var)
                                : coef_text(c, step);
        if (!out.empty() && t[0] != '-') out += " + ";
        else if (!out.empty()) { out += " - "; t.erase(0, 1); }
        out += t;
    };
    term(f.a, "a");
    term(f.b, "b");
    term(f.d, "d");
    term(f.one, "");
    return out.empty() ? "0" : out;
}

std::string clause_text(const Clause& cl, int step) {
    std::string out;
    for (const auto& atom : cl) {
        if (!out.empty()) out += ", ";
        if (const auto* l = std::get_if<Linear>(&atom))
            out += form_text(l->lhs, step) + " " + to_string(l->rel) + " " + form_text(l->rhs, step);
        else
            out += "b " + to_string(std::get<Golden>(atom).rel) + " a/beta";
    }
    return out;
}

RegionDef def(Regime r, RegionName n, IndexRule idx, std::vector<Clause> any_of) {
    std::string text;
    for (const auto& cl : any_of) {
        if (!text.empty()) text += "  OR  ";
        text += clause_text(cl, idx.step);
    }
    return {r, n, idx, std::move(any_of), std::move(text)};
}

std::vector<RegionDef> build_partition() {
    using R = RegionName;
    const Regime S = Regime::Small, U = Regime::Unit, L = Regime::Large;
    std::vector<RegionDef> t;

    // |c| < 1
    t.push_back(def(S, R::Z, none(), {{a == zero, b == zero}}));
    t.push_back(def(S, R::R, none(), {{a == d, b == d}}));
    t.push_back(def(S, R::A, fixed(1), {{a <= d, b >= zero}}));
    t.push_back(def(S, R::A, fixed(2), {{a >= zero, b <= d}}));
    t.push_back(def(S, R::A, fixed(3), {{a > zero, b == zero}}));
    t.push_back(def(S, R::A, fixed(4), {{a == zero, b > zero}}));
    t.push_back(def(S, R::A, fixed(5), {{a >= zero, d < b, b < zero}}));
    t.push_back(def(S, R::A, fixed(6), {{d < a, a < zero, b >= zero}}));
    t.push_back(def(S, R::B, fixed(1), {{a > zero, b > zero, b_below_golden}}));
    t.push_back(def(S, R::B, fixed(2), {{a > zero, b_above_golden}}));
    t.push_back(def(S, R::P, fixed(1), {{a < d, b <= d}}));
    t.push_back(def(S, R::P, fixed(2), {{d < a, a < zero, b <= d}}));
    t.push_back(def(S, R::P, fixed(3), {{a < d, d < b, b < zero}}));
    t.push_back(def(S, R::P, fixed(4), {{d < a, a < zero, d < b, b_below_golden}}));
    t.push_back(def(S, R::P, fixed(5), {{d < a, a < zero, b_above_golden, b < zero}}));
    t.push_back(def(S, R::P, fixed(6), {{a == d, b < d}, {a == d, d < b, b < zero}}));

    // |c| = 1
    t.push_back(def(U, R::C, fixed(0), {{a == zero, b <= zero}, {a <= zero, b == zero}}));
    t.push_back(def(U, R::F, none(), {{a < zero, b < zero}}));
    t.push_back(def(U, R::G, none(), {{a <= zero, b > zero}}));
    t.push_back(def(U, R::H, none(), {{a > zero, b <= zero}}));
    t.push_back(def(U, R::M, series(1, 0),
                    {{Fn(-2) * a > Fn(-1) * b, Fn(0) * b > Fn(-1) * a, Fn(0) * a <= Fn(1) * b}}));
    t.push_back(def(U, R::M, series(2, 0),
                    {{Fn(0) * b > Fn(-1) * a, Fn(0) * a > Fn(1) * b, Fn(2) * b <= Fn(1) * a}}));

    // |c| > 1
    t.push_back(def(L, R::F, none(), {{a < d, b < zero}}));
    t.push_back(def(L, R::G, none(), {{a <= d, b > d}}));
    t.push_back(def(L, R::H, none(), {{a > d, b <= zero}}));
    t.push_back(def(L, R::J, fixed(0), {{a < d, zero < b, b < d}}));
    t.push_back(def(L, R::C, fixed(0), {{a < d, b == zero}, {a < d, b == d}, {a == d, b <= d}}));
    t.push_back(def(L, R::D, fixed(2), {{d < a, a < 2 * d, b == d}}));
    t.push_back(def(L, R::J, series(1, 0),
                    {{Fn(-2) * a > d + Fn(-1) * b, Fn(0) * b < d + Fn(-1) * a,
                      Fn(1) * b < Fn(0) * a, Fn(0) * a < d + Fn(1) * b}}));
    t.push_back(def(L, R::J, series(2, 0),
                    {{Fn(0) * b > d + Fn(-1) * a, Fn(0) * a < d + Fn(1) * b,
                      Fn(1) * a < Fn(2) * b, Fn(2) * b < d + Fn(1) * a}}));
    t.push_back(def(L, R::M, series(1, 0),
                    {{a > Fn(0) * d, Fn(-1) * d < b, b <= Fn(1) * d,
                      Fn(1) * b < -d + Fn(0) * a}}));
    t.push_back(def(L, R::M, series(2, 0),
                    {{Fn(1) * d < a, a <= Fn(3) * d, Fn(2) * b > d + Fn(1) * a}}));
    t.push_back(def(L, R::C, series(1, 0),
                    {{Fn(0) * d < a, a <= Fn(2) * d, Fn(1) * b == -d + Fn(0) * a}}));
    t.push_back(def(L, R::C, series(2, 0),
                    {{Fn(1) * d < a, a <= Fn(3) * d, Fn(2) * b == d + Fn(1) * a}}));
    t.push_back(def(L, R::D, series(1, 1),
                    {{Fn(0) * d < a, a < Fn(1) * d, Fn(-1) * b == -d + Fn(-2) * a}}));
    t.push_back(def(L, R::D, series(2, 1),
                    {{Fn(1) * d < a, a < Fn(2) * d, Fn(0) * b == d + Fn(-1) * a}}));
    return t;
}

std::vector<RegionDef> build_j_refinement() {
    using R = RegionName;
    const Regime L = Regime::Large;
    std::vector<RegionDef> t;
    t.push_back(def(L, R::B, fixed(1), {{d < a, a < 2 * d, a - d < b, b < d}}));
    t.push_back(def(L, R::B, series(0, 1),
                    {{Fn(0) * d < a, a <= Fn(1) * d, Fn(1) * b > -d + Fn(0) * a,
                      Fn(-1) * b < -d + Fn(-2) * a}}));
    t.push_back(def(L, R::B, series(1, 1),
                    {{Fn(1) * d < a, a < Fn(2) * d, Fn(1) * b > -d + Fn(0) * a,
                      Fn(0) * b < d + Fn(-1) * a}}));
    t.push_back(def(L, R::A, fixed(1), {{d < a, a <= 2 * d, d < b, 2 * b < d + a}}));
    t.push_back(def(L, R::A, fixed(2), {{2 * d < a, a < 3 * d, a - d < b, 2 * b < d + a}}));
    t.push_back(def(L, R::A, series(1, 1),
                    {{Fn(1) * d < a, a <= Fn(2) * d, Fn(0) * b > d + Fn(-1) * a,
                      Fn(2) * b < d + Fn(1) * a}}));
    t.push_back(def(L, R::A, series(2, 1),
                    {{Fn(2) * d < a, a < Fn(3) * d, Fn(1) * b > -d + Fn(0) * a,
                      Fn(2) * b < d + Fn(1) * a}}));
    return t;
}

RegionDef build_t_overlay() {
    // a = (d-1) F_{n+1}, b = (d-1) F_n
    const Form one{K(0), K(0), K(0), K(1)};
    return def(Regime::Large, RegionName::T, series(0, 0, 1),
               {{a == Fn(1) * d - Fn(1) * one, b == Fn(0) * d - Fn(0) * one}});
}

}  // namespace

const std::vector<RegionDef>& partition() {
    static const std::vector<RegionDef> t = build_partition();
    return t;
}

const std::vector<RegionDef>& j_refinement() {
    static const std::vector<RegionDef> t = build_j_refinement();
    return t;
}

const RegionDef& t_overlay() {
    static const RegionDef t = build_t_overlay();
    return t;
}

std::int64_t value(const Coef& c, int step, int n) {
    if (c.m == 0) return c.c0;
    return c.c0 + c.m * fib64(step * n + c.off);
}

std::string to_string(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Eq: return "=";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

}  // namespace padic_henon::table
