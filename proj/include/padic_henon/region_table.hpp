#pragma once

// Declarative definitions of every named region, one entry per region or
// indexed family. Each region is a disjunction of conjunctions of atoms over
// the integer profile (a, b) and d = log_p|c|. Atoms are linear comparisons
// whose coefficients may be Fibonacci numbers F_{step*n + offset}, or a
// comparison of b against the irrational line a/beta (beta the golden ratio).
//
// The strict/weak choice of every inequality lives here and nowhere else.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padic_henon/region_types.hpp"

namespace padic_henon::table {

// c0 + m * F_{step*n + off}
struct Coef {
    std::int64_t c0 = 0;
    std::int64_t m = 0;
    int off = 0;
};

// ca*a + cb*b + cd*d + c1
struct Form {
    Coef a, b, d, one;
};

enum class Rel { Lt, Le, Eq, Ge, Gt };

struct Linear {
    Form lhs;
    Rel rel;
    Form rhs;
};

// b rel a/beta; rel is Lt or Gt (equality never holds for integer profiles).
struct Golden {
    Rel rel;
};

using Atom = std::variant<Linear, Golden>;
using Clause = std::vector<Atom>;

enum class IndexKind { None, Fixed, Series };

struct IndexRule {
    IndexKind kind = IndexKind::None;
    int fixed = 0;   // Fixed
    int step = 2;    // Series: index = step*n + offset for n >= n_min
    int offset = 0;
    int n_min = 0;
};

struct RegionDef {
    Regime regime;
    RegionName name;
    IndexRule index;
    std::vector<Clause> any_of;
    std::string text;  // human-readable definition
};

// The disjoint partition of each regime.
const std::vector<RegionDef>& partition();
// Refinement of LARGE J_i (i >= 1) into the B_i / A_i subfamilies.
const std::vector<RegionDef>& j_refinement();
// T_n = {a = (d-1) F_{n+1}, b = (d-1) F_n}, LARGE with d >= 2; an overlay, not part of the partition.
const RegionDef& t_overlay();

// Coefficient value for a given n. Throws std::out_of_range past the 64-bit Fibonacci table.
std::int64_t value(const Coef& c, int step, int n);

std::string to_string(Rel r);

}  // namespace padic_henon::table
