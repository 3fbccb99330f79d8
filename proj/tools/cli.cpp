#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "padic_henon/campaign.hpp"
#include "padic_henon/dynamics.hpp"
#include "padic_henon/errors.hpp"
#include "padic_henon/measure.hpp"
#include "padic_henon/regions.hpp"
#include "padic_henon/serialize.hpp"

namespace padic_henon::cli {
namespace {

struct Config {
    std::uint64_t prime = 3;
    std::string c = "1/1";
    std::uint64_t seed = 1;
    std::int64_t steps = 50;
    std::optional<std::int64_t> escape_exp;
    std::int64_t window = 20;
    std::int64_t samples = 100;
    std::string format = "json";
    std::size_t bit_budget = kDefaultBitBudget;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

PadicRational rational_arg(const std::optional<std::string>& text, const std::optional<std::string>& num,
                           const std::optional<std::string>& den, Prime p, const char* name) {
    if (text && (num || den)) throw UsageError(std::string("give either --") + name + " or --" + name + "-num/--" + name + "-den");
    if (text) return parse_rational(*text, p);
    if (num) return parse_rational(*num + "/" + den.value_or("1"), p);
    if (den) throw UsageError(std::string("--") + name + "-den without --" + name + "-num");
    throw UsageError(std::string("missing --") + name);
}

std::string csv_field(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }
std::string csv_field(const NormExponent& v) { return v ? std::to_string(*v) : std::string("-inf"); }

NormExponent exponent_arg(const std::string& s) {
    if (s == "-inf" || s == "zero") return std::nullopt;
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw UsageError("malformed exponent: " + s);
    return v;
}

// ---------------------------------------------------------------- subcommands

int cmd_orbit(const Config& cfg, const std::optional<std::string>& x, const std::optional<std::string>& xn,
              const std::optional<std::string>& xd, const std::optional<std::string>& y,
              const std::optional<std::string>& yn, const std::optional<std::string>& yd, bool fwd,
              std::ostream& out) {
    const Prime p(cfg.prime);
    const MapParams params(parse_rational(cfg.c, p));
    const Point start(rational_arg(x, xn, xd, p, "x"), rational_arg(y, yn, yd, p, "y"));
    OrbitOptions opts;
    opts.max_steps = cfg.steps;
    opts.escape_exponent = cfg.escape_exp;
    opts.bit_budget = cfg.bit_budget;
    const OrbitRecord rec = fwd ? forward_orbit(start, params, opts) : backward_orbit(start, params, opts);
    if (cfg.format == "csv") {
        out << "n,x,y,a,b,region\n";
        for (const auto& st : rec.steps)
            out << st.n << ',' << st.point.x.to_string() << ',' << st.point.y.to_string() << ','
                << csv_field(st.profile.a) << ',' << csv_field(st.profile.b) << ','
                << (st.region ? short_name(*st.region) : "") << '\n';
        out << "# verdict " << to_json(rec.verdict).dump() << '\n';
    } else {
        json j = to_json(rec);
        j["p"] = cfg.prime;
        j["c"] = params.c().to_string();
        j["degenerate"] = params.degenerate();
        out << j.dump(2) << '\n';
    }
    return std::holds_alternative<verdict::BudgetExceeded>(rec.verdict) ? kBudgetExceeded : kOk;
}

int cmd_classify(const Config& cfg, const std::optional<std::string>& a, const std::optional<std::string>& b,
                 const std::optional<std::string>& x, const std::optional<std::string>& y,
                 std::optional<std::int64_t> d_override, std::ostream& out) {
    const Prime p(cfg.prime);
    std::int64_t d;
    if (d_override) {
        d = *d_override;
    } else {
        const MapParams params(parse_rational(cfg.c, p));
        if (params.degenerate()) throw UsageError("c = 0 has no region partition; pass --d");
        d = params.d();
    }
    NormProfile pr;
    if (x || y) {
        if (!x || !y) throw UsageError("give both --x and --y");
        pr = profile_of(Point(parse_rational(*x, p), parse_rational(*y, p)));
    } else {
        if (!a || !b) throw UsageError("give --a and --b, or --x and --y");
        pr = {exponent_arg(*a), exponent_arg(*b)};
    }
    const Classifier& cls = classifier_for(d);
    const RegionLabel label = cls.classify(pr);
    const auto refined = cls.refine_j(pr);
    const auto t = cls.t_index(pr);
    if (cfg.format == "csv") {
        out << "a,b,d,name,index,refinement,t_index\n"
            << csv_field(pr.a) << ',' << csv_field(pr.b) << ',' << d << ',' << to_string(label.name) << ','
            << csv_field(label.index) << ',' << (refined ? short_name(*refined) : "") << ','
            << csv_field(t) << '\n';
    } else {
        json j{{"profile", to_json(pr)},
               {"d", d},
               {"regime", to_string(regime_of(d))},
               {"label", to_json(label)},
               {"refinement", refined ? to_json(*refined) : json(nullptr)},
               {"t_index", t ? json(*t) : json(nullptr)}};
        out << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_grid(const Config& cfg, std::optional<std::int64_t> d_override, bool tables, std::ostream& out) {
    const Prime p(cfg.prime);
    std::int64_t d;
    if (d_override) {
        d = *d_override;
    } else {
        const MapParams params(parse_rational(cfg.c, p));
        if (params.degenerate()) throw UsageError("c = 0 has no region partition; pass --d");
        d = params.d();
    }
    if (tables) {
        out << json{{"regions", region_table_json()}, {"transitions", transition_table_json(d, 8)}}.dump(2) << '\n';
        return kOk;
    }
    const Classifier& cls = classifier_for(d);
    const std::int64_t W = cfg.window;
    if (cfg.format == "csv") {
        out << "a,b,name,index\n";
        for (std::int64_t a = -W; a <= W; ++a)
            for (std::int64_t b = -W; b <= W; ++b) {
                const RegionLabel l = cls.classify({a, b});
                out << a << ',' << b << ',' << to_string(l.name) << ',' << csv_field(l.index) << '\n';
            }
    } else {
        json rows = json::array();
        for (std::int64_t a = -W; a <= W; ++a)
            for (std::int64_t b = -W; b <= W; ++b) {
                const RegionLabel l = cls.classify({a, b});
                rows.push_back({{"a", a}, {"b", b}, {"name", to_string(l.name)},
                                {"index", l.index ? json(*l.index) : json(nullptr)}});
            }
        out << json{{"d", d}, {"regime", to_string(regime_of(d))}, {"window", W}, {"cells", rows}}.dump() << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    const Campaign campaign = load_campaign_file(path);
    const CampaignResult res = run_campaign(campaign);
    for (const auto& o : res.outcomes)
        err << (o.ok ? "ok   " : "FAIL ") << o.entry->label << ": " << o.summary << '\n';
    out << to_json(res).dump(2) << '\n';
    return res.ok ? kOk : kVerificationFailed;
}

int cmd_measure(const Config& cfg, bool tn, std::int64_t k, std::int64_t n, const std::optional<std::string>& region,
                std::optional<std::int64_t> d_override, const std::optional<std::int64_t>& ball,
                const std::optional<std::int64_t>& sphere, std::ostream& out) {
    const Prime p(cfg.prime);
    json j;
    if (tn) {
        const auto rows = tn_table(n, k, p);
        if (cfg.format == "csv") {
            out << "n,exact,ball_product,partial_sum\n";
            for (const auto& r : rows)
                out << r.n << ',' << r.exact.exact_string() << ',' << r.ball_product.exact_string() << ','
                    << r.partial_sum.exact_string() << '\n';
            return kOk;
        }
        j = tn_report(rows, k, p);
    } else if (region) {
        std::int64_t d;
        if (d_override) {
            d = *d_override;
        } else {
            const MapParams params(parse_rational(cfg.c, p));
            if (params.degenerate()) throw UsageError("c = 0 has no region partition; pass --d");
            d = params.d();
        }
        const RegionLabel l = parse_label(*region, regime_of(d));
        j = measure_report(l, d, p, cfg.window, region_window_measure(l, d, p, cfg.window));
    } else if (ball || sphere) {
        const MeasureValue m = ball ? ball_measure(*ball, p) : sphere_measure(*sphere, p);
        j = {{"kind", ball ? "ball" : "sphere"}, {"a", ball ? *ball : *sphere}, {"p", cfg.prime},
             {"exact", m.exact_string()}, {"decimal_hint", m.decimal_hint()}};
    } else {
        throw UsageError("measure needs --tn, --region, --ball or --sphere");
    }
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_fixed_points(const Config& cfg, std::int64_t precision, std::ostream& out) {
    const Prime p(cfg.prime);
    const MapParams params(parse_rational(cfg.c, p));
    const PadicRational disc = PadicRational(1, p) - PadicRational(4, p) * params.c();
    const auto fps = fixed_points(params, precision);
    json pts = json::array();
    for (const auto& fp : fps) pts.push_back(to_json(fp));
    std::string message;
    if (fps.empty()) message = "no fixed points in Q_p^2 (1-4c: " + std::string(to_string(square_class(disc))) + ")";
    else if (fps.size() == 1) message = "a single fixed point (1/2, 1/2)";
    else message = "two fixed points (alpha, alpha)";
    const auto cyc = three_cycle(params);
    json cycle = json::array();
    for (const auto& pt : cyc) cycle.push_back(to_json(pt));
    const bool closes = forward(cyc[2], params) == cyc[0];
    json j{{"p", cfg.prime},
           {"c", params.c().to_string()},
           {"discriminant", to_json(disc)},
           {"square_class", to_string(square_class(disc))},
           {"fixed_points", pts},
           {"message", message},
           {"three_cycle", cycle},
           {"three_cycle_closes", closes}};
    out << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic Henon map f(x,y) = (xy + c, x): orbits, regions, verification, measures"};
    app.name("padic-henon");
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--prime", cfg.prime, "odd prime p")->capture_default_str();
    app.add_option("--c", cfg.c, "parameter c as num/den")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--steps", cfg.steps, "orbit length")->capture_default_str();
    app.add_option("--escape-exp", cfg.escape_exp, "escape threshold E on max(a, b)");
    app.add_option("--window", cfg.window, "profile window |a|,|b| <= W")->capture_default_str();
    app.add_option("--samples", cfg.samples, "samples per check")->capture_default_str();
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--bit-budget", cfg.bit_budget, "max numerator+denominator bits")->capture_default_str();

    std::optional<std::string> x, xn, xd, y, yn, yd;
    bool fwd = false;
    auto* orbit = app.add_subcommand("orbit", "backward (or forward) orbit trace");
    orbit->add_option("--x", x, "x as num/den");
    orbit->add_option("--x-num", xn);
    orbit->add_option("--x-den", xd);
    orbit->add_option("--y", y, "y as num/den");
    orbit->add_option("--y-num", yn);
    orbit->add_option("--y-den", yd);
    orbit->add_flag("--forward", fwd, "iterate f instead of f^-1");

    std::optional<std::string> ca, cb, cx, cy;
    std::optional<std::int64_t> cd;
    auto* classify_cmd = app.add_subcommand("classify", "region of a norm profile or point");
    classify_cmd->add_option("--a", ca, "log_p|x| (or -inf)");
    classify_cmd->add_option("--b", cb, "log_p|y| (or -inf)");
    classify_cmd->add_option("--x", cx, "x as num/den");
    classify_cmd->add_option("--y", cy, "y as num/den");
    classify_cmd->add_option("--d", cd, "log_p|c| (overrides --c)");

    std::optional<std::int64_t> gd;
    bool tables = false;
    auto* grid = app.add_subcommand("grid", "region label of every profile in the window");
    grid->add_option("--d", gd, "log_p|c| (overrides --c)");
    grid->add_flag("--tables", tables, "print the region and transition tables instead");

    std::string campaign_path;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("campaign", campaign_path, "campaign JSON file")->required();

    bool tn = false;
    std::int64_t k = 2, n = 6;
    std::optional<std::string> region;
    std::optional<std::int64_t> md, ball, sphere;
    auto* measure = app.add_subcommand("measure", "Haar measures");
    measure->add_flag("--tn", tn, "T_n measures and partial sums");
    measure->add_option("--k", k, "|c| = p^k")->capture_default_str();
    measure->add_option("--n", n, "largest n")->capture_default_str();
    measure->add_option("--region", region, "region label, summed over the window");
    measure->add_option("--d", md, "log_p|c| (overrides --c)");
    measure->add_option("--ball", ball, "ball of radius p^a");
    measure->add_option("--sphere", sphere, "sphere of radius p^a");

    std::int64_t precision = 20;
    auto* fixed = app.add_subcommand("fixed-points", "fixed points and the 3-cycle");
    fixed->add_option("--precision", precision, "p-adic digits")->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*orbit) return cmd_orbit(cfg, x, xn, xd, y, yn, yd, fwd, out);
        if (*classify_cmd) return cmd_classify(cfg, ca, cb, cx, cy, cd, out);
        if (*grid) return cmd_grid(cfg, gd, tables, out);
        if (*verify) return cmd_verify(campaign_path, out, err);
        if (*measure) return cmd_measure(cfg, tn, k, n, region, md, ball, sphere, out);
        if (*fixed) return cmd_fixed_points(cfg, precision, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace padic_henon::cli
