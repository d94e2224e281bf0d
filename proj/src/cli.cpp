#include "hct/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hct/catalog.hpp"
#include "hct/literal.hpp"
#include "hct/polyroots.hpp"
#include "hct/rules.hpp"
#include "hct/suites.hpp"

namespace hct {

using json = nlohmann::json;

namespace {

json coeffs_json(const CDNumber& a) { return json(a.coeffs()); }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json record_json(const CheckRecord& r) {
    json j;
    j["name"] = r.name;
    j["probe"] = r.probe;
    j["dev"] = finite_or_null(r.dev);
    j["pass"] = r.pass;
    j["err_estimate"] = finite_or_null(r.err);
    if (r.skipped) j["skipped"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

bool is_usage_kind(ErrorKind k) {
    switch (k) {
        case ErrorKind::Usage:
        case ErrorKind::Input:
        case ErrorKind::NotFound:
        case ErrorKind::Contract:
        case ErrorKind::Domain:
        case ErrorKind::Unsupported:
            return true;
        default:
            return false;
    }
}

// Pair parameters arrive as unrecognised "--name value" or "--name=value" flags.
std::map<std::string, double> parse_param_flags(const std::vector<std::string>& extras) {
    std::map<std::string, double> params;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        std::string key = extras[i];
        if (key.rfind("--", 0) != 0) fail(ErrorKind::Usage, "unexpected argument '" + key + "'");
        key = key.substr(2);
        std::string value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= extras.size()) fail(ErrorKind::Usage, "missing value for --" + key);
            value = extras[++i];
        }
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) fail(ErrorKind::Usage, "--" + key + " expects a number, got '" + value + "'");
        params[key] = x;
    }
    return params;
}

json pair_descriptor(const TransformPair& tp) {
    json j;
    j["name"] = tp.name;
    j["domain"] = pair_domain_name(tp.domain);
    j["kernel"] = kernel_name(tp.kernel);
    j["params"] = tp.params;
    j["description"] = tp.description;
    j["provenance"] = tp.provenance;
    j["strip"] = {finite_or_null(tp.s0()), finite_or_null(tp.s1())};
    j["rational"] = tp.rational.has_value();
    j["exceptional"] = tp.exceptional;
    j["conditional"] = tp.conditional;
    j["tol"] = tp.tol;
    return j;
}

json rule_descriptor(const OperationalRule& r) {
    json j;
    j["name"] = r.name;
    j["domain"] = pair_domain_name(r.domain);
    j["statement"] = r.statement;
    j["provenance"] = r.provenance;
    json bases = json::array();
    for (const RuleBase& b : r.bases) bases.push_back(b.pair);
    j["bases"] = bases;
    j["tol"] = r.tol;
    return j;
}

std::vector<double> grid_from(double start, double stop, double step) {
    if (!(step > 0) || !std::isfinite(step)) fail(ErrorKind::Input, "t.step must be positive");
    if (!(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
        fail(ErrorKind::Input, "t.stop must not be below t.start");
    if (start < 0) fail(ErrorKind::Input, "t.start must be >= 0 for one-sided solutions");
    const long n = long(std::floor((stop - start) / step + 1e-9));
    if (n > 1000000) fail(ErrorKind::Input, "grid too large");
    std::vector<double> g;
    for (long k = 0; k <= n; ++k) g.push_back(start + double(k) * step);
    return g;
}

CDNumber literal_value(const json& v, int level, const std::string& what) {
    if (v.is_number()) return CDNumber::real(v.get<double>(), std::max(2, level));
    if (v.is_string()) return parse_cd_literal(v.get<std::string>(), level);
    fail(ErrorKind::Input, what + " must be a number or a literal string");
}

void check_keys(const json& obj, const std::vector<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) fail(ErrorKind::Input, where + " must be an object");
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            fail(ErrorKind::Input, "unknown key '" + k + "' in " + where);
    }
}

double number_at(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) fail(ErrorKind::Input, where + " needs '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(ErrorKind::Input, where + "." + key + " must be a number");
    return v.get<double>();
}

}  // namespace

ODEJob parse_ode_config(const std::string& text, int forced_level) {
    json cfg;
    try {
        cfg = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Input, std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(cfg, {"order", "coeffs", "ics", "forcing", "t", "method", "domain", "tol"}, "config");
    ODEJob job;
    ODEProblem& prob = job.problem;
    if (!cfg.contains("coeffs") || !cfg["coeffs"].is_array()) fail(ErrorKind::Input, "config needs a coeffs array");
    for (const json& c : cfg["coeffs"]) prob.coeffs.push_back(literal_value(c, forced_level, "coeffs entry"));
    const int n = int(prob.coeffs.size()) - 1;
    if (cfg.contains("order")) {
        if (!cfg["order"].is_number_integer()) fail(ErrorKind::Input, "order must be an integer");
        if (cfg["order"].get<int>() != n)
            fail(ErrorKind::Input, "order " + std::to_string(cfg["order"].get<int>()) + " does not match " +
                                       std::to_string(prob.coeffs.size()) + " coefficients");
    }
    if (cfg.contains("ics")) {
        if (!cfg["ics"].is_array()) fail(ErrorKind::Input, "ics must be an array");
        for (const json& c : cfg["ics"]) prob.ics.push_back(literal_value(c, forced_level, "ics entry"));
    }
    bool all_real = true;
    for (const CDNumber& a : prob.coeffs) all_real = all_real && a.is_real();
    prob.domain = all_real ? ValueDomain::RealCoeffs : ValueDomain::QuaternionCoeffs;
    if (cfg.contains("domain")) {
        const std::string d = cfg["domain"].is_string() ? cfg["domain"].get<std::string>() : "";
        if (d == "quaternion")
            prob.domain = ValueDomain::QuaternionCoeffs;
        else if (d == "real")
            prob.domain = ValueDomain::RealCoeffs;
        else
            fail(ErrorKind::Input, "domain must be \"quaternion\" or \"real\"");
    }

    if (cfg.contains("forcing")) {
        const json& f = cfg["forcing"];
        check_keys(f, {"pair", "params", "builtin", "omega", "coeff"}, "forcing");
        if (f.contains("pair") == f.contains("builtin"))
            fail(ErrorKind::Input, "forcing needs exactly one of 'pair' or 'builtin'");
        if (f.contains("coeff")) prob.forcing.left = literal_value(f["coeff"], forced_level, "forcing.coeff");
        if (f.contains("pair")) {
            if (f.contains("omega")) fail(ErrorKind::Input, "forcing.omega belongs to builtin forcing; use params");
            std::map<std::string, double> params;
            if (f.contains("params")) {
                if (!f["params"].is_object()) fail(ErrorKind::Input, "forcing.params must be an object");
                for (const auto& [k, v] : f["params"].items()) {
                    if (!v.is_number()) fail(ErrorKind::Input, "forcing.params." + k + " must be a number");
                    params[k] = v.get<double>();
                }
            }
            if (!f["pair"].is_string()) fail(ErrorKind::Input, "forcing.pair must be a string");
            prob.forcing.pair = catalog_lookup(f["pair"].get<std::string>(), params);
        } else {
            if (f.contains("params")) fail(ErrorKind::Input, "forcing.params belongs to pair forcing");
            const std::string b = f["builtin"].is_string() ? f["builtin"].get<std::string>() : "";
            if (b == "zero") {
                if (f.contains("omega") || f.contains("coeff"))
                    fail(ErrorKind::Input, "zero forcing takes no further keys");
            } else if (b == "step") {
                if (f.contains("omega")) fail(ErrorKind::Input, "step forcing takes no omega");
                prob.forcing.pair = catalog_lookup("step");
            } else if (b == "sin") {
                const double w = f.contains("omega") ? number_at(f, "omega", "forcing") : 1.0;
                prob.forcing.pair = catalog_lookup("sin", {{"omega", w}});
            } else {
                fail(ErrorKind::Input, "forcing.builtin must be zero, step or sin");
            }
        }
    }

    if (!cfg.contains("t")) fail(ErrorKind::Input, "config needs a t grid");
    check_keys(cfg["t"], {"start", "stop", "step"}, "t");
    job.grid = grid_from(number_at(cfg["t"], "start", "t"), number_at(cfg["t"], "stop", "t"),
                         number_at(cfg["t"], "step", "t"));
    if (cfg.contains("method")) {
        if (!cfg["method"].is_string()) fail(ErrorKind::Input, "method must be a string");
        job.method = parse_ode_method(cfg["method"].get<std::string>());
    }
    if (cfg.contains("tol")) {
        job.tol = number_at(cfg, "tol", "config");
        if (!(job.tol > 0)) fail(ErrorKind::Input, "tol must be positive");
    }
    validate(prob);
    return job;
}

LaurentTail laurent_tail(const RationalImage& R, int terms) {
    validate(R);
    const std::vector<double> d = trim_poly(R.denominator);
    const int m = int(d.size()) - 1;
    // 1/Q(w) with Q(w) = sum_i d_{m-i} w^i, w = 1/p, so p^k / D(p) = w^{m-k} / Q(w)
    std::vector<double> inv(std::size_t(terms) + 1, 0.0);
    inv[0] = 1.0 / d[std::size_t(m)];
    for (int l = 1; l <= terms; ++l) {
        double s = 0;
        for (int i = 1; i <= std::min(l, m); ++i) s += d[std::size_t(m - i)] * inv[std::size_t(l - i)];
        inv[std::size_t(l)] = -s / d[std::size_t(m)];
    }
    LaurentTail tail;
    const int lev = R.level();
    tail.coeffs.assign(std::size_t(terms), CDNumber(lev));
    for (std::size_t k = 0; k < R.numerator.size(); ++k)
        for (int l = 1; l <= terms; ++l) {
            const int j = l - (m - int(k));
            if (j >= 0) tail.coeffs[std::size_t(l - 1)] += R.numerator[k].embed(lev) * inv[std::size_t(j)];
        }
    double rmax = 0;
    for (const RootCluster& rc : find_root_clusters(d)) rmax = std::max(rmax, std::abs(rc.z));
    tail.radius = std::max(1e-3, 1.25 * rmax);
    return tail;
}

namespace {

int cmd_transform(const std::string& pair_name, const std::map<std::string, double>& params, const std::string& p_text,
                  const std::string& zeta_text, const std::string& kernel_text, double tol, int level,
                  std::ostream& out) {
    const TransformPair tp = catalog_lookup(pair_name, params);
    const CDNumber p = parse_cd_literal(p_text, level);
    const CDNumber zeta = parse_cd_literal(zeta_text, level);
    const KernelVariant kv = kernel_text.empty() ? tp.kernel : parse_kernel_name(kernel_text);
    json j;
    j["name"] = "transform:" + tp.name;
    j["probe"] = probe_text({p, zeta});
    json meta;
    meta["kernel"] = kernel_name(kv);
    meta["p"] = format_cd_literal(p);
    meta["zeta"] = format_cd_literal(zeta);
    meta["domain"] = pair_domain_name(tp.domain);
    j["meta"] = meta;
    try {
        const QuadratureResult q = pair_forward(tp, p, zeta, tol, kv);
        j["value"] = coeffs_json(q.value);
        j["err"] = q.err_estimate;
        j["err_estimate"] = q.err_estimate;
        if (kv == tp.kernel && (tp.zeta_aware || cd_norm(zeta) == 0.0)) {
            const CDNumber img = tp.eval_image(p, zeta);
            j["closed_form"] = coeffs_json(img);
            j["dev"] = relative_dev(q.value, img);
        }
        j["pass"] = true;
        emit(out, j);
        return kExitOk;
    } catch (const AccuracyError& e) {
        j["value"] = e.best_estimate();
        j["err"] = e.err_estimate();
        j["err_estimate"] = e.err_estimate();
        j["pass"] = false;
        j["note"] = e.what();
        emit(out, j);
        return kExitNumeric;
    }
}

struct InvertArgs {
    std::string method = "bromwich";
    std::string num, den, pair;
    std::map<std::string, double> params;
    std::vector<double> ts;
    std::optional<double> a;
    std::string axis = "i1";
    double tol = 1e-6;
    int terms = 80;
    int level = 0;
};

int cmd_invert(const InvertArgs& in, std::ostream& out) {
    std::optional<RationalImage> rat;
    std::optional<TransformPair> tp;
    if (!in.pair.empty()) {
        if (!in.num.empty() || !in.den.empty()) fail(ErrorKind::Usage, "give either --pair or --num/--den");
        tp = catalog_lookup(in.pair, in.params);
        rat = tp->rational;
    } else {
        if (!in.params.empty()) fail(ErrorKind::Usage, "pair parameters need --pair");
        if (in.num.empty() || in.den.empty()) fail(ErrorKind::Usage, "invert needs --num and --den, or --pair");
        RationalImage R;
        R.numerator = parse_cd_list(in.num, in.level);
        R.denominator = parse_real_list(in.den);
        int lev = 2;
        for (const CDNumber& c : R.numerator) lev = std::max(lev, c.level());
        R.kernel = make_kernel(KernelVariant::Linear, lev);
        validate(R);
        rat = R;
    }
    if (in.method != "residue" && in.method != "bromwich" && in.method != "series")
        fail(ErrorKind::Usage, "--method must be residue, bromwich or series");
    if ((in.method == "residue" || in.method == "series") && !rat)
        fail(ErrorKind::Unsupported, "pair '" + in.pair + "' has no rational image; use --method bromwich");
    const bool mellin = tp && tp->domain == PairDomain::Mellin;
    if (mellin && in.method != "bromwich") fail(ErrorKind::Unsupported, "Mellin images invert along a line only");

    double s0 = -std::numeric_limits<double>::infinity(), s1 = std::numeric_limits<double>::infinity();
    if (tp) {
        s0 = tp->s0();
        s1 = tp->s1();
    } else {
        for (const RootCluster& rc : find_root_clusters(trim_poly(rat->denominator))) s0 = std::max(s0, rc.z.real());
    }
    double a = 0;
    if (in.a) {
        a = *in.a;
    } else if (std::isfinite(s0) && std::isfinite(s1)) {
        a = 0.5 * (s0 + s1);
    } else {
        a = (std::isfinite(s0) ? s0 : 0.0) + 1.0;
    }
    const CDNumber S = parse_cd_literal(in.axis, in.level);
    const KernelSpec ks = make_kernel(tp ? tp->kernel : KernelVariant::Linear, std::max(2, S.level()));
    ImageFn F;
    if (tp) {
        const TransformPair pair = *tp;
        F = [pair](const CDNumber& p) { return pair.eval_image(p, CDNumber(p.level())); };
    } else {
        const RationalImage R = *rat;
        F = [R](const CDNumber& p) { return R(p); };
    }
    std::optional<LaurentTail> tail;
    if (in.method == "series") tail = laurent_tail(*rat, in.terms);

    int code = kExitOk;
    for (double t : in.ts) {
        json j;
        j["name"] = "invert:" + in.method;
        std::ostringstream probe;
        probe.precision(17);
        probe << (mellin ? "tau=" : "t=") << t;
        if (in.method == "bromwich") probe << ";a=" << a << ";S=" << format_cd_literal(S);
        j["probe"] = probe.str();
        j["t"] = t;
        try {
            CDNumber value;
            double err = 0;
            if (in.method == "residue") {
                const InversionResult r = residue_invert_rational(*rat, t);
                value = r.value;
                err = r.err_estimate;
            } else if (in.method == "series") {
                if (t < 0) fail(ErrorKind::Domain, "series inversion needs t >= 0");
                const SeriesResult r = series_invert(*tail, t);
                value = r.value;
                err = r.remainder_bound;
            } else if (mellin) {
                const InversionResult r = mellin_invert(F, a, S, t, in.tol, s0, s1, ks);
                value = r.value;
                err = r.err_estimate;
            } else {
                const InversionResult r = bromwich_invert(F, a, S, t, ks, in.tol, s0, s1);
                value = r.value;
                err = r.err_estimate;
                j["jump_midpoint"] = r.jump_midpoint;
                j["theta_max"] = r.theta_max;
            }
            j["value"] = coeffs_json(value);
            j["err_estimate"] = finite_or_null(err);
            if (tp && (t > 0 || tp->domain != PairDomain::OneSided)) {
                const CDNumber f = tp->original(t);
                j["original"] = coeffs_json(f);
                j["dev"] = cd_dist(value, f);
            }
            j["pass"] = std::isfinite(err);
            if (!std::isfinite(err)) code = kExitNumeric;
        } catch (const AccuracyError& e) {
            j["value"] = e.best_estimate();
            j["err_estimate"] = e.err_estimate();
            j["pass"] = false;
            j["note"] = e.what();
            code = kExitNumeric;
        }
        emit(out, j);
    }
    return code;
}

int cmd_ode(const std::string& path, const std::string& method_override, std::optional<double> tol, int level,
            std::ostream& out) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::Input, "cannot read config '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    ODEJob job = parse_ode_config(ss.str(), level);
    if (!method_override.empty()) job.method = parse_ode_method(method_override);
    if (tol) job.tol = *tol;
    ODESolution sol;
    try {
        sol = solve_ode(job.problem, job.grid, job.method, job.tol);
    } catch (const AccuracyError& e) {
        json j;
        j["name"] = "ode";
        j["probe"] = std::string("method=") + ode_method_name(job.method);
        j["pass"] = false;
        j["value"] = e.best_estimate();
        j["err_estimate"] = e.err_estimate();
        j["note"] = e.what();
        emit(out, j);
        return kExitNumeric;
    }
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        json j;
        j["name"] = "ode";
        std::ostringstream probe;
        probe.precision(17);
        probe << "t=" << sol.t[i];
        j["probe"] = probe.str();
        j["t"] = sol.t[i];
        j["x"] = coeffs_json(sol.x[i]);
        j["err_estimate"] = sol.err_estimate[i];
        emit(out, j);
    }
    json s;
    s["name"] = "ode:defect";
    s["probe"] = "order=" + std::to_string(job.problem.order()) + ";points=" + std::to_string(sol.t.size());
    s["dev"] = finite_or_null(sol.defect);
    s["pass"] = sol.defect_ok;
    s["threshold"] = kDefectThreshold;
    s["method"] = ode_method_name(sol.method);
    s["ic_error"] = sol.ic_error;
    double worst = 0;
    for (double e : sol.err_estimate) worst = std::max(worst, e);
    s["err_estimate"] = worst;
    if (!sol.note.empty()) s["note"] = sol.note;
    emit(out, s);
    return sol.defect_ok ? kExitOk : kExitNumeric;
}

int cmd_verify(const std::string& suite, std::optional<double> tol, std::uint64_t seed, std::ostream& out) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.tol = tol;
    const std::vector<CheckRecord> recs = run_suite(suite, opt);
    for (const CheckRecord& r : recs) emit(out, record_json(r));
    return suite_passed(recs) ? kExitOk : kExitNumeric;
}

int cmd_table(bool rules, std::ostream& out) {
    for (const TransformPair& tp : catalog_list()) emit(out, pair_descriptor(tp));
    if (rules)
        for (const OperationalRule& r : rule_list()) emit(out, rule_descriptor(r));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypercomplex Laplace, two-sided Laplace and Mellin transforms"};
    app.require_subcommand(1);

    int level = 0;
    auto add_level = [&](CLI::App* sub) {
        sub->add_option("--level", level, "pin the algebra level of literals")->check(CLI::Range(1, kMaxLevel));
    };

    std::string pair_name, p_text, zeta_text = "0", kernel_text;
    double t_tol = 1e-10;
    CLI::App* tr = app.add_subcommand("transform", "forward transform of a catalog pair at one point");
    tr->add_option("--pair", pair_name, "catalog pair")->required();
    tr->add_option("--p", p_text, "point p as a literal")->required();
    tr->add_option("--zeta", zeta_text, "initial phase zeta");
    tr->add_option("--kernel", kernel_text, "linear or spherical (default: the pair's kernel)");
    tr->add_option("--tol", t_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    tr->allow_extras();
    add_level(tr);

    InvertArgs inv;
    double inv_a = 0;
    CLI::App* iv = app.add_subcommand("invert", "inverse transform at one or more t");
    iv->add_option("--method", inv.method, "residue, bromwich or series");
    iv->add_option("--num", inv.num, "numerator literals, ascending powers");
    iv->add_option("--den", inv.den, "denominator reals, ascending powers");
    iv->add_option("--pair", inv.pair, "invert the closed-form image of a catalog pair");
    iv->add_option("--t", inv.ts, "time points")->required()->expected(1, 1000);
    CLI::Option* a_opt = iv->add_option("--a", inv_a, "Bromwich abscissa");
    iv->add_option("--axis", inv.axis, "unit imaginary direction S of the line");
    iv->add_option("--tol", inv.tol, "line-integral tolerance")->check(CLI::PositiveNumber);
    iv->add_option("--terms", inv.terms, "Laurent terms for the series method")->check(CLI::Range(1, 400));
    iv->allow_extras();
    add_level(iv);

    std::string config, ode_method;
    double ode_tol = 0;
    CLI::App* od = app.add_subcommand("ode", "solve a linear ODE by the operational method");
    od->add_option("--config", config, "JSON job file")->required();
    od->add_option("--method", ode_method, "override the config method");
    CLI::Option* ode_tol_opt = od->add_option("--tol", ode_tol, "Bromwich tolerance")->check(CLI::PositiveNumber);
    add_level(od);

    std::string suite;
    double v_tol = 0;
    std::uint64_t seed = 42;
    CLI::App* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", suite, "algebra, catalog, rules or mellin")->required();
    CLI::Option* v_tol_opt = vf->add_option("--tol", v_tol, "pass threshold")->check(CLI::PositiveNumber);
    vf->add_option("--seed", seed, "probe seed");

    bool with_rules = false;
    CLI::App* tb = app.add_subcommand("table", "list catalog descriptors");
    tb->add_flag("--rules", with_rules, "also list the operational rules");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*tr)
            return cmd_transform(pair_name, parse_param_flags(tr->remaining()), p_text, zeta_text, kernel_text, t_tol,
                                 level, out);
        if (*iv) {
            inv.params = parse_param_flags(iv->remaining());
            if (*a_opt) inv.a = inv_a;
            inv.level = level;
            return cmd_invert(inv, out);
        }
        if (*od)
            return cmd_ode(config, ode_method, *ode_tol_opt ? std::optional<double>(ode_tol) : std::nullopt, level,
                           out);
        if (*vf)
            return cmd_verify(suite, *v_tol_opt ? std::optional<double>(v_tol) : std::nullopt, seed, out);
        if (*tb) return cmd_table(with_rules, out);
    } catch (const Error& e) {
        err << error_kind_name(e.kind()) << " error: " << e.what() << '\n';
        return is_usage_kind(e.kind()) ? kExitUsage : kExitNumeric;
    }
    return kExitUsage;
}

}  // namespace hct
