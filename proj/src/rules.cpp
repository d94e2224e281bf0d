#include "hct/rules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hct/errors.hpp"
#include "hct/quadrature.hpp"

namespace hct {

CDNumber ridders_derivative(const std::function<CDNumber(double)>& g, double h0, double* err) {
    constexpr int N = 10;
    constexpr double con = 1.4, con2 = con * con, safe = 2.0;
    std::vector<std::vector<CDNumber>> a(N, std::vector<CDNumber>(N));
    double hh = h0;
    a[0][0] = (g(hh) - g(-hh)) / (2 * hh);
    double e = std::numeric_limits<double>::infinity();
    CDNumber ans = a[0][0];
    for (int i = 1; i < N; ++i) {
        hh /= con;
        a[0][i] = (g(hh) - g(-hh)) / (2 * hh);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1);
            fac *= con2;
            const double errt = std::max(cd_norm(a[j][i] - a[j - 1][i]), cd_norm(a[j][i] - a[j - 1][i - 1]));
            if (errt <= e) {
                e = errt;
                ans = a[j][i];
            }
        }
        if (cd_norm(a[i][i] - a[i - 1][i - 1]) >= safe * e) break;
    }
    if (err) *err = e;
    return ans;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQTol = 1e-11;
constexpr double kQRel = 1e-10;

using Rng = std::mt19937_64;

double uni(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int level_of(const TransformPair& b) { return std::max(2, b.level); }

CDNumber quad(const Original& o, PairDomain d, KernelVariant kv, const CDNumber& p, const CDNumber& zeta) {
    const int lev = std::max({2, p.level(), zeta.level()});
    return forward_transform(o, d, make_kernel(kv, lev), p.embed(lev), zeta.embed(lev), kQTol, kQRel).value;
}

// Closed form when the pair provides it for this kernel and phase, quadrature otherwise.
CDNumber image_of(const TransformPair& b, KernelVariant kv, const CDNumber& p, const CDNumber& zeta) {
    if (kv == b.kernel && (b.zeta_aware || cd_norm(zeta) == 0.0)) return b.eval_image(p, zeta);
    return quad(b.original, b.domain, kv, p, zeta);
}

CDNumber closed(const TransformPair& b, const CDNumber& p) { return b.eval_image(p, CDNumber(p.level())); }

CDNumber unit_imag(Rng& rng, int lev) {
    CDNumber d(lev);
    double n2 = 0;
    for (std::size_t j = 1; j < d.dim(); ++j) {
        d[j] = uni(rng, -1, 1);
        n2 += d[j] * d[j];
    }
    return d / std::sqrt(n2);
}

// k = 0 real, k = 1 inside the i1 slice, k >= 2 a full-algebra point
CDNumber draw_p(Rng& rng, int k, std::pair<double, double> range, int lev) {
    CDNumber p(lev);
    const double re = uni(rng, range.first, range.second);
    const double mag = uni(rng, 0.2, 1.5);
    if (k == 1) {
        p[1] = uni(rng, 0, 1) < 0.5 ? mag : -mag;
    } else if (k >= 2) {
        p = unit_imag(rng, lev) * mag;
    }
    p[0] = re;
    return p;
}

CDNumber small_zeta(Rng& rng, int lev) {
    CDNumber z(lev);
    for (std::size_t j = 0; j < z.dim(); ++j) z[j] = uni(rng, -0.3, 0.3);
    return z;
}

// h in R + p'R
CDNumber slice_h(Rng& rng, const CDNumber& p) {
    CDNumber h(p.level());
    const double n = cd_norm(p.imag());
    if (n > 0) h = p.imag() * (uni(rng, -1, 1) / n);
    h[0] = uni(rng, -1, 1);
    return h;
}

CDNumber full_h(Rng& rng, int lev) {
    CDNumber h(lev);
    for (std::size_t j = 0; j < h.dim(); ++j) h[j] = uni(rng, -1, 1);
    return h;
}

// rho (cos a + S sin a) inside |Arg p| < pi/2 - 0.2
CDNumber angle_point(Rng& rng, int k, double rho, int lev) {
    const double a = uni(rng, -(kPi / 2 - 0.2), kPi / 2 - 0.2);
    CDNumber S = k == 1 ? CDNumber::unit(1, lev) : unit_imag(rng, lev);
    if (k == 0) return CDNumber::real(rho, lev);
    CDNumber p = S * (rho * std::sin(a));
    p[0] = rho * std::cos(a);
    return p;
}

CDNumber shifted_phase(const CDNumber& zeta, std::size_t j, double amount, int lev) {
    CDNumber z = zeta.embed(lev);
    z[j] += amount;
    return z;
}

// sum_j c_j F(p; zeta + s i_j pi/2) over the imaginary units, used by the spherical rules
CDNumber spherical_combo(const std::function<CDNumber(const CDNumber& zeta)>& F, const CDNumber& p,
                         const CDNumber& zeta, double sign, const std::vector<double>& coef) {
    const int lev = std::max({2, p.level(), zeta.level()});
    CDNumber out(lev);
    for (std::size_t j = 1; j < std::size_t(1) << lev; ++j)
        out += F(shifted_phase(zeta, j, sign * kPi / 2, lev)) * coef[j];
    return out;
}

// ---- transformed originals ----

Original with_eval(const Original& o, std::function<CDNumber(double)> f, const std::string& label) {
    Original d = o;
    d.eval = std::move(f);
    d.label = label;
    return d;
}

HorizonFn rate_shift(const HorizonFn& h, double d) {
    if (!h) return {};
    return [h, d](double rate, double tol) { return h(rate + d, tol); };
}

HorizonFn time_scale(const HorizonFn& h, double s) {
    if (!h) return {};
    return [h, s](double rate, double tol) { return h(rate / s, tol) / s; };
}

HorizonFn time_shift(const HorizonFn& h, double tau) {
    if (!h) return {};
    return [h, tau](double rate, double tol) { return std::max(0.0, h(rate, tol * 1e-3) + tau); };
}

double finite_or(double x, double alt) { return std::isfinite(x) ? x : alt; }

// f(b t); for a Mellin original this is g(tau^b) in the variable t = ln tau
Original time_scaled(const Original& o, double b) {
    Original d = o;
    auto e = o.eval;
    const bool mellin = o.support == Support::PositiveAxisMultiplicative;
    if (mellin)
        d.eval = [e, b](double tau) { return e(std::pow(tau, b)); };
    else
        d.eval = [e, b](double t) { return e(b * t); };
    d.osc = o.osc * std::abs(b);
    if (b > 0) {
        d.s0 = b * o.s0;
        d.s1 = b * o.s1;
        d.horizon_right = time_scale(o.horizon_right, b);
        d.horizon_left = time_scale(o.horizon_left, b);
    } else {
        d.s0 = b * o.s1;
        d.s1 = b * o.s0;
        d.horizon_right = time_scale(o.horizon_left, -b);
        d.horizon_left = time_scale(o.horizon_right, -b);
    }
    d.breakpoints.clear();
    for (double x : o.breakpoints) d.breakpoints.push_back(x / b);
    d.label = o.label + " (time scaled)";
    return d;
}

// f(t - tau) (times Ch(t - tau) for one-sided originals)
Original time_shifted(const Original& o, double tau) {
    Original d = o;
    auto e = o.eval;
    if (o.support == Support::RightAxis) {
        const CDNumber zero(e(1.0).level());
        d.eval = [e, tau, zero](double t) { return t >= tau ? e(t - tau) : zero; };
        d.bound_const = o.bound_const * std::exp(std::abs(o.s0) * tau);
        d.breakpoints = {tau};
        for (double x : o.breakpoints) d.breakpoints.push_back(x + tau);
    } else {
        d.eval = [e, tau](double t) { return e(t - tau); };
        const double s = std::max(std::abs(finite_or(o.s0, 0)), std::abs(finite_or(o.s1, 0)));
        d.bound_const = o.bound_const * std::exp(s * std::abs(tau));
        d.breakpoints.clear();
        for (double x : o.breakpoints) d.breakpoints.push_back(x + tau);
    }
    d.horizon_right = time_shift(o.horizon_right, tau);
    d.horizon_left = time_shift(o.horizon_left, -tau);
    d.label = o.label + " (shifted)";
    return d;
}

// e^{b t} f(t)
Original damped(const Original& o, double b) {
    auto e = o.eval;
    Original d = with_eval(o, [e, b](double t) { return e(t) * std::exp(b * t); }, o.label + " (damped)");
    d.s0 = o.s0 + b;
    d.s1 = o.s1 + b;
    d.horizon_right = rate_shift(o.horizon_right, b);
    d.horizon_left = rate_shift(o.horizon_left, -b);
    return d;
}

// t^m f(t) h (one- and two-sided) or ln^m(tau) g(tau) h (Mellin)
Original times_power(const Original& o, double coef, const CDNumber& h) {
    auto e = o.eval;
    const bool mellin = o.support == Support::PositiveAxisMultiplicative;
    Original d = with_eval(
        o,
        [e, coef, h, mellin](double t) {
            const double x = mellin ? std::log(t) : t;
            return (e(t) * (coef * x)) * h;
        },
        o.label + " (times t)");
    d.poly_degree = o.poly_degree + 1;
    d.bound_const = o.bound_const * std::max(1.0, cd_norm(h) * std::abs(coef));
    d.horizon_right = rate_shift(o.horizon_right, 1.0);
    d.horizon_left = rate_shift(o.horizon_left, 1.0);
    return d;
}

std::string need_derivative(const TransformPair& b) {
    if (!b.derivative) return "pair ships no closed-form derivative";
    return "";
}

RuleInstance basic_instance(const TransformPair& b, Rng& rng, int k, double s0, double s1) {
    RuleInstance in;
    const int lev = level_of(b);
    in.p = draw_p(rng, k, probe_range(s0, s1), lev);
    in.zeta = CDNumber(lev);
    return in;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string instance_text(const RuleInstance& in) {
    std::ostringstream os;
    os << "p=" << to_string(in.p);
    if (cd_norm(in.zeta) != 0.0) os << ";zeta=" << to_string(in.zeta);
    if (cd_norm(in.h) != 0.0) os << ";h=" << to_string(in.h);
    for (const auto& [k, v] : in.a) os << ";" << k << "=" << v;
    if (!in.aux.empty()) os << ";aux=" << in.aux;
    if (in.variant) os << ";form=" << in.variant;
    return os.str();
}

OperationalRule rule(const std::string& name, const std::string& prov, const std::string& statement, PairDomain d,
                     std::vector<RuleBase> bases) {
    OperationalRule r;
    r.name = name;
    r.provenance = prov;
    r.statement = statement;
    r.domain = d;
    r.bases = std::move(bases);
    return r;
}

RuleBase B(const std::string& n, std::map<std::string, double> pr = {}, double tol = 0.0) { return {n, pr, tol}; }

// ---------------- one-sided rules ----------------

OperationalRule scaling_rule(KernelVariant kv) {
    const bool sph = kv == KernelVariant::Spherical;
    OperationalRule r = rule(sph ? "scaling_spherical" : "scaling", "time scaling theorem, one-sided transform",
                             "F(f(alpha t); p; zeta) = F(f; p/alpha; zeta)/alpha, alpha > 0", PairDomain::OneSided,
                             sph ? std::vector<RuleBase>{B("sph_tpow", {{"n", 0}}), B("sph_tpow", {{"n", 1}}),
                                                         B("sph_tpow", {{"n", 2}}), B("sph_damped_tpow", {{"n", 1}})}
                                 : std::vector<RuleBase>{B("sin"), B("damped_cos"), B("tpow"), B("exp_quat")});
    r.make_instance = [sph](const TransformPair& b, Rng& rng, int k) {
        const double al = uni(rng, 0.5, 3.0);
        RuleInstance in = basic_instance(b, rng, k, al * b.s0(), b.s1());
        in.a["alpha"] = al;
        if (sph && k >= 2) in.zeta = small_zeta(rng, level_of(b));
        return in;
    };
    r.lhs = [kv](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, kv](const CDNumber& p) {
            return quad(time_scaled(b.original, in.a.at("alpha")), b.domain, kv, p, in.zeta);
        };
    };
    r.rhs = [kv](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, kv](const CDNumber& p) {
            const double al = in.a.at("alpha");
            return image_of(b, kv, p / al, in.zeta) / al;
        };
    };
    return r;
}

OperationalRule derivative_rule() {
    OperationalRule r = rule("derivative", "derivative of the original, one-sided transform",
                             "F(f') = F(p) p - f(0)", PairDomain::OneSided,
                             {B("cos"), B("sin"), B("damped_sin"), B("tpow"), B("exp_quat")});
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        return basic_instance(b, rng, k, b.s0(), b.s1());
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance& in) -> std::string {
        if (!b.derivative || !b.f0) return "pair ships no closed-form derivative or f(0)";
        if (in.p.level() >= 4 && !b.real_valued) return "r >= 4 requires a real-valued original";
        return "";
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(with_eval(b.original, b.derivative, "f'"), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b](const CDNumber& p) { return closed(b, p) * p - *b.f0; };
    };
    return r;
}

// F'(p).h against the transform of (-t) f h (one-, two-sided) or ln(tau) g h (Mellin)
OperationalRule image_derivative_rule(const std::string& name, const std::string& prov, PairDomain d,
                                      std::vector<RuleBase> bases) {
    const double coef = d == PairDomain::Mellin ? 1.0 : -1.0;
    OperationalRule r = rule(name, prov,
                             d == PairDomain::Mellin ? "M'(p).h = M(ln(tau) g h), h in R + p'R"
                                                     : "F'(p).h = F((-t) f h), h in R + p'R",
                             d, std::move(bases));
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.h = slice_h(rng, in.p);
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const double step = 0.1 * std::min(1.0, 0.5 * std::min(p[0] - b.s0(), b.s1() - p[0]));
            return ridders_derivative([&](double e) { return closed(b, p + in.h * e); }, step);
        };
    };
    r.rhs = [coef](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, coef](const CDNumber& p) {
            return quad(times_power(b.original, coef, in.h), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    return r;
}

std::vector<double> comps(const CDNumber& x) { return x.coeffs(); }

OperationalRule spherical_derivative_rule(const std::string& name, PairDomain d, std::vector<RuleBase> bases) {
    std::string statement;
    if (d == PairDomain::OneSided)
        statement = "F(f'; p; zeta) = -f(0) + p0 F(p; zeta) + sum_j p_j F(p; zeta - i_j pi/2)";
    else
        statement = "F(f'; p; zeta) = p0 F(p; zeta) + sum_j p_j F(p; zeta - i_j pi/2)";
    OperationalRule r = rule(name, "spherical-kernel derivative theorem", statement, d, std::move(bases));
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        return basic_instance(b, rng, k, b.s0(), b.s1());
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance&) { return need_derivative(b); };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(with_eval(b.original, b.derivative, "f'"), b.domain, KernelVariant::Spherical, p, in.zeta);
        };
    };
    r.rhs = [d](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, d](const CDNumber& p) {
            auto F = [&](const CDNumber& z) { return image_of(b, KernelVariant::Spherical, p, z); };
            CDNumber out = F(in.zeta) * p[0] + spherical_combo(F, p, in.zeta, -1.0, comps(p));
            if (d == PairDomain::OneSided) out -= b.f0.value_or(CDNumber::real(0, 1));
            return out;
        };
    };
    return r;
}

OperationalRule spherical_image_derivative_rule(const std::string& name, PairDomain d, std::vector<RuleBase> bases) {
    const bool mellin = d == PairDomain::Mellin;
    OperationalRule r =
        rule(name, "spherical-kernel image derivative theorem",
             mellin ? "dM/dp.h = M(g ln tau; zeta) h0 + sum_j M(g ln tau; zeta + i_j pi/2) h_j"
                    : "dF/dp.h = -F(t f; zeta) h0 - sum_j F(t f; zeta - i_j pi/2) h_j",
             d, std::move(bases));
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.h = full_h(rng, level_of(b));
        if (k >= 2) in.zeta = small_zeta(rng, level_of(b));
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const double step = 0.1 * std::min(1.0, 0.5 * std::min(p[0] - b.s0(), b.s1() - p[0]));
            return ridders_derivative(
                [&](double e) { return image_of(b, KernelVariant::Spherical, p + in.h * e, in.zeta); }, step);
        };
    };
    r.rhs = [mellin](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, mellin](const CDNumber& p) {
            const CDNumber one = CDNumber::real(1, 1);
            const Original tf = times_power(b.original, 1.0, one);
            auto F = [&](const CDNumber& z) { return quad(tf, b.domain, KernelVariant::Spherical, p, z); };
            const double s = mellin ? 1.0 : -1.0;
            CDNumber out = F(in.zeta) * (s * in.h[0]);
            std::vector<double> c = comps(in.h);
            for (double& x : c) x *= s;
            return out + spherical_combo(F, p, in.zeta, mellin ? 1.0 : -1.0, c);
        };
    };
    return r;
}

// int_0^t f, closed form or nested quadrature
Original one_sided_antiderivative(const TransformPair& b) {
    TimeFn G = b.antiderivative;
    if (!G) {
        auto f = b.original.eval;
        G = [f](double t) {
            if (t <= 0) return CDNumber(f(1.0).level());
            IntervalOptions opt;
            opt.rel_tol = 1e-12;
            return integrate_interval(f, 0, t, 1e-12 * std::max(1.0, t), opt).value;
        };
    }
    const Original& o = b.original;
    Original d = with_eval(o, G, "int_0^t f");
    if (o.s0 > 1e-9) {
        d.bound_const = o.bound_const / o.s0;
    } else if (o.s0 < -1e-9) {
        d.bound_const = o.bound_const / -o.s0;
        d.s0 = 0;
    } else {
        d.s0 = 0;
        d.poly_degree = o.poly_degree + 1;
    }
    return d;
}

OperationalRule integration_rule() {
    OperationalRule r = rule("integration", "integration of the original, one-sided transform",
                             "F(g) p = F(f) for g(t) = int_0^t f(x) dx", PairDomain::OneSided,
                             {B("step"), B("sin"), B("cos"), B("tpow", {{"n", 1}}), B("damped_sin")});
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        return basic_instance(b, rng, k, std::max(b.s0(), 0.0), b.s1());
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(one_sided_antiderivative(b), b.domain, KernelVariant::Linear, p, in.zeta) * p;
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b](const CDNumber& p) { return closed(b, p); };
    };
    return r;
}

OperationalRule image_integration_rule() {
    OperationalRule r = rule("image_integration", "integration of the image, one-sided transform",
                             "F(f/t)(p) = int_p^inf F(z) dz along z = p + s, s >= 0", PairDomain::OneSided,
                             {B("sin", {}, 1e-4), B("tpow"), B("sh"), B("damped_sin")});
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        return basic_instance(b, rng, k, b.s0(), b.s1());
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance&) -> std::string {
        if (!b.f0 || cd_norm(*b.f0) != 0.0) return "f(t)/t is an original only when f(0) = 0";
        return "";
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            auto f = b.original.eval;
            auto df = b.derivative;
            Original q = with_eval(
                b.original,
                [f, df](double t) {
                    if (t > 0) return f(t) / t;
                    return df ? df(0.0) : CDNumber(f(1.0).level());
                },
                "f/t");
            q.poly_degree = std::max(0, b.original.poly_degree - 1);
            return quad(q, b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b](const CDNumber& p) {
            // s = x/(1-x) maps [0, 1) onto [0, inf)
            auto g = [&](double x) {
                const double s = x / (1 - x);
                return closed(b, p + s) / ((1 - x) * (1 - x));
            };
            IntervalOptions opt;
            opt.singular_right = true;
            opt.rel_tol = 1e-12;
            return integrate_interval(g, 0, 1, 1e-13, opt).value;
        };
    };
    return r;
}

OperationalRule shift_rule() {
    OperationalRule r = rule("shift", "delay theorem, one-sided transform",
                             "F(f(t - tau) Ch(t - tau)) = F(p) e^{-p tau}, tau > 0", PairDomain::OneSided,
                             {B("sin"), B("cos"), B("damped_tpow"), B("exp_quat")});
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.a["tau"] = uni(rng, 0.2, 2.0);
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(time_shifted(b.original, in.a.at("tau")), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) { return closed(b, p) * cd_exp(p * -in.a.at("tau")); };
    };
    return r;
}

// F(f(t - tau); p; zeta) = F(f; p; zeta + p tau), both kernels
OperationalRule shift_phase_rule(const std::string& name, PairDomain d, std::vector<RuleBase> bases,
                                 KernelVariant kv_override, bool use_override) {
    OperationalRule r = rule(name, "delay theorem, phase form", "F(f(t - tau); p; zeta) = F(f; p; zeta + p tau)", d,
                             std::move(bases));
    r.make_instance = [d](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.a["tau"] = d == PairDomain::OneSided ? uni(rng, 0.2, 2.0) : uni(rng, -1.5, 1.5);
        if (k >= 2) in.zeta = small_zeta(rng, level_of(b));
        return in;
    };
    auto kernel_for = [kv_override, use_override](const TransformPair& b) {
        return use_override ? kv_override : b.kernel;
    };
    r.lhs = [kernel_for](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, kernel_for](const CDNumber& p) {
            return quad(time_shifted(b.original, in.a.at("tau")), b.domain, kernel_for(b), p, in.zeta);
        };
    };
    r.rhs = [kernel_for](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, kernel_for](const CDNumber& p) {
            const int lev = std::max(p.level(), in.zeta.level());
            return image_of(b, kernel_for(b), p, in.zeta.embed(lev) + p * in.a.at("tau"));
        };
    };
    return r;
}

// F(e^{bt} f; p; zeta) = F(f; p - b; zeta)
OperationalRule damping_rule(const std::string& name, PairDomain d, std::vector<RuleBase> bases, KernelVariant kv) {
    OperationalRule r = rule(name, "damping theorem", "F(e^{bt} f; p; zeta) = F(f; p - b; zeta)", d,
                             std::move(bases));
    const bool sph = kv == KernelVariant::Spherical;
    r.make_instance = [sph](const TransformPair& b, Rng& rng, int k) {
        const double w = b.s1() - b.s0();
        const double bb = std::isfinite(w) ? uni(rng, -0.3 * w, 0.3 * w) : uni(rng, -1.0, 1.0);
        RuleInstance in = basic_instance(b, rng, k, b.s0() + bb, b.s1() + bb);
        in.a["b"] = bb;
        if (sph && k >= 2) in.zeta = small_zeta(rng, level_of(b));
        return in;
    };
    r.lhs = [kv](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, kv](const CDNumber& p) {
            return quad(damped(b.original, in.a.at("b")), b.domain, kv, p, in.zeta);
        };
    };
    r.rhs = [kv](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, kv](const CDNumber& p) { return image_of(b, kv, p - in.a.at("b"), in.zeta); };
    };
    return r;
}

Original one_sided_convolution(const Original& f, const Original& g) {
    auto fe = f.eval, ge = g.eval;
    Original c = with_eval(
        f,
        [fe, ge](double t) {
            if (t <= 0) return CDNumber(fe(1.0).level());
            auto h = [&](double x) { return fe(x) * ge(t - x); };
            IntervalOptions opt;
            opt.rel_tol = 1e-12;
            return integrate_interval(h, 0, t, 1e-12 * std::max(1.0, t), opt).value;
        },
        "f*g");
    c.s0 = std::max(f.s0, g.s0);
    c.osc = std::max(f.osc, g.osc);
    c.poly_degree = f.poly_degree + g.poly_degree + 1;
    c.bound_const = f.bound_const * g.bound_const;
    c.breakpoints.clear();
    return c;
}

OperationalRule convolution_rule() {
    OperationalRule r = rule("convolution", "convolution theorem, one-sided transform",
                             "F(int_0^t f(x) g(t-x) dx) = F(f) F(g), g real-valued", PairDomain::OneSided,
                             {B("step"), B("sin"), B("damped_cos"), B("exp_quat")});
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        static const std::vector<std::pair<std::string, std::map<std::string, double>>> aux = {
            {"step", {}}, {"cos", {{"omega", 1.0}}}, {"damped_sin", {{"a", 1.0}, {"b", 0.3}}}};
        const auto& [name, pr] = aux[std::size_t(k) % aux.size()];
        const TransformPair g = catalog_lookup(name, pr);
        RuleInstance in = basic_instance(b, rng, k, std::max(b.s0(), g.s0()), b.s1());
        in.aux = name;
        in.aux_params = pr;
        return in;
    };
    r.hypothesis = [](const TransformPair&, const RuleInstance& in) -> std::string {
        if (!catalog_lookup(in.aux, in.aux_params).real_valued) return "g must be real-valued";
        return "";
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const TransformPair g = catalog_lookup(in.aux, in.aux_params);
            return quad(one_sided_convolution(b.original, g.original), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const TransformPair g = catalog_lookup(in.aux, in.aux_params);
            return closed(b, p) * closed(g, p);
        };
    };
    return r;
}

OperationalRule limit_rule(bool initial, bool spherical) {
    std::string name = spherical ? (initial ? "spherical_initial_value" : "spherical_final_value")
                                 : (initial ? "initial_value" : "final_value");
    std::string statement;
    if (spherical)
        statement = initial ? "lim_{p->inf} p0 F(p) + sum_j p_j F(p; -i_j pi/2) = f(0)"
                            : "lim_{p->0} p0 F(p) + sum_j p_j F(p; -i_j pi/2) = f(inf)";
    else
        statement = initial ? "lim_{p->inf} F(p) p = f(0)" : "lim_{p->0} F(p) p = f(inf)";
    std::vector<RuleBase> bases;
    if (spherical)
        bases = initial ? std::vector<RuleBase>{B("sph_tpow", {{"n", 0}}), B("sph_tpow", {{"n", 1}}),
                                                B("sph_damped_tpow", {{"n", 0}}), B("sph_damped_tpow", {{"n", 1}})}
                        : std::vector<RuleBase>{B("sph_tpow", {{"n", 0}}), B("sph_damped_tpow", {{"n", 0}}),
                                                B("sph_damped_tpow", {{"n", 1}}), B("sph_damped_tpow", {{"n", 2}})};
    else
        bases = initial ? std::vector<RuleBase>{B("sin"), B("cos"), B("damped_cos"), B("step"), B("exp_quat")}
                        : std::vector<RuleBase>{B("step"), B("damped_sin"), B("damped_cos"), B("si")};
    OperationalRule r = rule(name, spherical ? "spherical-kernel limit theorem" : "initial and final value theorem",
                             statement, PairDomain::OneSided, bases);
    const double rho = initial ? 1e10 : 1e-12;
    r.make_instance = [rho](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in;
        in.p = angle_point(rng, k, rho, level_of(b));
        in.zeta = CDNumber(level_of(b));
        in.a["rho"] = rho;
        return in;
    };
    r.hypothesis = [initial](const TransformPair& b, const RuleInstance&) -> std::string {
        if (initial && !b.f0) return "f(0+) not available";
        if (!initial && !b.f_inf) return "f(t) has no limit as t -> inf";
        return "";
    };
    r.lhs = [spherical](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, spherical](const CDNumber& p) {
            if (!spherical) return closed(b, p) * p;
            auto F = [&](const CDNumber& z) { return b.eval_image(p, z); };
            return F(in.zeta) * p[0] + spherical_combo(F, p, in.zeta, -1.0, comps(p));
        };
    };
    r.rhs = [initial](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b, initial](const CDNumber&) { return initial ? *b.f0 : *b.f_inf; };
    };
    return r;
}

// ---------------- two-sided rules ----------------

std::vector<RuleBase> two_sided_bases() {
    return {B("exp_abs_twosided"), B("gauss_twosided"), B("logistic_twosided")};
}

OperationalRule ts_scaling_rule(PairDomain d) {
    const bool mellin = d == PairDomain::Mellin;
    OperationalRule r = rule(mellin ? "mellin_power_argument" : "ts_scaling",
                             mellin ? "power-argument theorem, Mellin transform" : "scaling theorem, two-sided",
                             mellin ? "M(g(tau^b)) = M(p/b)/b for b > 0, -M(p/b)/b for b < 0"
                                    : "F(f(bt)) = F(p/b)/b for b > 0, -F(p/b)/b for b < 0",
                             d,
                             mellin ? std::vector<RuleBase>{B("mellin_exp"), B("mellin_rational"), B("mellin_gauss")}
                                    : two_sided_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        const double bb = (k % 2 ? -1.0 : 1.0) * uni(rng, 0.5, 2.0);
        const Original sc = time_scaled(b.original, bb);
        RuleInstance in = basic_instance(b, rng, k, sc.s0, sc.s1);
        in.a["b"] = bb;
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(time_scaled(b.original, in.a.at("b")), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const double bb = in.a.at("b");
            const CDNumber v = closed(b, p / bb) / bb;
            return bb > 0 ? v : -v;
        };
    };
    return r;
}

OperationalRule ts_shift_rule() {
    OperationalRule r = rule("ts_shift", "shift theorem, two-sided", "F(f(t - tau)) = F(p) e^{-p tau}",
                             PairDomain::TwoSided, two_sided_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.a["tau"] = uni(rng, -1.5, 1.5);
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(time_shifted(b.original, in.a.at("tau")), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) { return closed(b, p) * cd_exp(p * -in.a.at("tau")); };
    };
    return r;
}

OperationalRule ts_derivative_rule() {
    OperationalRule r = rule("ts_derivative", "derivative theorem, two-sided", "F(f') = F(p) p",
                             PairDomain::TwoSided, two_sided_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        return basic_instance(b, rng, k, b.s0(), b.s1());
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance&) { return need_derivative(b); };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(with_eval(b.original, b.derivative, "f'"), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b](const CDNumber& p) { return closed(b, p) * p; };
    };
    return r;
}

Original two_sided_convolution(const Original& f, double alpha_g) {
    auto fe = f.eval;
    const double L = std::sqrt(45.0 / alpha_g);
    const std::vector<double> fb = f.breakpoints;
    Original c = with_eval(
        f,
        [fe, alpha_g, L, fb](double t) {
            auto h = [&](double x) { return fe(x) * std::exp(-alpha_g * (t - x) * (t - x)); };
            IntervalOptions opt;
            opt.rel_tol = 1e-12;
            for (double b : fb)
                if (b > t - L && b < t + L) opt.breakpoints.push_back(b);
            return integrate_interval(h, t - L, t + L, 1e-300, opt).value;
        },
        "f*gauss");
    c.bound_const = f.bound_const * 10 * std::sqrt(kPi / alpha_g);
    c.breakpoints.clear();
    if (f.horizon_right) c.horizon_right = time_shift(f.horizon_right, L);
    if (f.horizon_left) c.horizon_left = time_shift(f.horizon_left, L);
    return c;
}

OperationalRule ts_convolution_rule() {
    OperationalRule r = rule("ts_convolution", "convolution theorem, two-sided",
                             "F(int f(x) g(t-x) dx) = F(f) F(g), g real-valued (g Gaussian)", PairDomain::TwoSided,
                             two_sided_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.aux = "gauss_twosided";
        in.aux_params = {{"alpha", 1.5}};
        return in;
    };
    r.hypothesis = [](const TransformPair&, const RuleInstance& in) -> std::string {
        if (!catalog_lookup(in.aux, in.aux_params).real_valued) return "g must be real-valued";
        return "";
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(two_sided_convolution(b.original, in.aux_params.at("alpha")), b.domain,
                        KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const TransformPair g = catalog_lookup(in.aux, in.aux_params);
            return closed(b, p) * closed(g, p);
        };
    };
    return r;
}

// Antiderivative originals for the two-sided (form 1: from -inf, form 2: from +inf) and Mellin
// (form 1: int_0^tau g(a)/a da, form 2: int_{+inf}^tau g(a)/a da) integration theorems.
Original integrated(const TransformPair& b, int form) {
    const Original& o = b.original;
    const TimeFn G = form == 1 ? b.antiderivative : b.antiderivative_upper;
    Original d = with_eval(o, G, form == 1 ? "int from the lower end" : "int from +inf");
    d.breakpoints.clear();
    d.bound_const = o.bound_const * 10;
    const bool mellin = b.domain == PairDomain::Mellin;
    // in Mellin strips the roles of the two ends are exchanged
    if (form == 1) {
        if (mellin) {
            d.s1 = std::min(o.s1, 0.0);
            d.horizon_right = {};
        } else {
            d.s0 = std::max(o.s0, 0.0);
            d.horizon_right = {};
        }
    } else {
        if (mellin) {
            d.s0 = std::max(o.s0, 0.0);
            d.horizon_left = {};
        } else {
            d.s1 = std::min(o.s1, 0.0);
            d.horizon_left = {};
        }
    }
    d.poly_degree = o.poly_degree + 1;
    return d;
}

bool form_available(const TransformPair& b, int form) {
    const Original& o = b.original;
    const bool mellin = b.domain == PairDomain::Mellin;
    double lo, hi;
    if ((form == 1) != mellin) {
        lo = std::max(o.s0, 0.0);
        hi = o.s1;
    } else {
        lo = o.s0;
        hi = std::min(o.s1, 0.0);
    }
    if (mellin && form == 1) {
        lo = o.s0;
        hi = std::min(o.s1, 0.0);
    }
    if (mellin && form == 2) {
        lo = std::max(o.s0, 0.0);
        hi = o.s1;
    }
    return lo < hi && (form == 1 ? bool(b.antiderivative) : bool(b.antiderivative_upper));
}

OperationalRule integration_two_form_rule(PairDomain d) {
    const bool mellin = d == PairDomain::Mellin;
    OperationalRule r = rule(mellin ? "mellin_integration" : "ts_integration",
                             mellin ? "integration theorem, Mellin transform" : "integration theorem, two-sided",
                             mellin ? "M(w) p = M(g), w = int_0^tau g(a)/a da (form 1) or int_{+inf}^tau (form 2)"
                                    : "F(g) p = F(f), g = int_{-inf}^t f (form 1) or int_{+inf}^t f (form 2)",
                             d,
                             mellin ? std::vector<RuleBase>{B("mellin_exp", {{"b", 1}}), B("mellin_exp"),
                                                            B("mellin_rational"), B("mellin_gauss")}
                                    : two_sided_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        int form = (k % 2) ? 2 : 1;
        if (!form_available(b, form)) form = 3 - form;
        const Original g = integrated(b, form);
        RuleInstance in = basic_instance(b, rng, k, std::max(g.s0, b.s0()), std::min(g.s1, b.s1()));
        in.variant = form;
        return in;
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance& in) -> std::string {
        if (!form_available(b, in.variant)) return "empty domain or no closed-form antiderivative for this form";
        return "";
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(integrated(b, in.variant), b.domain, KernelVariant::Linear, p, in.zeta) * p;
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b](const CDNumber& p) { return closed(b, p); };
    };
    return r;
}

// ---------------- Mellin rules ----------------

std::vector<RuleBase> mellin_bases() { return {B("mellin_exp"), B("mellin_rational"), B("mellin_gauss")}; }

// g(alpha tau) is f(t + ln alpha) in t = ln tau
Original dilated(const Original& o, double alpha) {
    Original d = time_shifted(o, -std::log(alpha));
    auto e = o.eval;
    d.eval = [e, alpha](double tau) { return e(alpha * tau); };
    d.bound_const = o.bound_const;
    return d;
}

OperationalRule mellin_dilation_rule(bool phase_form) {
    OperationalRule r = rule(phase_form ? "mellin_dilation_phase" : "mellin_dilation",
                             "dilation theorem, Mellin transform",
                             phase_form ? "M(g(alpha tau); p; zeta) = M(g; p; zeta - p ln alpha), both kernels"
                                        : "M(g(alpha tau)) = M(g) alpha^{-p}",
                             PairDomain::Mellin, mellin_bases());
    r.make_instance = [phase_form](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        in.a["alpha"] = uni(rng, 0.3, 3.0);
        if (phase_form) {
            in.variant = k % 2 ? 2 : 1;  // 1 linear kernel, 2 spherical kernel
            if (k >= 2) in.zeta = small_zeta(rng, level_of(b));
        }
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const KernelVariant kv = in.variant == 2 ? KernelVariant::Spherical : KernelVariant::Linear;
            return quad(dilated(b.original, in.a.at("alpha")), b.domain, kv, p, in.zeta);
        };
    };
    r.rhs = [phase_form](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, phase_form](const CDNumber& p) {
            const double la = std::log(in.a.at("alpha"));
            if (!phase_form) return closed(b, p) * cd_exp(p * -la);
            const KernelVariant kv = in.variant == 2 ? KernelVariant::Spherical : KernelVariant::Linear;
            const int lev = std::max(p.level(), in.zeta.level());
            return image_of(b, kv, p, in.zeta.embed(lev) - p * la);
        };
    };
    return r;
}

OperationalRule mellin_power_rule() {
    OperationalRule r = rule("mellin_power", "power-factor theorem, Mellin transform",
                             "M(tau^b g; p; zeta) = M(g; p + b; zeta), both kernels", PairDomain::Mellin,
                             mellin_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        const double w = b.s1() - b.s0();
        const double bb = std::isfinite(w) ? uni(rng, -0.3 * w, 0.3 * w) : uni(rng, -0.5, 0.5);
        RuleInstance in = basic_instance(b, rng, k, b.s0() - bb, b.s1() - bb);
        in.a["b"] = bb;
        in.variant = k % 2 ? 2 : 1;
        if (k >= 2 && in.variant == 2) in.zeta = small_zeta(rng, level_of(b));
        return in;
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const KernelVariant kv = in.variant == 2 ? KernelVariant::Spherical : KernelVariant::Linear;
            // tau^b g(tau) is e^{b t} f(t)
            Original o = damped(b.original, in.a.at("b"));
            auto e = b.original.eval;
            const double bb = in.a.at("b");
            o.eval = [e, bb](double tau) { return e(tau) * std::pow(tau, bb); };
            o.s0 = b.s0() - bb;
            o.s1 = b.s1() - bb;
            return quad(o, b.domain, kv, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const KernelVariant kv = in.variant == 2 ? KernelVariant::Spherical : KernelVariant::Linear;
            return image_of(b, kv, p + in.a.at("b"), in.zeta);
        };
    };
    return r;
}

Original mellin_derivative_original(const TransformPair& b, bool times_tau) {
    const Original& o = b.original;
    auto d = b.derivative;
    Original g = with_eval(
        o, times_tau ? TimeFn([d](double tau) { return d(tau) * tau; }) : d, times_tau ? "tau g'" : "g'");
    if (!times_tau) {
        g.s0 = o.s0 + 1;
        g.s1 = o.s1 + 1;
    }
    g.horizon_right = rate_shift(o.horizon_right, 2.0);
    g.bound_const = o.bound_const * 4;
    return g;
}

OperationalRule mellin_derivative_rule() {
    OperationalRule r = rule("mellin_derivative", "derivative theorem, Mellin transform",
                             "M(g') = -M(g; p - 1)(p - 1)", PairDomain::Mellin, mellin_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        return basic_instance(b, rng, k, b.s0() + 1, b.s1() + 1);
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance&) { return need_derivative(b); };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(mellin_derivative_original(b, false), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance&) -> PointFn {
        return [&b](const CDNumber& p) { return -(closed(b, p - 1.0) * (p - 1.0)); };
    };
    return r;
}

OperationalRule mellin_derivative_tau_rule() {
    OperationalRule r = rule("mellin_derivative_tau", "derivative theorem with tau factor, Mellin transform",
                             "M(g' tau; p; zeta) = -M(g; p; zeta) p, u = pt + zeta", PairDomain::Mellin,
                             mellin_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        RuleInstance in = basic_instance(b, rng, k, b.s0(), b.s1());
        if (k >= 3) in.zeta = small_zeta(rng, level_of(b));
        return in;
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance&) { return need_derivative(b); };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            return quad(mellin_derivative_original(b, true), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) { return -(image_of(b, KernelVariant::Linear, p, in.zeta) * p); };
    };
    return r;
}

OperationalRule mellin_spherical_derivative_rule(bool times_tau) {
    OperationalRule r = rule(
        times_tau ? "mellin_spherical_derivative_tau" : "mellin_spherical_derivative",
        "spherical-kernel derivative theorem, Mellin transform",
        times_tau ? "M(g' tau) = -p0 M(p) - sum_j p_j M(p; zeta + i_j pi/2)"
                  : "M(g') = -(p0 - 1) M(p - 1) - sum_j p_j M(p - 1; zeta + i_j pi/2)",
        PairDomain::Mellin, mellin_bases());
    r.make_instance = [times_tau](const TransformPair& b, Rng& rng, int k) {
        const double sh = times_tau ? 0.0 : 1.0;
        return basic_instance(b, rng, k, b.s0() + sh, b.s1() + sh);
    };
    r.hypothesis = [](const TransformPair& b, const RuleInstance&) { return need_derivative(b); };
    r.lhs = [times_tau](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, times_tau](const CDNumber& p) {
            return quad(mellin_derivative_original(b, times_tau), b.domain, KernelVariant::Spherical, p, in.zeta);
        };
    };
    r.rhs = [times_tau](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in, times_tau](const CDNumber& p) {
            const CDNumber q = times_tau ? p : p - 1.0;
            auto F = [&](const CDNumber& z) { return quad(b.original, b.domain, KernelVariant::Spherical, q, z); };
            const double c0 = times_tau ? p[0] : p[0] - 1;
            return -(F(in.zeta) * c0 + spherical_combo(F, p, in.zeta, 1.0, comps(p)));
        };
    };
    return r;
}

Original mellin_convolution(const Original& g, const Original& w) {
    auto ge = g.eval, we = w.eval;
    Original c = with_eval(
        g,
        [ge, we](double b) {
            const double lb = std::log(b);
            auto h = [&](double x) { return ge(std::exp(x)) * we(b * std::exp(-x)); };
            IntervalOptions opt;
            opt.rel_tol = 1e-12;
            return integrate_interval(h, std::min(0.0, lb) - 40, std::max(0.0, lb) + 40, 1e-300, opt).value;
        },
        "g *^ w");
    c.s0 = std::max(g.s0, w.s0);
    c.s1 = std::min(g.s1, w.s1);
    if (!std::isfinite(c.s1)) c.s1 = c.s0 + 6;
    c.horizon_right = {};
    c.horizon_left = {};
    c.bound_const = 10 * g.bound_const * w.bound_const;
    c.poly_degree = 1;
    return c;
}

OperationalRule mellin_convolution_rule() {
    OperationalRule r = rule("mellin_convolution", "multiplicative convolution theorem, Mellin transform",
                             "M(int g(a) w(b/a) a^{-1} da) = M(g) M(w), w real-valued", PairDomain::Mellin,
                             mellin_bases());
    r.make_instance = [](const TransformPair& b, Rng& rng, int k) {
        static const std::vector<std::string> aux = {"mellin_exp", "mellin_gauss", "mellin_rational"};
        const std::string name = aux[std::size_t(k) % aux.size()];
        const TransformPair w = catalog_lookup(name);
        const Original c = mellin_convolution(b.original, w.original);
        RuleInstance in = basic_instance(b, rng, k, c.s0, c.s1);
        in.aux = name;
        return in;
    };
    r.hypothesis = [](const TransformPair&, const RuleInstance& in) -> std::string {
        if (!catalog_lookup(in.aux, in.aux_params).real_valued) return "w must be real-valued";
        return "";
    };
    r.lhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const TransformPair w = catalog_lookup(in.aux, in.aux_params);
            return quad(mellin_convolution(b.original, w.original), b.domain, KernelVariant::Linear, p, in.zeta);
        };
    };
    r.rhs = [](const TransformPair& b, const RuleInstance& in) -> PointFn {
        return [&b, in](const CDNumber& p) {
            const TransformPair w = catalog_lookup(in.aux, in.aux_params);
            return closed(b, p) * closed(w, p);
        };
    };
    return r;
}

std::vector<OperationalRule> build_rules() {
    std::vector<OperationalRule> v;
    v.push_back(scaling_rule(KernelVariant::Linear));
    v.push_back(scaling_rule(KernelVariant::Spherical));
    v.push_back(derivative_rule());
    v.push_back(image_derivative_rule("image_derivative", "image derivative theorem, one-sided",
                                      PairDomain::OneSided,
                                      {B("sin"), B("cos"), B("damped_tpow"), B("exp_quat")}));
    v.push_back(spherical_derivative_rule(
        "spherical_derivative", PairDomain::OneSided,
        {B("sph_tpow", {{"n", 1}}), B("sph_tpow", {{"n", 2}}), B("sph_damped_tpow", {{"n", 1}}),
         B("sph_damped_tpow", {{"n", 2}})}));
    v.push_back(spherical_image_derivative_rule(
        "spherical_image_derivative", PairDomain::OneSided,
        {B("sph_tpow", {{"n", 1}}), B("sph_tpow", {{"n", 2}}), B("sph_damped_tpow", {{"n", 1}})}));
    v.push_back(integration_rule());
    v.push_back(image_integration_rule());
    v.push_back(shift_rule());
    v.push_back(shift_phase_rule("shift_phase", PairDomain::OneSided,
                                 {B("sph_tpow", {{"n", 1}}), B("sph_tpow", {{"n", 2}}),
                                  B("sph_damped_tpow", {{"n", 1}}), B("sin"), B("damped_cos")},
                                 KernelVariant::Linear, false));
    v.push_back(damping_rule("damping", PairDomain::OneSided, {B("sin"), B("cos"), B("tpow"), B("exp_quat")},
                             KernelVariant::Linear));
    v.push_back(convolution_rule());
    v.push_back(limit_rule(true, false));
    v.push_back(limit_rule(false, false));
    v.push_back(limit_rule(true, true));
    v.push_back(limit_rule(false, true));

    v.push_back(ts_scaling_rule(PairDomain::TwoSided));
    v.push_back(ts_shift_rule());
    v.push_back(shift_phase_rule("ts_shift_phase", PairDomain::TwoSided, two_sided_bases(), KernelVariant::Linear,
                                 true));
    v.push_back(shift_phase_rule("ts_shift_phase_spherical", PairDomain::TwoSided, two_sided_bases(),
                                 KernelVariant::Spherical, true));
    v.push_back(damping_rule("ts_damping", PairDomain::TwoSided, two_sided_bases(), KernelVariant::Linear));
    v.push_back(damping_rule("ts_damping_spherical", PairDomain::TwoSided, two_sided_bases(),
                             KernelVariant::Spherical));
    v.push_back(ts_derivative_rule());
    v.push_back(spherical_derivative_rule("ts_spherical_derivative", PairDomain::TwoSided, two_sided_bases()));
    v.push_back(image_derivative_rule("ts_image_derivative", "image derivative theorem, two-sided",
                                      PairDomain::TwoSided, two_sided_bases()));
    v.push_back(
        spherical_image_derivative_rule("ts_spherical_image_derivative", PairDomain::TwoSided, two_sided_bases()));
    v.push_back(ts_convolution_rule());
    v.push_back(integration_two_form_rule(PairDomain::TwoSided));

    v.push_back(mellin_dilation_rule(false));
    v.push_back(mellin_dilation_rule(true));
    v.push_back(mellin_power_rule());
    v.push_back(ts_scaling_rule(PairDomain::Mellin));
    v.push_back(mellin_derivative_rule());
    v.push_back(mellin_derivative_tau_rule());
    v.push_back(mellin_spherical_derivative_rule(false));
    v.push_back(mellin_spherical_derivative_rule(true));
    v.push_back(image_derivative_rule("mellin_image_derivative", "image derivative theorem, Mellin transform",
                                      PairDomain::Mellin, mellin_bases()));
    v.push_back(spherical_image_derivative_rule("mellin_spherical_image_derivative", PairDomain::Mellin,
                                                mellin_bases()));
    v.push_back(mellin_convolution_rule());
    v.push_back(integration_two_form_rule(PairDomain::Mellin));
    return v;
}

}  // namespace

const std::vector<OperationalRule>& rule_list() {
    static const std::vector<OperationalRule> rules = build_rules();
    return rules;
}

std::vector<std::string> rule_names() {
    std::vector<std::string> out;
    for (const OperationalRule& r : rule_list()) out.push_back(r.name);
    return out;
}

const OperationalRule& rule_lookup(const std::string& name) {
    for (const OperationalRule& r : rule_list())
        if (r.name == name) return r;
    fail(ErrorKind::NotFound, "no operational rule named '" + name + "'");
}

CheckRecord check_rule_instance(const OperationalRule& rule, const TransformPair& base, const RuleInstance& inst,
                                double tol) {
    CheckRecord rec;
    rec.name = rule.name + ":" + base.name;
    rec.probe = instance_text(inst);
    if (base.domain != rule.domain) {
        rec.skipped = true;
        rec.note = std::string("base pair is a ") + pair_domain_name(base.domain) + " pair, the rule needs " +
                   pair_domain_name(rule.domain);
        return rec;
    }
    if (rule.hypothesis) {
        const std::string why = rule.hypothesis(base, inst);
        if (!why.empty()) {
            rec.skipped = true;
            rec.note = why;
            return rec;
        }
    }
    try {
        const CDNumber l = rule.lhs(base, inst)(inst.p);
        const CDNumber r = rule.rhs(base, inst)(inst.p);
        rec.dev = relative_dev(l, r);
        rec.pass = rec.dev <= std::max({tol, rule.tol, base.tol});
    } catch (const Error& e) {
        rec.pass = false;
        rec.dev = std::numeric_limits<double>::infinity();
        rec.note = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    return rec;
}

std::vector<CheckRecord> verify_rule(const OperationalRule& rule, const TransformPair& base, int instances,
                                     std::uint64_t seed, double tol) {
    std::string key = rule.name + "|" + base.name;
    for (const auto& [k, v] : base.params) key += "|" + k + "=" + std::to_string(v);
    Rng rng(seed ^ fnv1a(key));
    std::vector<CheckRecord> out;
    for (int k = 0; k < instances; ++k) {
        const RuleInstance in = rule.make_instance(base, rng, k);
        out.push_back(check_rule_instance(rule, base, in, tol));
    }
    return out;
}

std::vector<CheckRecord> verify_rule_bases(const OperationalRule& rule, int instances, std::uint64_t seed,
                                           double tol) {
    std::vector<CheckRecord> out;
    for (const RuleBase& rb : rule.bases) {
        const TransformPair base = catalog_lookup(rb.pair, rb.params);
        const double t = rb.tol > 0 ? std::max(tol, rb.tol) : tol;
        for (CheckRecord& r : verify_rule(rule, base, instances, seed, t)) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hct
