#include "hct/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <tuple>

namespace hct {

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a = 0, b = 0;
    CDNumber value;
    double err = 0;
};

double norm_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    CDNumber fc = f(c);
    const std::size_t n = fc.dim();
    std::vector<double> rk(n), rg(n, 0.0);
    std::vector<double> f1[7], f2[7];
    double resabs = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        rk[k] = wgk[7] * fc[k];
        rg[k] = wg[3] * fc[k];
    }
    resabs = wgk[7] * cd_norm(fc);
    int lev = fc.level();
    for (int j = 0; j < 7; ++j) {
        CDNumber x1 = f(c - h * xgk[j]);
        CDNumber x2 = f(c + h * xgk[j]);
        lev = std::max({lev, x1.level(), x2.level()});
        f1[j] = x1.embed(std::max(x1.level(), lev)).coeffs();
        f2[j] = x2.embed(std::max(x2.level(), lev)).coeffs();
    }
    const std::size_t m = std::size_t(1) << lev;
    rk.resize(m, 0.0);
    rg.resize(m, 0.0);
    for (int j = 0; j < 7; ++j) {
        f1[j].resize(m, 0.0);
        f2[j].resize(m, 0.0);
        double s = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const double v = f1[j][k] + f2[j][k];
            rk[k] += wgk[j] * v;
            if (j % 2 == 1) rg[k] += wg[j / 2] * v;
        }
        s = norm_of(f1[j]) + norm_of(f2[j]);
        resabs += wgk[j] * s;
    }
    // resasc: integral of |f - mean|
    std::vector<double> mean(m);
    for (std::size_t k = 0; k < m; ++k) mean[k] = 0.5 * rk[k];
    auto dev = [&](const std::vector<double>& v) {
        double s = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const double d = v[k] - mean[k];
            s += d * d;
        }
        return std::sqrt(s);
    };
    std::vector<double> fcv = fc.embed(lev).coeffs();
    double resasc = wgk[7] * dev(fcv);
    for (int j = 0; j < 7; ++j) resasc += wgk[j] * (dev(f1[j]) + dev(f2[j]));

    std::vector<double> diff(m);
    for (std::size_t k = 0; k < m; ++k) diff[k] = rk[k] - rg[k];
    double err = norm_of(diff) * std::abs(h);
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(err, 50 * eps * resabs);

    Panel p;
    p.a = a;
    p.b = b;
    p.value = CDNumber(lev, rk) * h;
    p.err = err;
    for (std::size_t k = 0; k < m; ++k)
        if (!std::isfinite(p.value[k])) fail(ErrorKind::Domain, "integrand produced a non-finite value");
    if (!std::isfinite(err)) fail(ErrorKind::Domain, "integrand produced a non-finite value");
    return p;
}

QuadratureResult run_adaptive(const Integrand& f, std::vector<double> mesh, double tol, double rel_tol,
                              int max_panels) {
    std::vector<Panel> panels;
    std::vector<unsigned> version;
    panels.reserve(mesh.size() + 64);
    for (std::size_t k = 0; k + 1 < mesh.size(); ++k) panels.push_back(gk15(f, mesh[k], mesh[k + 1]));
    version.assign(panels.size(), 0);

    using Entry = std::tuple<double, std::size_t, unsigned>;
    std::priority_queue<Entry> heap;
    double err = 0;
    CDNumber run(1);
    for (std::size_t k = 0; k < panels.size(); ++k) {
        heap.emplace(panels[k].err, k, 0u);
        err += panels[k].err;
        run += panels[k].value;
    }
    const double width = mesh.back() - mesh.front();
    while (true) {
        const double goal = std::max(tol, rel_tol * cd_norm(run));
        if (err <= goal) break;
        while (!heap.empty() && std::get<2>(heap.top()) != version[std::get<1>(heap.top())]) heap.pop();
        if (heap.empty() || int(panels.size()) >= max_panels) {
            throw AccuracyError("quadrature tolerance " + sci(goal) + " not reached (estimate " + sci(err) + ")",
                                run.coeffs(), err);
        }
        const std::size_t k = std::get<1>(heap.top());
        heap.pop();
        const Panel w = panels[k];
        const double mid = 0.5 * (w.a + w.b);
        if (!(mid > w.a && mid < w.b) || (w.b - w.a) < 1e-15 * std::max(1.0, width)) {
            ++version[k];  // drop from the heap; its error stays in the total
            continue;
        }
        Panel left = gk15(f, w.a, mid), right = gk15(f, mid, w.b);
        err += left.err + right.err - w.err;
        run -= w.value;
        run += left.value;
        run += right.value;
        panels[k] = left;
        ++version[k];
        heap.emplace(left.err, k, version[k]);
        panels.push_back(right);
        version.push_back(0);
        heap.emplace(right.err, panels.size() - 1, 0u);
    }

    // Final sums in left-endpoint order, independent of the split history.
    std::vector<const Panel*> order;
    order.reserve(panels.size());
    for (const Panel& p : panels) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const Panel* x, const Panel* y) { return x->a < y->a; });
    int lev = 1;
    for (const Panel* p : order) lev = std::max(lev, p->value.level());
    QuadratureResult r;
    r.value = CDNumber(lev);
    r.err_estimate = 0;
    for (const Panel* p : order) {
        r.value += p->value;
        r.err_estimate += p->err;
    }
    r.panels_used = int(panels.size());
    r.truncation_point = mesh.back();
    return r;
}

std::vector<double> build_mesh(double a, double b, const std::vector<double>& breaks, double max_width,
                               bool sing_left, bool sing_right) {
    std::vector<double> pts{a, b};
    for (double x : breaks)
        if (x > a && x < b) pts.push_back(x);
    const double len = b - a;
    if (sing_left || sing_right) {
        // geometric grading with ratio 1/4 toward the singular end
        const double span = std::min(len, 1.0) * (sing_left && sing_right ? 0.5 : 1.0);
        double d = span;
        // stop once the offset is lost in the endpoint's rounding
        const double floor_l = 64 * std::numeric_limits<double>::epsilon() * std::abs(a);
        const double floor_r = 64 * std::numeric_limits<double>::epsilon() * std::abs(b);
        for (int k = 0; k < 120; ++k) {
            d *= 0.25;
            if (sing_left && d > floor_l) pts.push_back(a + d);
            if (sing_right && d > floor_r) pts.push_back(b - d);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (std::isfinite(max_width) && max_width > 0) {
        std::vector<double> out{pts.front()};
        for (std::size_t k = 1; k < pts.size(); ++k) {
            const double lo = pts[k - 1], hi = pts[k];
            const int n = int(std::ceil((hi - lo) / max_width - 1e-12));
            for (int j = 1; j < n; ++j) out.push_back(lo + (hi - lo) * j / n);
            out.push_back(hi);
        }
        pts.swap(out);
    }
    return pts;
}

}  // namespace

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol, const IntervalOptions& opt) {
    if (!(a < b)) fail(ErrorKind::Contract, "integrate_interval needs a < b");
    if (!(tol > 0)) fail(ErrorKind::Contract, "tolerance must be positive");
    auto mesh = build_mesh(a, b, opt.breakpoints, opt.max_panel_width, opt.singular_left, opt.singular_right);
    return run_adaptive(f, mesh, tol, opt.rel_tol, std::max(opt.max_panels, int(mesh.size()) + 16));
}

QuadratureResult integrate_semi_axis(const Integrand& f, const IntegrandProfile& pr, double tol,
                                     const SemiAxisOptions& opt) {
    if (!(pr.decay_rate > 0)) fail(ErrorKind::Divergence, "semi-axis integral needs a positive decay rate");
    if (!(tol > 0)) fail(ErrorKind::Contract, "tolerance must be positive");
    const double d = pr.decay_rate;
    const double C = std::max(pr.bound_const, 1e-300);
    const int k = std::max(0, pr.poly_degree);
    const double tail_tol = 0.5 * tol;
    // integral of C (1+t)^k e^{-dt} over [T, inf)
    auto tail_at = [&](double T) {
        const double denom = d - k / (1.0 + T);
        if (denom <= 0) return std::numeric_limits<double>::infinity();
        return C * std::exp(k * std::log1p(T) - d * T) / denom;
    };
    double T = 0.0, tail = 0.0;
    if (std::isfinite(d)) {
        T = std::max(std::log(C / (tail_tol * d)) / d, 1.0 / d);
        for (int it = 0; it < 200 && !(tail_at(T) <= tail_tol); ++it) T *= 1.1;
        tail = tail_at(T);
        if (!(tail <= tail_tol)) fail(ErrorKind::Divergence, "cannot bound the semi-axis tail");
    }
    if (pr.horizon < T || !std::isfinite(d)) {
        if (!std::isfinite(pr.horizon)) fail(ErrorKind::Divergence, "no finite truncation point");
        T = pr.horizon;
        tail = 0.0;
    }
    const double width = std::min(1.0, std::numbers::pi / std::max(1.0, pr.osc_rate));
    auto mesh = build_mesh(0.0, T, opt.breakpoints, width, opt.singular_at_zero, false);
    QuadratureResult r = run_adaptive(f, mesh, 0.5 * tol, opt.rel_tol, std::max(opt.max_panels, int(mesh.size()) * 4));
    r.err_estimate += tail;
    r.truncation_point = T;
    return r;
}

namespace {

void check_axis(const CDNumber& S) {
    if (S[0] != 0.0 || std::abs(cd_norm(S) - 1.0) > 1e-12)
        fail(ErrorKind::Contract, "line direction S must be a unit purely imaginary number");
}

Integrand line_integrand(const ImageFn& F, double a, const CDNumber& S, double t, const KernelSpec& kernel,
                         const CDNumber* zeta) {
    const int lev = std::max(S.level(), zeta ? zeta->level() : 1);
    const CDNumber z = zeta ? zeta->embed(lev) : CDNumber(lev);
    const CDNumber Sl = S.embed(lev);
    KernelSpec ks = kernel;
    ks.level = lev;
    return [F, a, Sl, t, ks, z](double th) {
        CDNumber p = Sl * th;
        p[0] = a;
        CDNumber w = kernel_weight_inverse(ks, p, t, z);
        return (F(p) * w) * Sl;
    };
}

}  // namespace

QuadratureResult integrate_bromwich_line(const ImageFn& F, double a, const CDNumber& S, double t, double theta_max,
                                         double tol, const KernelSpec& kernel, const CDNumber* zeta) {
    check_axis(S);
    if (!(theta_max > 0)) fail(ErrorKind::Contract, "theta_max must be positive");
    IntervalOptions opt;
    opt.max_panel_width = std::min(1.0, std::numbers::pi / std::max(1.0, std::abs(t)));
    opt.max_panels = 400000;
    return integrate_interval(line_integrand(F, a, S, t, kernel, zeta), -theta_max, theta_max, tol, opt);
}

LadderResult line_ladder(const Integrand& g, double osc, double tol, double theta0, double theta_cap) {
    if (!(theta0 > 0) || theta_cap < theta0) fail(ErrorKind::Contract, "bad theta ladder");
    IntervalOptions opt;
    opt.max_panel_width = std::min(1.0, std::numbers::pi / std::max(1.0, std::abs(osc)));
    opt.max_panels = 400000;
    const double qtol = 0.05 * tol;
    // the symmetric tails of a c/p image behave like 2 c int sin(theta osc)/theta, whose leading
    // term cos(theta osc)/(theta osc) vanishes when the line is cut at theta osc = (k + 1/2) pi
    const double half = osc != 0.0 ? std::numbers::pi / std::abs(osc) : 0.0;
    auto snap = [&](double x) { return half > 0 ? (std::max(0.0, std::round(x / half - 0.5)) + 0.5) * half : x; };
    LadderResult lr;
    double nominal = theta0;
    double theta = snap(nominal);
    QuadratureResult cur = integrate_interval(g, -theta, theta, qtol, opt);
    int small = 0;
    while (true) {
        if (2 * nominal > theta_cap * (1 + 1e-12)) {
            lr.line = cur;
            lr.theta_max = theta;
            throw AccuracyError("line integral did not settle below " + sci(tol) + " by theta_max " + sci(theta),
                                cur.value.coeffs(), lr.last_change);
        }
        nominal *= 2;
        const double next_theta = snap(nominal);
        opt.max_panels = 400000;
        QuadratureResult up = integrate_interval(g, theta, next_theta, qtol, opt);
        QuadratureResult dn = integrate_interval(g, -next_theta, -theta, qtol, opt);
        // fixed order: lower annulus, inner, upper annulus
        CDNumber next = dn.value + cur.value;
        next += up.value;
        const double change = cd_norm(next - cur.value);
        lr.history.push_back(change);
        cur.value = next;
        cur.err_estimate += up.err_estimate + dn.err_estimate;
        cur.panels_used += up.panels_used + dn.panels_used;
        theta = next_theta;
        lr.last_change = change;
        small = change < tol ? small + 1 : 0;
        if (small >= 2) break;
    }
    cur.truncation_point = theta;
    cur.err_estimate += lr.last_change;
    lr.line = cur;
    lr.theta_max = theta;
    return lr;
}

LadderResult bromwich_ladder(const ImageFn& F, double a, const CDNumber& S, double t, double tol,
                             const KernelSpec& kernel, const CDNumber* zeta, double theta0, double theta_cap) {
    check_axis(S);
    return line_ladder(line_integrand(F, a, S, t, kernel, zeta), t, tol, theta0, theta_cap);
}

}  // namespace hct
