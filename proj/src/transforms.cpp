#include "hct/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace hct {

const char* support_name(Support s) {
    switch (s) {
        case Support::RightAxis: return "right_axis";
        case Support::TwoSided: return "two_sided";
        case Support::PositiveAxisMultiplicative: return "positive_multiplicative";
    }
    return "?";
}

CDNumber Original::operator()(double t) const {
    if (support == Support::RightAxis && t < 0) {
        CDNumber z = eval(1.0);
        return CDNumber(z.level());
    }
    return eval(t);
}

namespace {

int request_level(const TransformRequest& req) {
    int lev = std::max(req.p.level(), req.zeta.level());
    lev = std::max(lev, req.kernel.level);
    if (req.kernel.variant == KernelVariant::Spherical) lev = std::max(lev, 2);
    return lev;
}

double kernel_osc(const KernelSpec& k, const CDNumber& p) {
    if (k.variant == KernelVariant::Linear) return cd_norm(p.imag());
    double s = 0;
    for (std::size_t j = 1; j < p.dim(); ++j) s += std::abs(p[j]);
    return s;
}

// One half-line: integral over s >= 0 of h(s) exp(-u(q, s; zeta)), where |h(s)| <= C (1+s)^k e^{rate s}.
QuadratureResult half_line(const std::function<CDNumber(double)>& h, double rate, const HorizonFn& horizon,
                           const Original& o, const KernelSpec& kernel, const CDNumber& q, const CDNumber& zeta,
                           double tol, double rel_tol, const std::vector<double>& breaks, bool singular0) {
    IntegrandProfile prof;
    prof.decay_rate = q[0] - rate;
    prof.osc_rate = kernel_osc(kernel, q) + o.osc;
    prof.bound_const = o.bound_const * std::exp(-zeta[0]);
    prof.poly_degree = o.poly_degree;
    if (horizon) prof.horizon = horizon(-q[0], tol);
    if (!std::isfinite(prof.decay_rate) && !std::isfinite(prof.horizon))
        fail(ErrorKind::Divergence, "original '" + o.label + "' has no usable decay bound");
    SemiAxisOptions opt;
    opt.singular_at_zero = singular0;
    opt.rel_tol = rel_tol;
    opt.breakpoints = breaks;
    auto f = [&](double s) { return h(s) * kernel_weight(kernel, q, s, zeta); };
    return integrate_semi_axis(f, prof, tol, opt);
}

void check_levels(const TransformRequest& req, CDNumber& p, CDNumber& z, KernelSpec& k) {
    const int lev = request_level(req);
    p = req.p.embed(lev);
    z = req.zeta.embed(lev);
    k = make_kernel(req.kernel.variant, lev);
    if (!p.all_finite() || !z.all_finite()) fail(ErrorKind::Input, "non-finite p or zeta");
    if (!req.original.eval) fail(ErrorKind::Contract, "original without evaluator");
}

}  // namespace

QuadratureResult laplace_one_sided(const TransformRequest& req) {
    CDNumber p, z;
    KernelSpec k;
    check_levels(req, p, z, k);
    const Original& o = req.original;
    if (o.support == Support::PositiveAxisMultiplicative)
        fail(ErrorKind::Contract, "use mellin_forward for multiplicative originals");
    if (!(p[0] > o.s0 + kDomainMargin))
        fail(ErrorKind::Domain, "Re p = " + std::to_string(p[0]) + " is outside the half space Re p > " +
                                    std::to_string(o.s0) + " of '" + o.label + "'");
    auto h = [&](double t) { return o.eval(t); };
    return half_line(h, o.s0, o.horizon_right, o, k, p, z, req.tol, req.rel_tol, o.breakpoints, o.singular_at_zero);
}

QuadratureResult laplace_two_sided(const TransformRequest& req) {
    CDNumber p, z;
    KernelSpec k;
    check_levels(req, p, z, k);
    const Original& o = req.original;
    if (o.support == Support::PositiveAxisMultiplicative)
        fail(ErrorKind::Contract, "use mellin_forward for multiplicative originals");
    if (!(o.s0 < o.s1)) fail(ErrorKind::Divergence, "empty convergence strip for '" + o.label + "'");
    if (!(p[0] > o.s0 + kDomainMargin && p[0] < o.s1 - kDomainMargin))
        fail(ErrorKind::Domain, "Re p = " + std::to_string(p[0]) + " is outside the strip (" + std::to_string(o.s0) +
                                    ", " + std::to_string(o.s1) + ") of '" + o.label + "'");
    const double half_tol = 0.5 * req.tol;
    std::vector<double> right_breaks, left_breaks;
    for (double b : o.breakpoints) {
        if (b > 0) right_breaks.push_back(b);
        if (b < 0) left_breaks.push_back(-b);
    }
    // t >= 0
    auto hr = [&](double t) { return o.eval(t); };
    QuadratureResult right =
        half_line(hr, o.s0, o.horizon_right, o, k, p, z, half_tol, req.rel_tol, right_breaks, o.singular_at_zero);
    // t < 0 as a one-sided integral of f(-s) at -p: u(-p, s; zeta) = u(p, -s; zeta)
    if (o.support == Support::RightAxis) return right;
    auto hl = [&](double s) { return o.eval(-s); };
    const CDNumber mp = -p;
    QuadratureResult left =
        half_line(hl, -o.s1, o.horizon_left, o, k, mp, z, half_tol, req.rel_tol, left_breaks, o.singular_at_zero);
    QuadratureResult sum;
    sum.value = left.value + right.value;
    sum.err_estimate = left.err_estimate + right.err_estimate;
    sum.panels_used = left.panels_used + right.panels_used;
    sum.truncation_point = std::max(left.truncation_point, right.truncation_point);
    return sum;
}

Original mellin_to_two_sided(const Original& g) {
    if (g.support != Support::PositiveAxisMultiplicative)
        fail(ErrorKind::Contract, "Mellin transform needs a multiplicative original");
    Original f = g;
    f.support = Support::TwoSided;
    auto ge = g.eval;
    f.eval = [ge](double t) { return ge(std::exp(t)); };
    // Re p in (s0, s1) for the Mellin integral means Re(-p) in (-s1, -s0) for f.
    f.s0 = -g.s1;
    f.s1 = -g.s0;
    f.label = g.label + " (t = ln tau)";
    return f;
}

QuadratureResult mellin_forward(const Original& g, const CDNumber& p, const CDNumber& zeta, double tol,
                                const KernelSpec& kernel, double rel_tol) {
    if (!(p[0] > g.s0 + kDomainMargin && p[0] < g.s1 - kDomainMargin))
        fail(ErrorKind::Domain, "Re p = " + std::to_string(p[0]) + " is outside the Mellin strip (" +
                                    std::to_string(g.s0) + ", " + std::to_string(g.s1) + ") of '" + g.label + "'");
    TransformRequest req;
    req.original = mellin_to_two_sided(g);
    req.kernel = kernel;
    req.p = -p;
    req.zeta = -zeta;
    req.tol = tol;
    req.rel_tol = rel_tol;
    return laplace_two_sided(req);
}

namespace {

// slope of the least squares line through (x, y)
double ls_slope(const std::vector<double>& x, const std::vector<double>& y, double* icpt) {
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
    }
    const double den = n * sxx - sx * sx;
    const double b = (n * sxy - sx * sy) / den;
    if (icpt) *icpt = (sy - b * sx) / n;
    return b;
}

struct SideFit {
    bool vanishes = true;
    double slope = 0;
    double c = 1;
};

// Fits ln of the windowed maximum of |f(sign*t)| against t on [1, 30].
SideFit fit_side(const std::function<CDNumber(double)>& f, double sign) {
    std::vector<double> xs, ys, ts;
    std::vector<double> mags;
    const int windows = 30;
    for (int w = 0; w < windows; ++w) {
        const double a = 1.0 + w * (29.0 / windows), b = a + 29.0 / windows;
        double m = 0;
        double at = a;
        for (int j = 0; j <= 16; ++j) {
            const double t = a + (b - a) * j / 16.0;
            const CDNumber v = f(sign * t);
            if (!v.all_finite()) fail(ErrorKind::Input, "non-finite sample while estimating growth");
            const double nv = cd_norm(v);
            if (nv > m) {
                m = nv;
                at = t;
            }
        }
        ts.push_back(at);
        mags.push_back(m);
    }
    SideFit sf;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (mags[k] > 0) {
            xs.push_back(ts[k]);
            ys.push_back(std::log(mags[k]));
        }
    }
    if (xs.size() < 3) return sf;
    sf.vanishes = false;
    double icpt = 0;
    sf.slope = ls_slope(xs, ys, &icpt);
    // constant covering every probe against the fitted rate
    double c = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) c = std::max(c, std::exp(ys[k] - sf.slope * xs[k]));
    sf.c = c;
    return sf;
}

}  // namespace

GrowthEstimate estimate_growth(const std::function<CDNumber(double)>& f, Support support) {
    const double margin = 0.5;
    GrowthEstimate g;
    SideFit right = fit_side(f, 1.0);
    g.s0 = right.vanishes ? -std::numeric_limits<double>::infinity() : right.slope + margin;
    double c = right.c;
    if (support == Support::TwoSided) {
        // |f(-t)| ~ e^{-s1 t}: the fitted slope is -s1
        SideFit left = fit_side(f, -1.0);
        g.s1 = left.vanishes ? std::numeric_limits<double>::infinity() : -left.slope - margin;
        c = std::max(c, left.c);
    } else {
        g.s1 = std::numeric_limits<double>::infinity();
    }
    g.bound_const = 2.0 * std::max(c, 1e-300);
    g.heuristic = true;
    return g;
}

}  // namespace hct
