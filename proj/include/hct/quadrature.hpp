#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "hct/cdnumber.hpp"
#include "hct/kernel.hpp"

namespace hct {

struct QuadratureResult {
    CDNumber value;
    double err_estimate = 0.0;
    int panels_used = 0;
    double truncation_point = 0.0;
};

struct IntegrandProfile {
    double decay_rate = 1.0;  // lower bound on exponential decay of |f|
    double osc_rate = 0.0;    // dominant angular frequency
    double bound_const = 1.0; // |f(t)| <= bound_const * (1+t)^poly_degree * exp(-decay_rate t)
    int poly_degree = 0;
    // Beyond this point the integrand is treated as zero (superexponential decay).
    double horizon = std::numeric_limits<double>::infinity();
};

struct IntervalOptions {
    int max_panels = 40000;
    double rel_tol = 0.0;  // accept err <= max(tol, rel_tol*|I|)
    bool singular_left = false;
    bool singular_right = false;
    std::vector<double> breakpoints;
    double max_panel_width = std::numeric_limits<double>::infinity();
};

using Integrand = std::function<CDNumber(double)>;
using ImageFn = std::function<CDNumber(const CDNumber&)>;

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol,
                                    const IntervalOptions& opt = {});

struct SemiAxisOptions {
    bool singular_at_zero = false;
    double rel_tol = 0.0;
    int max_panels = 60000;
    std::vector<double> breakpoints;
};

// Integral over [0, inf) of f.
QuadratureResult integrate_semi_axis(const Integrand& f, const IntegrandProfile& profile, double tol,
                                     const SemiAxisOptions& opt = {});

// Symmetric integral over [-theta_max, theta_max] of F(a+S th) exp(u(a+S th, t; zeta)) S dth.
QuadratureResult integrate_bromwich_line(const ImageFn& F, double a, const CDNumber& S, double t,
                                         double theta_max, double tol,
                                         const KernelSpec& kernel = {KernelVariant::Linear, 2},
                                         const CDNumber* zeta = nullptr);

struct LadderResult {
    QuadratureResult line;  // integral at the accepted theta_max
    double theta_max = 0.0;
    double last_change = 0.0;
    std::vector<double> history;  // norm of each successive change
};

// Doubles theta_max from theta0 up to theta_cap, reusing the inner part, until two
// successive changes are below tol. Throws AccuracyError past the cap.
LadderResult bromwich_ladder(const ImageFn& F, double a, const CDNumber& S, double t, double tol,
                             const KernelSpec& kernel = {KernelVariant::Linear, 2},
                             const CDNumber* zeta = nullptr, double theta0 = 64.0,
                             double theta_cap = 16384.0);

// General line integrand g(theta) over the same ladder (used by the Mellin inversion).
LadderResult line_ladder(const Integrand& g, double osc, double tol, double theta0 = 64.0,
                         double theta_cap = 16384.0);

}  // namespace hct
