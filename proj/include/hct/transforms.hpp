#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hct/cdnumber.hpp"
#include "hct/kernel.hpp"
#include "hct/quadrature.hpp"

namespace hct {

enum class Support { RightAxis, TwoSided, PositiveAxisMultiplicative };

const char* support_name(Support s);

// Returns a point beyond which |f(t)| e^{rate t} is below tol (superexponential decay).
using HorizonFn = std::function<double(double rate, double tol)>;

// A time function with growth data.
// RightAxis / TwoSided: |f(t)| <= C (1+|t|)^k e^{s0 t} for t >= 0 and
// |f(t)| <= C (1+|t|)^k e^{s1 t} for t < 0, so the two-sided strip is s0 < Re p < s1.
// PositiveAxisMultiplicative: s0 < Re p < s1 is the strip of the Mellin integral and the
// horizons / breakpoints refer to t = ln(tau).
struct Original {
    std::function<CDNumber(double)> eval;
    Support support = Support::RightAxis;
    double s0 = 0.0;
    double s1 = std::numeric_limits<double>::infinity();
    double bound_const = 1.0;
    int poly_degree = 0;
    double osc = 0.0;  // own angular frequency, added to the kernel's
    std::string label;
    HorizonFn horizon_right;
    HorizonFn horizon_left;
    bool singular_at_zero = false;
    std::vector<double> breakpoints;
    bool heuristic_growth = false;

    CDNumber operator()(double t) const;
};

struct TransformRequest {
    Original original;
    KernelSpec kernel{KernelVariant::Linear, 2};
    CDNumber p;
    CDNumber zeta;
    double tol = 1e-10;
    double rel_tol = 0.0;
};

constexpr double kDomainMargin = 1e-6;

QuadratureResult laplace_one_sided(const TransformRequest& req);
QuadratureResult laplace_two_sided(const TransformRequest& req);

// Mellin transform of g (support PositiveAxisMultiplicative); reduces to the two-sided
// transform of f(t) = g(e^t) at -p, -zeta.
QuadratureResult mellin_forward(const Original& g, const CDNumber& p, const CDNumber& zeta, double tol,
                                const KernelSpec& kernel = {KernelVariant::Linear, 2}, double rel_tol = 0.0);

// The two-sided original f(t) = g(e^t) behind a Mellin original.
Original mellin_to_two_sided(const Original& g);

struct GrowthEstimate {
    double s0 = 0.0;
    double s1 = std::numeric_limits<double>::infinity();
    double bound_const = 1.0;
    bool heuristic = true;
};

GrowthEstimate estimate_growth(const std::function<CDNumber(double)>& f, Support support);

}  // namespace hct
