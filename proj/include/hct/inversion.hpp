#pragma once

#include <vector>

#include "hct/cdnumber.hpp"
#include "hct/kernel.hpp"
#include "hct/quadrature.hpp"

namespace hct {

// F(p) = sum_k n_k (p^k D(p)^{-1}), numerator coefficients on the left, real denominator.
struct RationalImage {
    std::vector<CDNumber> numerator;  // ascending powers
    std::vector<double> denominator;  // ascending powers
    KernelSpec kernel{KernelVariant::Linear, 2};

    int level() const;
    CDNumber operator()(const CDNumber& p) const;
};

// Checks the invariants (deg D >= 1, deg N < deg D, nonzero leading coefficient).
void validate(const RationalImage& R);

struct InversionResult {
    CDNumber value;
    double err_estimate = 0.0;
    bool jump_midpoint = false;  // t == 0: the line integral gives (f(0+) + f(0-))/2
    double theta_max = 0.0;
};

// f(t) = (2 pi)^{-1} (line integral of F e^{u} S dtheta) S~ along p = a + S theta.
InversionResult bromwich_invert(const ImageFn& F, double a, const CDNumber& S, double t, const KernelSpec& kernel,
                                double tol, double s0 = -std::numeric_limits<double>::infinity(),
                                double s1 = std::numeric_limits<double>::infinity());

// Real residue sums h_k(t) = sum over poles of Res p^k e^{pt} / D(p), k = 0..deg D - 1.
std::vector<double> residue_basis(const std::vector<double>& denominator, int max_power, double t);

InversionResult residue_invert_rational(const RationalImage& R, double t);

struct LaurentTail {
    std::vector<CDNumber> coeffs;  // c_1, c_2, ... of p^{-l}
    double radius = 1.0;           // |c_l| <= C radius^l
};

struct SeriesResult {
    CDNumber value;
    double remainder_bound = 0.0;
};

SeriesResult series_invert(const LaurentTail& tail, double t);

// g(tau) = (2 pi)^{-1} (line integral of G(p) exp(u(-p, ln tau; 0)) S dtheta) S~ along p = w + S theta.
InversionResult mellin_invert(const ImageFn& G, double w, const CDNumber& S, double tau, double tol,
                              double s0 = -std::numeric_limits<double>::infinity(),
                              double s1 = std::numeric_limits<double>::infinity(),
                              const KernelSpec& kernel = {KernelVariant::Linear, 2});

}  // namespace hct
