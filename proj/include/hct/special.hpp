#pragma once

#include <complex>
#include <functional>

#include "hct/cdnumber.hpp"

namespace hct {

using cplx = std::complex<double>;

// Extends a complex function holomorphic on the upper half of its domain to A_r through the
// slice of p: z = p0 + i|p'|, phi(z) = X + iY maps to X + Y p'/|p'| (axis i1 when p' = 0).
CDNumber slice_extend(const std::function<cplx(cplx)>& phi, const CDNumber& p);

cplx complex_gamma(cplx z);
double sine_integral(double x);
// Gamma(a, x) for a >= 0, x > 0 (a = 0 gives E1(x)).
double upper_incomplete_gamma(double a, double x);
// gamma(a, x) for a > 0, x >= 0
double lower_incomplete_gamma(double a, double x);
double expint_e1(double x);

}  // namespace hct
