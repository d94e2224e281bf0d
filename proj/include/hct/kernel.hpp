#pragma once

#include <string>

#include "hct/cdnumber.hpp"

namespace hct {

enum class KernelVariant { Linear, Spherical };

struct KernelSpec {
    KernelVariant variant = KernelVariant::Linear;
    int level = 2;
};

KernelSpec make_kernel(KernelVariant v, int level);
const char* kernel_name(KernelVariant v);
KernelVariant parse_kernel_name(const std::string& s);

// Angle reduced into [-pi, pi].
double reduce_angle(double x);

// Unit axis of the spherical phase:
// i1 cos f2 + i2 sin f2 cos f3 + ... + i_{N-1} sin f2 ... sin f_{N-1},  f_k = p_k t + zeta_k.
CDNumber spherical_axis(const CDNumber& p, double t, const CDNumber& zeta);

CDNumber eval_M(const CDNumber& p, double t, const CDNumber& zeta);
CDNumber eval_u(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta);
// exp(-u)
CDNumber kernel_weight(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta);
// exp(+u), used on inversion lines
CDNumber kernel_weight_inverse(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta);
// Trigonometric expansion of exp(M(p,t;zeta)).
CDNumber expand_exp_M(const CDNumber& p, double t, const CDNumber& zeta);

}  // namespace hct
