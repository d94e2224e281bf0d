#include "hct/kernel.hpp"

#include <cmath>
#include <numbers>

namespace hct {

KernelSpec make_kernel(KernelVariant v, int level) {
    if (v == KernelVariant::Spherical && level < 2)
        fail(ErrorKind::Contract, "spherical kernel needs level >= 2");
    if (level < 1 || level > kMaxLevel) fail(ErrorKind::Contract, "kernel level out of range");
    return {v, level};
}

const char* kernel_name(KernelVariant v) { return v == KernelVariant::Linear ? "linear" : "spherical"; }

KernelVariant parse_kernel_name(const std::string& s) {
    if (s == "linear") return KernelVariant::Linear;
    if (s == "spherical") return KernelVariant::Spherical;
    fail(ErrorKind::Input, "kernel must be linear or spherical, got '" + s + "'");
}

double reduce_angle(double x) {
    if (std::abs(x) <= std::numbers::pi) return x;
    return std::remainder(x, 2.0 * std::numbers::pi);
}

namespace {

void need_spherical_level(const CDNumber& p, const CDNumber& zeta) {
    if (common_level(p, zeta) < 2) fail(ErrorKind::Contract, "spherical phase needs level >= 2");
}

double phase(const CDNumber& p, double t, const CDNumber& zeta, std::size_t k) {
    const double pk = k < p.dim() ? p[k] : 0.0;
    const double zk = k < zeta.dim() ? zeta[k] : 0.0;
    return pk * t + zk;
}

}  // namespace

CDNumber spherical_axis(const CDNumber& p, double t, const CDNumber& zeta) {
    need_spherical_level(p, zeta);
    const int r = common_level(p, zeta);
    const std::size_t n = std::size_t(1) << r;
    CDNumber axis(r);
    double sprod = 1.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double f = reduce_angle(phase(p, t, zeta, k + 1));
        axis[k] = sprod * std::cos(f);
        sprod *= std::sin(f);
    }
    axis[n - 1] = sprod;
    return axis;
}

CDNumber eval_M(const CDNumber& p, double t, const CDNumber& zeta) {
    CDNumber m = spherical_axis(p, t, zeta);
    m *= phase(p, t, zeta, 1);
    m[0] = 0.0;
    return m;
}

CDNumber eval_u(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta) {
    if (spec.variant == KernelVariant::Linear) {
        CDNumber u = p * t;
        u += zeta;
        return u;
    }
    CDNumber u = eval_M(p, t, zeta);
    u[0] = p[0] * t + zeta[0];
    return u;
}

CDNumber expand_exp_M(const CDNumber& p, double t, const CDNumber& zeta) {
    const double f1 = reduce_angle(phase(p, t, zeta, 1));
    CDNumber e = spherical_axis(p, t, zeta);
    e *= std::sin(f1);
    e[0] = std::cos(f1);
    return e;
}

namespace {

CDNumber weight(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta, double sgn) {
    const double re = p[0] * t + zeta[0];
    if (spec.variant == KernelVariant::Spherical) {
        // exp(sgn*u) = e^{sgn re} (cos f1 + sgn sin f1 K)
        const double f1 = reduce_angle(phase(p, t, zeta, 1));
        CDNumber e = spherical_axis(p, t, zeta);
        const double s = std::exp(sgn * re);
        e *= sgn * std::sin(f1) * s;
        e[0] = std::cos(f1) * s;
        return e;
    }
    CDNumber v = p.imag() * t;
    v += zeta.imag();
    v[0] = 0.0;
    const double n = cd_norm(v);
    const double s = std::exp(sgn * re);
    if (n == 0.0) return CDNumber::real(s, common_level(p, zeta));
    const double a = reduce_angle(n);
    CDNumber e = v * (sgn * std::sin(a) * s / n);
    e[0] = std::cos(a) * s;
    return e;
}

}  // namespace

CDNumber kernel_weight(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta) {
    return weight(spec, p, t, zeta, -1.0);
}

CDNumber kernel_weight_inverse(const KernelSpec& spec, const CDNumber& p, double t, const CDNumber& zeta) {
    return weight(spec, p, t, zeta, 1.0);
}

}  // namespace hct
