#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hct/kernel.hpp"
#include "hct/literal.hpp"

using namespace hct;

namespace {

const double pi = std::numbers::pi;

double maxdiff(const CDNumber& a, const CDNumber& b) {
    double m = 0;
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

CDNumber rnd(std::mt19937_64& g, int level, double lo = -1, double hi = 1) {
    std::uniform_real_distribution<double> u(lo, hi);
    CDNumber x(level);
    for (std::size_t j = 0; j < x.dim(); ++j) x[j] = u(g);
    return x;
}

const KernelSpec lin2{KernelVariant::Linear, 2};
const KernelSpec sph2{KernelVariant::Spherical, 2};

}  // namespace

TEST_CASE("M on simple inputs") {
    CDNumber p(2, {0.3, 1.5, 0, 0});
    CDNumber m = eval_M(p, 2.0, CDNumber(2));
    CHECK(maxdiff(m, CDNumber::unit(1, 2) * 3.0) < 1e-15);

    CDNumber q(2, {0, 1, pi / 2, 0});
    CHECK(maxdiff(eval_M(q, 1.0, CDNumber(2)), CDNumber::unit(2, 2)) < 1e-15);

    std::mt19937_64 g(1);
    for (int r = 2; r <= 5; ++r)
        for (int it = 0; it < 20; ++it) {
            CDNumber p1 = rnd(g, r), z = rnd(g, r);
            const double t = 5 * (rnd(g, 1)[0] + 1);
            CDNumber mm = eval_M(p1, t, z);
            CHECK(mm[0] == 0.0);
            CHECK(std::abs(cd_norm(mm) - std::abs(p1[1] * t + z[1])) < 1e-12);
        }
    CHECK_THROWS_AS(eval_M(CDNumber(1), 1.0, CDNumber(1)), Error);
}

TEST_CASE("u for both kernels") {
    CDNumber u = eval_u(lin2, parse_cd_literal("1+i1"), 2.0, CDNumber(2));
    CHECK(maxdiff(u, parse_cd_literal("2+2i1")) == 0.0);
    std::mt19937_64 g(2);
    for (int it = 0; it < 20; ++it) {
        CDNumber p(3), z(3);
        p[0] = rnd(g, 1)[0];
        p[1] = rnd(g, 1)[0];
        z[0] = rnd(g, 1)[0];
        z[1] = rnd(g, 1)[0];
        const double t = 3 * rnd(g, 1)[0];
        CHECK(maxdiff(eval_u({KernelVariant::Spherical, 3}, p, t, z), eval_u({KernelVariant::Linear, 3}, p, t, z)) <
              1e-15);
    }
    for (int it = 0; it < 20; ++it) {
        CDNumber p = rnd(g, 3), z = rnd(g, 3);
        const double t = 4 * rnd(g, 1)[0];
        CHECK(eval_u({KernelVariant::Spherical, 3}, p, t, z)[0] == doctest::Approx(p[0] * t + z[0]));
    }
}

TEST_CASE("kernel weight") {
    CDNumber w = kernel_weight(sph2, CDNumber::real(1.5, 2), 2.0, CDNumber(2));
    CHECK(w.is_real());
    CHECK(w[0] == doctest::Approx(std::exp(-3.0)));
    std::mt19937_64 g(3);
    for (int it = 0; it < 50; ++it) {
        CDNumber p = rnd(g, 3), z = rnd(g, 3);
        const double t = 3 * rnd(g, 1)[0];
        for (KernelVariant v : {KernelVariant::Linear, KernelVariant::Spherical}) {
            CDNumber k = kernel_weight({v, 3}, p, t, z);
            CHECK(std::abs(cd_norm(k) - std::exp(-p[0] * t - z[0])) < 1e-12 * std::exp(-p[0] * t - z[0]));
        }
        CHECK(maxdiff(kernel_weight(sph2, rnd(g, 2), 0.0, CDNumber(2)), CDNumber::real(1, 2)) == 0.0);
        // linear weight agrees with exp of the phase
        CHECK(maxdiff(kernel_weight({KernelVariant::Linear, 3}, p, t, z), cd_exp(-(p * t + z))) < 1e-12);
        CHECK(maxdiff(kernel_weight_inverse({KernelVariant::Spherical, 3}, p, t, z),
                      cd_exp(eval_u({KernelVariant::Spherical, 3}, p, t, z))) < 1e-12);
    }
}

TEST_CASE("expansion of exp(M)") {
    CDNumber p(2, {0, pi, 0, 0});
    CHECK(maxdiff(expand_exp_M(p, 1.0, CDNumber(2)), CDNumber::real(-1, 2)) < 1e-15);
    CDNumber q(2, {0, 1, 0, 0});
    CHECK(maxdiff(expand_exp_M(q, pi / 2, CDNumber(2)), CDNumber::unit(1, 2)) < 1e-15);
    std::mt19937_64 g(4);
    for (int r = 2; r <= 8; ++r)
        for (int it = 0; it < 10; ++it) {
            CDNumber pp = rnd(g, r, -2, 2), z = rnd(g, r, -2, 2);
            const double t = 3 * rnd(g, 1)[0];
            CHECK(maxdiff(expand_exp_M(pp, t, z), cd_exp(eval_M(pp, t, z))) < 1e-12);
        }
}

TEST_CASE("iterated exponential identity for quaternions") {
    std::mt19937_64 g(5);
    const CDNumber i1 = CDNumber::unit(1, 2), i3 = CDNumber::unit(3, 2);
    for (int it = 0; it < 100; ++it) {
        CDNumber p = rnd(g, 2, -2, 2), z = rnd(g, 2, -2, 2);
        const double t = 3 * rnd(g, 1)[0];
        const double f1 = p[1] * t + z[1], f2 = p[2] * t + z[2], f3 = p[3] * t + z[3];
        CDNumber inner = cd_exp(-(i1 * f3));
        CDNumber mid = cd_exp(-(i3 * f2) * inner);
        CDNumber lhs = cd_exp((i1 * f1) * mid);
        CHECK(maxdiff(lhs, cd_exp(eval_M(p, t, z))) < 1e-12);
    }
}

TEST_CASE("phase shift of the spherical kernel") {
    std::mt19937_64 g(6);
    for (int it = 0; it < 50; ++it) {
        CDNumber p = rnd(g, 3), z = rnd(g, 3);
        const double t = 2 * rnd(g, 1)[0], tau = rnd(g, 1)[0];
        CDNumber lhs = eval_u({KernelVariant::Spherical, 3}, p, t, z + p * tau);
        CDNumber rhs = eval_u({KernelVariant::Spherical, 3}, p, t + tau, z);
        CHECK(maxdiff(lhs, rhs) < 1e-12);
    }
}

namespace {

// Right side of the printed derivative formula.
CDNumber shifted_sum(const CDNumber& p, double t, const CDNumber& z, int r) {
    const KernelSpec k{KernelVariant::Spherical, r};
    CDNumber s = kernel_weight(k, p, t, z) * (-p[0]);
    for (std::size_t j = 1; j < p.dim(); ++j) {
        CDNumber zj = z - CDNumber::unit(int(j), r) * (pi / 2);
        s -= kernel_weight(k, p, t, zj) * p[j];
    }
    return s;
}

CDNumber fd_derivative(const CDNumber& p, double t, const CDNumber& z, int r) {
    const KernelSpec k{KernelVariant::Spherical, r};
    const double h = 1e-4;
    return (kernel_weight(k, p, t - 2 * h, z) - 8.0 * kernel_weight(k, p, t - h, z) +
            8.0 * kernel_weight(k, p, t + h, z) - kernel_weight(k, p, t + 2 * h, z)) /
           (12 * h);
}

}  // namespace

TEST_CASE("kernel derivative formula holds on the slice") {
    std::mt19937_64 g(7);
    for (int it = 0; it < 100; ++it) {
        CDNumber p(2), z(2);
        p[0] = rnd(g, 1)[0];
        p[1] = rnd(g, 1)[0];
        z[0] = rnd(g, 1)[0];
        z[1] = rnd(g, 1)[0];
        // angles 2.. are constant zero phases, so their shifts do not enter
        const double t = 2 * rnd(g, 1)[0];
        CHECK(maxdiff(shifted_sum(p, t, z, 2), fd_derivative(p, t, z, 2)) < 1e-6);
    }
}

TEST_CASE("kernel derivative: shifted-phase terms for j >= 2 do not give the derivative off the slice") {
    // With K the spherical axis, d/dt exp(-M) = -p1 (sin f1 + cos f1 K) - sin f1 sum_j p_j dK/df_j.
    // The j = 1 shift reproduces the first bracket, but a shift of f_j (j >= 2) leaves the cos f1
    // term in place instead of producing sin f1 dK/df_j.
    CDNumber p(2, {0.4, 0.7, 0.9, -0.6});
    CDNumber z(2, {0.1, 0.3, -0.2, 0.5});
    const double t = 0.8;
    const double dev = maxdiff(shifted_sum(p, t, z, 2), fd_derivative(p, t, z, 2));
    CHECK(dev > 1e-2);

    // The componentwise derivative does match.
    const double f1 = p[1] * t + z[1], f2 = p[2] * t + z[2], f3 = p[3] * t + z[3];
    const double e = std::exp(-p[0] * t - z[0]);
    CDNumber K = spherical_axis(p, t, z);
    CDNumber dK2(2, {0, -std::sin(f2), std::cos(f2) * std::cos(f3), std::cos(f2) * std::sin(f3)});
    CDNumber dK3(2, {0, 0, -std::sin(f2) * std::sin(f3), std::sin(f2) * std::cos(f3)});
    CDNumber w = kernel_weight(sph2, p, t, z);
    CDNumber d = w * (-p[0]);
    CDNumber first = K * std::cos(f1);
    first[0] = std::sin(f1);
    d -= first * (e * p[1]);
    d -= (dK2 * p[2] + dK3 * p[3]) * (e * std::sin(f1));
    CHECK(maxdiff(d, fd_derivative(p, t, z, 2)) < 1e-9);
}
