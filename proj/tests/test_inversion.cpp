#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hct/inversion.hpp"
#include "hct/literal.hpp"
#include "hct/polyroots.hpp"
#include "hct/special.hpp"
#include "hct/transforms.hpp"

using namespace hct;

namespace {

const double pi = std::numbers::pi;

RationalImage rational(std::vector<CDNumber> num, std::vector<double> den) {
    RationalImage R;
    R.numerator = std::move(num);
    R.denominator = std::move(den);
    return R;
}

CDNumber re(double x) { return CDNumber::real(x, 2); }

const CDNumber I1 = CDNumber::unit(1, 2);

ImageFn inv_poly(std::vector<double> den) {
    return [den](const CDNumber& p) {
        CDNumber D(p.level());
        for (std::size_t k = den.size(); k-- > 0;) {
            D = D * p;
            D[0] += den[k];
        }
        return cd_inverse(D);
    };
}

}  // namespace

TEST_CASE("root clusters") {
    auto c = find_root_clusters({-6, 11, -6, 1});
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c[0].z - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(c[2].z - cplx(3, 0)) < 1e-12);

    auto d = find_root_clusters({1, 3, 3, 1});  // (p+1)^3
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 3);
    CHECK(std::abs(d[0].z + 1.0) < 1e-5);

    auto z = find_root_clusters({0, 0, 1, 1});
    REQUIRE(z.size() == 2);
    CHECK(z[1].z == cplx(0, 0));
    CHECK(z[1].multiplicity == 2);

    // (p-1)(p-1-1e-5): closer than the merge radius but not a rounding-level cluster
    CHECK_THROWS_AS(find_root_clusters({1 + 1e-5, -2 - 1e-5, 1}), Error);
    try {
        find_root_clusters({1 + 1e-5, -2 - 1e-5, 1});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Conditioning);
    }
    try {
        find_root_clusters({1, 7, 21, 35, 35, 21, 7, 1});  // (p+1)^7
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
    }
}

TEST_CASE("residue inversion of rational images") {
    // 1/(p(p^3+1)) at t = 1
    auto R = rational({re(1)}, {0, 1, 0, 0, 1});
    const double t = 1;
    const double closed = 1 - std::exp(-t) / 3 - (2.0 / 3) * std::exp(t / 2) * std::cos(t * std::sqrt(3.0) / 2);
    CHECK(std::abs(closed - 0.165280531) < 1e-9);
    CHECK(std::abs(residue_invert_rational(R, t).value[0] - closed) < 1e-12);
    // x(0) = 0 exactly for this image
    CHECK(std::abs(residue_invert_rational(R, 0).value[0]) < 1e-12);

    auto S = rational({re(2)}, {4, 0, 1});
    CHECK(std::abs(residue_invert_rational(S, pi / 4).value[0] - 1.0) < 1e-12);

    auto E = rational({re(1)}, {-3, 1});
    CHECK(std::abs(residue_invert_rational(E, 0.5).value[0] - std::exp(1.5)) < 1e-12);

    CHECK(residue_invert_rational(E, -1).value[0] == 0.0);
}

TEST_CASE("residue inversion with repeated poles and quaternion numerators") {
    // 1/(p+1)^3 -> t^2 e^{-t}/2
    auto R = rational({re(1)}, {1, 3, 3, 1});
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0})
        CHECK(std::abs(residue_invert_rational(R, t).value[0] - t * t * std::exp(-t) / 2) < 1e-9);
    // 1/p^2 -> t
    auto T = rational({re(1)}, {0, 0, 1});
    CHECK(std::abs(residue_invert_rational(T, 2).value[0] - 2) < 1e-12);
    // (i2 + i3 p)/(p^2+1) -> i2 sin t + i3 cos t
    auto Q = rational({CDNumber::unit(2, 2), CDNumber::unit(3, 2)}, {1, 0, 1});
    auto v = residue_invert_rational(Q, 0.8).value;
    CHECK(std::abs(v[2] - std::sin(0.8)) < 1e-12);
    CHECK(std::abs(v[3] - std::cos(0.8)) < 1e-12);
    CHECK(std::abs(v[0]) < 1e-14);
    // 1/(p^2+1)^2 -> (sin t - t cos t)/2
    auto D = rational({re(1)}, {1, 0, 2, 0, 1});
    for (double t : {0.5, 1.0, 2.0, 5.0})
        CHECK(std::abs(residue_invert_rational(D, t).value[0] - (std::sin(t) - t * std::cos(t)) / 2) < 1e-9);
}

TEST_CASE("rational image evaluation and invariants") {
    auto R = rational({re(2)}, {4, 0, 1});
    auto p = parse_cd_literal("1+1i1");
    auto v = R(p);
    // 2/(p^2+4) with p^2 = 2i1: 2/(4+2i1) = (4-2i1)/10
    CHECK(std::abs(v[0] - 0.4) < 1e-14);
    CHECK(std::abs(v[1] + 0.2) < 1e-14);
    CHECK_THROWS_AS(validate(rational({re(1), re(1)}, {1, 1})), Error);
    CHECK_THROWS_AS(validate(rational({re(1)}, {1})), Error);
    CHECK_THROWS_AS(R(parse_cd_literal("2i1")), Error);
}

TEST_CASE("Bromwich inversion") {
    const KernelSpec lin{KernelVariant::Linear, 2};
    auto F = inv_poly({1, 1});
    CHECK(std::abs(bromwich_invert(F, 0.5, I1, 0.7, lin, 1e-4).value[0] - std::exp(-0.7)) < 1e-3);

    auto G = inv_poly({0, 0, 1});
    CHECK(std::abs(bromwich_invert(G, 1, I1, 2, lin, 1e-4).value[0] - 2) < 1e-3);

    auto neg = bromwich_invert(F, 0.5, I1, -0.5, lin, 1e-4);
    CHECK(cd_norm(neg.value) < 1e-3);

    auto step = inv_poly({0, 1});
    auto mid = bromwich_invert(step, 1, I1, 0, lin, 1e-3);
    CHECK(mid.jump_midpoint);
    CHECK(std::abs(mid.value[0] - 0.5) < 5e-2);

    CHECK_THROWS_AS(bromwich_invert(F, 0.5, I1, 1, lin, 1e-4, 1.0), Error);
    CHECK_THROWS_AS(bromwich_invert(F, 0.5, re(1), 1, lin, 1e-4), Error);
}

TEST_CASE("Bromwich inversion along other axes and with quaternion amplitudes") {
    const KernelSpec lin{KernelVariant::Linear, 2};
    // slice images: the result does not depend on the unit axis
    CDNumber S = parse_cd_literal("0.6i2+0.8i3");
    auto F = inv_poly({1, 0, 1});
    auto v = bromwich_invert(F, 0.5, S, 1.2, lin, 1e-5).value;
    CHECK(std::abs(v[0] - std::sin(1.2)) < 1e-3);
    CHECK(cd_norm(v - CDNumber::real(v[0], 2)) < 1e-3);
    // F = b (p^2+1)^{-1} for quaternion b, original b sin(t)
    CDNumber b = CDNumber::unit(2, 2);
    ImageFn Fb = [&](const CDNumber& p) { return b * F(p); };
    auto w = bromwich_invert(Fb, 0.5, I1, 1.2, lin, 1e-5).value;
    CHECK(std::abs(w[2] - std::sin(1.2)) < 1e-3);
    CHECK(std::abs(w[0]) < 1e-3);
    CHECK(std::abs(w[1]) < 1e-3);
    CHECK(std::abs(w[3]) < 1e-3);
}

TEST_CASE("Bromwich and residue inversion agree") {
    const KernelSpec lin{KernelVariant::Linear, 2};
    std::vector<std::vector<double>> dens = {{0, 1}, {1, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 0, 1}, {0, 1, 0, 0, 1}};
    for (const auto& d : dens) {
        auto R = rational({re(1)}, d);
        for (double t : {0.5, 1.0, 2.0}) {
            const double a = 1.5;
            auto b = bromwich_invert(R, a, I1, t, lin, 1e-5).value;
            auto r = residue_invert_rational(R, t).value;
            CHECK(cd_dist(b, r) < 1e-3);
        }
    }
}

TEST_CASE("spherical-kernel inversion on the slice") {
    const KernelSpec sph{KernelVariant::Spherical, 2};
    auto F = inv_poly({1, 1});
    CHECK(std::abs(bromwich_invert(F, 0.5, I1, 1.0, sph, 1e-4).value[0] - std::exp(-1.0)) < 1e-3);
    try {
        bromwich_invert(F, 0.5, CDNumber::unit(2, 2), 1.0, sph, 1e-5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
    }
}

TEST_CASE("series inversion") {
    LaurentTail g;
    for (int l = 0; l < 25; ++l) g.coeffs.push_back(re(1));
    g.radius = 1;
    auto s = series_invert(g, 1);
    CHECK(std::abs(s.value[0] - std::exp(1.0)) <= s.remainder_bound + 1e-14);
    CHECK(s.remainder_bound < 1e-20);

    LaurentTail step{{re(1)}, 1};
    CHECK(series_invert(step, 3.7).value[0] == 1.0);

    LaurentTail q{{CDNumber(2), CDNumber::unit(3, 2)}, 1};
    auto v = series_invert(q, 2).value;
    CHECK(v[3] == 2.0);
    CHECK(v[0] == 0.0);

    // 1/(p+1): c_l = (-1)^{l-1}
    for (int L : {5, 10, 20}) {
        LaurentTail e;
        for (int l = 0; l < L; ++l) e.coeffs.push_back(re(l % 2 ? -1 : 1));
        for (double t : {0.25, 0.5, 1.0}) {
            auto r = series_invert(e, t);
            CHECK(std::abs(r.value[0] - std::exp(-t)) <= r.remainder_bound + 1e-15);
        }
    }
}

TEST_CASE("Mellin inversion") {
    ImageFn beta = [](const CDNumber& p) {
        return slice_extend([](cplx z) { return pi / std::sin(pi * z); }, p);
    };
    auto r = mellin_invert(beta, 0.5, I1, 1.0, 1e-5, 0, 1);
    CHECK(std::abs(r.value[0] - 0.5) < 1e-3);
    CHECK(std::abs(r.value[1]) < 1e-12);
    auto r3 = mellin_invert(beta, 0.5, I1, 3.0, 1e-5, 0, 1);
    CHECK(std::abs(r3.value[0] - 0.25) < 1e-3);

    ImageFn gam = [](const CDNumber& p) { return slice_extend([](cplx z) { return complex_gamma(z); }, p); };
    auto g = mellin_invert(gam, 0.5, I1, 2.0, 1e-5, 0);
    CHECK(std::abs(g.value[0] - std::exp(-2.0)) < 1e-3);

    // the oracle: direct forward quadrature of e^{-tau} at the line's base point
    Original e;
    e.eval = [](double tau) { return CDNumber::real(std::exp(-tau), 1); };
    e.support = Support::PositiveAxisMultiplicative;
    e.s0 = 0;
    e.horizon_right = [](double rate, double tol) {
        double t = 1;
        while (std::exp(t) - rate * t < -std::log(tol) + 5) t += 0.25;
        return t;
    };
    auto fw = mellin_forward(e, CDNumber::real(0.5, 2), CDNumber(2), 1e-10);
    CHECK(std::abs(fw.value[0] - gam(CDNumber::real(0.5, 2))[0]) < 1e-8);

    CHECK_THROWS_AS(mellin_invert(beta, 1.5, I1, 1.0, 1e-5, 0, 1), Error);
    CHECK_THROWS_AS(mellin_invert(beta, 0.5, I1, -1.0, 1e-5, 0, 1), Error);
}
