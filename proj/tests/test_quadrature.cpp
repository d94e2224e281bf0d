#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hct/quadrature.hpp"

using namespace hct;

namespace {
CDNumber re(double x) { return CDNumber::real(x, 1); }
}  // namespace

TEST_CASE("finite interval") {
    auto r = integrate_interval([](double t) { return re(std::sin(t)); }, 0, std::numbers::pi, 1e-12);
    CHECK(std::abs(r.value[0] - 2.0) < 1e-10);
    CHECK(r.err_estimate >= 0);
    CHECK(r.panels_used >= 1);

    auto s = integrate_interval([](double t) { return CDNumber::unit(1, 2) * t; }, 0, 1, 1e-12);
    CHECK(std::abs(s.value[1] - 0.5) < 1e-14);
    CHECK(std::abs(s.value[0]) < 1e-15);
}

TEST_CASE("endpoint singularity with graded mesh") {
    IntervalOptions o;
    o.singular_left = true;
    auto r = integrate_interval([](double t) { return re(1.0 / std::sqrt(t)); }, 0, 1, 1e-8, o);
    CHECK(std::abs(r.value[0] - 2.0) < 1e-6);
    o.singular_left = false;
    o.singular_right = true;
    auto q = integrate_interval([](double t) { return re(std::pow(-t, -0.75)); }, -1, 0, 1e-8, o);
    CHECK(std::abs(q.value[0] - 4.0) < 1e-5);
}

TEST_CASE("polynomial exactness of a single panel") {
    // degree 13 is exact for both embedded rules, so one panel suffices
    auto r = integrate_interval([](double t) { return re(14.0 * std::pow(t, 13)); }, 0, 1, 1e-13);
    CHECK(r.panels_used == 1);
    CHECK(std::abs(r.value[0] - 1.0) < 1e-13);
}

TEST_CASE("semi axis") {
    auto r = integrate_semi_axis([](double t) { return re(std::exp(-2 * t)); }, {2, 0, 1}, 1e-10);
    CHECK(std::abs(r.value[0] - 0.5) < 1e-9);

    auto c = integrate_semi_axis([](double t) { return re(std::exp(-t) * std::cos(50 * t)); }, {1, 50, 1}, 1e-10);
    CHECK(std::abs(c.value[0] - 1.0 / 2501) < 1e-8);

    // truncation point satisfies the analytic tail bound
    auto e = integrate_semi_axis([](double t) { return re(std::exp(-t)); }, {1, 0, 1}, 1e-10);
    CHECK(std::exp(-e.truncation_point) <= 0.5e-10 * 1.0001);
    CHECK(std::exp(-25.0) < 1.4e-11);

    CHECK_THROWS_AS(integrate_semi_axis([](double) { return re(1); }, {0, 0, 1}, 1e-8), Error);
}

TEST_CASE("tail bound is sound on decaying closed forms") {
    for (double d : {0.5, 1.0, 3.0}) {
        for (double w : {0.0, 2.0, 7.0}) {
            auto r = integrate_semi_axis([&](double t) { return re(std::exp(-d * t) * std::cos(w * t)); }, {d, w, 1},
                                         1e-6);
            const double exact = d / (d * d + w * w);
            CHECK(std::abs(r.value[0] - exact) <= r.err_estimate + 1e-15);
        }
    }
}

TEST_CASE("bromwich line") {
    const CDNumber S = CDNumber::unit(1, 2);
    ImageFn inv = [](const CDNumber& p) { return cd_inverse(p); };
    CHECK_THROWS_AS(integrate_bromwich_line(inv, 1, S, 1, 0, 1e-6), Error);
    CHECK_THROWS_AS(integrate_bromwich_line(inv, 1, S * 2.0, 1, 10, 1e-6), Error);
    CHECK_THROWS_AS(integrate_bromwich_line(inv, 1, S + 1.0, 1, 10, 1e-6), Error);

    LadderResult lr = bromwich_ladder(inv, 1, S, 1, 1e-3);
    // line integral -> 2 pi S * f(1) = 2 pi i1
    CHECK(std::abs(lr.line.value[1] - 2 * std::numbers::pi) < 2e-2);
    CHECK(std::abs(lr.line.value[0]) < 2e-2);

    // real-coefficient image: samples at +th and -th are conjugate after removing S
    for (double th : {0.3, 1.7, 5.0}) {
        CDNumber p1 = S * th + 1.0, p2 = S * (-th) + 1.0;
        CDNumber g1 = cd_inverse(p1) * cd_exp(p1), g2 = cd_inverse(p2) * cd_exp(p2);
        CHECK(std::abs(g1[0] - g2[0]) < 1e-14);
        CHECK(std::abs(g1[1] + g2[1]) < 1e-14);
    }
}

TEST_CASE("principal value converges like 1/theta for 1/p at t=0") {
    const CDNumber S = CDNumber::unit(1, 1);
    ImageFn inv = [](const CDNumber& p) { return cd_inverse(p); };
    double prev = 0;
    for (double th : {256.0, 512.0, 1024.0, 2048.0}) {
        auto r = integrate_bromwich_line(inv, 1, S, 0, th, 1e-10);
        const double err = std::abs(r.value[1] - std::numbers::pi);
        if (prev > 0) CHECK(prev / err == doctest::Approx(2.0).epsilon(0.05));
        prev = err;
    }
}
