#include "doctest.h"

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>

#include "hct/catalog.hpp"
#include "hct/literal.hpp"
#include "hct/quadrature.hpp"

using namespace hct;

namespace {

const double pi = std::numbers::pi;

double maxdiff(const CDNumber& a, const CDNumber& b) {
    const int lev = common_level(a, b);
    CDNumber x = a.embed(lev), y = b.embed(lev);
    double m = 0;
    for (std::size_t j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x[j] - y[j]));
    return m;
}

// direct quadrature of t^n e^{-a0 t} cos|sin(a1 t + beta)
std::pair<double, double> tn_sn_quad(int n, double a0, double a1, double beta) {
    IntegrandProfile prof;
    prof.decay_rate = a0;
    prof.osc_rate = std::abs(a1);
    prof.poly_degree = n;
    prof.bound_const = std::max(1.0, std::pow(double(n), n));
    auto f = [&](double t) {
        const double w = std::pow(t, n) * std::exp(-a0 * t);
        return CDNumber(1, {w * std::cos(a1 * t + beta), w * std::sin(a1 * t + beta)});
    };
    SemiAxisOptions opt;
    opt.rel_tol = 1e-11;
    const double mag = std::tgamma(n + 1.0) / std::pow(a0, n + 1);
    auto r = integrate_semi_axis(f, prof, 1e-11 * mag, opt);
    return {r.value[0], r.value[1]};
}

}  // namespace

TEST_CASE("catalog lookup") {
    const auto names = catalog_names();
    CHECK(names.size() >= 18);
    const TransformPair step = catalog_lookup("step");
    CHECK(step.s0() == 0.0);
    CHECK(std::isinf(step.s1()));
    const TransformPair g = catalog_lookup("gauss_twosided");
    CHECK(std::isinf(g.s0()));
    CHECK(g.s0() < 0);
    CHECK(std::isinf(g.s1()));
    CHECK_THROWS_AS(catalog_lookup("no_such_pair"), Error);
    try {
        catalog_lookup("no_such_pair");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFound);
    }
    CHECK_THROWS_AS(catalog_lookup("sin", {{"bogus", 1.0}}), Error);
    CHECK(catalog_lookup("sin", {{"omega", 3.0}}).params.at("omega") == 3.0);
}

TEST_CASE("T_n and S_n closed forms") {
    auto t0 = eval_Tn_Sn(0, 1, 0, 0);
    CHECK(std::abs(t0.first - 1.0) < 1e-15);
    CHECK(std::abs(eval_Tn_Sn(0, 1, 1, 0).first - 0.5) < 1e-15);
    CHECK(std::abs(eval_Tn_Sn(0, 1, 1, 0).second - 0.5) < 1e-15);
    CHECK_THROWS_AS(eval_Tn_Sn(1, 0.0, 1, 0), Error);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> a0d(0.3, 3.0), a1d(-4.0, 4.0), bd(-3.0, 3.0);
    double worst = 0;
    for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k < 50; ++k) {
            const double a0 = a0d(rng), a1 = a1d(rng), b = bd(rng);
            const auto cf = eval_Tn_Sn(n, a0, a1, b);
            const auto q = tn_sn_quad(n, a0, a1, b);
            const double scale = std::hypot(q.first, q.second);
            worst = std::max(worst, std::abs(cf.first - q.first) / scale);
            worst = std::max(worst, std::abs(cf.second - q.second) / scale);
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("spherical power image against quadrature") {
    const CDNumber p(2, {2, 1, 0.5, 0.3});
    const TransformPair sp = catalog_lookup("sph_tpow", {{"n", 1}});
    const QuadratureResult q = pair_forward(sp, p, CDNumber(2), 1e-12);
    CHECK(maxdiff(q.value, spherical_tpow_image(1, p, CDNumber(2))) < 1e-9);
    // octonion and sedenion levels with a phase
    for (int r = 3; r <= 4; ++r) {
        CDNumber po(r), z(r);
        for (std::size_t j = 0; j < po.dim(); ++j) {
            po[j] = j == 0 ? 1.5 : 0.3 * std::cos(double(j));
            z[j] = 0.1 * std::sin(double(j));
        }
        const TransformPair so = catalog_lookup("sph_tpow", {{"n", 2}, {"r", double(r)}});
        const QuadratureResult qo = pair_forward(so, po, z, 1e-12);
        CHECK(maxdiff(qo.value, spherical_tpow_image(2, po, z)) < 1e-9);
    }
    // the printed quaternion formula agrees except for the sign of the i2 component
    const CDNumber z(2, {0.1, 0.2, -0.3, 0.4});
    const CDNumber eng = spherical_tpow_image(2, p, z);
    const CDNumber prt = spherical_tpow_printed(2, p, z);
    CHECK(std::abs(eng[0] - prt[0]) < 1e-14);
    CHECK(std::abs(eng[1] - prt[1]) < 1e-14);
    CHECK(std::abs(eng[2] + prt[2]) < 1e-14);
    CHECK(std::abs(eng[3] - prt[3]) < 1e-14);
}

TEST_CASE("quaternion exponential image") {
    const TransformPair e = catalog_lookup("exp_quat");
    const CDNumber zeta(2, {-0.3, 0.5, 0.7, -0.4});
    const auto probes = make_probes(e, 10, 7);
    int mismatches = 0;
    for (const Probe& pr : probes) {
        const QuadratureResult q = pair_forward(e, pr.p, pr.zeta, 1e-12);
        CHECK(maxdiff(q.value, exp_quat_image(pr.p, zeta)) < 1e-9);
        if (maxdiff(q.value, exp_quat_printed(pr.p, zeta)) > 1e-6) ++mismatches;
    }
    MESSAGE("printed exp(zeta t) formula mismatches at " << mismatches << " of 10 probes");
}

TEST_CASE("worked values") {
    const TransformPair lg = catalog_lookup("logistic_twosided");
    const CDNumber pm = CDNumber::real(-0.5, 2);
    CHECK(std::abs(pair_forward(lg, pm, CDNumber(2), 1e-11).value[0] - pi) < 1e-8);
    CHECK(std::abs(lg.eval_image(pm, CDNumber(2))[0] - pi) < 1e-14);
    const TransformPair g = catalog_lookup("gauss_twosided");
    const CDNumber one = CDNumber::real(1, 2);
    CHECK(std::abs(pair_forward(g, one, CDNumber(2), 1e-11).value[0] - std::sqrt(pi) * std::exp(0.25)) < 1e-8);
    const TransformPair tr = catalog_lookup("tpow_real");
    const CDNumber four = CDNumber::real(4, 2);
    CHECK(std::abs(tr.eval_image(four, CDNumber(2))[0] - std::sqrt(pi) / 2) < 1e-14);
    CHECK(std::abs(pair_forward(tr, four, CDNumber(2), 1e-9).value[0] - std::sqrt(pi) / 2) < 1e-6);
    const TransformPair step = catalog_lookup("step");
    for (const CDNumber& p : {CDNumber::real(1, 2), CDNumber::real(2, 2), parse_cd_literal("1+i1")}) {
        auto rec = verify_pair(step, {{p.embed(2), CDNumber(2)}}, 1e-8);
        CHECK(rec[0].pass);
        CHECK(rec[0].dev < 1e-8);
    }
}

TEST_CASE("every shipped pair passes at 12 probes") {
    for (const TransformPair& tp : catalog_list()) {
        const auto probes = make_probes(tp, 12, 42);
        const auto recs = verify_pair(tp, probes, 1e-6);
        REQUIRE(recs.size() == 12);
        for (const CheckRecord& r : recs) {
            INFO(r.name << " " << r.probe << " dev=" << r.dev << " " << r.note);
            CHECK(r.pass);
        }
    }
}
