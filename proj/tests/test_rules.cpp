#include "doctest.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <set>

#include "hct/catalog.hpp"
#include "hct/rules.hpp"

using namespace hct;

namespace {

RuleInstance at(const CDNumber& p) {
    RuleInstance in;
    in.p = p;
    in.zeta = CDNumber(p.level());
    return in;
}

// records come in consecutive blocks of `instances` per declared base
int count_passing_bases(const std::vector<CheckRecord>& recs, std::size_t instances) {
    int good = 0;
    for (std::size_t k = 0; k + instances <= recs.size(); k += instances) {
        bool ok = true;
        for (std::size_t j = k; j < k + instances; ++j) ok = ok && recs[j].pass;
        good += ok;
    }
    return good;
}

}  // namespace

TEST_CASE("ridders derivative") {
    double err = 0;
    const CDNumber d = ridders_derivative([](double e) { return CDNumber::real(std::exp(1 + e), 2); }, 0.1, &err);
    CHECK(std::abs(d[0] - std::exp(1.0)) < 1e-10);
    CHECK(err < 1e-9);
}

TEST_CASE("rule registry") {
    const auto names = rule_names();
    CHECK(names.size() >= 40);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    CHECK_THROWS_AS(rule_lookup("no_such_rule"), Error);
    for (const OperationalRule& r : rule_list()) {
        INFO(r.name);
        CHECK(r.bases.size() >= 3);
        CHECK(!r.statement.empty());
        CHECK(r.make_instance);
        CHECK(r.lhs);
        CHECK(r.rhs);
    }
}

TEST_CASE("worked rule instances") {
    SUBCASE("scaling on sin, alpha 3, p 2") {
        const TransformPair s = catalog_lookup("sin");
        RuleInstance in = at(CDNumber::real(2, 2));
        in.a["alpha"] = 3;
        const OperationalRule& r = rule_lookup("scaling");
        const CheckRecord rec = check_rule_instance(r, s, in, 1e-8);
        CHECK(rec.pass);
        CHECK(rec.dev < 1e-8);
        const double w = s.params.at("omega");
        const double expect = (w / (4.0 / 9 + w * w)) / 3;
        CHECK(std::abs(r.rhs(s, in)(in.p)[0] - expect) < 1e-14);
    }
    SUBCASE("derivative of cos is minus the sin image") {
        const TransformPair c = catalog_lookup("cos", {{"omega", 1}});
        const CDNumber p(2, {1.3, 0.4, -0.2, 0.5});
        const RuleInstance in = at(p);
        const OperationalRule& r = rule_lookup("derivative");
        const CheckRecord rec = check_rule_instance(r, c, in, 1e-8);
        CHECK(rec.pass);
        const CDNumber sin_img = catalog_lookup("sin", {{"omega", 1}}).eval_image(p, CDNumber(2));
        CHECK(relative_dev(r.lhs(c, in)(p), -sin_img) < 1e-8);
    }
    SUBCASE("step convolved with step has image p^-2") {
        const TransformPair st = catalog_lookup("step");
        for (const CDNumber& p : {CDNumber::real(1.5, 2), CDNumber(2, {0.8, 0.6, 0.3, -0.2})}) {
            RuleInstance in = at(p);
            in.aux = "step";
            const OperationalRule& r = rule_lookup("convolution");
            const CheckRecord rec = check_rule_instance(r, st, in, 1e-8);
            CHECK(rec.pass);
            CHECK(relative_dev(r.lhs(st, in)(p), cd_inverse(p * p)) < 1e-8);
        }
    }
    SUBCASE("final value of 1 - e^-t") {
        TransformPair f = catalog_lookup("step");
        f.name = "one_minus_exp";
        f.original.eval = [](double t) { return CDNumber::real(1 - std::exp(-t), 1); };
        f.image = [](const CDNumber& p, const CDNumber&) { return cd_inverse(p * (p + 1.0)); };
        f.f_inf = CDNumber::real(1, 1);
        const OperationalRule& r = rule_lookup("final_value");
        std::mt19937_64 rng(42);
        for (int k = 0; k < 3; ++k) {
            const RuleInstance in = r.make_instance(f, rng, k);
            const CheckRecord rec = check_rule_instance(r, f, in, 1e-6);
            INFO(rec.probe << " dev=" << rec.dev);
            CHECK(rec.pass);
        }
    }
}

TEST_CASE("hypothesis violations are skipped with a reason") {
    const TransformPair st = catalog_lookup("step");
    RuleInstance in = at(CDNumber::real(1, 2));
    in.aux = "exp_quat";
    const CheckRecord rec = check_rule_instance(rule_lookup("convolution"), st, in, 1e-6);
    CHECK(rec.skipped);
    CHECK(!rec.pass);
    CHECK(rec.note.find("real-valued") != std::string::npos);
    const CheckRecord rec2 = check_rule_instance(rule_lookup("ts_derivative"), catalog_lookup("step"), in, 1e-6);
    CHECK(rec2.skipped);
}

TEST_CASE("rule checks are seed-deterministic") {
    const OperationalRule& r = rule_lookup("shift");
    const TransformPair b = catalog_lookup("sin");
    const auto a1 = verify_rule(r, b, 5, 7, 1e-6);
    const auto a2 = verify_rule(r, b, 5, 7, 1e-6);
    const auto a3 = verify_rule(r, b, 5, 8, 1e-6);
    REQUIRE(a1.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(a1[k].probe == a2[k].probe);
        CHECK(a1[k].dev == a2[k].dev);
    }
    CHECK(a1[0].probe != a3[0].probe);
}

// The integration theorem for the Mellin transform holds with the opposite sign.
TEST_CASE("mellin integration oracle with the sign of the substitution") {
    const TransformPair g = catalog_lookup("mellin_rational");
    Original w = g.original;
    w.eval = [](double tau) { return CDNumber::real(-std::log1p(1.0 / tau), 1); };
    w.horizon_left = {};
    w.horizon_right = {};
    w.breakpoints.clear();
    w.poly_degree += 1;
    w.bound_const = 10;
    for (const CDNumber& p : {CDNumber::real(0.5, 2), CDNumber(2, {0.4, 0.3, -0.5, 0.2})}) {
        const CDNumber mw = forward_transform(w, PairDomain::Mellin, make_kernel(KernelVariant::Linear, 2), p,
                                              CDNumber(2), 1e-11, 1e-10)
                                .value;
        CHECK(relative_dev(mw * p, -g.eval_image(p, CDNumber(2))) < 1e-6);
    }
}

TEST_CASE("every rule passes on at least 3 bases x 5 instances") {
    const auto t0 = std::chrono::steady_clock::now();
    for (const OperationalRule& r : rule_list()) {
        const auto recs = verify_rule_bases(r, 5, 42, 1e-6);
        for (const CheckRecord& c : recs) {
            INFO(c.name << " " << c.probe << " dev=" << c.dev << " " << c.note);
            CHECK((c.pass || c.skipped));
        }
        INFO(r.name);
        CHECK(count_passing_bases(recs, 5) >= 3);
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(dt < 120.0);
}
