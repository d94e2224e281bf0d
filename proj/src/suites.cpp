#include "hct/suites.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "hct/parallel.hpp"
#include "hct/rules.hpp"
#include "hct/special.hpp"

namespace hct {

namespace {

constexpr double kPi = std::numbers::pi;

CDNumber random_cd(std::mt19937_64& g, int level) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CDNumber x(level);
    for (std::size_t j = 0; j < x.dim(); ++j) x[j] = u(g);
    return x;
}

double maxdiff(const CDNumber& a, const CDNumber& b) {
    const int lev = common_level(a, b);
    const CDNumber x = a.embed(lev), y = b.embed(lev);
    double m = 0;
    for (std::size_t j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x[j] - y[j]));
    return m;
}

CheckRecord record(const std::string& name, const std::string& probe, double dev, double tol) {
    CheckRecord r;
    r.name = name;
    r.probe = probe;
    r.dev = dev;
    r.pass = dev <= tol;
    return r;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Runs jobs in parallel and concatenates their records in job order.
std::vector<CheckRecord> gather(std::size_t n, const std::function<std::vector<CheckRecord>(std::size_t)>& job) {
    std::vector<std::vector<CheckRecord>> parts(n);
    parallel_for(n, [&](std::size_t i) { parts[i] = job(i); });
    std::vector<CheckRecord> out;
    for (auto& part : parts)
        for (CheckRecord& r : part) out.push_back(std::move(r));
    return out;
}

CheckRecord guarded(const std::string& name, const std::string& probe, const std::function<CheckRecord()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        CheckRecord r;
        r.name = name;
        r.probe = probe;
        r.dev = std::numeric_limits<double>::infinity();
        r.note = std::string(error_kind_name(e.kind())) + ": " + e.what();
        return r;
    }
}

std::vector<CheckRecord> pair_checks(const std::vector<TransformPair>& pairs, std::uint64_t seed, double tol) {
    return gather(pairs.size(), [&](std::size_t i) {
        return verify_pair(pairs[i], make_probes(pairs[i], 12, seed), tol);
    });
}

std::vector<CheckRecord> rule_checks(const std::vector<const OperationalRule*>& rules, std::uint64_t seed,
                                     double tol) {
    constexpr int kInstances = 5;
    return gather(rules.size(), [&](std::size_t i) {
        const OperationalRule& r = *rules[i];
        std::vector<CheckRecord> recs = verify_rule_bases(r, kInstances, seed, tol);
        // a base counts when all of its instances pass
        int good = 0;
        for (std::size_t k = 0; k + kInstances <= recs.size(); k += kInstances) {
            bool ok = true;
            for (std::size_t j = k; j < k + kInstances; ++j) ok = ok && recs[j].pass;
            good += ok;
        }
        CheckRecord cov;
        cov.name = r.name + ":coverage";
        cov.probe = "bases=" + std::to_string(r.bases.size()) + ";instances=" + std::to_string(kInstances);
        cov.dev = double(int(r.bases.size()) - good);
        cov.pass = good >= 3;
        cov.note = std::to_string(good) + " bases pass every instance";
        recs.push_back(cov);
        return recs;
    });
}

}  // namespace

std::vector<std::string> suite_names() { return {"algebra", "catalog", "rules", "mellin"}; }

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "algebra") return algebra_suite(opt);
    if (name == "catalog") return catalog_suite(opt);
    if (name == "rules") return rules_suite(opt);
    if (name == "mellin") return mellin_suite(opt);
    fail(ErrorKind::Usage, "unknown suite '" + name + "' (expected algebra, catalog, rules or mellin)");
}

bool suite_passed(const std::vector<CheckRecord>& recs) {
    for (const CheckRecord& r : recs)
        if (!r.pass && !r.skipped) return false;
    return true;
}

std::vector<CheckRecord> algebra_suite(const SuiteOptions& opt) {
    const double tol = opt.tol.value_or(1e-12);
    std::vector<CheckRecord> out;

    {
        auto e = [](int k) { return CDNumber::unit(k, 2); };
        const CDNumber one = CDNumber::real(1, 2);
        // i1 i2 = i3, i2 i3 = i1, i3 i1 = i2, i_k^2 = -1, anticommutation
        const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
        double dev = 0;
        for (const auto& c : cyc) {
            dev = std::max(dev, maxdiff(e(c[0]) * e(c[1]), e(c[2])));
            dev = std::max(dev, maxdiff(e(c[1]) * e(c[0]), -e(c[2])));
        }
        for (int k = 1; k <= 3; ++k) dev = std::max(dev, maxdiff(e(k) * e(k), -one));
        out.push_back(record("quaternion_table", "r=2", dev, 0.0));
    }
    out.push_back(guarded("doubling_generators", "r<=8", [] {
        algebra_self_test();
        return record("doubling_generators", "r<=8", 0.0, 0.0);
    }));

    std::mt19937_64 g(opt.seed);
    for (int r = 1; r <= 3; ++r) {
        double dev = 0;
        for (int it = 0; it < 10000; ++it) {
            const CDNumber a = random_cd(g, r), b = random_cd(g, r), c = random_cd(g, r);
            dev = std::max(dev, maxdiff((a * a) * b, a * (a * b)));
            dev = std::max(dev, maxdiff((b * a) * a, b * (a * a)));
            dev = std::max(dev, maxdiff((a * b) * a, a * (b * a)));
            // the associator is alternating
            const CDNumber abc = (a * b) * c - a * (b * c), bac = (b * a) * c - b * (a * c);
            dev = std::max(dev, maxdiff(abc, -bac));
        }
        out.push_back(record("alternativity", "r=" + std::to_string(r) + ";triples=10000", dev, tol));
    }
    {
        double worst = 0;
        std::string where = "none";
        for (int it = 0; it < 1000; ++it) {
            const CDNumber a = random_cd(g, 4), b = random_cd(g, 4);
            const double d = maxdiff(a * (a * b), (a * a) * b);
            if (d > worst) {
                worst = d;
                where = "trial=" + std::to_string(it);
            }
            if (worst > 1e-6) break;
        }
        CheckRecord rec = record("sedenion_non_alternative", "r=4;" + where, worst, 0.0);
        rec.pass = worst > 1e-6;
        rec.note = "a violating pair (aa)b != a(ab) must exist";
        out.push_back(rec);
    }
    for (int r = 1; r <= 5; ++r) {
        double dev = 0;
        for (int it = 0; it < 200; ++it) {
            const CDNumber z = random_cd(g, r);
            for (int n = 1; n <= 4; ++n)
                for (int m = 1; m <= 4; ++m) {
                    const double scale = std::max(1.0, std::pow(cd_norm(z), n + m));
                    dev = std::max(dev, maxdiff(cd_pow_int(z, n) * cd_pow_int(z, m), cd_pow_int(z, n + m)) / scale);
                }
        }
        out.push_back(record("power_associativity", "r=" + std::to_string(r) + ";relative", dev, tol));
    }
    for (int r = 1; r <= 3; ++r) {
        double dev = 0;
        for (int it = 0; it < 2000; ++it) {
            const CDNumber a = random_cd(g, r), b = random_cd(g, r);
            dev = std::max(dev, std::abs(cd_norm(a * b) - cd_norm(a) * cd_norm(b)));
        }
        out.push_back(record("norm_multiplicativity", "r=" + std::to_string(r), dev, tol));
    }
    for (int r = 2; r <= 4; ++r) {
        double dev = 0;
        for (int it = 0; it < 200; ++it) {
            const CDNumber x = random_cd(g, r);
            for (std::size_t j = 0; j < x.dim(); ++j) dev = std::max(dev, std::abs(cd_component(x, int(j)) - x[j]));
        }
        out.push_back(record("component_extraction", "r=" + std::to_string(r), dev, tol));
    }
    return out;
}

std::vector<CheckRecord> catalog_suite(const SuiteOptions& opt) {
    const double tol = opt.tol.value_or(1e-6);
    std::vector<CheckRecord> out = pair_checks(catalog_list(), opt.seed, tol);

    const CDNumber zero(2);
    out.push_back(guarded("logistic_twosided:value", "p=-0.5", [&] {
        const TransformPair lg = catalog_lookup("logistic_twosided");
        const QuadratureResult q = pair_forward(lg, CDNumber::real(-0.5, 2), zero, 1e-3 * tol);
        CheckRecord r = record("logistic_twosided:value", "p=-0.5", relative_dev(q.value, CDNumber::real(kPi, 2)), tol);
        r.err = q.err_estimate;
        return r;
    }));
    out.push_back(guarded("gauss_twosided:value", "p=1", [&] {
        const TransformPair gs = catalog_lookup("gauss_twosided");
        const QuadratureResult q = pair_forward(gs, CDNumber::real(1, 2), zero, 1e-3 * tol);
        const double expect = std::sqrt(kPi) * std::exp(0.25);
        CheckRecord r = record("gauss_twosided:value", "p=1", relative_dev(q.value, CDNumber::real(expect, 2)), tol);
        r.err = q.err_estimate;
        return r;
    }));
    return out;
}

std::vector<CheckRecord> rules_suite(const SuiteOptions& opt) {
    std::vector<const OperationalRule*> rules;
    for (const OperationalRule& r : rule_list()) rules.push_back(&r);
    return rule_checks(rules, opt.seed, opt.tol.value_or(1e-6));
}

std::vector<CheckRecord> mellin_suite(const SuiteOptions& opt) {
    const double tol = opt.tol.value_or(1e-6);
    std::vector<TransformPair> pairs;
    for (const TransformPair& tp : catalog_list())
        if (tp.domain == PairDomain::Mellin) pairs.push_back(tp);
    std::vector<CheckRecord> out = pair_checks(pairs, opt.seed, tol);

    std::vector<const OperationalRule*> rules;
    for (const OperationalRule& r : rule_list())
        if (r.domain == PairDomain::Mellin) rules.push_back(&r);
    for (CheckRecord& r : rule_checks(rules, opt.seed, tol)) out.push_back(std::move(r));

    out.push_back(guarded("mellin_rational:value", "p=0.5", [&] {
        const TransformPair mr = catalog_lookup("mellin_rational");
        const QuadratureResult q = pair_forward(mr, CDNumber::real(0.5, 2), CDNumber(2), 1e-3 * tol);
        CheckRecord r = record("mellin_rational:value", "p=0.5", std::abs(q.value[0] - kPi) + cd_norm(q.value.imag()), tol);
        r.err = q.err_estimate;
        return r;
    }));

    // Gamma(p) on the line Re p = 0.5 back to e^-tau
    const TransformPair gam = catalog_lookup("mellin_exp");
    const ImageFn G = [gam](const CDNumber& p) { return gam.eval_image(p, CDNumber(p.level())); };
    for (double tau : {0.5, 1.0, 2.0}) {
        const std::string probe = "tau=" + num(tau) + ";w=0.5;S=i1";
        out.push_back(guarded("mellin_exp:invert", probe, [&] {
            const InversionResult inv = mellin_invert(G, 0.5, CDNumber::unit(1, 2), tau, 1e-5, gam.s0(), gam.s1());
            CheckRecord r = record("mellin_exp:invert", probe, maxdiff(inv.value, CDNumber::real(std::exp(-tau), 2)),
                                   std::max(tol, 1e-3));
            r.err = inv.err_estimate;
            return r;
        }));
    }
    return out;
}

}  // namespace hct
