#include "hct/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hct/errors.hpp"
#include "hct/special.hpp"

namespace hct {

const char* pair_domain_name(PairDomain d) {
    switch (d) {
        case PairDomain::OneSided: return "one_sided";
        case PairDomain::TwoSided: return "two_sided";
        case PairDomain::Mellin: return "mellin";
    }
    return "?";
}

CDNumber TransformPair::eval_image(const CDNumber& p, const CDNumber& zeta) const {
    if (!zeta_aware && cd_norm(zeta) != 0.0)
        fail(ErrorKind::Unsupported, "closed-form image of '" + name + "' is given for zeta = 0 only");
    return image(p, zeta);
}

namespace {

using Params = std::map<std::string, double>;
constexpr double kPi = std::numbers::pi;

CDNumber real1(double x) { return CDNumber::real(x, 1); }

double factorial(int n) {
    double f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

int as_int(double x, const char* what) {
    if (x != std::floor(x) || x < 0 || x > 20) fail(ErrorKind::Input, std::string(what) + " must be an integer in [0, 20]");
    return int(x);
}

Original right_real(std::function<double(double)> f, double s0, const std::string& label, double osc = 0,
                    int poly = 0) {
    Original o;
    o.eval = [f](double t) { return real1(t >= 0 ? f(t) : 0.0); };
    o.support = Support::RightAxis;
    o.s0 = s0;
    o.osc = osc;
    o.poly_degree = poly;
    o.label = label;
    return o;
}

Original two_sided_real(std::function<double(double)> f, double s0, double s1, const std::string& label) {
    Original o;
    o.eval = [f](double t) { return real1(f(t)); };
    o.support = Support::TwoSided;
    o.s0 = s0;
    o.s1 = s1;
    o.label = label;
    return o;
}

Original mellin_real(std::function<double(double)> g, double s0, double s1, const std::string& label) {
    Original o;
    o.eval = [g](double tau) { return real1(g(tau)); };
    o.support = Support::PositiveAxisMultiplicative;
    o.s0 = s0;
    o.s1 = s1;
    o.label = label;
    return o;
}

// |e^{-alpha t^2} e^{rate t}| < tol beyond the returned point
HorizonFn gauss_horizon(double alpha) {
    return [alpha](double rate, double tol) {
        const double L = -std::log(tol) + 5;
        return (rate + std::sqrt(rate * rate + 4 * alpha * L)) / (2 * alpha);
    };
}

// |exp(-e^{k t}) e^{(rate + b) t}| < tol beyond the returned point
HorizonFn double_exp_horizon(double k, double b) {
    return [k, b](double rate, double tol) {
        const double L = -std::log(tol) + 5;
        double t = 0.5;
        while (std::exp(k * t) - (rate + b) * t < L) t += 0.25;
        return t;
    };
}

ImageZetaFn plain(std::function<CDNumber(const CDNumber&)> f) {
    return [f](const CDNumber& p, const CDNumber&) { return f(p); };
}

ImageZetaFn from_rational(const RationalImage& R) {
    return [R](const CDNumber& p, const CDNumber&) { return R(p.embed(std::max(p.level(), 2))); };
}

RationalImage rational(std::vector<double> num, std::vector<double> den) {
    RationalImage R;
    for (double x : num) R.numerator.push_back(CDNumber::real(x, 2));
    R.denominator = std::move(den);
    return R;
}

std::vector<double> binomial_poly(double b, int m) {
    // (p + b)^m, ascending
    std::vector<double> c(m + 1, 0.0);
    c[0] = 1;
    for (int k = 0; k < m; ++k)
        for (int j = k + 1; j >= 0; --j) c[j] = (j > 0 ? c[j - 1] : 0.0) + b * c[j];
    return c;
}

struct Entry {
    std::string name;
    Params defaults;
    std::function<TransformPair(const Params&)> build;
};

TransformPair base(const std::string& name, const std::string& prov, const std::string& desc, PairDomain d,
                   const Params& pr) {
    TransformPair tp;
    tp.name = name;
    tp.provenance = prov;
    tp.description = desc;
    tp.domain = d;
    tp.params = pr;
    return tp;
}

void set_rational(TransformPair& tp, RationalImage R) {
    tp.image = from_rational(R);
    tp.rational = std::move(R);
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({"step", {}, [](const Params& pr) {
            auto tp = base("step", "unit step image", "Ch(t) -> p^-1", PairDomain::OneSided, pr);
            tp.original = right_real([](double) { return 1.0; }, 0, "step");
            set_rational(tp, rational({1}, {0, 1}));
            tp.derivative = [](double) { return real1(0); };
            tp.antiderivative = [](double t) { return real1(t); };
            tp.f0 = real1(1);
            tp.f_inf = real1(1);
            return tp;
        }});
        e.push_back({"sin", {{"omega", 1.5}}, [](const Params& pr) {
            const double w = pr.at("omega");
            auto tp = base("sin", "sine image", "sin(omega t) -> omega (p^2+omega^2)^-1", PairDomain::OneSided, pr);
            tp.original = right_real([w](double t) { return std::sin(w * t); }, 0, "sin", w);
            set_rational(tp, rational({w}, {w * w, 0, 1}));
            tp.derivative = [w](double t) { return real1(w * std::cos(w * t)); };
            tp.antiderivative = [w](double t) { return real1((1 - std::cos(w * t)) / w); };
            tp.f0 = real1(0);
            return tp;
        }});
        e.push_back({"cos", {{"omega", 1.5}}, [](const Params& pr) {
            const double w = pr.at("omega");
            auto tp = base("cos", "cosine image", "cos(omega t) -> p (p^2+omega^2)^-1", PairDomain::OneSided, pr);
            tp.original = right_real([w](double t) { return std::cos(w * t); }, 0, "cos", w);
            set_rational(tp, rational({0, 1}, {w * w, 0, 1}));
            tp.derivative = [w](double t) { return real1(-w * std::sin(w * t)); };
            tp.antiderivative = [w](double t) { return real1(std::sin(w * t) / w); };
            tp.f0 = real1(1);
            return tp;
        }});
        e.push_back({"sh", {{"omega", 0.8}}, [](const Params& pr) {
            const double w = pr.at("omega");
            auto tp = base("sh", "hyperbolic sine image", "sh(omega t) -> omega (p^2-omega^2)^-1",
                           PairDomain::OneSided, pr);
            tp.original = right_real([w](double t) { return std::sinh(w * t); }, w, "sh");
            set_rational(tp, rational({w}, {-w * w, 0, 1}));
            tp.derivative = [w](double t) { return real1(w * std::cosh(w * t)); };
            tp.antiderivative = [w](double t) { return real1((std::cosh(w * t) - 1) / w); };
            tp.f0 = real1(0);
            return tp;
        }});
        e.push_back({"ch", {{"omega", 0.8}}, [](const Params& pr) {
            const double w = pr.at("omega");
            auto tp = base("ch", "hyperbolic cosine image", "ch(omega t) -> p (p^2-omega^2)^-1",
                           PairDomain::OneSided, pr);
            tp.original = right_real([w](double t) { return std::cosh(w * t); }, w, "ch");
            set_rational(tp, rational({0, 1}, {-w * w, 0, 1}));
            tp.derivative = [w](double t) { return real1(w * std::sinh(w * t)); };
            tp.antiderivative = [w](double t) { return real1(std::sinh(w * t) / w); };
            tp.f0 = real1(1);
            return tp;
        }});
        e.push_back({"exp_quat", {{"z0", -0.3}, {"z1", 0.5}, {"z2", 0.7}, {"z3", -0.4}}, [](const Params& pr) {
            const CDNumber z(2, {pr.at("z0"), pr.at("z1"), pr.at("z2"), pr.at("z3")});
            auto tp = base("exp_quat", "quaternion exponential image", "exp(zeta t), zeta a quaternion",
                           PairDomain::OneSided, pr);
            Original o;
            o.eval = [z](double t) { return t >= 0 ? cd_exp(z * t) : CDNumber(2); };
            o.s0 = z[0];
            o.osc = cd_norm(z.imag());
            o.label = "exp(zeta t)";
            tp.original = o;
            tp.image = plain([z](const CDNumber& p) { return exp_quat_image(p, z); });
            tp.derivative = [z](double t) { return z * cd_exp(z * t); };
            tp.f0 = CDNumber::real(1, 2);
            tp.real_valued = false;
            return tp;
        }});
        e.push_back({"tpow", {{"n", 2}}, [](const Params& pr) {
            const int n = as_int(pr.at("n"), "n");
            auto tp = base("tpow", "power image", "t^n -> n! p^(-n-1)", PairDomain::OneSided, pr);
            tp.original = right_real([n](double t) { return std::pow(t, n); }, 0, "t^n", 0, n);
            std::vector<double> den(n + 2, 0.0);
            den[n + 1] = 1;
            set_rational(tp, rational({factorial(n)}, den));
            tp.derivative = [n](double t) { return real1(n == 0 ? 0.0 : n * std::pow(t, n - 1)); };
            tp.antiderivative = [n](double t) { return real1(std::pow(t, n + 1) / (n + 1)); };
            tp.f0 = real1(n == 0 ? 1.0 : 0.0);
            return tp;
        }});
        e.push_back({"t_sin", {{"omega", 1}}, [](const Params& pr) {
            const double w = pr.at("omega");
            auto tp = base("t_sin", "t sin image", "t sin(omega t) -> 2 p omega (p^2+omega^2)^-2",
                           PairDomain::OneSided, pr);
            tp.original = right_real([w](double t) { return t * std::sin(w * t); }, 0, "t sin", w, 1);
            set_rational(tp, rational({0, 2 * w}, {w * w * w * w, 0, 2 * w * w, 0, 1}));
            tp.derivative = [w](double t) { return real1(std::sin(w * t) + w * t * std::cos(w * t)); };
            tp.f0 = real1(0);
            return tp;
        }});
        e.push_back({"t_cos", {{"omega", 1}}, [](const Params& pr) {
            const double w = pr.at("omega");
            auto tp = base("t_cos", "t cos image", "t cos(omega t) -> (p^2-omega^2) (p^2+omega^2)^-2",
                           PairDomain::OneSided, pr);
            tp.original = right_real([w](double t) { return t * std::cos(w * t); }, 0, "t cos", w, 1);
            set_rational(tp, rational({-w * w, 0, 1}, {w * w * w * w, 0, 2 * w * w, 0, 1}));
            tp.derivative = [w](double t) { return real1(std::cos(w * t) - w * t * std::sin(w * t)); };
            tp.f0 = real1(0);
            return tp;
        }});
        e.push_back({"damped_sin", {{"a", 2}, {"b", 0.5}}, [](const Params& pr) {
            const double a = pr.at("a"), b = pr.at("b");
            auto tp = base("damped_sin", "damped sine image", "e^(-bt) sin(at) -> a ((p+b)^2+a^2)^-1",
                           PairDomain::OneSided, pr);
            tp.original = right_real([a, b](double t) { return std::exp(-b * t) * std::sin(a * t); }, -b,
                                     "damped sin", a);
            set_rational(tp, rational({a}, {b * b + a * a, 2 * b, 1}));
            tp.derivative = [a, b](double t) {
                return real1(std::exp(-b * t) * (a * std::cos(a * t) - b * std::sin(a * t)));
            };
            tp.f0 = real1(0);
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"damped_cos", {{"a", 2}, {"b", 0.5}}, [](const Params& pr) {
            const double a = pr.at("a"), b = pr.at("b");
            auto tp = base("damped_cos", "damped cosine image", "e^(-bt) cos(at) -> (p+b) ((p+b)^2+a^2)^-1",
                           PairDomain::OneSided, pr);
            tp.original = right_real([a, b](double t) { return std::exp(-b * t) * std::cos(a * t); }, -b,
                                     "damped cos", a);
            set_rational(tp, rational({b, 1}, {b * b + a * a, 2 * b, 1}));
            tp.derivative = [a, b](double t) {
                return real1(-std::exp(-b * t) * (a * std::sin(a * t) + b * std::cos(a * t)));
            };
            tp.f0 = real1(1);
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"damped_tpow", {{"n", 2}, {"b", 0.5}}, [](const Params& pr) {
            const int n = as_int(pr.at("n"), "n");
            const double b = pr.at("b");
            auto tp = base("damped_tpow", "damped power image", "e^(-bt) t^n -> n! (p+b)^(-n-1)",
                           PairDomain::OneSided, pr);
            tp.original = right_real([n, b](double t) { return std::exp(-b * t) * std::pow(t, n); }, -b,
                                     "damped t^n", 0, n);
            set_rational(tp, rational({factorial(n)}, binomial_poly(b, n + 1)));
            tp.derivative = [n, b](double t) {
                const double d = n == 0 ? 0.0 : n * std::pow(t, n - 1);
                return real1(std::exp(-b * t) * (d - b * std::pow(t, n)));
            };
            tp.f0 = real1(n == 0 ? 1.0 : 0.0);
            if (b > 0) tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"tpow_real", {{"a", -0.5}}, [](const Params& pr) {
            const double a = pr.at("a");
            if (!(a > -1)) fail(ErrorKind::Input, "t^a needs a > -1");
            auto tp = base("tpow_real", "real power image (exceptional for -1 < a < 0)",
                           "t^a -> Gamma(a+1) p^(-a-1)", PairDomain::OneSided, pr);
            tp.original = right_real([a](double t) { return std::pow(t, a); }, 0, "t^a", 0,
                                     std::max(0, int(std::ceil(a))));
            tp.original.singular_at_zero = a < 0;
            const double g = std::tgamma(a + 1);
            tp.image = plain([a, g](const CDNumber& p) { return cd_pow_real(p, -a - 1) * g; });
            tp.exceptional = a < 0;
            tp.tol = a < 0 ? 1e-4 : 1e-6;
            if (a > 0) tp.f0 = real1(0);
            return tp;
        }});
        e.push_back({"erfc_sqrt", {{"a", 1}}, [](const Params& pr) {
            const double a = pr.at("a");
            if (!(a > 0)) fail(ErrorKind::Input, "erfc pair needs a > 0");
            auto tp = base("erfc_sqrt", "error function image (normalized complementary form)",
                           "erfc(a/(2 sqrt t)) -> p^-1 exp(-a sqrt p)", PairDomain::OneSided, pr);
            tp.original = right_real([a](double t) { return t > 0 ? std::erfc(a / (2 * std::sqrt(t))) : 0.0; }, 0,
                                     "erfc(a/(2 sqrt t))");
            tp.image = plain([a](const CDNumber& p) {
                return slice_extend([a](cplx z) { return std::exp(-a * std::sqrt(z)) / z; }, p);
            });
            tp.derivative = [a](double t) {
                if (t <= 0) return real1(0);
                return real1(a / (2 * std::sqrt(kPi)) * std::pow(t, -1.5) * std::exp(-a * a / (4 * t)));
            };
            tp.f0 = real1(0);
            tp.f_inf = real1(1);
            return tp;
        }});
        e.push_back({"sinc", {}, [](const Params& pr) {
            auto tp = base("sinc", "sin t / t image", "sin(t)/t -> arcctg p", PairDomain::OneSided, pr);
            tp.original = right_real([](double t) { return std::abs(t) < 1e-8 ? 1.0 - t * t / 6 : std::sin(t) / t; },
                                     0, "sin t / t", 1);
            tp.image = plain([](const CDNumber& p) {
                return slice_extend([](cplx z) { return std::atan(1.0 / z); }, p);
            });
            tp.derivative = [](double t) {
                if (std::abs(t) < 1e-4) return real1(-t / 3 + t * t * t / 30);
                return real1((t * std::cos(t) - std::sin(t)) / (t * t));
            };
            tp.f0 = real1(1);
            tp.conditional = true;
            return tp;
        }});
        e.push_back({"si", {}, [](const Params& pr) {
            auto tp = base("si", "sine integral image", "si(t) -> p^-1 arcctg p", PairDomain::OneSided, pr);
            tp.original = right_real([](double t) { return sine_integral(t); }, 0, "si", 1);
            tp.image = plain([](const CDNumber& p) {
                return slice_extend([](cplx z) { return std::atan(1.0 / z) / z; }, p);
            });
            tp.derivative = [](double t) { return real1(std::abs(t) < 1e-8 ? 1.0 : std::sin(t) / t); };
            tp.f0 = real1(0);
            tp.f_inf = real1(kPi / 2);
            return tp;
        }});
        e.push_back({"exp_diff_over_t", {{"b", 0.5}, {"c", -1}}, [](const Params& pr) {
            const double b = pr.at("b"), c = pr.at("c");
            auto tp = base("exp_diff_over_t", "exponential difference over t image",
                           "(e^(bt) - e^(ct))/t -> Ln((p-b)^-1 (p-c))", PairDomain::OneSided, pr);
            tp.original = right_real(
                [b, c](double t) {
                    if (t == 0) return b - c;
                    return (std::expm1(b * t) - std::expm1(c * t)) / t;
                },
                std::max(b, c), "(e^(bt)-e^(ct))/t");
            tp.image = plain([b, c](const CDNumber& p) {
                return slice_extend([b, c](cplx z) { return std::log((z - c) / (z - b)); }, p);
            });
            tp.f0 = real1(b - c);
            return tp;
        }});
        e.push_back({"exp_abs_twosided", {{"alpha", 1}}, [](const Params& pr) {
            const double al = pr.at("alpha");
            if (!(al > 0)) fail(ErrorKind::Input, "alpha must be positive");
            auto tp = base("exp_abs_twosided", "two-sided image of e^(-alpha|t|)/2",
                           "e^(-alpha|t|)/2 -> alpha (alpha^2 - p^2)^-1", PairDomain::TwoSided, pr);
            tp.original = two_sided_real([al](double t) { return 0.5 * std::exp(-al * std::abs(t)); }, -al, al,
                                         "e^(-alpha|t|)/2");
            tp.original.breakpoints = {0.0};
            tp.image = plain([al](const CDNumber& p) {
                CDNumber d = p * p * -1.0;
                d[0] += al * al;
                return cd_inverse(d) * al;
            });
            tp.derivative = [al](double t) {
                return real1(t == 0 ? 0.0 : -0.5 * al * (t > 0 ? 1 : -1) * std::exp(-al * std::abs(t)));
            };
            tp.antiderivative = [al](double t) {
                return real1(t < 0 ? std::exp(al * t) / (2 * al) : (2 - std::exp(-al * t)) / (2 * al));
            };
            tp.antiderivative_upper = [al](double t) {
                return real1(t < 0 ? std::exp(al * t) / (2 * al) - 1 / al : -std::exp(-al * t) / (2 * al));
            };
            tp.f0 = real1(0.5);
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"gauss_twosided", {{"alpha", 1}}, [](const Params& pr) {
            const double al = pr.at("alpha");
            if (!(al > 0)) fail(ErrorKind::Input, "alpha must be positive");
            auto tp = base("gauss_twosided", "two-sided Gaussian image",
                           "e^(-alpha t^2) -> (pi/alpha)^(1/2) exp(p^2/(4 alpha))", PairDomain::TwoSided, pr);
            const double inf = std::numeric_limits<double>::infinity();
            tp.original = two_sided_real([al](double t) { return std::exp(-al * t * t); }, -inf, inf, "gauss");
            tp.original.horizon_right = gauss_horizon(al);
            tp.original.horizon_left = gauss_horizon(al);
            tp.image = plain([al](const CDNumber& p) { return cd_exp(p * p / (4 * al)) * std::sqrt(kPi / al); });
            tp.derivative = [al](double t) { return real1(-2 * al * t * std::exp(-al * t * t)); };
            tp.antiderivative = [al](double t) {
                return real1(0.5 * std::sqrt(kPi / al) * std::erfc(-std::sqrt(al) * t));
            };
            tp.antiderivative_upper = [al](double t) {
                return real1(-0.5 * std::sqrt(kPi / al) * std::erfc(std::sqrt(al) * t));
            };
            tp.f0 = real1(1);
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"logistic_twosided", {}, [](const Params& pr) {
            auto tp = base("logistic_twosided", "two-sided logistic image", "(e^t + 1)^-1 -> -pi / sin(pi p)",
                           PairDomain::TwoSided, pr);
            tp.original = two_sided_real([](double t) { return 1.0 / (std::exp(t) + 1.0); }, -1, 0, "logistic");
            tp.image = plain([](const CDNumber& p) {
                return slice_extend([](cplx z) { return -kPi / std::sin(kPi * z); }, p);
            });
            tp.derivative = [](double t) {
                const double e = std::exp(-std::abs(t));
                return real1(-e / ((1 + e) * (1 + e)));
            };
            tp.antiderivative_upper = [](double t) {
                return real1(t > -30 ? -std::log1p(std::exp(-t)) : t - std::log1p(std::exp(t)));
            };
            tp.f0 = real1(0.5);
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"sph_tpow", {{"n", 1}, {"r", 2}}, [](const Params& pr) {
            const int n = as_int(pr.at("n"), "n");
            const int r = as_int(pr.at("r"), "r");
            if (r < 2 || r > 4) fail(ErrorKind::Input, "sph_tpow needs 2 <= r <= 4");
            auto tp = base("sph_tpow", "spherical-kernel power image via T_n/S_n",
                           "t^n -> spherical image by product-to-sum over T_n, S_n", PairDomain::OneSided, pr);
            tp.kernel = KernelVariant::Spherical;
            tp.level = r;
            tp.original = right_real([n](double t) { return std::pow(t, n); }, 0, "t^n", 0, n);
            tp.image = [n](const CDNumber& p, const CDNumber& z) { return spherical_tpow_image(n, p, z); };
            tp.zeta_aware = true;
            tp.derivative = [n](double t) { return real1(n == 0 ? 0.0 : n * std::pow(t, n - 1)); };
            tp.antiderivative = [n](double t) { return real1(std::pow(t, n + 1) / (n + 1)); };
            tp.f0 = real1(n == 0 ? 1.0 : 0.0);
            if (n == 0) tp.f_inf = real1(1);
            return tp;
        }});
        e.push_back({"sph_damped_tpow", {{"n", 1}, {"b", 0.5}, {"r", 2}}, [](const Params& pr) {
            const int n = as_int(pr.at("n"), "n");
            const int r = as_int(pr.at("r"), "r");
            const double b = pr.at("b");
            if (r < 2 || r > 4) fail(ErrorKind::Input, "sph_damped_tpow needs 2 <= r <= 4");
            auto tp = base("sph_damped_tpow", "spherical-kernel damped power image (power image at p + b)",
                           "e^(-bt) t^n -> spherical t^n image at p + b", PairDomain::OneSided, pr);
            tp.kernel = KernelVariant::Spherical;
            tp.level = r;
            tp.original = right_real([n, b](double t) { return std::exp(-b * t) * std::pow(t, n); }, -b,
                                     "damped t^n", 0, n);
            tp.image = [n, b](const CDNumber& p, const CDNumber& z) { return spherical_tpow_image(n, p + b, z); };
            tp.zeta_aware = true;
            tp.derivative = [n, b](double t) {
                const double d = n == 0 ? 0.0 : n * std::pow(t, n - 1);
                return real1(std::exp(-b * t) * (d - b * std::pow(t, n)));
            };
            tp.f0 = real1(n == 0 ? 1.0 : 0.0);
            if (b > 0) tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"mellin_exp", {{"b", 0}}, [](const Params& pr) {
            const double b = pr.at("b");
            auto tp = base("mellin_exp", "Mellin image of tau^b e^(-tau)", "tau^b e^(-tau) -> Gamma(p+b)",
                           PairDomain::Mellin, pr);
            tp.original = mellin_real([b](double tau) { return std::pow(tau, b) * std::exp(-tau); }, -b,
                                      std::numeric_limits<double>::infinity(), "tau^b e^(-tau)");
            tp.original.horizon_right = double_exp_horizon(1, b);
            tp.image = plain([b](const CDNumber& p) {
                return slice_extend([b](cplx z) { return complex_gamma(z + b); }, p);
            });
            tp.derivative = [b](double tau) {
                return real1((b == 0 ? 0.0 : b * std::pow(tau, b - 1)) * std::exp(-tau) -
                             std::pow(tau, b) * std::exp(-tau));
            };
            if (b > 0)
                tp.antiderivative = [b](double tau) {
                    return real1(lower_incomplete_gamma(b, tau));
                };
            if (b >= 0) tp.antiderivative_upper = [b](double tau) { return real1(-upper_incomplete_gamma(b, tau)); };
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"mellin_rational", {}, [](const Params& pr) {
            auto tp = base("mellin_rational", "Mellin image of (1+tau)^-1", "(1+tau)^-1 -> pi / sin(pi p)",
                           PairDomain::Mellin, pr);
            tp.original = mellin_real([](double tau) { return 1.0 / (1.0 + tau); }, 0, 1, "1/(1+tau)");
            tp.image = plain([](const CDNumber& p) {
                return slice_extend([](cplx z) { return kPi / std::sin(kPi * z); }, p);
            });
            tp.derivative = [](double tau) { return real1(-1.0 / ((1.0 + tau) * (1.0 + tau))); };
            tp.antiderivative_upper = [](double tau) { return real1(-std::log1p(1.0 / tau)); };
            tp.f_inf = real1(0);
            return tp;
        }});
        e.push_back({"mellin_gauss", {}, [](const Params& pr) {
            auto tp = base("mellin_gauss", "Mellin image of e^(-tau^2)", "e^(-tau^2) -> Gamma(p/2)/2",
                           PairDomain::Mellin, pr);
            tp.original = mellin_real([](double tau) { return std::exp(-tau * tau); }, 0,
                                      std::numeric_limits<double>::infinity(), "e^(-tau^2)");
            tp.original.horizon_right = double_exp_horizon(2, 0);
            tp.image = plain([](const CDNumber& p) {
                return slice_extend([](cplx z) { return 0.5 * complex_gamma(0.5 * z); }, p);
            });
            tp.derivative = [](double tau) { return real1(-2 * tau * std::exp(-tau * tau)); };
            tp.antiderivative_upper = [](double tau) { return real1(-0.5 * expint_e1(tau * tau)); };
            tp.f_inf = real1(0);
            return tp;
        }});
        return e;
    }();
    return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const Entry& e : registry()) out.push_back(e.name);
    return out;
}

TransformPair catalog_lookup(const std::string& name, const std::map<std::string, double>& params) {
    for (const Entry& e : registry()) {
        if (e.name != name) continue;
        Params pr = e.defaults;
        for (const auto& [k, v] : params) {
            if (!pr.count(k)) fail(ErrorKind::Input, "pair '" + name + "' has no parameter '" + k + "'");
            if (!std::isfinite(v)) fail(ErrorKind::Input, "non-finite parameter '" + k + "'");
            pr[k] = v;
        }
        TransformPair tp = e.build(pr);
        if (tp.rational) tp.rational->kernel.level = 2;
        return tp;
    }
    fail(ErrorKind::NotFound, "no catalog pair named '" + name + "'");
}

std::vector<TransformPair> catalog_list() {
    std::vector<TransformPair> out;
    for (const Entry& e : registry()) out.push_back(e.build(e.defaults));
    return out;
}

QuadratureResult forward_transform(const Original& f, PairDomain domain, const KernelSpec& kernel, const CDNumber& p,
                                   const CDNumber& zeta, double tol, double rel_tol) {
    if (domain == PairDomain::Mellin) return mellin_forward(f, p, zeta, tol, kernel, rel_tol);
    TransformRequest req;
    req.original = f;
    req.kernel = kernel;
    req.p = p;
    req.zeta = zeta;
    req.tol = tol;
    req.rel_tol = rel_tol;
    if (domain == PairDomain::OneSided) return laplace_one_sided(req);
    return laplace_two_sided(req);
}

QuadratureResult pair_forward(const TransformPair& pair, const CDNumber& p, const CDNumber& zeta, double tol,
                              std::optional<KernelVariant> kernel) {
    const int lev = std::max({2, p.level(), zeta.level()});
    const KernelSpec ks = make_kernel(kernel.value_or(pair.kernel), lev);
    return forward_transform(pair.original, pair.domain, ks, p.embed(lev), zeta.embed(lev), tol, 1e-3 * tol);
}

std::pair<double, double> probe_range(double s0, double s1) {
    if (std::isfinite(s0) && std::isfinite(s1)) {
        const double m = 0.15 * (s1 - s0);
        return {s0 + m, s1 - m};
    }
    if (std::isfinite(s0)) return {s0 + 0.3, s0 + 2.5};
    if (std::isfinite(s1)) return {s1 - 2.5, s1 - 0.3};
    return {-1.5, 1.5};
}

std::vector<Probe> make_probes(const TransformPair& pair, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto [lo, hi] = probe_range(pair.s0(), pair.s1());
    const int lev = std::max(2, pair.level);
    const std::size_t dim = std::size_t(1) << lev;
    std::vector<Probe> out;
    for (int k = 0; k < count; ++k) {
        Probe pr;
        pr.p = CDNumber(lev);
        pr.zeta = CDNumber(lev);
        pr.p[0] = lo + (hi - lo) * unit(rng);
        const int kind = (3 * k) / std::max(count, 1);  // 0 real, 1 slice, 2 full algebra
        const double mag = 0.2 + 1.8 * unit(rng);
        if (kind == 1) {
            pr.p[1] = unit(rng) < 0.5 ? mag : -mag;
        } else if (kind == 2) {
            CDNumber dir(lev);
            double n2 = 0;
            for (std::size_t j = 1; j < dim; ++j) {
                dir[j] = 2 * unit(rng) - 1;
                n2 += dir[j] * dir[j];
            }
            const double n = std::sqrt(n2);
            for (std::size_t j = 1; j < dim; ++j) pr.p[j] = mag * dir[j] / n;
            if (pair.zeta_aware)
                for (std::size_t j = 0; j < dim; ++j) pr.zeta[j] = 0.6 * unit(rng) - 0.3;
        }
        out.push_back(pr);
    }
    return out;
}

std::string probe_text(const Probe& pr) {
    std::string s = "p=" + to_string(pr.p);
    if (cd_norm(pr.zeta) != 0.0) s += ";zeta=" + to_string(pr.zeta);
    return s;
}

double relative_dev(const CDNumber& a0, const CDNumber& b0) {
    const int lev = common_level(a0, b0);
    const CDNumber a = a0.embed(lev), b = b0.embed(lev);
    double m = 0;
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    if (!std::isfinite(m)) return std::numeric_limits<double>::infinity();
    return m / std::max(cd_norm(b), 1e-3);
}

std::vector<CheckRecord> verify_pair(const TransformPair& pair, const std::vector<Probe>& probes, double tol) {
    std::vector<CheckRecord> out;
    const double eff = std::max(tol, pair.tol);
    for (const Probe& pr : probes) {
        CheckRecord rec;
        rec.name = pair.name;
        rec.probe = probe_text(pr);
        try {
            const CDNumber img = pair.eval_image(pr.p, pr.zeta);
            const double qtol = 1e-3 * eff * std::max(1e-3, cd_norm(img));
            const QuadratureResult q = pair_forward(pair, pr.p, pr.zeta, qtol);
            rec.dev = relative_dev(q.value, img);
            rec.err = q.err_estimate;
            rec.pass = rec.dev <= eff;
        } catch (const Error& e) {
            rec.pass = false;
            rec.dev = std::numeric_limits<double>::infinity();
            rec.note = std::string(error_kind_name(e.kind())) + ": " + e.what();
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace hct
