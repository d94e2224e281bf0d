#include <cmath>
#include <vector>

#include "hct/catalog.hpp"
#include "hct/errors.hpp"

namespace hct {

std::pair<double, double> eval_Tn_Sn(int n, double alpha0, double alpha1, double beta) {
    if (n < 0) fail(ErrorKind::Contract, "n must be non-negative");
    if (!(alpha0 > 0)) fail(ErrorKind::Divergence, "T_n/S_n need alpha0 > 0");
    // A + iB = (alpha0 + i alpha1)^{n+1} by the binomial sum
    double A = 0, B = 0;
    double binom = 1;
    for (int k = 0; k <= n + 1; ++k) {
        if (k > 0) binom = binom * double(n + 2 - k) / double(k);
        const double term = binom * std::pow(alpha0, n + 1 - k) * std::pow(alpha1, k);
        switch (k % 4) {
            case 0: A += term; break;
            case 1: B += term; break;
            case 2: A -= term; break;
            case 3: B -= term; break;
        }
    }
    double fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double den = std::pow(alpha0 * alpha0 + alpha1 * alpha1, n + 1);
    const double c = std::cos(beta), s = std::sin(beta);
    return {fact * (c * A - s * B) / den, fact * (s * A + c * B) / den};
}

namespace {

// coef * (cos | sin)(alpha t + beta)
struct TrigTerm {
    double coef;
    bool is_sin;
    double alpha;
    double beta;
};

std::vector<TrigTerm> times(const std::vector<TrigTerm>& terms, bool is_sin, double a, double b) {
    std::vector<TrigTerm> out;
    out.reserve(2 * terms.size());
    for (const TrigTerm& x : terms) {
        const double ap = x.alpha + a, bp = x.beta + b;
        const double am = x.alpha - a, bm = x.beta - b;
        const double h = 0.5 * x.coef;
        if (!x.is_sin && !is_sin) {
            out.push_back({h, false, am, bm});
            out.push_back({h, false, ap, bp});
        } else if (x.is_sin && is_sin) {
            out.push_back({h, false, am, bm});
            out.push_back({-h, false, ap, bp});
        } else if (x.is_sin && !is_sin) {
            out.push_back({h, true, ap, bp});
            out.push_back({h, true, am, bm});
        } else {
            out.push_back({h, true, ap, bp});
            out.push_back({-h, true, am, bm});
        }
    }
    return out;
}

double integrate_terms(const std::vector<TrigTerm>& terms, int n, double p0) {
    double s = 0;
    for (const TrigTerm& x : terms) {
        const auto ts = eval_Tn_Sn(n, p0, x.alpha, x.beta);
        s += x.coef * (x.is_sin ? ts.second : ts.first);
    }
    return s;
}

}  // namespace

CDNumber spherical_tpow_image(int n, const CDNumber& p0, const CDNumber& zeta0) {
    const int r = std::max({2, p0.level(), zeta0.level()});
    if (r > 4) fail(ErrorKind::Unsupported, "spherical t^n image implemented for r <= 4");
    const CDNumber p = p0.embed(r), zeta = zeta0.embed(r);
    const std::size_t N = p.dim();
    CDNumber out(r);
    // real part: cos f1
    out[0] = integrate_terms({{1.0, false, p[1], zeta[1]}}, n, p[0]);
    // i_k part: -sin f1 sin f2 ... sin f_k cos f_{k+1}; the last one has only sines
    std::vector<TrigTerm> prefix{{-1.0, true, p[1], zeta[1]}};
    for (std::size_t k = 1; k < N; ++k) {
        if (k + 1 < N)
            out[k] = integrate_terms(times(prefix, false, p[k + 1], zeta[k + 1]), n, p[0]);
        else
            out[k] = integrate_terms(prefix, n, p[0]);
        if (k + 1 < N) prefix = times(prefix, true, p[k + 1], zeta[k + 1]);
    }
    return out * std::exp(-zeta[0]);
}

CDNumber spherical_tpow_printed(int n, const CDNumber& p0, const CDNumber& zeta0) {
    const CDNumber p = p0.embed(2), zeta = zeta0.embed(2);
    auto T = [&](double a1, double b) { return eval_Tn_Sn(n, p[0], a1, b).first; };
    auto S = [&](double a1, double b) { return eval_Tn_Sn(n, p[0], a1, b).second; };
    CDNumber out(2);
    out[0] = T(p[1], zeta[1]);
    for (int v = 1; v <= 2; ++v) {
        const double sv = (v % 2) ? -1.0 : 1.0;
        out[1] -= 0.5 * S(p[1] + sv * p[2], zeta[1] + sv * zeta[2]);
        for (int u = 1; u <= 2; ++u) {
            const double su = (u % 2) ? -1.0 : 1.0;
            const double a = p[3] + su * (p[1] + sv * p[2]);
            const double b = zeta[3] + su * (zeta[1] + sv * zeta[2]);
            out[2] -= 0.25 * sv * T(a, b);
            out[3] -= 0.25 * (-sv) * S(a, b);
        }
    }
    return out * std::exp(-zeta[0]);
}

namespace {

CDNumber unit_or_i1(const CDNumber& v) {
    const double n = cd_norm(v);
    if (n == 0.0) return CDNumber::unit(1, v.level());
    return v / n;
}

}  // namespace

CDNumber exp_quat_image(const CDNumber& p0, const CDNumber& zeta0) {
    const int lev = std::max({2, p0.level(), zeta0.level()});
    if (lev > 2) fail(ErrorKind::Unsupported, "exp(zeta t) image implemented for quaternions");
    const CDNumber p = p0.embed(2), zeta = zeta0.embed(2);
    const double d = p[0] - zeta[0];
    if (!(d > 0)) fail(ErrorKind::Domain, "exp(zeta t) image needs Re p > Re zeta");
    const CDNumber zi = zeta.imag(), pi = p.imag();
    const double Z = cd_norm(zi), Q = cd_norm(pi);
    const CDNumber N1 = unit_or_i1(zi), P = unit_or_i1(pi);
    const double a = Q + Z, b = Q - Z;
    const double ra = 1.0 / (d * d + a * a), rb = 1.0 / (d * d + b * b);
    const double X1 = 0.5 * (d * rb + d * ra);
    const double X2 = 0.5 * (a * ra + b * rb);
    const double X3 = 0.5 * (a * ra - b * rb);
    const double X4 = 0.5 * (d * rb - d * ra);
    CDNumber F = CDNumber::real(X1, 2);
    F -= P * X2;
    F += N1 * X3;
    F -= (N1 * P) * X4;
    return F;
}

CDNumber exp_quat_printed(const CDNumber& p0, const CDNumber& zeta0) {
    const CDNumber p = p0.embed(2), zeta = zeta0.embed(2);
    const double c = zeta[0] - p[0];
    const CDNumber zi = zeta.imag(), pi = p.imag();
    const double Z = cd_norm(zi), Q = cd_norm(pi);
    const CDNumber N1 = unit_or_i1(zi);
    double p1 = 0;
    for (int j = 1; j < 4; ++j) p1 += pi[j] * N1[j];
    const CDNumber rest = pi - N1 * p1;
    const double p2 = cd_norm(rest);
    const CDNumber N2 = unit_or_i1(rest);
    const double a = Q + Z, b = Q - Z;
    const double ra = 1.0 / (c * c + a * a), rb = 1.0 / (c * c + b * b);
    const double q1 = Q > 0 ? p1 / Q : 0.0, q2 = Q > 0 ? p2 / Q : 0.0;
    CDNumber F = CDNumber::real(c * (ra * (1 - q1) + rb * (1 + q1)), 2);
    F += N1 * ((a * ra + b * rb) * (1 - q1));
    F -= N2 * ((a * ra + b * rb) * q2);
    F -= (N1 * N2) * (c * (ra - rb) * q2);
    return F * 0.5;
}

}  // namespace hct
