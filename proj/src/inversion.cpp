#include "hct/inversion.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "hct/polyroots.hpp"

namespace hct {

using cplx = std::complex<double>;

int RationalImage::level() const {
    int lev = kernel.level;
    for (const CDNumber& c : numerator) lev = std::max(lev, c.level());
    return lev;
}

void validate(const RationalImage& R) {
    const std::vector<double> d = trim_poly(R.denominator);
    if (d.size() < 2) fail(ErrorKind::Contract, "denominator degree must be at least 1");
    std::size_t nn = R.numerator.size();
    while (nn > 0 && cd_norm(R.numerator[nn - 1]) == 0.0) --nn;
    if (nn >= d.size()) fail(ErrorKind::Contract, "numerator degree must be below the denominator degree");
    for (double x : d)
        if (!std::isfinite(x)) fail(ErrorKind::Input, "non-finite denominator coefficient");
    for (const CDNumber& c : R.numerator)
        if (!c.all_finite()) fail(ErrorKind::Input, "non-finite numerator coefficient");
}

CDNumber RationalImage::operator()(const CDNumber& p0) const {
    const int lev = std::max(level(), p0.level());
    const CDNumber p = p0.embed(lev);
    // D(p) by Horner; real coefficients keep everything in the slice of p
    const std::vector<double> d = trim_poly(denominator);
    CDNumber D(lev);
    for (std::size_t k = d.size(); k-- > 0;) {
        D = D * p;
        D[0] += d[k];
    }
    if (cd_norm(D) == 0.0) fail(ErrorKind::Singularity, "image evaluated at a pole");
    CDNumber pk_dinv = cd_inverse(D);
    CDNumber out(lev);
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        if (k > 0) pk_dinv = p * pk_dinv;
        out += numerator[k] * pk_dinv;
    }
    return out;
}

namespace {

using Series = std::vector<cplx>;

Series mul(const Series& a, const Series& b) {
    Series r(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1;
    for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
    return r;
}

}  // namespace

std::vector<double> residue_basis(const std::vector<double>& den, int max_power, double t) {
    const std::vector<double> d = trim_poly(den);
    const auto clusters = find_root_clusters(d);
    const double lead = d.back();
    std::vector<double> h(std::size_t(max_power) + 1, 0.0);
    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        const cplx z = clusters[ci].z;
        const int m = clusters[ci].multiplicity;
        Series base(m, 0.0);
        // e^{zt} e^{t delta}
        const cplx ezt = std::exp(z * t);
        double fact = 1;
        for (int j = 0; j < m; ++j) {
            if (j > 0) fact *= j;
            base[j] = ezt * std::pow(t, j) / fact;
        }
        for (std::size_t cj = 0; cj < clusters.size(); ++cj) {
            if (cj == ci) continue;
            const cplx dz = z - clusters[cj].z;
            const int mi = clusters[cj].multiplicity;
            Series q(m, 0.0);
            for (int j = 0; j < m; ++j)
                q[j] = std::pow(dz, -mi - j) * (j % 2 ? -1.0 : 1.0) * binom(mi + j - 1, j);
            base = mul(base, q);
        }
        for (int k = 0; k <= max_power; ++k) {
            Series pk(m, 0.0);
            for (int j = 0; j < m && j <= k; ++j) pk[j] = binom(k, j) * std::pow(z, k - j);
            const Series s = mul(base, pk);
            h[k] += (s[m - 1] / lead).real();
        }
    }
    return h;
}

InversionResult residue_invert_rational(const RationalImage& R, double t) {
    validate(R);
    if (R.kernel.variant != KernelVariant::Linear)
        fail(ErrorKind::Unsupported, "residue inversion is implemented for the linear kernel");
    InversionResult res;
    const int lev = R.level();
    res.value = CDNumber(lev);
    if (t < 0) return res;
    const int nmax = int(R.numerator.size()) - 1;
    if (nmax < 0) return res;
    const std::vector<double> h = residue_basis(R.denominator, nmax, t);
    double mag = 0;
    for (int k = 0; k <= nmax; ++k) {
        res.value += R.numerator[k] * h[k];
        mag += cd_norm(R.numerator[k]) * std::abs(h[k]);
    }
    res.err_estimate = 1e-13 * std::max(mag, 1.0);
    return res;
}

namespace {

void check_line(const CDNumber& S, double a, double s0, double s1) {
    if (S[0] != 0.0 || std::abs(cd_norm(S) - 1.0) > 1e-12)
        fail(ErrorKind::Contract, "S must be a unit purely imaginary number");
    if (!(a > s0) || !(a < s1))
        fail(ErrorKind::Domain, "abscissa " + std::to_string(a) + " outside the convergence domain");
}

InversionResult finish(const LadderResult& lr, const CDNumber& S, double t) {
    const double two_pi = 2 * std::numbers::pi;
    InversionResult r;
    r.value = (lr.line.value * cd_conj(S)) / two_pi;
    r.err_estimate = lr.line.err_estimate / two_pi;
    r.theta_max = lr.theta_max;
    r.jump_midpoint = (t == 0.0);
    return r;
}

}  // namespace

InversionResult bromwich_invert(const ImageFn& F, double a, const CDNumber& S, double t, const KernelSpec& kernel,
                                double tol, double s0, double s1) {
    check_line(S, a, s0, s1);
    if (kernel.variant == KernelVariant::Spherical) {
        // only lines inside the i1 slice, where the spherical phase equals the linear one
        for (std::size_t j = 2; j < S.dim(); ++j)
            if (S[j] != 0.0) fail(ErrorKind::Unsupported, "spherical-kernel inversion off the i1 slice");
    }
    const double two_pi = 2 * std::numbers::pi;
    try {
        LadderResult lr = bromwich_ladder(F, a, S, t, two_pi * tol, kernel);
        return finish(lr, S, t);
    } catch (const AccuracyError& e) {
        CDNumber best(int(std::log2(double(e.best_estimate().size()))), e.best_estimate());
        CDNumber v = (best * cd_conj(S.embed(best.level()))) / two_pi;
        throw AccuracyError(std::string("Bromwich inversion: ") + e.what(), v.coeffs(), e.err_estimate() / two_pi);
    }
}

SeriesResult series_invert(const LaurentTail& tail, double t) {
    if (t < 0) fail(ErrorKind::Contract, "series inversion needs t >= 0");
    if (!(tail.radius > 0)) fail(ErrorKind::Contract, "Laurent radius must be positive");
    SeriesResult r;
    int lev = 1;
    for (const CDNumber& c : tail.coeffs) lev = std::max(lev, c.level());
    r.value = CDNumber(lev);
    double term = 1.0;  // t^{l-1}/(l-1)!
    double C = 0;
    double Rl = 1;
    for (std::size_t l = 1; l <= tail.coeffs.size(); ++l) {
        if (l > 1) term *= t / double(l - 1);
        Rl *= tail.radius;
        r.value += tail.coeffs[l - 1] * term;
        C = std::max(C, cd_norm(tail.coeffs[l - 1]) / Rl);
        if (!std::isfinite(term)) fail(ErrorKind::Divergence, "series term overflow");
    }
    // sum_{l > L} C R^l t^{l-1}/(l-1)!  <=  C R (Rt)^L / L! e^{Rt}
    const double L = double(tail.coeffs.size());
    const double Rt = tail.radius * t;
    if (Rt == 0.0)
        r.remainder_bound = 0.0;
    else
        r.remainder_bound = C * tail.radius * std::exp(L * std::log(Rt) - std::lgamma(L + 1) + Rt);
    return r;
}

InversionResult mellin_invert(const ImageFn& G, double w, const CDNumber& S, double tau, double tol, double s0,
                              double s1, const KernelSpec& kernel) {
    check_line(S, w, s0, s1);
    if (!(tau > 0)) fail(ErrorKind::Contract, "tau must be positive");
    const double lt = std::log(tau);
    const int lev = std::max(S.level(), kernel.level);
    const CDNumber Sl = S.embed(lev);
    KernelSpec ks = kernel;
    ks.level = lev;
    const CDNumber zero(lev);
    Integrand g = [&](double th) {
        CDNumber p = Sl * th;
        p[0] = w;
        return (G(p) * kernel_weight_inverse(ks, -p, lt, zero)) * Sl;
    };
    const double two_pi = 2 * std::numbers::pi;
    LadderResult lr = line_ladder(g, std::abs(lt), two_pi * tol);
    InversionResult r = finish(lr, Sl, 1.0);
    r.jump_midpoint = false;
    return r;
}

}  // namespace hct
