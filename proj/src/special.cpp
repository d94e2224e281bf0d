#include "hct/special.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_expint.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <mutex>

#include "hct/errors.hpp"

namespace hct {

CDNumber slice_extend(const std::function<cplx(cplx)>& phi, const CDNumber& p) {
    CDNumber im = p;
    im[0] = 0.0;
    const double r = cd_norm(im);
    const cplx w = phi(cplx(p[0], r));
    CDNumber out(std::max(p.level(), 1));
    out[0] = w.real();
    if (r > 0) {
        for (std::size_t j = 1; j < p.dim(); ++j) out[j] = w.imag() * im[j] / r;
    } else {
        out[1] = w.imag();
    }
    return out;
}

namespace {

// GSL's default handler aborts; every call here checks the returned status instead. The handler is
// process-global, so it is switched off once rather than swapped per call (calls run on several threads).
struct GslQuiet {
    GslQuiet() {
        static std::once_flag once;
        std::call_once(once, [] { gsl_set_error_handler_off(); });
    }
};

}  // namespace

cplx complex_gamma(cplx z) {
    GslQuiet quiet;
    gsl_sf_result lnr, arg;
    const int st = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    if (st != GSL_SUCCESS) fail(ErrorKind::Singularity, "Gamma function pole");
    return std::polar(std::exp(lnr.val), arg.val);
}

double sine_integral(double x) {
    GslQuiet quiet;
    return gsl_sf_Si(x);
}

double upper_incomplete_gamma(double a, double x) {
    GslQuiet quiet;
    gsl_sf_result r;
    if (gsl_sf_gamma_inc_e(a, x, &r) != GSL_SUCCESS) fail(ErrorKind::Domain, "incomplete gamma out of range");
    return r.val;
}

double lower_incomplete_gamma(double a, double x) {
    GslQuiet quiet;
    gsl_sf_result r;
    if (gsl_sf_gamma_inc_P_e(a, x, &r) != GSL_SUCCESS) fail(ErrorKind::Domain, "incomplete gamma out of range");
    return r.val * std::tgamma(a);
}

double expint_e1(double x) {
    GslQuiet quiet;
    gsl_sf_result r;
    if (gsl_sf_expint_E1_e(x, &r) != GSL_SUCCESS) fail(ErrorKind::Domain, "E1 out of range");
    return r.val;
}

}  // namespace hct
