#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hct/cdnumber.hpp"
#include "hct/inversion.hpp"
#include "hct/kernel.hpp"
#include "hct/transforms.hpp"

namespace hct {

enum class PairDomain { OneSided, TwoSided, Mellin };

const char* pair_domain_name(PairDomain d);

using TimeFn = std::function<CDNumber(double)>;
using ImageZetaFn = std::function<CDNumber(const CDNumber& p, const CDNumber& zeta)>;

struct TransformPair {
    std::string name;
    std::string provenance;
    std::string description;
    PairDomain domain = PairDomain::OneSided;
    KernelVariant kernel = KernelVariant::Linear;
    int level = 2;  // algebra level of the probes
    std::map<std::string, double> params;
    Original original;
    // Closed-form image. zeta_aware images accept any zeta; the others are the zeta = 0 image.
    ImageZetaFn image;
    bool zeta_aware = false;
    std::optional<RationalImage> rational;

    // Optional data used by the operational rules.
    TimeFn derivative;      // f'(t) (g'(tau) for Mellin originals)
    TimeFn antiderivative;        // one-sided: int_0^t f; two-sided: int_{-inf}^t f; Mellin: int_0^tau g(a)/a da
    TimeFn antiderivative_upper;  // two-sided: int_{+inf}^t f; Mellin: int_{+inf}^tau g(a)/a da
    std::optional<CDNumber> f0;     // f(0+)
    std::optional<CDNumber> f_inf;  // lim f(t), t -> +inf
    bool real_valued = true;
    bool exceptional = false;
    bool conditional = false;
    double tol = 1e-6;

    double s0() const { return original.s0; }
    double s1() const { return original.s1; }
    CDNumber eval_image(const CDNumber& p, const CDNumber& zeta) const;
};

std::vector<std::string> catalog_names();
// Builds a pair; params override the defaults by name (unknown names are an input error).
TransformPair catalog_lookup(const std::string& name, const std::map<std::string, double>& params = {});
std::vector<TransformPair> catalog_list();

// Forward transform of the pair's original with the given kernel (the pair's own kernel by default).
QuadratureResult pair_forward(const TransformPair& pair, const CDNumber& p, const CDNumber& zeta, double tol,
                              std::optional<KernelVariant> kernel = std::nullopt);
QuadratureResult forward_transform(const Original& f, PairDomain domain, const KernelSpec& kernel, const CDNumber& p,
                                   const CDNumber& zeta, double tol, double rel_tol = 0.0);

// int_0^inf t^n e^{-a0 t} cos(a1 t + beta) dt and the sine analogue, via the binomial sums.
std::pair<double, double> eval_Tn_Sn(int n, double alpha0, double alpha1, double beta);

// Spherical-kernel image of t^n by product-to-sum expansion of exp(-M) (r <= 4).
CDNumber spherical_tpow_image(int n, const CDNumber& p, const CDNumber& zeta);
// The quaternion formula for the same image exactly as printed (r = 2).
CDNumber spherical_tpow_printed(int n, const CDNumber& p, const CDNumber& zeta);

// Image of exp(zeta t) for the linear kernel, derived in closed form, and the printed variant.
CDNumber exp_quat_image(const CDNumber& p, const CDNumber& zeta);
CDNumber exp_quat_printed(const CDNumber& p, const CDNumber& zeta);

struct Probe {
    CDNumber p;
    CDNumber zeta;
};

// Interval of Re p used for probes inside the strip (s0, s1).
std::pair<double, double> probe_range(double s0, double s1);

// Seeded probe points inside the pair's strip: real, slice-complex and full-algebra points.
std::vector<Probe> make_probes(const TransformPair& pair, int count, std::uint64_t seed);

struct CheckRecord {
    std::string name;
    std::string probe;
    double dev = 0.0;
    double err = 0.0;  // quadrature error estimate behind the check
    bool pass = false;
    bool skipped = false;
    std::string note;
};

std::string probe_text(const Probe& pr);
double relative_dev(const CDNumber& a, const CDNumber& b);

std::vector<CheckRecord> verify_pair(const TransformPair& pair, const std::vector<Probe>& probes, double tol);

}  // namespace hct
