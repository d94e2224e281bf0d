#include "hct/cdnumber.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

namespace hct {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Contract: return "contract";
        case ErrorKind::Singularity: return "singularity";
        case ErrorKind::Branch: return "branch";
        case ErrorKind::Divergence: return "divergence";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Accuracy: return "accuracy";
        case ErrorKind::Input: return "input";
        case ErrorKind::NotFound: return "not_found";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Conditioning: return "conditioning";
        case ErrorKind::Usage: return "usage";
    }
    return "unknown";
}

namespace {

constexpr int kMaxDim = 1 << kMaxLevel;

// Signs of basis products, filled level by level from the doubling rule
// (a,b)(c,d) = (ac - d~b, da + bc~).
struct SignTable {
    std::vector<std::int8_t> s;
    SignTable() : s(kMaxDim * kMaxDim, 0) {
        s[0] = 1;
        for (int lev = 1; lev <= kMaxLevel; ++lev) {
            const int h = 1 << (lev - 1);
            auto conj = [](int k) { return k == 0 ? 1 : -1; };
            // Entries with both indices below h already hold the lower level.
            for (int a = 0; a < 2 * h; ++a) {
                for (int b = 0; b < 2 * h; ++b) {
                    if (a < h && b < h) continue;
                    int v;
                    if (a < h) {
                        v = at(b - h, a);
                    } else if (b < h) {
                        v = at(a - h, b) * conj(b);
                    } else {
                        v = -conj(b - h) * at(b - h, a - h);
                    }
                    s[a * kMaxDim + b] = static_cast<std::int8_t>(v);
                }
            }
        }
    }
    int at(int a, int b) const { return s[a * kMaxDim + b]; }
};

const SignTable& table() {
    static const SignTable t;
    return t;
}

void check_level(int level) {
    if (level < 1 || level > kMaxLevel)
        fail(ErrorKind::Contract, "level must be in 1.." + std::to_string(kMaxLevel) +
                                      ", got " + std::to_string(level));
}

}  // namespace

int basis_sign(int a, int b) { return table().at(a, b); }

CDNumber::CDNumber(int level) : level_(level) {
    check_level(level);
    c_.assign(std::size_t(1) << level, 0.0);
}

CDNumber::CDNumber(int level, std::initializer_list<double> coeffs) : CDNumber(level) {
    if (coeffs.size() > c_.size()) fail(ErrorKind::Contract, "too many coefficients for level");
    std::size_t j = 0;
    for (double x : coeffs) c_[j++] = x;
}

CDNumber::CDNumber(int level, const std::vector<double>& coeffs) : CDNumber(level) {
    if (coeffs.size() > c_.size()) fail(ErrorKind::Contract, "too many coefficients for level");
    for (std::size_t j = 0; j < coeffs.size(); ++j) c_[j] = coeffs[j];
}

CDNumber CDNumber::real(double x, int level) {
    CDNumber r(level);
    r.c_[0] = x;
    return r;
}

CDNumber CDNumber::unit(int index, int level) {
    CDNumber r(level);
    if (index < 0 || std::size_t(index) >= r.dim())
        fail(ErrorKind::Contract, "unit index out of range for level");
    r.c_[index] = 1.0;
    return r;
}

CDNumber CDNumber::imag() const {
    CDNumber r = *this;
    r.c_[0] = 0.0;
    return r;
}

bool CDNumber::is_real() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0.0) return false;
    return true;
}

bool CDNumber::all_finite() const {
    for (double x : c_)
        if (!std::isfinite(x)) return false;
    return true;
}

CDNumber CDNumber::embed(int level) const {
    if (level < level_) fail(ErrorKind::Contract, "cannot embed into a lower level");
    if (level == level_) return *this;
    CDNumber r(level);
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j];
    return r;
}

CDNumber CDNumber::operator-() const {
    CDNumber r = *this;
    for (double& x : r.c_) x = -x;
    return r;
}

CDNumber& CDNumber::operator+=(const CDNumber& o) {
    if (o.level_ > level_) *this = embed(o.level_);
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CDNumber& CDNumber::operator-=(const CDNumber& o) {
    if (o.level_ > level_) *this = embed(o.level_);
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CDNumber& CDNumber::operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
}

CDNumber& CDNumber::operator/=(double s) {
    for (double& x : c_) x /= s;
    return *this;
}

CDNumber operator+(const CDNumber& a, const CDNumber& b) {
    CDNumber r = a.embed(common_level(a, b));
    r += b;
    return r;
}

CDNumber operator-(const CDNumber& a, const CDNumber& b) {
    CDNumber r = a.embed(common_level(a, b));
    r -= b;
    return r;
}

CDNumber operator*(const CDNumber& a, const CDNumber& b) { return cd_mul(a, b); }
CDNumber operator*(double s, const CDNumber& a) {
    CDNumber r = a;
    r *= s;
    return r;
}
CDNumber operator*(const CDNumber& a, double s) { return s * a; }
CDNumber operator/(const CDNumber& a, double s) {
    CDNumber r = a;
    r /= s;
    return r;
}
CDNumber operator+(const CDNumber& a, double s) {
    CDNumber r = a;
    r[0] += s;
    return r;
}
CDNumber operator+(double s, const CDNumber& a) { return a + s; }
CDNumber operator-(const CDNumber& a, double s) { return a + (-s); }
CDNumber operator-(double s, const CDNumber& a) { return (-a) + s; }

int common_level(const CDNumber& a, const CDNumber& b) {
    return a.level() > b.level() ? a.level() : b.level();
}

CDNumber cd_mul(const CDNumber& a0, const CDNumber& b0) {
    const int lev = common_level(a0, b0);
    const int na = int(a0.dim()), nb = int(b0.dim());
    const SignTable& t = table();
    CDNumber r(lev);
    double* out = r.data();
    const double* x = a0.data();
    const double* y = b0.data();
    for (int i = 0; i < na; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        const std::int8_t* row = &t.s[std::size_t(i) * kMaxDim];
        for (int j = 0; j < nb; ++j) out[i ^ j] += row[j] * xi * y[j];
    }
    return r;
}

CDNumber cd_conj(const CDNumber& a) {
    CDNumber r = -a;
    r[0] = a[0];
    return r;
}

double cd_norm2(const CDNumber& a) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) s += a[j] * a[j];
    return s;
}

double cd_norm(const CDNumber& a) {
    double scale = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) scale = std::max(scale, std::abs(a[j]));
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const double v = a[j] / scale;
        s += v * v;
    }
    return scale * std::sqrt(s);
}

CDNumber cd_inverse(const CDNumber& a) {
    const double n = cd_norm(a);
    if (n == 0.0) fail(ErrorKind::Singularity, "inverse of zero");
    CDNumber r = cd_conj(a);
    r /= n;
    r /= n;
    return r;
}

CDNumber cd_div_right(const CDNumber& a, const CDNumber& b) { return a * cd_inverse(b); }
CDNumber cd_div_left(const CDNumber& a, const CDNumber& b) { return cd_inverse(a) * b; }

double cd_dist(const CDNumber& a, const CDNumber& b) { return cd_norm(a - b); }

CDNumber cd_exp(const CDNumber& a) {
    const double e = std::exp(a[0]);
    const CDNumber v = a.imag();
    const double n = cd_norm(v);
    if (n == 0.0) return CDNumber::real(e, a.level());
    CDNumber r = v * (e * std::sin(n) / n);
    r[0] = e * std::cos(n);
    return r;
}

CDNumber cd_ln_principal(const CDNumber& a) {
    const double m = cd_norm(a);
    if (m == 0.0) fail(ErrorKind::Singularity, "logarithm of zero");
    const CDNumber v = a.imag();
    const double n = cd_norm(v);
    if (n == 0.0) {
        if (a[0] < 0.0) fail(ErrorKind::Branch, "logarithm of a negative real has no principal axis");
        return CDNumber::real(std::log(m), a.level());
    }
    const double theta = std::atan2(n, a[0]);
    CDNumber r = v * (theta / n);
    r[0] = std::log(m);
    return r;
}

CDNumber cd_pow_int(const CDNumber& a, int n) {
    if (n == 0) return CDNumber::real(1.0, a.level());
    if (n < 0) return cd_inverse(cd_pow_int(a, -n));
    // Left-to-right repeated multiplication; power associativity makes the
    // grouping irrelevant.
    CDNumber r = a;
    for (int k = 1; k < n; ++k) r = r * a;
    return r;
}

CDNumber cd_pow_real(const CDNumber& a, double s) {
    if (s == std::floor(s) && std::abs(s) <= 64.0) {
        if (s < 0 && cd_norm(a) == 0.0) fail(ErrorKind::Singularity, "negative power of zero");
        return cd_pow_int(a, int(s));
    }
    if (cd_norm(a) == 0.0) {
        if (s > 0) return CDNumber(a.level());
        fail(ErrorKind::Singularity, "non-positive power of zero");
    }
    return cd_exp(s * cd_ln_principal(a));
}

PolarForm cd_polar(const CDNumber& a) {
    const double m = cd_norm(a);
    if (m == 0.0) fail(ErrorKind::Singularity, "polar form of zero");
    PolarForm pf;
    pf.modulus = m;
    const CDNumber v = a.imag();
    const double n = cd_norm(v);
    if (n == 0.0) {
        pf.axis_angle = CDNumber(a.level());
        if (a[0] < 0.0) pf.axis_angle[1] = std::numbers::pi;
        return pf;
    }
    pf.axis_angle = v * (std::atan2(n, a[0]) / n);
    pf.axis_angle[0] = 0.0;
    return pf;
}

double cd_component(const CDNumber& h, int j) {
    const int r = h.level();
    if (r < 2) fail(ErrorKind::Contract, "component extraction needs level >= 2");
    const int n = 1 << r;
    if (j < 0 || j >= n) fail(ErrorKind::Contract, "component index out of range");
    CDNumber acc = -h;
    for (int k = 1; k < n; ++k) {
        const CDNumber ik = CDNumber::unit(k, r);
        acc += ik * (h * cd_conj(ik));
    }
    const CDNumber c = acc / double(n - 2);
    if (j == 0) return ((h + c) / 2.0)[0];
    const CDNumber ij = CDNumber::unit(j, r);
    const CDNumber hj = (-(h * ij) + ij * c) / 2.0;
    return hj[0];
}

void algebra_self_test() {
    auto e = [](int k) { return CDNumber::unit(k, 2); };
    auto same = [](const CDNumber& a, const CDNumber& b) { return cd_dist(a, b) == 0.0; };
    if (!same(e(1) * e(2), e(3)) || !same(e(2) * e(3), e(1)) || !same(e(3) * e(1), e(2)) ||
        !same(e(2) * e(1), -e(3)))
        fail(ErrorKind::Contract, "quaternion table does not match i1i2=i3, i2i3=i1, i3i1=i2");
    for (int r = 1; r < kMaxLevel; ++r) {
        const int h = 1 << r;
        for (int j = 0; j < h; ++j) {
            if (basis_sign(j, h) != 1)
                fail(ErrorKind::Contract, "doubling generator relation i_j i_2^r = i_(2^r+j) violated");
        }
    }
}

std::string to_string(const CDNumber& a) {
    std::ostringstream os;
    os.precision(17);
    os << '[';
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (j) os << ',';
        os << a[j];
    }
    os << ']';
    return os.str();
}

}  // namespace hct
