#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hct/errors.hpp"

namespace hct {

constexpr int kMaxLevel = 8;

// Element of the Cayley-Dickson algebra A_r, stored as 2^r real coordinates.
class CDNumber {
public:
    using Storage = boost::container::small_vector<double, 16>;

    CDNumber() : CDNumber(1) {}
    explicit CDNumber(int level);
    CDNumber(int level, std::initializer_list<double> coeffs);
    CDNumber(int level, const std::vector<double>& coeffs);

    static CDNumber real(double x, int level = 1);
    static CDNumber unit(int index, int level);

    int level() const { return level_; }
    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t j) const { return c_[j]; }
    double& operator[](std::size_t j) { return c_[j]; }
    const double* data() const { return c_.data(); }
    double* data() { return c_.data(); }
    std::vector<double> coeffs() const { return {c_.begin(), c_.end()}; }

    double re() const { return c_[0]; }
    CDNumber imag() const;
    bool is_real() const;
    bool all_finite() const;

    // Lower levels are embedded as the leading coordinates.
    CDNumber embed(int level) const;

    CDNumber operator-() const;
    CDNumber& operator+=(const CDNumber& o);
    CDNumber& operator-=(const CDNumber& o);
    CDNumber& operator*=(double s);
    CDNumber& operator/=(double s);

private:
    int level_;
    Storage c_;
};

CDNumber operator+(const CDNumber& a, const CDNumber& b);
CDNumber operator-(const CDNumber& a, const CDNumber& b);
CDNumber operator*(const CDNumber& a, const CDNumber& b);
CDNumber operator*(double s, const CDNumber& a);
CDNumber operator*(const CDNumber& a, double s);
CDNumber operator/(const CDNumber& a, double s);
CDNumber operator+(const CDNumber& a, double s);
CDNumber operator+(double s, const CDNumber& a);
CDNumber operator-(const CDNumber& a, double s);
CDNumber operator-(double s, const CDNumber& a);

struct PolarForm {
    double modulus = 0.0;
    CDNumber axis_angle;
};

// Sign of i_a i_b; the product itself is sign * i_{a xor b}.
int basis_sign(int a, int b);

CDNumber cd_mul(const CDNumber& a, const CDNumber& b);
CDNumber cd_conj(const CDNumber& a);
double cd_norm(const CDNumber& a);
double cd_norm2(const CDNumber& a);
CDNumber cd_inverse(const CDNumber& a);
CDNumber cd_exp(const CDNumber& a);
CDNumber cd_ln_principal(const CDNumber& a);
CDNumber cd_pow_real(const CDNumber& a, double s);
CDNumber cd_pow_int(const CDNumber& a, int n);
PolarForm cd_polar(const CDNumber& a);
double cd_component(const CDNumber& h, int j);

// a * b^{-1} and a^{-1} * b.
CDNumber cd_div_right(const CDNumber& a, const CDNumber& b);
CDNumber cd_div_left(const CDNumber& a, const CDNumber& b);

double cd_dist(const CDNumber& a, const CDNumber& b);
int common_level(const CDNumber& a, const CDNumber& b);

// Checks the quaternion table and i_j i_{2^r} = i_{2^r + j}; throws on mismatch.
void algebra_self_test();

std::string to_string(const CDNumber& a);

}  // namespace hct
