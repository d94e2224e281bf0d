#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hct/catalog.hpp"
#include "hct/cdnumber.hpp"
#include "hct/inversion.hpp"

namespace hct {

// QuaternionCoeffs: a_j in H (r = 2). RealCoeffs: a_j real, any r.
enum class ValueDomain { QuaternionCoeffs, RealCoeffs };

// f(t) = left * pair(t) for a catalog pair, or an arbitrary one-sided original (image by quadrature).
// Neither set means f = 0.
struct Forcing {
    std::optional<TransformPair> pair;
    CDNumber left = CDNumber::real(1, 1);
    std::optional<Original> original;

    CDNumber operator()(double t) const;
    bool is_zero() const { return !pair && !original; }
};

// L[x] = x^(n) a_0 + ... + x' a_{n-1} + x a_n = f,  x^(j)(0) = x_j.
struct ODEProblem {
    std::vector<CDNumber> coeffs;  // a_0 .. a_n
    ValueDomain domain = ValueDomain::RealCoeffs;
    std::vector<CDNumber> ics;  // x_0 .. x_{n-1}
    Forcing forcing;

    int order() const { return int(coeffs.size()) - 1; }
    int level() const;
};

void validate(const ODEProblem& prob);

// x_j (p^m a_k)
struct BTerm {
    CDNumber x;
    int power = 0;
    CDNumber a;
};

// X(p) A(p) = F(p) + B(p)
struct ImageEquation {
    int order = 0;
    int level = 2;
    std::vector<CDNumber> A;  // a_k multiplies p^{n-k} on the right
    std::vector<BTerm> B;
    ImageFn F;                               // empty when f = 0
    std::optional<RationalImage> F_rational;  // when the forcing image is rational
    double forcing_s0 = -std::numeric_limits<double>::infinity();

    CDNumber eval_A(const CDNumber& p) const;
    CDNumber eval_B(const CDNumber& p) const;
    bool real_A() const;
    // coefficients of A in ascending powers (real A only)
    std::vector<double> A_ascending() const;
    // coefficients of B in ascending powers, x_j a_k collected (real A only)
    std::vector<CDNumber> B_ascending() const;
};

ImageEquation build_image_equation(const ODEProblem& prob);

struct ImageSolution {
    ImageFn X;                              // (F + B) A^{-1}
    std::optional<RationalImage> rational;  // when A is real and F rational with a real denominator
    double abscissa = 0.0;                  // a Bromwich abscissa right of every singularity
};

ImageSolution solve_image(const ImageEquation& eq);

enum class ODEMethod { Residue, Bromwich };

const char* ode_method_name(ODEMethod m);
ODEMethod parse_ode_method(const std::string& s);

struct ODESolution {
    std::vector<double> t;
    std::vector<CDNumber> x;
    std::vector<double> err_estimate;
    ODEMethod method = ODEMethod::Residue;  // the method actually used
    std::string note;                       // why the requested method was replaced
    double defect = 0.0;    // max over the grid of |L[x] - f| / (1 + |f|), 5-point differences
    double ic_error = 0.0;  // |x(0+) - x_0| when the grid starts at 0, else 0
    bool defect_ok = true;
};

constexpr double kDefectThreshold = 1e-4;
constexpr double kDefectStep = 2.5e-3;

ODESolution solve_ode(const ODEProblem& prob, const std::vector<double>& t_grid, ODEMethod method,
                      double tol = 1e-10);

}  // namespace hct
