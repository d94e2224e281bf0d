#include "hct/ode.hpp"

#include <algorithm>
#include <cmath>

#include "hct/errors.hpp"
#include "hct/parallel.hpp"
#include "hct/polyroots.hpp"

namespace hct {

CDNumber Forcing::operator()(double t) const {
    if (pair) return left * pair->original(t);
    if (original) return (*original)(t);
    return CDNumber(1);
}

int ODEProblem::level() const {
    int lev = 2;
    for (const CDNumber& a : coeffs) lev = std::max(lev, a.level());
    for (const CDNumber& x : ics) lev = std::max(lev, x.level());
    lev = std::max(lev, forcing.left.level());
    return lev;
}

void validate(const ODEProblem& prob) {
    if (prob.coeffs.size() < 2) fail(ErrorKind::Input, "an ODE needs coefficients a_0 .. a_n with n >= 1");
    if (cd_norm(prob.coeffs[0]) == 0.0) fail(ErrorKind::Input, "a_0 must be nonzero");
    if (int(prob.ics.size()) != prob.order())
        fail(ErrorKind::Input, "expected " + std::to_string(prob.order()) + " initial values, got " +
                                   std::to_string(prob.ics.size()));
    for (const CDNumber& a : prob.coeffs) {
        if (!a.all_finite()) fail(ErrorKind::Input, "non-finite coefficient");
        if (prob.domain == ValueDomain::RealCoeffs && !a.is_real())
            fail(ErrorKind::Input, "coefficients must be real outside the quaternion case");
    }
    if (prob.domain == ValueDomain::QuaternionCoeffs && prob.level() > 2)
        fail(ErrorKind::Input, "quaternion-coefficient equations live in A_2");
    if (prob.forcing.pair && prob.forcing.pair->domain != PairDomain::OneSided)
        fail(ErrorKind::Input, "the forcing must be a one-sided original");
}

CDNumber ImageEquation::eval_A(const CDNumber& p0) const {
    const CDNumber p = p0.embed(std::max(level, p0.level()));
    CDNumber out(p.level());
    CDNumber pk = CDNumber::real(1, p.level());  // p^{n-k}, built from k = n down to 0
    for (int k = order; k >= 0; --k) {
        out += pk * A[std::size_t(k)];
        pk = pk * p;
    }
    return out;
}

CDNumber ImageEquation::eval_B(const CDNumber& p0) const {
    const CDNumber p = p0.embed(std::max(level, p0.level()));
    CDNumber out(p.level());
    for (const BTerm& b : B) out += b.x * (cd_pow_int(p, b.power) * b.a);
    return out;
}

bool ImageEquation::real_A() const {
    return std::all_of(A.begin(), A.end(), [](const CDNumber& a) { return a.is_real(); });
}

std::vector<double> ImageEquation::A_ascending() const {
    if (!real_A()) fail(ErrorKind::Contract, "A(p) has non-real coefficients");
    std::vector<double> c(std::size_t(order) + 1);
    for (int k = 0; k <= order; ++k) c[std::size_t(order - k)] = A[std::size_t(k)][0];
    return c;
}

std::vector<CDNumber> ImageEquation::B_ascending() const {
    if (!real_A()) fail(ErrorKind::Contract, "A(p) has non-real coefficients");
    std::vector<CDNumber> c(std::size_t(std::max(order, 1)), CDNumber(level));
    for (const BTerm& b : B) c[std::size_t(b.power)] += b.x.embed(level) * b.a[0];
    return c;
}

ImageEquation build_image_equation(const ODEProblem& prob) {
    validate(prob);
    ImageEquation eq;
    eq.order = prob.order();
    eq.level = prob.level();
    const int n = eq.order;
    for (const CDNumber& a : prob.coeffs) eq.A.push_back(a.embed(eq.level));
    // B(p) = sum_j x_j (p^{n-1-j} a_0 + ... + a_{n-1-j})
    for (int j = 0; j < n; ++j) {
        if (cd_norm(prob.ics[std::size_t(j)]) == 0.0) continue;
        for (int k = 0; k <= n - 1 - j; ++k)
            eq.B.push_back({prob.ics[std::size_t(j)].embed(eq.level), n - 1 - j - k, eq.A[std::size_t(k)]});
    }
    const Forcing& f = prob.forcing;
    if (f.pair) {
        const TransformPair pair = *f.pair;
        const CDNumber left = f.left.embed(eq.level);
        eq.F = [pair, left](const CDNumber& p) { return left * pair.eval_image(p, CDNumber(p.level())); };
        eq.forcing_s0 = pair.s0();
        if (pair.rational) {
            RationalImage R = *pair.rational;
            for (CDNumber& c : R.numerator) c = left * c.embed(eq.level);
            R.kernel.level = eq.level;
            eq.F_rational = R;
        }
    } else if (f.original) {
        const Original o = *f.original;
        const int lev = eq.level;
        eq.F = [o, lev](const CDNumber& p) {
            return forward_transform(o, PairDomain::OneSided, make_kernel(KernelVariant::Linear, lev), p.embed(lev),
                                     CDNumber(lev), 1e-12, 1e-11)
                .value;
        };
        eq.forcing_s0 = o.s0;
    }
    return eq;
}

namespace {

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

double max_root_real(const std::vector<double>& c) {
    double m = -std::numeric_limits<double>::infinity();
    if (trim_poly(c).size() <= 1) return m;
    for (const RootCluster& rc : find_root_clusters(c)) m = std::max(m, rc.z.real());
    return m;
}

}  // namespace

ImageSolution solve_image(const ImageEquation& eq) {
    ImageSolution sol;
    const ImageEquation e = eq;
    sol.X = [e](const CDNumber& p) {
        CDNumber num = e.eval_B(p);
        if (e.F) num += e.F(p);
        return cd_div_right(num, e.eval_A(p));
    };
    double edge = eq.forcing_s0;
    if (eq.real_A()) {
        const std::vector<double> A = eq.A_ascending();
        edge = std::max(edge, max_root_real(A));
        const bool rational_forcing = !eq.F || eq.F_rational;
        if (rational_forcing) {
            const std::vector<double> DF = eq.F_rational ? eq.F_rational->denominator : std::vector<double>{1.0};
            // (sum f_k p^k D_F^{-1} + sum b_m p^m) A^{-1} = (sum f_k p^k + B(p) D_F(p)) (D_F A)^{-1}
            RationalImage R;
            R.kernel = make_kernel(KernelVariant::Linear, eq.level);
            R.denominator = poly_mul(DF, A);
            const std::vector<CDNumber> B = eq.B_ascending();
            std::vector<CDNumber> N(R.denominator.size() - 1, CDNumber(eq.level));
            if (eq.F_rational)
                for (std::size_t k = 0; k < eq.F_rational->numerator.size(); ++k)
                    N[k] += eq.F_rational->numerator[k].embed(eq.level);
            for (std::size_t m = 0; m < B.size(); ++m)
                for (std::size_t q = 0; q < DF.size(); ++q) N[m + q] += B[m] * DF[q];
            while (N.size() > 1 && cd_norm(N.back()) == 0.0) N.pop_back();
            R.numerator = N;
            sol.rational = R;
        }
    } else {
        // Cauchy bound on |p| at a zero of A: 1 + max |a_k| / |a_0| (norm multiplicativity, r <= 3)
        double m = 0;
        for (std::size_t k = 1; k < eq.A.size(); ++k) m = std::max(m, cd_norm(eq.A[k]) / cd_norm(eq.A[0]));
        edge = std::max(edge, 1 + m);
    }
    if (!std::isfinite(edge)) edge = 0;
    sol.abscissa = edge + 0.5;
    return sol;
}

const char* ode_method_name(ODEMethod m) { return m == ODEMethod::Residue ? "residue" : "bromwich"; }

ODEMethod parse_ode_method(const std::string& s) {
    if (s == "residue") return ODEMethod::Residue;
    if (s == "bromwich") return ODEMethod::Bromwich;
    fail(ErrorKind::Input, "unknown method '" + s + "' (expected residue or bromwich)");
}

namespace {

// 5-point central-difference weights for derivatives of order 0..4, offsets -2..2
constexpr double kStencil[5][5] = {{0, 0, 1, 0, 0},
                                   {1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12},
                                   {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
                                   {-0.5, 1, 0, -1, 0.5},
                                   {1, -4, 6, -4, 1}};

}  // namespace

ODESolution solve_ode(const ODEProblem& prob, const std::vector<double>& t_grid, ODEMethod method, double tol) {
    const ImageEquation eq = build_image_equation(prob);
    const ImageSolution img = solve_image(eq);
    ODESolution out;
    out.t = t_grid;
    out.method = method;
    if (method == ODEMethod::Residue && !img.rational) {
        out.method = ODEMethod::Bromwich;
        out.note = eq.real_A() ? "forcing image is not rational; Bromwich inversion used"
                               : "A(p) has quaternion coefficients; Bromwich inversion used";
    }
    const int lev = eq.level;
    const CDNumber S = CDNumber::unit(1, lev);
    // X(p) = x_0 p^{-1} + O(p^{-2}); the leading term is inverted exactly and only the remainder goes on the line
    const CDNumber x0 = prob.ics[0].embed(lev);
    const ImageFn X = img.X;
    const ImageFn remainder = [X, x0](const CDNumber& p) { return X(p) - x0 * cd_inverse(p); };
    auto invert = [&](double t) -> InversionResult {
        if (out.method == ODEMethod::Residue) return residue_invert_rational(*img.rational, t);
        InversionResult r = bromwich_invert(remainder, img.abscissa, S, t, make_kernel(KernelVariant::Linear, lev), tol);
        if (t >= 0) r.value += x0 * (t > 0 ? 1.0 : 0.5);
        return r;
    };
    out.x.assign(t_grid.size(), CDNumber(lev));
    out.err_estimate.assign(t_grid.size(), 0.0);
    parallel_for(t_grid.size(), [&](std::size_t i) {
        const InversionResult r = invert(t_grid[i]);
        out.x[i] = r.value.embed(lev);
        out.err_estimate[i] = r.err_estimate;
    });
    if (!t_grid.empty() && t_grid.front() == 0.0) {
        out.ic_error = cd_norm(out.x.front() - prob.ics[0].embed(lev));
    }

    const int n = eq.order;
    if (n > 4) {
        out.defect = std::numeric_limits<double>::quiet_NaN();
        out.defect_ok = false;
        out.note += out.note.empty() ? "" : "; ";
        out.note += "defect check supports order <= 4";
        return out;
    }
    const double h = kDefectStep;
    std::vector<std::size_t> interior;
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        if (t_grid[i] - 2 * h > 0) interior.push_back(i);
    std::vector<double> defect(interior.size(), 0.0);
    parallel_for(interior.size(), [&](std::size_t q) {
        const double t = t_grid[interior[q]];
        CDNumber xs[5];
        for (int s = 0; s < 5; ++s) xs[s] = invert(t + (s - 2) * h).value.embed(lev);
        CDNumber L(lev);
        for (int k = 0; k <= n; ++k) {
            const int d = n - k;
            CDNumber deriv(lev);
            for (int s = 0; s < 5; ++s) deriv += xs[s] * kStencil[d][s];
            deriv = deriv / std::pow(h, d);
            L += deriv * eq.A[std::size_t(k)];
        }
        const CDNumber f = prob.forcing(t).embed(lev);
        defect[q] = cd_norm(L - f) / (1 + cd_norm(f));
    });
    for (double d : defect) out.defect = std::max(out.defect, d);
    out.defect_ok = out.defect <= kDefectThreshold;
    return out;
}

}  // namespace hct
