#include "hct/polyroots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hct/errors.hpp"

namespace hct {

std::vector<double> trim_poly(const std::vector<double>& c) {
    std::vector<double> out = c;
    while (!out.empty() && out.back() == 0.0) out.pop_back();
    return out;
}

std::complex<double> eval_poly(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> s = 0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * z + c[k];
    return s;
}

std::vector<RootCluster> find_root_clusters(const std::vector<double>& c0) {
    const std::vector<double> c = trim_poly(c0);
    if (c.size() < 2) fail(ErrorKind::Contract, "polynomial of degree >= 1 required");
    for (double x : c)
        if (!std::isfinite(x)) fail(ErrorKind::Input, "non-finite polynomial coefficient");
    const int n = int(c.size()) - 1;
    const double lead = c.back();

    std::vector<std::complex<double>> eig;
    // zero roots are split off exactly
    int zeros = 0;
    while (zeros < n && c[zeros] == 0.0) ++zeros;
    const int m = n - zeros;
    for (int k = 0; k < zeros; ++k) eig.emplace_back(0.0, 0.0);
    if (m > 0) {
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
        for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < m; ++i) comp(i, m - 1) = -c[zeros + i] / lead;
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
        if (es.info() != Eigen::Success) fail(ErrorKind::Conditioning, "companion eigenvalue solver failed");
        for (int i = 0; i < m; ++i) eig.push_back(es.eigenvalues()[i]);
    }
    double scale = 1.0;
    for (auto z : eig) scale = std::max(scale, std::abs(z));

    // A root of multiplicity m comes out of the eigensolver spread over ~ eps^{1/m} scale.
    // Going from large m down, single-linkage components at the size-m radius are taken as
    // multiple roots when their spread fits their size; the final pass at the base radius
    // keeps whatever is left close together so the spread check below can reject it.
    const double eps = std::numeric_limits<double>::epsilon();
    auto allowed = [&](int m) { return std::max(1e-8, 20.0 * std::pow(eps, 1.0 / m)) * scale; };
    auto spread_of = [&](const std::vector<int>& grp) {
        std::complex<double> cen = 0;
        for (int j : grp) cen += eig[j];
        cen /= double(grp.size());
        double sp = 0;
        for (int j : grp) sp = std::max(sp, std::abs(eig[j] - cen));
        return sp;
    };
    const int N = int(eig.size());
    std::vector<int> assigned(N, 0);
    std::vector<std::vector<int>> groups;
    auto components = [&](double radius) {
        std::vector<std::vector<int>> comps;
        std::vector<int> seen(N, 0);
        for (int i = 0; i < N; ++i) {
            if (assigned[i] || seen[i]) continue;
            std::vector<int> comp{i};
            seen[i] = 1;
            for (std::size_t q = 0; q < comp.size(); ++q)
                for (int j = 0; j < N; ++j)
                    if (!assigned[j] && !seen[j] && std::abs(eig[comp[q]] - eig[j]) < radius) {
                        seen[j] = 1;
                        comp.push_back(j);
                    }
            comps.push_back(comp);
        }
        return comps;
    };
    for (int m = N; m >= 3; --m) {
        if (allowed(m) <= 1e-4 * scale) break;
        for (const auto& comp : components(allowed(m))) {
            const int k = int(comp.size());
            if (k >= m && spread_of(comp) <= allowed(k)) {
                for (int j : comp) assigned[j] = 1;
                groups.push_back(comp);
            }
        }
    }
    for (const auto& comp : components(1e-4 * scale)) groups.push_back(comp);

    std::vector<RootCluster> out;
    for (const auto& grp : groups) {
        std::vector<std::complex<double>> members;
        for (int j : grp) members.push_back(eig[j]);
        const int mult = int(members.size());
        if (mult > 6) fail(ErrorKind::Unsupported, "root multiplicity above 6");
        std::complex<double> cen = 0;
        for (auto z : members) cen += z;
        cen /= double(mult);
        double spread = 0;
        for (auto z : members) spread = std::max(spread, std::abs(z - cen));
        if (mult > 1) {
            // a multiple root perturbed by rounding spreads like eps^(1/m)
            if (spread > allowed(mult))
                fail(ErrorKind::Conditioning, "near-degenerate root cluster (spread " + std::to_string(spread) +
                                                  ") cannot be resolved");
        }
        if (mult == 1) {
            // two Newton steps on the original coefficients
            std::vector<double> d(c.size() - 1);
            for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
            for (int it = 0; it < 2; ++it) {
                const std::complex<double> dv = eval_poly(d, cen);
                if (std::abs(dv) == 0.0) break;
                const std::complex<double> step = eval_poly(c, cen) / dv;
                if (!(std::abs(step) < 1e-6 * scale)) break;
                cen -= step;
            }
        }
        if (std::abs(cen.imag()) < 64 * eps * scale) cen = {cen.real(), 0.0};
        out.push_back({cen, mult, spread});
    }
    // deterministic order
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return out;
}

}  // namespace hct
