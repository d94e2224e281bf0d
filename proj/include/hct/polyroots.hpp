#pragma once

#include <complex>
#include <vector>

namespace hct {

struct RootCluster {
    std::complex<double> z;
    int multiplicity = 1;
    double spread = 0.0;  // largest distance of a member eigenvalue from the centroid
};

// Drops trailing (highest power) zero coefficients; ascending order.
std::vector<double> trim_poly(const std::vector<double>& c);

// Roots of sum c_k p^k via companion eigenvalues, grouped into multiplicity clusters.
// Clusters tighter than the double-precision limit for their size are accepted; looser
// groups within the merge radius raise a conditioning error; multiplicity above 6 is
// unsupported.
std::vector<RootCluster> find_root_clusters(const std::vector<double>& c);

std::complex<double> eval_poly(const std::vector<double>& c, std::complex<double> z);

}  // namespace hct
