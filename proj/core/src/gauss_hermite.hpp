#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace gfkit::detail {

// Gauss-Hermite rule for weight exp(-t^2) by Golub-Welsch.
inline void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) j(k, k - 1) = j(k - 1, k) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    nodes.resize(n);
    weights.resize(n);
    for (int k = 0; k < n; ++k) {
        nodes[k] = es.eigenvalues()(k);
        double v = es.eigenvectors()(0, k);
        weights[k] = std::sqrt(M_PI) * v * v;
    }
}

}  // namespace gfkit::detail
