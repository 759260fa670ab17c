#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gfkit/arith.hpp"
#include "gfkit/poly.hpp"

namespace gfkit {

// Entry of a Hurwitz matrix: sign * u_{index+1}.
struct SignedVar {
    int sign = 1;
    int index = 0;
    bool operator==(const SignedVar&) const = default;
};

using SymbolicMatrix = std::vector<std::vector<SignedVar>>;

// Printed layouts for n = 2, 4, 8.
SymbolicMatrix hurwitz_symbolic(int n);
Eigen::MatrixXd hurwitz_matrix(int n, const std::vector<double>& u);
// Entries as polynomials in u_1..u_n (n variables).
std::vector<std::vector<RatPoly>> symbolic_polys(const SymbolicMatrix& m);

// Left multiplication by u in the Cayley-Dickson algebra of dimension n
// (n a power of two, <= 16): column k holds u * e_k.
SymbolicMatrix cayley_dickson_left(int n);
std::vector<double> cayley_dickson_product(const std::vector<double>& x, const std::vector<double>& y);

// 4x4 matrix M(u) with M(u) u = (x, y, -z, 0), x, y, z the KS coordinates.
SymbolicMatrix ks_matrix_symbolic();

std::array<double, 3> ks_transform(const std::array<double, 4>& u);
std::array<Rational, 3> ks_transform(const std::array<Rational, 4>& u);
std::array<double, 5> r8_to_r5(const std::array<double, 8>& u);
std::array<Rational, 5> r8_to_r5(const std::array<Rational, 8>& u);
std::array<double, 2> levi_civita(const std::array<double, 2>& u);

// Components of the quadratic map R^N -> R^n as polynomials in N variables;
// N in {2, 4, 8}.
std::vector<RatPoly> quad_map(int N);
int quad_map_target(int N);

// Skew matrices used by the Cayley rotation; u has n+1 components.
Eigen::MatrixXd cayley_skew(int n, const std::vector<double>& u);
// |u|^2 (u1 I - S)(u1 I + S)^-1, computed by a linear solve.
Eigen::MatrixXd cayley_rotation(int n, const std::vector<double>& u);
// |u|^2 I - 2 u1 S + 2 S^2
Eigen::MatrixXd cayley_closed_form(int n, const std::vector<double>& u);

// V_3 (angular velocity form) and V_7 as printed.
Eigen::MatrixXd v_matrix(int n, const std::vector<double>& x);
std::vector<double> cross_product(int n, const std::vector<double>& a, const std::vector<double>& b);

struct VMatrixReport {
    double cube_residual = 0;   // |V^3 + |x|^2 V|
    double exp_residual = 0;    // |exp(-i t L) - (1 - i sin t L - (1 - cos t) L^2)|, L = iV, unit x
    double rotation_residual = 0;  // |exp(t V) - (1 + sin t V + (1 - cos t) V^2)|, unit x
    Eigen::MatrixXd rotation;   // exp(t V)
};
VMatrixReport v_matrix_properties(int n, const std::vector<double>& x, double theta);

// |Delta_u f(x(u)) - 4 |u|^2 (Delta_x f)(x(u))| for the map R^N -> R^n;
// f is a polynomial in n variables.
double laplacian_pullback_residual(int n, int N, const RatPoly& f, const std::vector<double>& u);
// The exact difference polynomial in u (zero when the identity holds).
RatPoly laplacian_pullback_defect(int n, int N, const RatPoly& f);

struct GaussianIdentity {
    std::complex<double> integral;
    double closed = 0;
    double residual = 0;
    double std_error = 0;  // 0 for quadrature
    double exponent = 0;
};
// n_case 1: x in R^3, 2-D Gauss-Hermite quadrature.
// n_case 2: x in R^4; n_case 3: x in R^6; Monte Carlo with the given seed.
GaussianIdentity gegenbauer_gaussian_identity(int n_case, double alpha, const std::vector<double>& x,
                                              long samples = 1000000, uint64_t seed = 1);
Eigen::MatrixXcd gegenbauer_a_matrix(int n_case, const std::vector<double>& x);

}  // namespace gfkit
