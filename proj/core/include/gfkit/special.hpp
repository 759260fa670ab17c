#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gfkit/arith.hpp"

namespace gfkit {

enum class PolyKind { Laguerre, Gegenbauer, Hermite, Legendre };

struct PolyFamily {
    PolyKind kind = PolyKind::Legendre;
    double alpha = 0;  // Laguerre and Gegenbauer only
    int degree = 0;
};

void validate(const PolyFamily& p);
double poly_eval(const PolyFamily& p, double x);
// Same recurrences; degree < 0 gives 0.
double laguerre(int n, double alpha, double x);
double gegenbauer(int n, double alpha, double x);
double hermite(int n, double x);
double legendre(int n, double x);

// Coefficients of L_n^alpha in powers of x, exact.
std::vector<Rational> laguerre_coefficients(int n, const Rational& alpha);
std::vector<Rational> poly_derivative(const std::vector<Rational>& c);

// Standard Y_lm with the Condon-Shortley phase.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

// Labels: l = mu_1 >= mu_2 >= ... >= mu_{N-2} >= |mu_{N-1}|; mu holds mu_2 .. mu_{N-1},
// the last entry being m.  Angles: theta_1 .. theta_{N-2}, phi, with x_N = r cos theta_1.
std::complex<double> hyperspherical_harmonic(int N, int l, const std::vector<int>& mu, const std::vector<double>& angles);

struct HydrogenState {
    int N = 3;
    int n = 1;
    int l = 0;
    std::vector<int> mu;  // mu_2 .. mu_{N-1}; empty means all zero
    double delta() const { return 1.0 / (n + (N - 3) / 2.0); }
    std::vector<int> chain() const;
};

void validate(const HydrogenState& s);

double hydrogen_radial(const HydrogenState& s, double r);
std::complex<double> hydrogen_position_wf(const HydrogenState& s, double r, const std::vector<double>& angles);
// Radial factor of the closed momentum form, without the -i^l phase.
double hydrogen_momentum_radial(const HydrogenState& s, double p);
std::complex<double> hydrogen_momentum_wf(const HydrogenState& s, double p, const std::vector<double>& angles);

// int_0^inf f(r) J_nu(p r) (p r)^{1-N/2} r^{N-1} dr, nu = l + N/2 - 1.
double hankel_transform(int N, int l, const std::function<double(double)>& f, double p, double rmax);
// Radial momentum amplitude from the position state by numeric Hankel transform;
// psi(p) = (-i)^l * value * Y.
double fourier_momentum_oracle(const HydrogenState& s, double p);

double position_norm(const HydrogenState& s);  // int R^2 r^{N-1} dr
double momentum_norm(const HydrogenState& s);  // int F^2 p^{N-1} dp
// Printed 3-D normalisation over the normalisation that makes the state unit.
double printed_3d_norm_ratio(int n, int l);

enum class GenfuncKind { Legendre, Character, Gegenbauer };

struct GenfuncParams {
    double r = 0;
    double t = 0;      // cos(theta) for Legendre, argument for Gegenbauer
    double alpha = 1;  // Gegenbauer parameter
    double theta = 0;  // character: Euler angles
    double phi = 0;
    double psi = 0;
    int order = 80;
};

struct GenfuncResult {
    double series = 0;
    double closed = 0;
    double residual = 0;
};

GenfuncResult genfunc_residual(GenfuncKind kind, const GenfuncParams& p);
// Character of the spin-j irrep from the diagonal of the D matrix; two_j = 2j.
double su2_character(int two_j, double phi, double theta, double psi);

}  // namespace gfkit
