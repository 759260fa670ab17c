#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace gfkit {

using cplx = std::complex<double>;

struct OscillatorParams {
    double mass = 1;
    double omega = 1;
    double hbar = 1;
    double lambda() const;  // sqrt(m omega / hbar)
};

void validate(const OscillatorParams& p);

// u_n(q) = (sqrt(pi) 2^n n!)^{-1/2} e^{-q^2/2} H_n(q), by the normalised recurrence.
double ho_wavefunction(int n, double q);
// Same state in physical units, lambda^{1/2} u_n(lambda x).
double ho_wavefunction(const OscillatorParams& p, int n, double x);

// sum_n z^n/sqrt(n!) u_n(q) in closed form.
cplx ho_generating_function(cplx z, double q);

// <x| exp(-i H t / hbar) |x'>.  Real t is tilted to t(1 - i eps); t = -i beta gives the Mehler kernel.
cplx ho_propagator(const OscillatorParams& p, double x, double xp, cplx t, double eps = 1e-8);

// Charged 2-D oscillator in a uniform field, H = H0 - omega_c L_z with
// H0 at frequency sqrt(omega^2 + omega_c^2); p.omega is the bare frequency.
cplx magnetic_propagator(const OscillatorParams& p, double omega_c, const std::array<double, 2>& r1,
                         const std::array<double, 2>& r2, cplx t, double eps = 1e-8);

enum class KernelKind { FreeOscillator, Magnetic };

struct PropagatorKernel {
    KernelKind kind = KernelKind::FreeOscillator;
    OscillatorParams params;
    double omega_c = 0;
    cplx time{0, -1};
    // x and x' for the free kernel (first components used), r1 and r2 for the magnetic one.
    cplx operator()(const std::array<double, 2>& r1, const std::array<double, 2>& r2) const;
};

// Cylindrical basis Phi_jm, j and m doubled.  Angular factor e^{-2 i m phi}.
cplx cylindrical_wavefunction(int two_j, int two_m, double lambda, double rho, double phi);
// sqrt(lambda^2/pi) exp[-lambda^2 r^2/2 + lambda (z1 (x - i y) + z2 (x + i y)) - z1 z2]
//   = sum_jm (-1)^{j-|m|} z1^{j+m} z2^{j-m} / sqrt((j+m)!(j-m)!) Phi_jm
cplx cylindrical_generating_function(cplx z1, cplx z2, double lambda, double x, double y);
// <u_nx u_ny | Phi_jm> from the generating function; zero unless nx + ny = 2j.
cplx cylindrical_cartesian_overlap(int two_j, int two_m, int nx, int ny);
// E = hbar omega (2j + 1) + 2 m hbar omega_c for H = H0 - omega_c L_z (Phi_jm has L_z = -2m).
double cylindrical_energy(const OscillatorParams& p, double omega_c, int two_j, int two_m);

struct FockIdentity {
    cplx integral;
    cplx closed;
    double residual = 0;
};
// int e^{alpha conj(z)} e^{beta z} dmu(z) against e^{alpha beta}, tensor Gauss-Hermite.
FockIdentity fock_measure_identity(cplx alpha, cplx beta, int points = 48);

// sup over xs of |int K(x, x'; -i beta) f(x') dx' - f(x)|.
double delta_sequence_error(const OscillatorParams& p, double beta, const std::function<double(double)>& f,
                            const std::vector<double>& xs);

}  // namespace gfkit
