#include "gfkit/oscillator.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gfkit/errors.hpp"
#include "gfkit/special.hpp"
#include "gauss_hermite.hpp"

namespace gfkit {

namespace {

const cplx I{0, 1};

// Tilted time; real t goes slightly below the real axis.
cplx tilt(cplx t, double omega, double eps) {
    if (t.imag() > 0) throw DomainError("propagator: time must have Im t <= 0");
    if (t.imag() == 0) {
        double s = std::sin(omega * t.real());
        if (std::abs(s) < 1e-12) throw SingularError("propagator: caustic, sin(omega t) = 0");
        t -= I * eps * std::abs(t.real());
    }
    return t;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

double OscillatorParams::lambda() const { return std::sqrt(mass * omega / hbar); }

void validate(const OscillatorParams& p) {
    if (!(p.mass > 0) || !(p.omega > 0) || !(p.hbar > 0))
        throw DomainError("oscillator: mass, omega and hbar must be positive");
}

double ho_wavefunction(int n, double q) {
    if (n < 0) throw DomainError("ho_wavefunction: n must be >= 0");
    double prev = 0, cur = std::pow(M_PI, -0.25) * std::exp(-q * q / 2);
    for (int k = 0; k < n; ++k) {
        double next = std::sqrt(2.0 / (k + 1)) * q * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double ho_wavefunction(const OscillatorParams& p, int n, double x) {
    validate(p);
    double l = p.lambda();
    return std::sqrt(l) * ho_wavefunction(n, l * x);
}

cplx ho_generating_function(cplx z, double q) {
    return std::pow(M_PI, -0.25) * std::exp(std::sqrt(2.0) * q * z - q * q / 2 - z * z / 2.0);
}

cplx ho_propagator(const OscillatorParams& p, double x, double xp, cplx t, double eps) {
    validate(p);
    t = tilt(t, p.omega, eps);
    cplx a = p.omega * t;
    cplx w = std::exp(-I * a), w2 = w * w, d = 1.0 - w2;
    if (std::abs(d) < 1e-300) throw SingularError("propagator: t = 0");
    double l = p.lambda(), q = l * x, qp = l * xp;
    cplx pre = l / std::sqrt(M_PI) * std::exp(-I * a / 2.0) / std::sqrt(d);
    cplx ex = -((q * q + qp * qp) * (1.0 + w2) - 4.0 * q * qp * w) / (2.0 * d);
    return pre * std::exp(ex);
}

cplx magnetic_propagator(const OscillatorParams& p, double omega_c, const std::array<double, 2>& r1,
                         const std::array<double, 2>& r2, cplx t, double eps) {
    validate(p);
    double om = std::hypot(p.omega, omega_c);
    t = tilt(t, om, eps);
    cplx a = om * t;
    cplx w = std::exp(-I * a), w2 = w * w, d = 1.0 - w2;
    if (std::abs(d) < 1e-300) throw SingularError("propagator: t = 0");
    // w cos(omega_c t) and w sin(omega_c t) without overflow at large imaginary time
    cplx em = std::exp(-I * (om - omega_c) * t), ep = std::exp(-I * (om + omega_c) * t);
    cplx wc = (em + ep) / 2.0, ws = (em - ep) / (2.0 * I);
    double l2 = p.mass * om / p.hbar;
    double rr = r1[0] * r1[0] + r1[1] * r1[1] + r2[0] * r2[0] + r2[1] * r2[1];
    double dot = r1[0] * r2[0] + r1[1] * r2[1];
    double crs = r1[0] * r2[1] - r1[1] * r2[0];
    cplx ex = l2 * (-rr * (1.0 + w2) / 2.0 + 2.0 * wc * dot + 2.0 * ws * crs) / d;
    return l2 / M_PI * w / d * std::exp(ex);
}

cplx PropagatorKernel::operator()(const std::array<double, 2>& r1, const std::array<double, 2>& r2) const {
    if (kind == KernelKind::FreeOscillator) return ho_propagator(params, r1[0], r2[0], time);
    return magnetic_propagator(params, omega_c, r1, r2, time);
}

cplx cylindrical_wavefunction(int two_j, int two_m, double lambda, double rho, double phi) {
    int am = std::abs(two_m);
    if (two_j < am || (two_j - am) % 2) throw DomainError("cylindrical_wavefunction: need j >= |m|, j - |m| integer");
    if (!(lambda > 0) || rho < 0) throw DomainError("cylindrical_wavefunction: lambda > 0, rho >= 0");
    int n = (two_j - am) / 2;
    double u = lambda * rho;
    double lognorm = 0.5 * (log_factorial(n) - log_factorial(n + am));
    double radial = lambda / std::sqrt(M_PI) * std::exp(lognorm - u * u / 2) * std::pow(u, am) * laguerre(n, am, u * u);
    return radial * std::exp(-I * double(two_m) * phi);
}

cplx cylindrical_generating_function(cplx z1, cplx z2, double lambda, double x, double y) {
    if (!(lambda > 0)) throw DomainError("cylindrical_generating_function: lambda > 0");
    return lambda / std::sqrt(M_PI) *
           std::exp(-lambda * lambda * (x * x + y * y) / 2 + lambda * (z1 * cplx(x, -y) + z2 * cplx(x, y)) - z1 * z2);
}

cplx cylindrical_cartesian_overlap(int two_j, int two_m, int nx, int ny) {
    int am = std::abs(two_m);
    if (two_j < am || (two_j - am) % 2) throw DomainError("cylindrical_cartesian_overlap: need j >= |m|, j - |m| integer");
    if (nx < 0 || ny < 0) throw DomainError("cylindrical_cartesian_overlap: nx, ny >= 0");
    if (nx + ny != two_j) return 0;
    int a = (two_j + two_m) / 2, b = (two_j - two_m) / 2;
    double coef = 0;
    for (int k = std::max(0, a - ny); k <= std::min(nx, a); ++k) {
        int l = a - k;
        double c = std::exp(log_factorial(nx) - log_factorial(k) - log_factorial(nx - k) + log_factorial(ny) -
                            log_factorial(l) - log_factorial(ny - l));
        coef += l % 2 ? -c : c;
    }
    double sign = ((two_j - am) / 2) % 2 ? -1 : 1;
    double mag = std::exp(0.5 * (log_factorial(a) + log_factorial(b) - log_factorial(nx) - log_factorial(ny)) -
                          0.5 * two_j * std::log(2.0));
    cplx ipow = std::pow(I, ny % 4);
    return sign * mag * coef * ipow;
}

double cylindrical_energy(const OscillatorParams& p, double omega_c, int two_j, int two_m) {
    validate(p);
    double om = std::hypot(p.omega, omega_c);
    return p.hbar * om * (two_j + 1) + two_m * p.hbar * omega_c;
}

FockIdentity fock_measure_identity(cplx alpha, cplx beta, int points) {
    std::vector<double> t, w;
    detail::gauss_hermite(points, t, w);
    cplx s = 0;
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
            cplx z(t[i], t[j]);
            s += w[i] * w[j] * std::exp(alpha * std::conj(z) + beta * z);
        }
    FockIdentity r;
    r.integral = s / M_PI;
    r.closed = std::exp(alpha * beta);
    r.residual = std::abs(r.integral - r.closed);
    return r;
}

double delta_sequence_error(const OscillatorParams& p, double beta, const std::function<double(double)>& f,
                            const std::vector<double>& xs) {
    validate(p);
    if (!(beta > 0)) throw DomainError("delta_sequence_error: beta > 0");
    double wb = std::exp(-p.omega * beta), l = p.lambda();
    double sigma = std::sqrt((1 - wb * wb) / (1 + wb * wb)) / l;
    double err = 0;
    for (double x : xs) {
        double c = x * 2 * wb / (1 + wb * wb);
        auto g = [&](double y) { return ho_propagator(p, x, y, cplx(0, -beta)).real() * f(y); };
        double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, c - 40 * sigma, c + 40 * sigma, 15, 1e-13);
        err = std::max(err, std::abs(v - f(x)));
    }
    return err;
}

}  // namespace gfkit
