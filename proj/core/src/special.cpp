#include "gfkit/special.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gfkit/errors.hpp"

namespace gfkit {

namespace {

double log_factorial(int n) { return std::lgamma(n + 1.0); }

double binom_d(int n, int k) {
    if (k < 0 || k > n) return 0;
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

}  // namespace

void validate(const PolyFamily& p) {
    if (p.degree < 0) throw DomainError("polynomial degree must be >= 0");
    if (p.kind == PolyKind::Laguerre && !(p.alpha > -1)) throw DomainError("laguerre: alpha must be > -1");
    if (p.kind == PolyKind::Gegenbauer && !(p.alpha > -0.5)) throw DomainError("gegenbauer: alpha must be > -1/2");
}

double laguerre(int n, double alpha, double x) {
    if (n < 0) return 0;
    double a = 1, b = 1 + alpha - x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        double c = ((2 * k + 1 + alpha - x) * b - (k + alpha) * a) / (k + 1);
        a = b;
        b = c;
    }
    return b;
}

double gegenbauer(int n, double alpha, double x) {
    if (n < 0) return 0;
    double a = 1, b = 2 * alpha * x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        double c = (2 * (k + alpha) * x * b - (k + 2 * alpha - 1) * a) / (k + 1);
        a = b;
        b = c;
    }
    return b;
}

double hermite(int n, double x) {
    if (n < 0) return 0;
    double a = 1, b = 2 * x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        double c = 2 * x * b - 2 * k * a;
        a = b;
        b = c;
    }
    return b;
}

double legendre(int n, double x) {
    if (n < 0) return 0;
    double a = 1, b = x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        double c = ((2 * k + 1) * x * b - k * a) / (k + 1);
        a = b;
        b = c;
    }
    return b;
}

double poly_eval(const PolyFamily& p, double x) {
    validate(p);
    switch (p.kind) {
    case PolyKind::Laguerre: return laguerre(p.degree, p.alpha, x);
    case PolyKind::Gegenbauer: return gegenbauer(p.degree, p.alpha, x);
    case PolyKind::Hermite: return hermite(p.degree, x);
    case PolyKind::Legendre: return legendre(p.degree, x);
    }
    return 0;
}

std::vector<Rational> laguerre_coefficients(int n, const Rational& alpha) {
    if (n < 0) return {};
    std::vector<Rational> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        // (-1)^k C(n + alpha, n - k) / k!
        Rational b = 1;
        for (int i = 1; i <= n - k; ++i) b *= (alpha + k + i) / Rational(i);
        b /= Rational(factorial(k));
        if (k % 2) b = -b;
        b.canonicalize();
        c[k] = b;
    }
    return c;
}

std::vector<Rational> poly_derivative(const std::vector<Rational>& c) {
    std::vector<Rational> d;
    for (size_t k = 1; k < c.size(); ++k) {
        Rational v = c[k] * static_cast<long>(k);
        v.canonicalize();
        d.push_back(v);
    }
    return d;
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) throw DomainError("spherical harmonic: need |m| <= l");
    const int am = std::abs(m);
    double y = std::sph_legendre(l, am, theta);
    std::complex<double> v = y * std::exp(std::complex<double>(0, am * phi));
    if (m < 0) {
        v = std::conj(v);
        if (am % 2) v = -v;
    }
    return v;
}

std::vector<int> HydrogenState::chain() const {
    std::vector<int> c = mu;
    if (c.empty()) c.assign(std::max(N - 2, 1), 0);
    if (N == 2 && c.size() == 1 && c[0] == 0 && l != 0) c[0] = l;
    return c;
}

namespace {

void validate_chain(int N, int l, const std::vector<int>& mu) {
    if (N < 2) throw DomainError("dimension must be >= 2");
    if (l < 0) throw DomainError("l must be >= 0");
    if (N == 2) {
        if (mu.size() != 1 || std::abs(mu[0]) != l) throw DomainError("N = 2 needs a single label m with |m| = l");
        return;
    }
    if (static_cast<int>(mu.size()) != N - 2) throw DomainError("hyperspherical chain needs N - 2 labels");
    int prev = l;
    for (size_t j = 0; j < mu.size(); ++j) {
        int v = j + 1 == mu.size() ? std::abs(mu[j]) : mu[j];
        if (v < 0 || v > prev) throw DomainError("hyperspherical chain labels must be non-increasing");
        prev = v;
    }
}

// int_0^pi (C_k^lam(cos t))^2 sin^{2 lam} t dt
double gegenbauer_norm2(int k, double lam) {
    return std::exp(std::log(M_PI) + (1 - 2 * lam) * std::log(2.0) + std::lgamma(k + 2 * lam) - log_factorial(k) -
                    2 * std::lgamma(lam)) /
           (k + lam);
}

}  // namespace

std::complex<double> hyperspherical_harmonic(int N, int l, const std::vector<int>& mu, const std::vector<double>& angles) {
    validate_chain(N, l, mu);
    if (static_cast<int>(angles.size()) != N - 1) throw DomainError("hyperspherical harmonic needs N - 1 angles");
    const int m = mu.back();
    const double phi = angles.back();
    if (N == 2) return std::exp(std::complex<double>(0, m * phi)) / std::sqrt(2 * M_PI);
    if (N == 3) return spherical_harmonic(l, m, angles[0], phi);
    double v = 1 / std::sqrt(2 * M_PI);
    std::vector<int> chain{l};
    for (size_t j = 0; j + 1 < mu.size(); ++j) chain.push_back(mu[j]);
    chain.push_back(std::abs(m));
    for (int j = 1; j <= N - 2; ++j) {
        const int a = chain[j - 1], b = chain[j];
        const double lam = (N - j - 1) / 2.0 + b;
        const double t = angles[j - 1];
        v *= gegenbauer(a - b, lam, std::cos(t)) * std::pow(std::sin(t), b) / std::sqrt(gegenbauer_norm2(a - b, lam));
    }
    return v * std::exp(std::complex<double>(0, m * phi));
}

void validate(const HydrogenState& s) {
    if (s.N < 2) throw DomainError("hydrogen: dimension must be >= 2");
    if (s.n < 1 || s.l < 0 || s.n < s.l + 1) throw DomainError("hydrogen: need n >= l + 1");
    if (s.N == 2 && s.n + (s.N - 3) / 2.0 <= 0) throw DomainError("hydrogen: delta must be positive");
    validate_chain(s.N, s.l, s.chain());
}

namespace {

// log of N_{n,l} = sqrt((n-l-1)! / (2 (n + (N-3)/2) (n+l+N-3)!))
double log_norm(const HydrogenState& s) {
    return 0.5 * (log_factorial(s.n - s.l - 1) - std::log(2 * (s.n + (s.N - 3) / 2.0)) -
                  log_factorial(s.n + s.l + s.N - 3));
}

}  // namespace

double hydrogen_radial(const HydrogenState& s, double r) {
    validate(s);
    const double w = 2 * s.delta();
    const double x = w * r;
    const double e = std::exp(-x / 2);
    if (e == 0) return 0;
    return std::exp(log_norm(s) + 0.5 * s.N * std::log(w)) * std::pow(x, s.l) * e *
           laguerre(s.n - s.l - 1, 2 * s.l + s.N - 2, x);
}

std::complex<double> hydrogen_position_wf(const HydrogenState& s, double r, const std::vector<double>& angles) {
    return hydrogen_radial(s, r) * hyperspherical_harmonic(s.N, s.l, s.chain(), angles);
}

double hydrogen_momentum_radial(const HydrogenState& s, double p) {
    validate(s);
    const double d = s.delta();
    const int n = s.n, l = s.l, N = s.N;
    const double k2 = p * p + d * d;
    if (!std::isfinite(k2)) return 0;
    const double x = (p * p - d * d) / k2;
    double lg = 0.5 * (log_factorial(n - l - 1) + std::log(n + (N - 3) / 2.0) - std::log(2 * M_PI) -
                       log_factorial(n + l + N - 3));
    lg += (2 * l + N) * std::log(2.0) + (N / 2.0 + 1) * std::log(d) + std::lgamma(l + (N - 1) / 2.0) -
          (l + (N + 1) / 2.0) * std::log(k2);
    if (l > 0) {
        if (p == 0) return 0;
        lg += l * std::log(d * p);
    }
    return std::exp(lg) * gegenbauer(n - l - 1, l + (N - 1) / 2.0, x);
}

std::complex<double> hydrogen_momentum_wf(const HydrogenState& s, double p, const std::vector<double>& angles) {
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return -ipow[s.l % 4] * hydrogen_momentum_radial(s, p) * hyperspherical_harmonic(s.N, s.l, s.chain(), angles);
}

double hankel_transform(int N, int l, const std::function<double(double)>& f, double p, double rmax) {
    if (N < 2 || l < 0) throw DomainError("hankel transform: need N >= 2, l >= 0");
    if (p < 0) throw DomainError("hankel transform: p must be >= 0");
    const double nu = l + N / 2.0 - 1;
    const double k = 1 - N / 2.0;
    auto kernel = [&](double r) {
        const double x = p * r;
        // J_nu(x) x^{1 - N/2} -> x^l / (2^nu Gamma(nu + 1)) for small x
        double b;
        if (x < 1e-6)
            b = std::pow(x, l) / std::exp(nu * std::log(2.0) + std::lgamma(nu + 1));
        else
            b = std::cyl_bessel_j(nu, x) * std::pow(x, k);
        return f(r) * b * std::pow(r, N - 1);
    };
    const double width = p > 0 ? std::min(4.0, 2 * M_PI / p) : 4.0;
    double sum = 0;
    for (double a = 0; a < rmax; a += width) {
        double b = std::min(a + width, rmax);
        sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(kernel, a, b, 0);
    }
    return sum;
}

namespace {

double radial_cutoff(const HydrogenState& s) {
    // envelope e^{-delta r} r^K, cut where it is e^-40 below its peak
    const double d = s.delta(), K = s.n + s.l + s.N;
    auto g = [&](double r) { return -d * r + K * std::log(r); };
    const double peak = g(K / d);
    double r = K / d;
    while (peak - g(r) < 40) r += 1 / d;
    return r;
}

}  // namespace

double fourier_momentum_oracle(const HydrogenState& s, double p) {
    validate(s);
    return hankel_transform(s.N, s.l, [&](double r) { return hydrogen_radial(s, r); }, p, radial_cutoff(s));
}

double position_norm(const HydrogenState& s) {
    validate(s);
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double r) {
        double R = hydrogen_radial(s, r);
        return R == 0 ? 0.0 : R * R * std::pow(r, s.N - 1);
    };
    return es.integrate(f, 1e-13);
}

double momentum_norm(const HydrogenState& s) {
    validate(s);
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double p) {
        double F = hydrogen_momentum_radial(s, p);
        return F == 0 ? 0.0 : F * F * std::pow(p, s.N - 1);
    };
    return es.integrate(f, 1e-13);
}

double printed_3d_norm_ratio(int n, int l) {
    HydrogenState s{3, n, l, {0}};
    validate(s);
    const double w = 2.0 / n;
    boost::math::quadrature::exp_sinh<double> es;
    // unnormalised radial shape x^l e^{-x/2} L(x), x = w r
    auto g = [&](double r) {
        double x = w * r;
        double e = std::exp(-x / 2);
        if (e == 0) return 0.0;
        double v = std::pow(x, l) * e * laguerre(n - l - 1, 2 * l + 1, x);
        return v * v * r * r;
    };
    double c = 1 / std::sqrt(es.integrate(g, 1e-13));
    double printed = 2.0 / (n * n) * std::sqrt(std::exp(log_factorial(n - l - 1) - log_factorial(n + l)));
    return printed / c;
}

double su2_character(int two_j, double phi, double theta, double psi) {
    if (two_j < 0) throw DomainError("character: j must be >= 0");
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    double chi = 0;
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        const int jp = (two_j + two_m) / 2, jm = (two_j - two_m) / 2;
        // d^j_mm = sum_k (-1)^k C(j+m,k) C(j-m,k) c^{2j-2k} s^{2k}
        double d = 0;
        for (int k = 0; k <= std::min(jp, jm); ++k) {
            double t = binom_d(jp, k) * binom_d(jm, k) * std::pow(c, two_j - 2 * k) * std::pow(s, 2 * k);
            d += k % 2 ? -t : t;
        }
        chi += std::cos(0.5 * two_m * (phi + psi)) * d;
    }
    return chi;
}

GenfuncResult genfunc_residual(GenfuncKind kind, const GenfuncParams& p) {
    if (!(std::abs(p.r) < 1)) throw DomainError("generating function: need |r| < 1");
    if (p.order < 0) throw DomainError("generating function: order must be >= 0");
    GenfuncResult out;
    double rk = 1;
    switch (kind) {
    case GenfuncKind::Legendre:
        for (int k = 0; k <= p.order; ++k, rk *= p.r) out.series += rk * legendre(k, p.t);
        out.closed = 1 / std::sqrt(1 - 2 * p.r * p.t + p.r * p.r);
        break;
    case GenfuncKind::Gegenbauer:
        if (!(p.alpha > -0.5)) throw DomainError("gegenbauer: alpha must be > -1/2");
        for (int k = 0; k <= p.order; ++k, rk *= p.r) out.series += rk * gegenbauer(k, p.alpha, p.t);
        out.closed = std::pow(1 - 2 * p.r * p.t + p.r * p.r, -p.alpha);
        break;
    case GenfuncKind::Character: {
        // sum over 2j = k of r^{2j} chi_j
        for (int k = 0; k <= p.order; ++k, rk *= p.r) out.series += rk * su2_character(k, p.phi, p.theta, p.psi);
        double c = std::cos(p.theta / 2) * std::cos((p.phi + p.psi) / 2);
        out.closed = 1 / (1 - 2 * p.r * c + p.r * p.r);
        break;
    }
    }
    out.residual = std::abs(out.series - out.closed);
    return out;
}

}  // namespace gfkit
