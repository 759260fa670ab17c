#include "gfkit/hurwitz.hpp"

#include <cmath>
#include <map>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "gfkit/errors.hpp"
#include "gauss_hermite.hpp"

namespace gfkit {

namespace {

SymbolicMatrix from_table(const std::vector<std::vector<int>>& t) {
    SymbolicMatrix m(t.size());
    for (size_t i = 0; i < t.size(); ++i)
        for (int v : t[i]) m[i].push_back({v < 0 ? -1 : 1, std::abs(v) - 1});
    return m;
}

Eigen::MatrixXd numeric(const SymbolicMatrix& s, const std::vector<double>& u) {
    const int n = static_cast<int>(s.size());
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = s[i][j].sign * u.at(s[i][j].index);
    return m;
}

void require_size(const std::vector<double>& v, size_t n, const char* what) {
    if (v.size() != n) throw DomainError(std::string(what) + ": expected " + std::to_string(n) + " components");
}

std::vector<double> cd_mul(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const size_t h = n / 2;
    std::vector<double> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    std::vector<double> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    auto conj = [](std::vector<double> v) {
        for (size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
        return v;
    };
    // (a,b)(c,d) = (ac - d*b, da + bc*)
    auto ac = cd_mul(a, c), db = cd_mul(conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, conj(c));
    std::vector<double> r(n);
    for (size_t i = 0; i < h; ++i) {
        r[i] = ac[i] - db[i];
        r[h + i] = da[i] + bc[i];
    }
    return r;
}

RatPoly compose(const RatPoly& f, const std::vector<RatPoly>& x, int nvars) {
    RatPoly out(nvars);
    std::vector<std::map<int, RatPoly>> powers(x.size());
    auto power = [&](size_t i, int k) -> const RatPoly& {
        auto it = powers[i].find(k);
        if (it == powers[i].end()) it = powers[i].emplace(k, x[i].pow(k)).first;
        return it->second;
    };
    for (const auto& [e, c] : f.terms()) {
        RatPoly t = RatPoly::constant(nvars, c);
        for (size_t i = 0; i < x.size(); ++i)
            if (e[i]) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

RatPoly laplacian(const RatPoly& p, int nvars) {
    RatPoly out(nvars);
    for (int i = 0; i < nvars; ++i) out += p.derivative(i).derivative(i);
    return out;
}

}  // namespace

SymbolicMatrix hurwitz_symbolic(int n) {
    switch (n) {
    case 2: return from_table({{1, -2}, {2, 1}});
    case 4: return from_table({{1, -2, -3, -4}, {2, 1, -4, 3}, {3, 4, 1, -2}, {4, -3, 2, 1}});
    case 8:
        return from_table({{1, 2, 3, 4, 5, 6, 7, 8},
                           {-2, 1, 4, -3, 6, -5, -8, 7},
                           {-3, -4, 1, 2, 7, 8, -5, -6},
                           {-4, 3, -2, 1, 8, -7, 6, -5},
                           {-5, -6, -7, -8, 1, 2, 3, 4},
                           {-6, 5, -8, 7, -2, 1, -4, 3},
                           {-7, 8, 5, -6, -3, 4, 1, -2},
                           {-8, -7, 6, 5, -4, -3, 2, 1}});
    default: throw UnsupportedError("hurwitz matrix: n must be 2, 4 or 8");
    }
}

Eigen::MatrixXd hurwitz_matrix(int n, const std::vector<double>& u) {
    auto s = hurwitz_symbolic(n);
    require_size(u, n, "hurwitz matrix");
    return numeric(s, u);
}

std::vector<std::vector<RatPoly>> symbolic_polys(const SymbolicMatrix& m) {
    const int n = static_cast<int>(m.size());
    int nv = 0;
    for (const auto& row : m)
        for (const auto& e : row) nv = std::max(nv, e.index + 1);
    std::vector<std::vector<RatPoly>> out(n);
    for (int i = 0; i < n; ++i)
        for (const auto& e : m[i]) out[i].push_back(RatPoly::var(nv, e.index, Rational(e.sign)));
    return out;
}

std::vector<double> cayley_dickson_product(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    if (n == 0 || (n & (n - 1)) || y.size() != n) throw DomainError("cayley-dickson: dimension must be a power of two");
    return cd_mul(x, y);
}

SymbolicMatrix cayley_dickson_left(int n) {
    if (n < 1 || n > 16 || (n & (n - 1))) throw UnsupportedError("cayley-dickson: n must be 1, 2, 4, 8 or 16");
    SymbolicMatrix m(n, std::vector<SignedVar>(n));
    // Each product u e_k is linear in u with one signed u_j per component;
    // read it off by feeding unit vectors for u.
    for (int k = 0; k < n; ++k) {
        std::vector<double> ek(n, 0.0);
        ek[k] = 1;
        for (int j = 0; j < n; ++j) {
            std::vector<double> ej(n, 0.0);
            ej[j] = 1;
            auto p = cd_mul(ej, ek);
            for (int i = 0; i < n; ++i)
                if (p[i] != 0) m[i][k] = {p[i] > 0 ? 1 : -1, j};
        }
    }
    return m;
}

SymbolicMatrix ks_matrix_symbolic() {
    return from_table({{3, 4, 1, 2}, {-4, 3, 2, -1}, {-1, -2, 3, 4}, {-2, 1, -4, 3}});
}

std::array<double, 3> ks_transform(const std::array<double, 4>& u) {
    return {2 * (u[0] * u[2] + u[1] * u[3]), 2 * (-u[0] * u[3] + u[1] * u[2]),
            u[0] * u[0] + u[1] * u[1] - u[2] * u[2] - u[3] * u[3]};
}

std::array<Rational, 3> ks_transform(const std::array<Rational, 4>& u) {
    std::array<Rational, 3> x{Rational(2 * (u[0] * u[2] + u[1] * u[3])), Rational(2 * (-u[0] * u[3] + u[1] * u[2])),
                              Rational(u[0] * u[0] + u[1] * u[1] - u[2] * u[2] - u[3] * u[3])};
    for (auto& v : x) v.canonicalize();
    return x;
}

namespace {
template <class T>
std::array<T, 5> r8_to_r5_impl(const std::array<T, 8>& u) {
    // z1 = u1 + i u2, ..., z4 = u7 + i u8
    // x1 + i x2 = 2 (z1 conj(z3) + z2 conj(z4)), x3 + i x4 = 2 (z1 z4 - z2 z3)
    const T &a1 = u[0], &b1 = u[1], &a2 = u[2], &b2 = u[3], &a3 = u[4], &b3 = u[5], &a4 = u[6], &b4 = u[7];
    auto dbl = [](const T& v) { return T(v + v); };
    std::array<T, 5> x;
    x[0] = dbl(T(a1 * a3 + b1 * b3 + a2 * a4 + b2 * b4));
    x[1] = dbl(T(b1 * a3 - a1 * b3 + b2 * a4 - a2 * b4));
    x[2] = dbl(T(a1 * a4 - b1 * b4 - a2 * a3 + b2 * b3));
    x[3] = dbl(T(a1 * b4 + b1 * a4 - a2 * b3 - b2 * a3));
    x[4] = T(a1 * a1 + b1 * b1 + a2 * a2 + b2 * b2 - a3 * a3 - b3 * b3 - a4 * a4 - b4 * b4);
    return x;
}
}  // namespace

std::array<double, 5> r8_to_r5(const std::array<double, 8>& u) { return r8_to_r5_impl(u); }

std::array<Rational, 5> r8_to_r5(const std::array<Rational, 8>& u) {
    auto x = r8_to_r5_impl(u);
    for (auto& v : x) v.canonicalize();
    return x;
}

std::array<double, 2> levi_civita(const std::array<double, 2>& u) {
    return {u[0] * u[0] - u[1] * u[1], 2 * u[0] * u[1]};
}

std::vector<RatPoly> quad_map(int N) {
    auto v = [N](int i) { return RatPoly::var(N, i); };
    auto two = [](RatPoly p) { return p * Rational(2); };
    switch (N) {
    case 2: return {v(0) * v(0) - v(1) * v(1), two(v(0) * v(1))};
    case 4:
        return {two(v(0) * v(2) + v(1) * v(3)), two(v(1) * v(2) - v(0) * v(3)),
                v(0) * v(0) + v(1) * v(1) - v(2) * v(2) - v(3) * v(3)};
    case 8: {
        std::array<RatPoly, 8> u;
        for (int i = 0; i < 8; ++i) u[i] = v(i);
        auto x = r8_to_r5_impl(u);
        return {x.begin(), x.end()};
    }
    default: throw UnsupportedError("quadratic map: N must be 2, 4 or 8");
    }
}

int quad_map_target(int N) {
    switch (N) {
    case 2: return 2;
    case 4: return 3;
    case 8: return 5;
    default: throw UnsupportedError("quadratic map: N must be 2, 4 or 8");
    }
}

Eigen::MatrixXd cayley_skew(int n, const std::vector<double>& u) {
    if (n == 3) {
        require_size(u, 4, "cayley rotation");
        Eigen::MatrixXd s(3, 3);
        s << 0, u[1], u[2], -u[1], 0, u[3], -u[2], -u[3], 0;
        return s;
    }
    if (n == 7) {
        require_size(u, 8, "cayley rotation");
        Eigen::MatrixXd h = hurwitz_matrix(8, u).topLeftCorner(7, 7);
        return (h - h.transpose()) / 2;
    }
    throw UnsupportedError("cayley rotation: n must be 3 or 7");
}

Eigen::MatrixXd cayley_rotation(int n, const std::vector<double>& u) {
    Eigen::MatrixXd s = cayley_skew(n, u);
    double r = 0;
    for (double v : u) r += v * v;
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd den = u[0] * id + s;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(den);
    double scale = std::max(1.0, den.cwiseAbs().maxCoeff());
    if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-12 * std::pow(scale, n))
        throw SingularError("cayley rotation: u1 I + S is singular");
    // (u1 I - S) and (u1 I + S)^-1 commute
    return r * lu.solve(u[0] * id - s);
}

Eigen::MatrixXd cayley_closed_form(int n, const std::vector<double>& u) {
    Eigen::MatrixXd s = cayley_skew(n, u);
    double r = 0;
    for (double v : u) r += v * v;
    return r * Eigen::MatrixXd::Identity(n, n) - 2 * u[0] * s + 2 * s * s;
}

Eigen::MatrixXd v_matrix(int n, const std::vector<double>& x) {
    if (n == 3) {
        require_size(x, 3, "V matrix");
        Eigen::MatrixXd v(3, 3);
        v << 0, x[2], -x[1], -x[2], 0, x[0], x[1], -x[0], 0;
        return v;
    }
    if (n == 7) {
        require_size(x, 7, "V matrix");
        const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
        Eigen::MatrixXd v(7, 7);
        v << 0, x7, -x6, -x5, x4, x3, -x2,
            -x7, 0, -x5, x6, x3, -x4, x1,
            x6, x5, 0, x7, -x2, -x1, -x4,
            x5, -x6, -x7, 0, -x1, x2, x3,
            -x4, -x3, x2, x1, 0, x7, -x6,
            -x3, x4, x1, -x2, -x7, 0, x5,
            x2, -x1, x4, -x3, x6, -x5, 0;
        return v;
    }
    throw UnsupportedError("V matrix: n must be 3 or 7");
}

std::vector<double> cross_product(int n, const std::vector<double>& a, const std::vector<double>& b) {
    if (n != 3 && n != 7) throw UnsupportedError("cross product: n must be 3 or 7");
    Eigen::VectorXd c;
    if (n == 3) {
        // V_3(r) w = w x r, so a x b = V_3(b) a
        require_size(a, 3, "cross product");
        c = v_matrix(3, b) * Eigen::Map<const Eigen::VectorXd>(a.data(), 3);
    } else {
        require_size(b, 7, "cross product");
        c = v_matrix(n, a) * Eigen::Map<const Eigen::VectorXd>(b.data(), 7);
    }
    return {c.data(), c.data() + c.size()};
}

VMatrixReport v_matrix_properties(int n, const std::vector<double>& x, double theta) {
    VMatrixReport rep;
    Eigen::MatrixXd v = v_matrix(n, x);
    double r2 = 0;
    for (double t : x) r2 += t * t;
    rep.cube_residual = (v * v * v + r2 * v).norm();

    Eigen::MatrixXd vu = r2 > 0 ? Eigen::MatrixXd(v / std::sqrt(r2)) : v;
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    rep.rotation = (theta * vu).exp();
    rep.rotation_residual = (rep.rotation - (id + std::sin(theta) * vu + (1 - std::cos(theta)) * vu * vu)).norm();

    const std::complex<double> I(0, 1);
    Eigen::MatrixXcd l = I * vu.cast<std::complex<double>>();
    Eigen::MatrixXcd lhs = (-I * theta * l).exp();
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Identity(n, n) - I * std::sin(theta) * l - (1 - std::cos(theta)) * l * l;
    rep.exp_residual = (lhs - rhs).norm();
    return rep;
}

RatPoly laplacian_pullback_defect(int n, int N, const RatPoly& f) {
    if (quad_map_target(N) != n) throw UnsupportedError("laplacian pullback: unsupported (n, N) pair");
    auto x = quad_map(N);
    RatPoly lhs = laplacian(compose(f, x, N), N);
    RatPoly r(N);
    for (int i = 0; i < N; ++i) r += RatPoly::var(N, i) * RatPoly::var(N, i);
    RatPoly rhs = r * compose(laplacian(f, n), x, N) * Rational(4);
    return lhs - rhs;
}

double laplacian_pullback_residual(int n, int N, const RatPoly& f, const std::vector<double>& u) {
    require_size(u, N, "laplacian pullback");
    RatPoly d = laplacian_pullback_defect(n, N, f);
    return std::abs(d.evaluate(u.data()));
}

Eigen::MatrixXcd gegenbauer_a_matrix(int n_case, const std::vector<double>& x) {
    const std::complex<double> I(0, 1);
    Eigen::MatrixXcd a;
    switch (n_case) {
    case 1:
        require_size(x, 3, "gegenbauer A1");
        a.resize(2, 2);
        a << x[2] + I * x[1], I * x[0], I * x[0], x[2] - I * x[1];
        break;
    case 2:
        require_size(x, 4, "gegenbauer A2");
        a.resize(2, 2);
        a << x[3] + I * x[2], x[1] + I * x[0], -x[1] + I * x[0], x[3] - I * x[2];
        break;
    case 3: {
        require_size(x, 6, "gegenbauer A3");
        const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5];
        a.resize(4, 4);
        a << x6 + I * x5, 0, -x1 + I * x2, -x4 + I * x3,
            0, x6 + I * x5, -x4 - I * x3, x1 + I * x2,
            x1 + I * x2, x4 - I * x3, x6 - I * x5, 0,
            x4 + I * x3, -x1 + I * x2, 0, x6 - I * x5;
        break;
    }
    default: throw UnsupportedError("gegenbauer identity: case must be 1, 2 or 3");
    }
    return a;
}

using detail::gauss_hermite;

GaussianIdentity gegenbauer_gaussian_identity(int n_case, double alpha, const std::vector<double>& x, long samples,
                                              uint64_t seed) {
    Eigen::MatrixXcd a = gegenbauer_a_matrix(n_case, x);
    double r2 = 0;
    for (double t : x) r2 += t * t;
    if (std::abs(alpha) * std::sqrt(r2) >= 0.9) throw DomainError("gegenbauer identity: |alpha| r must be < 0.9");
    const double xl = x.back();
    const double c = 1 - alpha * xl;

    GaussianIdentity out;
    out.exponent = n_case == 1 ? 0.5 : (n_case == 2 ? 1.0 : 2.0);
    out.closed = std::pow(1 - 2 * xl * alpha + alpha * alpha * r2, -out.exponent);
    const std::complex<double> I(0, 1);

    if (n_case == 1) {
        // pi^-1 int exp(-u^2) exp(alpha u^T A u) du over R^2, after u = v / sqrt(c)
        std::vector<double> t, w;
        gauss_hermite(64, t, w);
        std::complex<double> s = 0;
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = 0; j < t.size(); ++j) {
                double v1 = t[i], v2 = t[j];
                double q = x[1] * (v1 * v1 - v2 * v2) + 2 * x[0] * v1 * v2;
                s += w[i] * w[j] * std::exp(I * (alpha * q / c));
            }
        out.integral = s / (c * M_PI);
    } else {
        // complex Gaussian measure pi^-k exp(-|z|^2); sample z = w / sqrt(c)
        const int k = static_cast<int>(a.rows());
        if (samples < 2) throw DomainError("gegenbauer identity: need at least 2 samples");
        Eigen::MatrixXcd b = (a - xl * Eigen::MatrixXcd::Identity(k, k)) * (alpha / c);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
        std::complex<double> sum = 0;
        double sum2 = 0;
        Eigen::VectorXcd w(k);
        for (long s = 0; s < samples; ++s) {
            for (int i = 0; i < k; ++i) w(i) = {nd(rng), nd(rng)};
            std::complex<double> g = std::exp(w.dot(b * w));
            sum += g;
            sum2 += std::norm(g);
        }
        const double nn = static_cast<double>(samples);
        std::complex<double> mean = sum / nn;
        double var = std::max(0.0, sum2 / nn - std::norm(mean));
        double scale = std::pow(c, -k);
        out.integral = scale * mean;
        out.std_error = scale * std::sqrt(var / (nn - 1));
    }
    out.residual = std::abs(out.integral - out.closed);
    return out;
}

}  // namespace gfkit
