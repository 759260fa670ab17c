// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <gfkit/hurwitz.hpp>
#include <gfkit/manybody.hpp>
#include <gfkit/oscillator.hpp>
#include <gfkit/special.hpp>
#include <gfkit/unitary.hpp>
#include <gfkit/wigner.hpp>

#include "oracles/fock_oracle.hpp"
#include "oracles/oscillator_eigen.hpp"
#include "oracles/su3_product.hpp"
#include "oracles/threej_racah.hpp"

using namespace gfkit;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void run(int id, const char* name, const std::function<Outcome()>& f, double limit = 0) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = f();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) r = {false, r.detail + ", over the " + fmt(limit) + " s limit"};
    if (!r.ok) ++failures;
    std::printf("%s %2d %s: %s [%.2f s]\n", r.ok ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs);
    std::fflush(stdout);
}

bool tri(int a, int b, int c) { return (a + b + c) % 2 == 0 && c >= std::abs(a - b) && c <= a + b; }

SqrtRational sum_of(const SqrtAccumulator& acc) { return acc.empty() ? SqrtRational() : acc.result(); }

// all non-increasing labels of length n with entries >= 0 and sum <= s
void labels_upto(int n, int s, std::vector<int>& cur, std::vector<IrrepLabel>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    int maxv = cur.empty() ? s : cur.back();
    int used = std::accumulate(cur.begin(), cur.end(), 0);
    for (int v = 0; v <= std::min(maxv, s - used); ++v) {
        cur.push_back(v);
        labels_upto(n, s, cur, out);
        cur.pop_back();
    }
}

Outcome threej_exhaustive() {
    long n = 0, bad = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            for (int c = 0; c <= 8; ++c) {
                if (!tri(a, b, c)) continue;
                for (int ma = -a; ma <= a; ma += 2)
                    for (int mb = -b; mb <= b; mb += 2) {
                        int mc = -ma - mb;
                        if (std::abs(mc) > c) continue;
                        ++n;
                        if (!(wigner_3j(a, b, c, ma, mb, mc) == oracle::threej_racah(a, b, c, ma, mb, mc))) ++bad;
                    }
            }
    return {bad == 0 && n == 4451, std::to_string(n) + " labels, " + std::to_string(bad) + " mismatches"};
}

Outcome threej_orthogonality() {
    long sums = 0, bad = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            // sum over m1 at fixed m3 for each pair j3, j3'
            for (int c = std::abs(a - b); c <= std::min(8, a + b); c += 2)
                for (int cp = std::abs(a - b); cp <= std::min(8, a + b); cp += 2)
                    for (int mc = -std::min(c, cp); mc <= std::min(c, cp); mc += 2) {
                        SqrtAccumulator acc;
                        for (int ma = -a; ma <= a; ma += 2) {
                            int mb = -ma - mc;
                            if (std::abs(mb) > b) continue;
                            acc.add(wigner_3j(a, b, c, ma, mb, mc) * wigner_3j(a, b, cp, ma, mb, mc) * Rational(c + 1));
                        }
                        ++sums;
                        if (!(sum_of(acc) == SqrtRational(c == cp ? 1 : 0))) ++bad;
                    }
            // sum over j3 at fixed m1, m2, m1', m2'
            for (int ma = -a; ma <= a; ma += 2)
                for (int mb = -b; mb <= b; mb += 2)
                    for (int map = -a; map <= a; map += 2) {
                        int mbp = ma + mb - map;
                        if (std::abs(mbp) > b) continue;
                        int mc = -ma - mb;
                        SqrtAccumulator acc;
                        for (int c = std::abs(a - b); c <= a + b; c += 2) {
                            if (std::abs(mc) > c) continue;
                            acc.add(wigner_3j(a, b, c, ma, mb, mc) * wigner_3j(a, b, c, map, mbp, mc) * Rational(c + 1));
                        }
                        ++sums;
                        if (!(sum_of(acc) == SqrtRational(ma == map ? 1 : 0))) ++bad;
                    }
        }
    return {bad == 0, std::to_string(sums) + " sums, " + std::to_string(bad) + " wrong"};
}

Outcome sixj_routes() {
    long n = 0, bad = 0;
    std::array<int, 6> t{};
    for (t[0] = 0; t[0] <= 6; ++t[0])
        for (t[1] = 0; t[1] <= 6; ++t[1])
            for (t[2] = 0; t[2] <= 6; ++t[2]) {
                if (!tri(t[0], t[1], t[2])) continue;
                for (t[3] = 0; t[3] <= 6; ++t[3])
                    for (t[4] = 0; t[4] <= 6; ++t[4]) {
                        if (!tri(t[3], t[4], t[2])) continue;
                        for (t[5] = 0; t[5] <= 6; ++t[5]) {
                            if (!tri(t[0], t[4], t[5]) || !tri(t[3], t[1], t[5])) continue;
                            SixJLabel s{t};
                            ++n;
                            if (!(wigner_6j_gf(s) == wigner_6j_oracle(s))) ++bad;
                        }
                    }
            }
    return {bad == 0 && n > 500, std::to_string(n) + " labels, " + std::to_string(bad) + " mismatches"};
}

Outcome regge() {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> d(0, 10);
    int tested = 0, bad = 0;
    size_t largest = 0;
    while (tested < 200) {
        ThreeJLabel l{{d(rng), d(rng), d(rng)}, {0, 0, 0}};
        if (!tri(l.two_j[0], l.two_j[1], l.two_j[2])) continue;
        std::uniform_int_distribution<int> m0(0, l.two_j[0]), m1(0, l.two_j[1]);
        l.two_m[0] = 2 * m0(rng) - l.two_j[0];
        l.two_m[1] = 2 * m1(rng) - l.two_j[1];
        l.two_m[2] = -l.two_m[0] - l.two_m[1];
        if (std::abs(l.two_m[2]) > l.two_j[2]) continue;
        ++tested;
        auto ref = wigner_3j(l).abs();
        auto orb = regge_orbit(l);
        largest = std::max(largest, orb.size());
        if (72 % orb.size() != 0) ++bad;
        for (const auto& m : orb)
            if (!(wigner_3j(m.label).abs() == ref)) ++bad;
    }
    return {bad == 0 && largest == 72,
            std::to_string(tested) + " labels, largest orbit " + std::to_string(largest) + ", " + std::to_string(bad) + " violations"};
}

Outcome gelfand_weyl() {
    long n = 0, bad = 0;
    for (int k = 2; k <= 5; ++k) {
        std::vector<IrrepLabel> hs;
        std::vector<int> cur;
        labels_upto(k, 6, cur, hs);
        for (const auto& h : hs) {
            ++n;
            if (Integer(gelfand_enumerate(h).size()) != weyl_dimension(h)) ++bad;
        }
    }
    return {bad == 0, std::to_string(n) + " irreps, " + std::to_string(bad) + " mismatches"};
}

Outcome bfr_tables() {
    const std::map<std::string, std::string> u4 = {
        {"D1", "y21*y31*y41"}, {"D2", "x21*y31*y41"},  {"D3", "x31*y41"},     {"D4", "x41"},
        {"D13", "y21*x32*y42"}, {"D23", "x21*x32*y42"}, {"D12", "y32*y42"},    {"D14", "y21*y31*x42"},
        {"D24", "x21*y31*x42"}, {"D34", "x31*x42"},     {"D134", "y21*x32*x43"}, {"D234", "x21*x32*x43"},
        {"D124", "y32*x43"},    {"D123", "y43"},        {"D1234", "y44"}};
    const std::map<std::string, std::string> u5 = {
        {"D1", "y21*y31*y41*y51"},     {"D2", "x21*y31*y41*y51"},     {"D3", "x31*y41*y51"},
        {"D4", "x41*y51"},             {"D5", "x51"},                 {"D15", "y21*y31*y41*x52"},
        {"D25", "x21*y31*y41*x52"},    {"D35", "x31*y41*x52"},        {"D45", "x41*x52"},
        {"D13", "y21*x32*y42*y52"},    {"D23", "x21*x32*y42*y52"},    {"D12", "y32*y42*y52"},
        {"D14", "y21*y31*x42*y52"},    {"D24", "x21*y31*x42*y52"},    {"D34", "x31*x42*y52"},
        {"D135", "y21*x32*y42*x53"},   {"D235", "x21*x32*y42*x53"},   {"D125", "y32*y42*x53"},
        {"D145", "y21*y31*x42*x53"},   {"D245", "x21*y31*x42*x53"},   {"D345", "x31*x42*x53"},
        {"D1345", "y21*x32*x43*x54"},  {"D2345", "x21*x32*x43*x54"},  {"D1245", "y32*x43*x54"},
        {"D1235", "y43*x54"},          {"D134", "y21*x32*x43*y53"},   {"D234", "x21*x32*x43*y53"},
        {"D124", "y32*x43*y53"},       {"D123", "y43*y53"},           {"D1234", "y54"},
        {"D12345", "y55"}};
    std::string detail;
    bool ok = true;
    for (const auto& [n, printed] : {std::pair{4, u4}, std::pair{5, u5}}) {
        auto gf = bfr_generating_function(n);
        int match = 0;
        for (const auto& [t, m] : gf) {
            auto it = printed.find(t.minor_name());
            if (it != printed.end() && it->second == m.str()) ++match;
        }
        ok = ok && gf.size() == printed.size() && match == int(printed.size());
        detail += "U(" + std::to_string(n) + ") " + std::to_string(match) + "/" + std::to_string(printed.size()) + " ";
    }
    return {ok, detail + "minors"};
}

Outcome su3_completeness() {
    double worst = 0;
    long factor_bad = 0, couplings = 0;
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
            for (auto [lam3, mu3] : su3_decompose_multfree(l1, l2)) {
                auto rep = oracle::su3_product_check(l1, l2, mu3);
                worst = std::max({worst, rep.orthonormality, rep.residual, rep.casimir});
                for (const auto& a1 : su3_labels(l1, 0))
                    for (const auto& a2 : su3_labels(l2, 0))
                        for (const auto& a3 : su3_labels(lam3, mu3)) {
                            auto c = su3_wigner_multfree(l1, l2, lam3, mu3, a1, a2, a3);
                            ++couplings;
                            if (!(c.wigner == c.isoscalar * c.su2_factor)) ++factor_bad;
                        }
            }
    return {worst < 1e-10 && factor_bad == 0, "residual " + fmt(worst) + ", " + std::to_string(couplings) + " couplings, " +
                                                  std::to_string(factor_bad) + " factorization failures"};
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

Outcome hurwitz_identities() {
    int defects = 0;
    for (int n : {2, 4, 8}) {
        auto p = symbolic_polys(hurwitz_symbolic(n));
        RatPoly norm(n);
        for (int i = 0; i < n; ++i) norm += RatPoly::var(n, i) * RatPoly::var(n, i);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RatPoly s(n);
                for (int k = 0; k < n; ++k) s += p[k][i] * p[k][j];
                if (i == j) s -= norm;
                if (!s.is_zero()) ++defects;
            }
    }
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> d(-20, 20);
    int ks_bad = 0;
    for (int k = 0; k < 1000; ++k) {
        std::array<Rational, 4> u;
        Rational n2 = 0;
        for (auto& x : u) {
            int num = d(rng);
            int den = 1 + std::abs(d(rng));
            x = Rational(num, den);
            x.canonicalize();
            n2 += x * x;
        }
        auto x = ks_transform(u);
        if (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] != n2 * n2) ++ks_bad;
    }
    std::normal_distribution<double> g;
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
        std::vector<double> a(7), b(7);
        for (auto& x : a) x = g(rng);
        for (auto& x : b) x = g(rng);
        auto c = cross_product(7, a, b);
        double rhs = dot(a, a) * dot(b, b) - dot(a, b) * dot(a, b);
        worst = std::max(worst, std::abs(dot(c, c) - rhs) / std::max(1.0, dot(a, a) * dot(b, b)));
    }
    return {defects == 0 && ks_bad == 0 && worst < 1e-12, std::to_string(defects) + " symbolic defects, " +
                                                              std::to_string(ks_bad) + " KS failures, 7-D Lagrange " +
                                                              fmt(worst)};
}

RatPoly random_poly(std::mt19937_64& rng, int nv, int max_deg) {
    std::uniform_int_distribution<int> nterms(1, 6), coef(-9, 9), var(0, nv - 1), deg(0, max_deg);
    RatPoly p(nv);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Exponents e{};
        int dd = deg(rng);
        for (int j = 0; j < dd; ++j) e[var(rng)] += 1;
        int c = coef(rng);
        p.add_term(e, Rational(c == 0 ? 1 : c));
    }
    return p;
}

Outcome laplacian() {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> ud(-1, 1);
    double worst = 0;
    int defects = 0;
    for (auto [n, N] : {std::pair{2, 2}, std::pair{3, 4}, std::pair{5, 8}})
        for (int trial = 0; trial < 50; ++trial) {
            RatPoly f = random_poly(rng, n, 6);
            std::vector<double> u(N);
            for (auto& t : u) t = ud(rng);
            if (!laplacian_pullback_defect(n, N, f).is_zero()) ++defects;
            worst = std::max(worst, laplacian_pullback_residual(n, N, f, u));
        }
    return {worst < 1e-9 && defects == 0, "150 polynomials, worst residual " + fmt(worst)};
}

Outcome hydrogen() {
    double worst = 0, worst_norm = 0;
    int states = 0;
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; n <= 4; ++n)
            for (int l = 0; l < n; ++l) {
                HydrogenState s{N, n, l, {}};
                double err = 0, top = 0;
                for (int i = 0; i < 50; ++i) {
                    double p = 0.1 * i;
                    double a = hydrogen_momentum_radial(s, p), b = fourier_momentum_oracle(s, p);
                    err = std::max(err, std::abs(a - b));
                    top = std::max(top, std::abs(b));
                }
                worst = std::max(worst, err / top);
                worst_norm = std::max(worst_norm, std::abs(momentum_norm(s) - 1));
                ++states;
            }
    return {worst < 1e-5 && worst_norm < 1e-6, std::to_string(states) + " states, sup relative error " + fmt(worst) +
                                                    ", norm error " + fmt(worst_norm)};
}

Outcome propagators() {
    OscillatorParams p;
    double semigroup = 0;
    for (double b1 : {0.3, 1.0})
        for (double b2 : {0.5, 1.7})
            for (double x : {-0.8, 0.4})
                for (double xp : {0.0, 1.3}) {
                    double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                        [&](double y) {
                            return (ho_propagator(p, x, y, cplx(0, -b1)) * ho_propagator(p, y, xp, cplx(0, -b2))).real();
                        },
                        -20, 20, 15, 1e-14);
                    semigroup = std::max(semigroup, std::abs(v - ho_propagator(p, x, xp, cplx(0, -(b1 + b2))).real()));
                }

    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double eigen = 0, factor = 0;
    for (int trial = 0; trial < 10; ++trial) {
        double x = u(rng), xp = u(rng);
        eigen = std::max(eigen, std::abs(ho_propagator(p, x, xp, cplx(0, -1)).real() - oracle::mehler_sum(x, xp, 1, 1, 80)));
        std::array<double, 2> r1{u(rng), u(rng)}, r2{u(rng), u(rng)};
        for (double w : {0.0, 0.4})
            eigen = std::max(eigen, std::abs(magnetic_propagator(p, w, r1, r2, cplx(0, -1)) - oracle::magnetic_sum(r1, r2, 1, 1, w, 70)));
        for (cplx t : {cplx(0, -1), cplx(0.6, 0), cplx(0.4, -0.3)}) {
            cplx m = magnetic_propagator(p, 0, r1, r2, t);
            cplx f = ho_propagator(p, r1[0], r2[0], t) * ho_propagator(p, r1[1], r2[1], t);
            factor = std::max(factor, std::abs(m - f) / std::max(1.0, std::abs(f)));
        }
    }

    double trace = 0;
    for (double w : {0.0, 0.3, 0.7}) {
        double tr = oracle::box_integral(
            [&](double x, double y) { return magnetic_propagator(p, w, {x, y}, {x, y}, cplx(0, -1)).real(); }, 8);
        trace = std::max(trace, std::abs(tr - oracle::magnetic_partition(1, 1, w, 80)));
    }
    return {semigroup < 1e-8 && eigen < 1e-9 && factor < 1e-10 && trace < 1e-4,
            "semigroup " + fmt(semigroup) + ", eigen-sum " + fmt(eigen) + ", factorization " + fmt(factor) + ", trace " +
                fmt(trace)};
}

Outcome cramer() {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> d(-9, 9), size(1, 6);
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
        int n = size(rng);
        int s = std::uniform_int_distribution<int>(0, n)(rng);
        RationalMatrix A(n, std::vector<Rational>(n)), B(n, std::vector<Rational>(s));
        do {
            for (auto& r : A)
                for (auto& x : r) x = d(rng);
        } while (oracle::leibniz(A) == 0);
        for (auto& r : B)
            for (auto& x : r) x = d(rng);
        std::vector<int> pos(n);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        pos.resize(s);
        if (generalized_cramer(SubstitutionQuery<Rational>{A, B, pos}) != oracle::leibniz(oracle::substituted(A, B, pos)))
            ++bad;
    }
    return {bad == 0, "500 instances, " + std::to_string(bad) + " mismatches"};
}

TwoBody random_two_body(int M, std::mt19937& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> raw(size_t(M) * M * M * M);
    for (auto& x : raw) {
        double re = g(rng);
        double im = g(rng);
        x = {re, im};
    }
    auto at = [&](int p, int q, int r, int s) { return raw[((p * M + q) * M + r) * M + s]; };
    TwoBody V{M, std::vector<cplx>(raw.size())};
    for (int p = 0; p < M; ++p)
        for (int q = 0; q < M; ++q)
            for (int r = 0; r < M; ++r)
                for (int s = 0; s < M; ++s) V(p, q, r, s) = at(p, q, r, s) - at(q, p, r, s) - at(p, q, s, r) + at(q, p, s, r);
    return V;
}

Outcome lowdin_thouless() {
    std::mt19937 rng(61);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int M = 2 + trial % 5, n = 1 + (trial / 5) % (M - 1);
        oracle::Space sp(M, n);
        CMatrix R = trial % 2 ? oracle::random_unitary(M, rng) : oracle::random_complex(M, rng);
        Eigen::MatrixXcd RR = oracle::many_body_R(sp, R);
        auto rel = [](cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); };
        SlaterSystem sys{M, n, R};

        worst = std::max(worst, rel(slater_overlap(sys), RR(0, 0)));
        CMatrix T = oracle::random_complex(M, rng);
        worst = std::max(worst, rel(lowdin_matrix_element(sys, T), (oracle::many_body_one(sp, T) * RR)(0, 0)));
        TwoBody V = random_two_body(M, rng);
        worst = std::max(worst, rel(lowdin_two_body(sys, V), (oracle::many_body_two(sp, M, V) * RR)(0, 0)));

        CMatrix U = oracle::random_unitary(M, rng);
        auto t = thouless({M, n, U});
        CMatrix X = CMatrix::Zero(M, M);
        X.bottomLeftCorner(M - n, n) = t.x;
        Eigen::MatrixXcd XX = oracle::many_body_one(sp, X);
        Eigen::MatrixXcd E = Eigen::MatrixXcd::Identity(sp.size(), sp.size()), term = E;
        for (int k = 1; k <= M; ++k) {
            term = term * XX / double(k);
            E += term;
        }
        Eigen::VectorXcd lhs = oracle::many_body_R(sp, U).col(0);
        worst = std::max(worst, (lhs - t.overlap * E.col(0)).norm());
    }
    return {worst < 1e-10, "100 systems, worst deviation " + fmt(worst)};
}

Outcome lipkin() {
    double analytic = 0;
    for (double V : {0.3, -0.7, 2.0}) {
        double e = 1.2, r = std::hypot(e, V);
        auto s = lipkin_spectrum({2, e, V});
        analytic = std::max({analytic, std::abs(s[0] + r), std::abs(s[1]), std::abs(s[2] - r)});
    }
    LipkinModel m{8, 1.0, 0.1};
    double g2 = lipkin_gap_error(m, 2), g3 = lipkin_gap_error(m, 3), g4 = lipkin_gap_error(m, 4);
    auto a = boson_expansion_coeffs(3);
    bool alpha = std::abs(a[0] - 1) < 1e-12 && std::abs(a[1] - (1 - std::sqrt(2.0))) < 1e-12 && std::abs(a[2] + 0.048) < 1e-3;
    return {analytic < 1e-12 && g2 > g3 && g3 > g4 && alpha,
            "N=2 error " + fmt(analytic) + ", gap errors " + fmt(g2) + " > " + fmt(g3) + " > " + fmt(g4) + ", alpha " +
                fmt(a[0]) + " " + fmt(a[1]) + " " + fmt(a[2])};
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* f = popen((cmd + " 2>&1; echo \"exit=$?\"").c_str(), "r");
    if (!f) throw std::runtime_error("popen failed");
    char buf[4096];
    size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, k);
    pclose(f);
    return out;
}

Outcome cli_determinism() {
    std::ifstream in(GFKIT_CLI_CORPUS);
    if (!in) return {false, "corpus not found"};
    std::vector<std::string> cmds;
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') cmds.push_back(line);
    int differ = 0, failed = 0;
    for (const auto& c : cmds) {
        std::string full = std::string("'") + GFKIT_CLI + "' " + c;
        std::string a = capture(full), b = capture(full);
        if (a != b) ++differ;
        if (a.find("exit=0") == std::string::npos) ++failed;
    }
    return {cmds.size() >= 25 && differ == 0 && failed == 0, std::to_string(cmds.size()) + " commands, " +
                                                               std::to_string(differ) + " differ, " + std::to_string(failed) +
                                                               " nonzero exits"};
}

}  // namespace

int main() {
    run(1, "3j against the direct factorial sum, two_j <= 8", threej_exhaustive, 30);
    run(2, "3j orthogonality sums, two_j <= 8", threej_orthogonality);
    run(3, "6j generating function against the m-sum, two_j <= 6", sixj_routes, 120);
    run(4, "Regge orbits keep |3j|", regge);
    run(5, "Gel'fand count equals Weyl dimension, U(2..5)", gelfand_weyl, 10);
    run(6, "BFR regenerates the U(4) and U(5) tables", bfr_tables);
    run(7, "SU(3) product states and isoscalar factorization", su3_completeness);
    run(8, "Hurwitz, KS and 7-D Lagrange identities", hurwitz_identities);
    run(9, "Laplacian pullback", laplacian);
    run(10, "hydrogen momentum wavefunctions", hydrogen, 300);
    run(11, "oscillator and magnetic propagators", propagators);
    run(12, "generalized Cramer rule", cramer, 10);
    run(13, "Lowdin and Thouless against Fock space", lowdin_thouless);
    run(14, "Lipkin model and boson images", lipkin);
    run(15, "CLI determinism", cli_determinism);
    std::printf("%d of 15 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
