#include <random>

#include <gfkit/manybody.hpp>

#include "commands.hpp"

namespace gfkit::cli {

namespace {

struct {
    std::string a, b;
    std::vector<int> positions;
    int n = 4, s = 2;
    int M = 4, occ = 2;
    bool two_body = false;
    double eps = 0.3;
    int N = 8, truncation = 0, kmax = 7;
    double e = 1, V = 0.1;
} opt;

RationalMatrix parse_matrix(const std::string& text, const char* flag) {
    RationalMatrix m;
    for (const auto& row : split_rows(text)) {
        std::vector<Rational> r;
        for (const auto& tok : row) {
            auto q = as_rational(tok);
            if (!q) throw UsageError(std::string(flag) + ": not a rational entry: " + tok);
            r.push_back(*q);
        }
        m.push_back(r);
    }
    return m;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> d(-9, 9);
    RationalMatrix m(rows, std::vector<Rational>(cols));
    for (auto& r : m)
        for (auto& x : r) x = d(rng);
    return m;
}

std::string rat(const Rational& q) { return SqrtRational(q).str(); }

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

CMatrix random_unitary(int M, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix z(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            double re = g(rng);
            double im = g(rng);
            z(i, j) = {re, im};
        }
    Eigen::HouseholderQR<CMatrix> qr(z);
    return qr.householderQ();
}

CMatrix random_complex(int M, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix z(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            double re = g(rng);
            double im = g(rng);
            z(i, j) = {re, im};
        }
    return z;
}

void system_options(CLI::App* c) {
    c->add_option("--M", opt.M, "orbitals (<= 10)")->check(CLI::Range(1, 10));
    c->add_option("--n", opt.occ, "occupied orbitals");
}

void add_row(Table& t, const std::string& what, std::complex<double> v) { t.add({what, v.real(), v.imag()}); }

}  // namespace

void add_manybody(CLI::App& app, Context& ctx) {
    auto* m = app.add_subcommand("manybody", "determinants, Slater overlaps, Thouless and Lipkin model");
    m->require_subcommand(1);

    auto* c = leaf(m, "cramer", "determinants with replaced columns (random A, B unless --a/--b given)", ctx, [&ctx] {
        RationalMatrix A, B;
        if (opt.a.empty() != opt.b.empty()) throw UsageError("--a and --b go together");
        if (!opt.a.empty()) {
            A = parse_matrix(opt.a, "--a");
            B = parse_matrix(opt.b, "--b");
        } else {
            std::mt19937_64 rng(ctx.seed);
            if (opt.s < 0 || opt.s > opt.n || opt.n < 1 || opt.n > 6) throw UsageError("need 1 <= n <= 6, 0 <= s <= n");
            A = random_matrix(rng, opt.n, opt.n);
            B = random_matrix(rng, opt.n, opt.s);
        }
        Envelope e;
        e.meta = "generalized Cramer rule: det(A with columns replaced) = det A * det x(k, i_l), A X = B";
        if (!opt.positions.empty()) {
            Rational v = generalized_cramer(SubstitutionQuery<Rational>{A, B, opt.positions});
            e.value_exact = rat(v);
            e.value_float = v.get_d();
            return e;
        }
        Rational det = determinant(A);
        e.value_exact = rat(det);
        e.value_float = det.get_d();
        Table t{{"positions", "value_exact"}, {}};
        for (const auto& [pos, v] : cramer_table(A, B)) t.add({join(pos), rat(v)});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--a", opt.a, "n x n rational matrix, rows separated by ';'");
    c->add_option("--b", opt.b, "n x s replacement columns, rows separated by ';'");
    c->add_option("--positions", opt.positions, "0-based target columns; omit for the full table");
    c->add_option("--n", opt.n, "random size (<= 6)");
    c->add_option("--s", opt.s, "random number of replaced columns");

    c = leaf(m, "overlap", "<Phi|R|Phi> for a random unitary R", ctx, [&ctx] {
        std::mt19937_64 rng(ctx.seed);
        SlaterSystem s{opt.M, opt.occ, random_unitary(opt.M, rng)};
        validate(s);
        auto det = slater_overlap(s);
        FockSpace fs(opt.M, opt.occ);
        auto brute = fs.reference().dot(fs.transform_reference(s.R));
        Envelope e;
        e.meta = "Slater overlap = det of the occupied block; value_float is the distance to the Fock-space product";
        e.value_float = std::abs(det - brute);
        Table t{{"method", "re", "im"}, {}};
        add_row(t, "determinant", det);
        add_row(t, "fock", brute);
        e.table = std::move(t);
        return e;
    });
    system_options(c);

    c = leaf(m, "lowdin", "<Phi|T R|Phi> by the Lowdin formula", ctx, [&ctx] {
        std::mt19937_64 rng(ctx.seed);
        SlaterSystem s{opt.M, opt.occ, random_unitary(opt.M, rng)};
        validate(s);
        Envelope e;
        Table t{{"method", "re", "im"}, {}};
        if (opt.two_body) {
            TwoBody V{opt.M, std::vector<std::complex<double>>(size_t(opt.M) * opt.M * opt.M * opt.M)};
            std::normal_distribution<double> g;
            std::vector<std::complex<double>> raw(V.v.size());
            for (auto& x : raw) {
                double re = g(rng);
                double im = g(rng);
                x = {re, im};
            }
            const int M = opt.M;
            auto at = [&](int p, int q, int r, int u) { return raw[((p * M + q) * M + r) * M + u]; };
            for (int p = 0; p < M; ++p)
                for (int q = 0; q < M; ++q)
                    for (int r = 0; r < M; ++r)
                        for (int u = 0; u < M; ++u)
                            V(p, q, r, u) = at(p, q, r, u) - at(q, p, r, u) - at(p, q, u, r) + at(q, p, u, r);
            auto v = lowdin_two_body(s, V);
            e.meta = "two-body Lowdin formula with 2x2 minors of A^-1; value_float is |value|";
            e.value_float = std::abs(v);
            add_row(t, "lowdin", v);
        } else {
            CMatrix T = random_complex(opt.M, rng);
            auto v = lowdin_matrix_element(s, T);
            FockSpace fs(opt.M, opt.occ);
            auto brute = fs.reference().dot(fs.apply_one_body(T, fs.transform_reference(s.R)));
            e.meta = "one-body Lowdin formula; value_float is the distance to the Fock-space product";
            e.value_float = std::abs(v - brute);
            add_row(t, "lowdin", v);
            add_row(t, "fock", brute);
        }
        e.table = std::move(t);
        return e;
    });
    system_options(c);
    c->add_flag("--two-body", opt.two_body, "random antisymmetrised two-body operator");

    c = leaf(m, "thouless", "Thouless representation of exp(i eps H)|Phi>", ctx, [&ctx] {
        std::mt19937_64 rng(ctx.seed);
        CMatrix z = random_complex(opt.M, rng);
        CMatrix h = (z + z.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
        Eigen::VectorXcd ph = (std::complex<double>(0, opt.eps) * es.eigenvalues().cast<std::complex<double>>()).array().exp();
        CMatrix U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
        auto r = thouless({opt.M, opt.occ, U});
        Envelope e;
        e.meta = "Thouless theorem U|Phi> = <Phi|U|Phi> exp(sum x b^+ a)|Phi>; value_float is the Fock-space residual";
        e.value_float = r.residual;
        Table t{{"quantity", "re", "im"}, {}};
        add_row(t, "overlap", r.overlap);
        t.add({"terms", r.terms, 0});
        for (int k = 0; k < r.x.rows(); ++k)
            for (int i = 0; i < r.x.cols(); ++i)
                add_row(t, "x(" + std::to_string(opt.occ + k) + "," + std::to_string(i) + ")", r.x(k, i));
        e.table = std::move(t);
        return e;
    });
    system_options(c);
    c->add_option("--eps", opt.eps, "strength of the random rotation");

    c = leaf(m, "lipkin", "Lipkin model spectrum; with --truncation also the boson-image spectrum", ctx, [] {
        LipkinModel model{opt.N, opt.e, opt.V};
        auto exact = lipkin_spectrum(model);
        Envelope e;
        if (opt.truncation > 0) {
            auto im = lipkin_boson_images(model, opt.truncation);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(im.H, Eigen::EigenvaluesOnly);
            Table t{{"index", "energy", "boson_energy"}, {}};
            for (size_t i = 0; i < exact.size(); ++i) t.add({i, exact[i], es.eigenvalues()(i)});
            e.meta = "Lipkin model, exact and truncated boson images; value_float is the gap error";
            e.value_float = lipkin_gap_error(model, opt.truncation);
            e.table = std::move(t);
            return e;
        }
        Table t{{"index", "energy"}, {}};
        for (size_t i = 0; i < exact.size(); ++i) t.add({i, exact[i]});
        e.meta = "Lipkin model H = e J0 + V/2 (J+^2 + J-^2); value_float is the ground energy";
        e.value_float = exact.front();
        e.table = std::move(t);
        return e;
    });
    c->add_option("--N", opt.N, "particle number (even)");
    c->add_option("--e", opt.e, "single-particle splitting");
    c->add_option("--V", opt.V, "pair coupling");
    c->add_option("--truncation", opt.truncation, "terms kept in the boson images");

    c = leaf(m, "boson-coeffs", "coefficients of the particle-hole boson expansion", ctx, [] {
        auto a = boson_expansion_coeffs(opt.kmax);
        Envelope e;
        e.meta = "boson expansion coefficients from the triangular recurrence";
        Table t{{"k", "alpha", "residual"}, {}};
        for (int k = 0; k <= opt.kmax; ++k) t.add({k, a[k], boson_expansion_residual(a, k + 1)});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--kmax", opt.kmax)->check(CLI::Range(0, 100));
}

}  // namespace gfkit::cli
