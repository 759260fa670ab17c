#include <cmath>
#include <random>

#include <gfkit/hurwitz.hpp>

#include "commands.hpp"

namespace gfkit::cli {

namespace {

struct {
    int n = 4;
    int dim = 3;  // cayley and cross
    int trials = 1000;
    std::vector<std::string> u;
    std::vector<double> a, b;
} opt;

std::vector<double> as_doubles(const std::vector<std::string>& v) {
    std::vector<double> out;
    for (const auto& s : v) {
        if (auto q = as_rational(s)) {
            out.push_back(q->get_d());
            continue;
        }
        try {
            size_t used = 0;
            out.push_back(std::stod(s, &used));
            if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw UsageError("not a number: " + s);
        }
    }
    return out;
}

std::string entry(const SignedVar& v) { return (v.sign < 0 ? "-u" : "+u") + std::to_string(v.index + 1); }

Table matrix_table(const Eigen::MatrixXd& m) {
    Table t;
    for (int j = 0; j < m.cols(); ++j) t.columns.push_back("c" + std::to_string(j + 1));
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<json> r;
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        t.add(r);
    }
    return t;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double lagrange_residual(int n, const std::vector<double>& a, const std::vector<double>& b) {
    auto c = cross_product(n, a, b);
    double rhs = dot(a, a) * dot(b, b) - dot(a, b) * dot(a, b);
    return std::abs(dot(c, c) - rhs) / std::max(1.0, dot(a, a) * dot(b, b));
}

// H^t H - |u|^2 I, entry by entry, as polynomials
int symbolic_defects(int n) {
    auto p = symbolic_polys(hurwitz_symbolic(n));
    RatPoly norm(n);
    for (int i = 0; i < n; ++i) norm += RatPoly::var(n, i).pow(2);
    int bad = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatPoly s(n);
            for (int k = 0; k < n; ++k) s += p[k][i] * p[k][j];
            if (i == j) s -= norm;
            if (!s.is_zero()) ++bad;
        }
    return bad;
}

}  // namespace

void add_hurwitz(CLI::App& app, Context& ctx) {
    auto* h = app.add_subcommand("hurwitz", "Hurwitz matrices, KS map, Cayley rotations and cross products");
    h->require_subcommand(1);

    auto* c = leaf(h, "matrix", "Hurwitz matrix for n = 2, 4, 8; symbolic without --u", ctx, [] {
        Envelope e;
        if (opt.u.empty()) {
            e.meta = "Hurwitz matrix, symbolic entries";
            auto s = hurwitz_symbolic(opt.n);
            Table t;
            for (int j = 0; j < opt.n; ++j) t.columns.push_back("c" + std::to_string(j + 1));
            for (const auto& row : s) {
                std::vector<json> r;
                for (const auto& v : row) r.push_back(entry(v));
                t.add(r);
            }
            e.table = std::move(t);
            return e;
        }
        auto u = as_doubles(opt.u);
        Eigen::MatrixXd m = hurwitz_matrix(opt.n, u);
        e.meta = "Hurwitz matrix; value_float is |H^t H - |u|^2 I|";
        e.value_float = (m.transpose() * m - dot(u, u) * Eigen::MatrixXd::Identity(opt.n, opt.n)).norm();
        e.table = matrix_table(m);
        return e;
    });
    c->add_option("--n", opt.n, "2, 4 or 8")->check(CLI::IsMember({2, 4, 8}));
    c->add_option("--u", opt.u, "n components");

    c = leaf(h, "ks", "Kustaanheimo-Stiefel map R^4 -> R^3", ctx, [] {
        if (opt.u.size() != 4) throw UsageError("--u needs 4 components");
        Envelope e;
        std::array<Rational, 4> q;
        bool exact = true;
        for (int i = 0; i < 4; ++i) {
            auto r = as_rational(opt.u[i]);
            if (!r) {
                exact = false;
                break;
            }
            q[i] = *r;
        }
        Table t{{"component", "value"}, {}};
        const char* names[] = {"x", "y", "z"};
        if (exact) {
            auto x = ks_transform(q);
            Rational r2 = 0;
            for (int i = 0; i < 3; ++i) {
                t.add({names[i], SqrtRational(x[i]).str()});
                r2 += x[i] * x[i];
            }
            auto r = SqrtRational::sqrt_of(r2);
            e.meta = "KS transform, exact; value_exact is |x| (equal to |u|^2)";
            e.value_exact = r.str();
            e.value_float = r.to_double();
        } else {
            auto d = as_doubles(opt.u);
            auto x = ks_transform(std::array<double, 4>{d[0], d[1], d[2], d[3]});
            for (int i = 0; i < 3; ++i) t.add({names[i], x[i]});
            e.meta = "KS transform; value_float is |x| (equal to |u|^2)";
            e.value_float = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        }
        e.table = std::move(t);
        return e;
    });
    c->add_option("--u", opt.u, "u1 u2 u3 u4 (integers or p/q give exact output)")->expected(4)->required();

    c = leaf(h, "cayley", "Cayley rotation |u|^2 (u1 - S)(u1 + S)^-1", ctx, [] {
        auto u = as_doubles(opt.u);
        Eigen::MatrixXd r = cayley_rotation(opt.dim, u);
        Envelope e;
        e.meta = "Cayley rotation; value_float is the distance to the closed form |u|^2 - 2 u1 S + 2 S^2";
        e.value_float = (r - cayley_closed_form(opt.dim, u)).norm();
        e.table = matrix_table(r);
        return e;
    });
    c->add_option("--n", opt.dim, "dimension of the rotation (3 or 7)");
    c->add_option("--u", opt.u, "n + 1 components")->required();

    c = leaf(h, "cross", "vector product in 3 or 7 dimensions", ctx, [] {
        auto v = cross_product(opt.dim, opt.a, opt.b);
        Envelope e;
        e.meta = "cross product; value_float is the relative Lagrange identity residual";
        e.value_float = lagrange_residual(opt.dim, opt.a, opt.b);
        Table t{{"index", "value"}, {}};
        for (size_t i = 0; i < v.size(); ++i) t.add({i + 1, v[i]});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--n", opt.dim, "3 or 7")->check(CLI::IsMember({3, 7}));
    c->add_option("--a", opt.a)->required();
    c->add_option("--b", opt.b)->required();

    c = leaf(h, "check", "exact and random checks of the Hurwitz identities", ctx, [&ctx] {
        const int n = opt.n;
        std::mt19937_64 rng(ctx.seed);
        Envelope e;
        e.meta = "Hurwitz identity checks; value_float is the largest floating residual";
        Table t{{"check", "passed", "detail"}, {}};
        int bad = symbolic_defects(n);
        t.add({"H^t H = |u|^2 I (symbolic)", bad == 0, std::to_string(bad) + " defective entries"});

        std::uniform_int_distribution<int> d(-9, 9);
        bool ks_ok = true;
        for (int k = 0; k < opt.trials; ++k) {
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
            if (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] != n2 * n2) ks_ok = false;
        }
        t.add({"|KS(u)| = |u|^2 (rational)", ks_ok, std::to_string(opt.trials) + " trials"});

        double worst = 0;
        int cross_n = n == 8 ? 7 : n == 4 ? 3 : 0;
        if (cross_n) {
            std::normal_distribution<double> g;
            for (int k = 0; k < opt.trials; ++k) {
                std::vector<double> a(cross_n), b(cross_n);
                for (auto& x : a) x = g(rng);
                for (auto& x : b) x = g(rng);
                worst = std::max(worst, lagrange_residual(cross_n, a, b));
            }
            t.add({std::to_string(cross_n) + "-D Lagrange identity", worst < 1e-12, std::to_string(opt.trials) + " trials"});
        }
        e.value_float = worst;
        e.table = std::move(t);
        return e;
    });
    c->add_option("--n", opt.n, "2, 4 or 8")->check(CLI::IsMember({2, 4, 8}));
    c->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
}

}  // namespace gfkit::cli
