#include <cmath>

#include <gfkit/oscillator.hpp>
#include <gfkit/special.hpp>

#include "commands.hpp"

namespace gfkit::cli {

namespace {

struct {
    int N = 3, n = 1, l = 0, points = 50;
    std::vector<int> mu;
    std::vector<double> r{0.5, 1, 2, 4}, p{0, 0.25, 0.5, 1, 2};
} hyd;

struct {
    OscillatorParams params;
    int n = 0, order = 60;
    double x = 0, xp = 0, omega_c = 0, eps = 1e-8;
    std::vector<double> xs{-1, 0, 1}, z{0.5, 0}, t{0, -1}, r1{0, 0}, r2{0, 0};
} osc;

HydrogenState state() {
    HydrogenState s{hyd.N, hyd.n, hyd.l, hyd.mu};
    validate(s);
    return s;
}

void state_options(CLI::App* c) {
    c->add_option("--N", hyd.N, "space dimension (>= 2)");
    c->add_option("--n", hyd.n, "principal quantum number")->required();
    c->add_option("--l", hyd.l, "angular momentum")->required();
    c->add_option("--mu", hyd.mu, "mu_2 .. mu_{N-1}; default all zero");
}

void params_options(CLI::App* c) {
    c->add_option("--mass", osc.params.mass);
    c->add_option("--omega", osc.params.omega);
    c->add_option("--hbar", osc.params.hbar);
}

std::complex<double> time_arg() { return {osc.t[0], osc.t[1]}; }

Envelope complex_value(std::complex<double> v, std::string meta) {
    Envelope e;
    e.meta = std::move(meta);
    e.value_float = std::abs(v);
    e.table = Table{{"re", "im"}, {{v.real(), v.imag()}}};
    return e;
}

}  // namespace

void add_hydrogen(CLI::App& app, Context& ctx) {
    auto* h = app.add_subcommand("hydrogen", "N-dimensional hydrogen in position and momentum space");
    h->require_subcommand(1);

    auto* c = leaf(h, "position", "radial position wavefunction", ctx, [] {
        auto s = state();
        Envelope e;
        e.meta = "hydrogen radial function, Laguerre form; value_float is the radial norm";
        e.value_float = position_norm(s);
        Table t{{"r", "radial"}, {}};
        for (double r : hyd.r) t.add({r, hydrogen_radial(s, r)});
        e.table = std::move(t);
        return e;
    });
    state_options(c);
    c->add_option("--r", hyd.r, "radii");

    c = leaf(h, "momentum", "radial momentum wavefunction, closed Gegenbauer form", ctx, [] {
        auto s = state();
        Envelope e;
        e.meta = "hydrogen momentum radial factor (without the (-i)^l phase); value_float is the momentum norm";
        e.value_float = momentum_norm(s);
        Table t{{"p", "radial"}, {}};
        for (double p : hyd.p) t.add({p, hydrogen_momentum_radial(s, p)});
        e.table = std::move(t);
        return e;
    });
    state_options(c);
    c->add_option("--p", hyd.p, "momenta");

    c = leaf(h, "verify", "closed momentum form against a numeric Hankel transform", ctx, [] {
        auto s = state();
        Envelope e;
        e.meta = "closed momentum form vs Hankel transform of the position state; value_float is sup|diff| / sup|oracle|";
        Table t{{"p", "closed", "oracle", "diff"}, {}};
        double err = 0, top = 0;
        for (int i = 0; i < hyd.points; ++i) {
            double p = 0.1 * i;
            double a = hydrogen_momentum_radial(s, p), b = fourier_momentum_oracle(s, p);
            err = std::max(err, std::abs(a - b));
            top = std::max(top, std::abs(b));
            t.add({p, a, b, a - b});
        }
        e.value_float = top > 0 ? err / top : err;
        e.table = std::move(t);
        return e;
    });
    state_options(c);
    c->add_option("--points", hyd.points, "grid points p = 0, 0.1, ...")->check(CLI::Range(1, 1000));
}

void add_oscillator(CLI::App& app, Context& ctx) {
    auto* o = app.add_subcommand("oscillator", "harmonic oscillator wavefunctions and propagators");
    o->require_subcommand(1);

    auto* c = leaf(o, "wf", "eigenfunction u_n(x)", ctx, [] {
        Envelope e;
        e.meta = "oscillator eigenfunction by the Hermite recurrence";
        Table t{{"x", "psi"}, {}};
        for (double x : osc.xs) t.add({x, ho_wavefunction(osc.params, osc.n, x)});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--n", osc.n)->required();
    c->add_option("--x", osc.xs, "positions");
    params_options(c);

    c = leaf(o, "genfunc", "sum z^n/sqrt(n!) u_n(q) against the closed generating function", ctx, [] {
        std::complex<double> z(osc.z[0], osc.z[1]);
        Envelope e;
        e.meta = "oscillator generating function pi^(-1/4) exp(sqrt2 q z - q^2/2 - z^2/2); value_float is the largest residual";
        Table t{{"q", "series_re", "series_im", "closed_re", "closed_im"}, {}};
        double worst = 0;
        for (double q : osc.xs) {
            std::complex<double> s = 0, zn = 1;
            for (int n = 0; n <= osc.order; ++n) {
                s += zn * ho_wavefunction(n, q);
                zn *= z / std::sqrt(n + 1.0);
            }
            auto g = ho_generating_function(z, q);
            worst = std::max(worst, std::abs(s - g));
            t.add({q, s.real(), s.imag(), g.real(), g.imag()});
        }
        e.value_float = worst;
        e.table = std::move(t);
        return e;
    });
    c->add_option("--z", osc.z, "re im")->expected(2);
    c->add_option("--q", osc.xs, "dimensionless positions");
    c->add_option("--order", osc.order)->check(CLI::Range(0, 150));

    c = leaf(o, "propagator", "oscillator kernel K(x, x'; t), t complex with Im t <= 0", ctx, [] {
        return complex_value(ho_propagator(osc.params, osc.x, osc.xp, time_arg(), osc.eps),
                             "oscillator propagator (Mehler kernel); value_float is |K|");
    });
    c->add_option("--x", osc.x);
    c->add_option("--xp", osc.xp);
    c->add_option("--t", osc.t, "re im; t = -i beta gives the heat kernel")->expected(2);
    c->add_option("--eps", osc.eps, "tilt of real times below the axis");
    params_options(c);

    c = leaf(o, "magnetic", "2-D oscillator kernel in a magnetic field", ctx, [] {
        return complex_value(magnetic_propagator(osc.params, osc.omega_c, {osc.r1[0], osc.r1[1]}, {osc.r2[0], osc.r2[1]},
                                                 time_arg(), osc.eps),
                             "magnetic oscillator propagator with H0 - omega_c L_z; value_float is |K|");
    });
    c->add_option("--r1", osc.r1, "x y")->expected(2);
    c->add_option("--r2", osc.r2, "x y")->expected(2);
    c->add_option("--omega-c", osc.omega_c);
    c->add_option("--t", osc.t, "re im")->expected(2);
    c->add_option("--eps", osc.eps);
    params_options(c);
}

}  // namespace gfkit::cli
