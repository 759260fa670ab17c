#include <gfkit/wigner.hpp>

#include "commands.hpp"

namespace gfkit::cli {

namespace {

struct {
    std::vector<int> two_j, two_m, l, m;
    std::string route = "gf";
    bool printed_b3 = false;
} opt;

ThreeJLabel three_j_label() {
    return {{opt.two_j[0], opt.two_j[1], opt.two_j[2]}, {opt.two_m[0], opt.two_m[1], opt.two_m[2]}};
}

}  // namespace

void add_wigner(CLI::App& app, Context& ctx) {
    auto* w = app.add_subcommand("wigner", "Wigner 3j/6j/9j symbols, Clebsch-Gordan and Gaunt coefficients");
    w->require_subcommand(1);

    auto* c = leaf(w, "3j", "3j symbol (j1 j2 j3; m1 m2 m3)", ctx, [] {
        return exact_value(wigner_3j(three_j_label()), "3j symbol, Van der Waerden single sum");
    });
    c->add_option("--two-j", opt.two_j, "2*j1 2*j2 2*j3")->expected(3)->required();
    c->add_option("--two-m", opt.two_m, "2*m1 2*m2 2*m3")->expected(3)->required();

    c = leaf(w, "cg", "Clebsch-Gordan coefficient <j1 m1, j2 m2 | j3 m3>", ctx, [] {
        auto v = clebsch_gordan(HalfInt(opt.two_j[0]), HalfInt(opt.two_m[0]), HalfInt(opt.two_j[1]),
                                HalfInt(opt.two_m[1]), HalfInt(opt.two_j[2]), HalfInt(opt.two_m[2]));
        return exact_value(v, "Clebsch-Gordan coefficient from the 3j symbol");
    });
    c->add_option("--two-j", opt.two_j, "2*j1 2*j2 2*j3")->expected(3)->required();
    c->add_option("--two-m", opt.two_m, "2*m1 2*m2 2*m3")->expected(3)->required();

    c = leaf(w, "6j", "6j symbol {j1 j2 j3; l1 l2 l3}", ctx, [] {
        SixJLabel lab;
        std::copy(opt.two_j.begin(), opt.two_j.end(), lab.two_j.begin());
        if (opt.route == "oracle") return exact_value(wigner_6j_oracle(lab), "6j symbol, contraction of four 3j symbols");
        SixJGfOptions o;
        o.printed_b3 = opt.printed_b3;
        return exact_value(wigner_6j_gf(lab, o), o.printed_b3 ? "6j symbol, generating function with printed b3 pairing"
                                                              : "6j symbol, generating function coefficient extraction");
    });
    c->add_option("--two-j", opt.two_j, "2*j1 2*j2 2*j3 2*l1 2*l2 2*l3")->expected(6)->required();
    c->add_option("--route", opt.route, "gf or oracle")->check(CLI::IsMember({"gf", "oracle"}));
    c->add_flag("--printed-b3", opt.printed_b3, "use the b3 factor as printed");

    c = leaf(w, "9j", "9j symbol, rows of three doubled labels", ctx, [] {
        NineJLabel lab;
        for (int i = 0; i < 9; ++i) lab.two_j[i / 3][i % 3] = opt.two_j[i];
        return exact_value(wigner_9j(lab), "9j symbol as a sum over 6j products");
    });
    c->add_option("--two-j", opt.two_j, "nine doubled labels, row by row")->expected(9)->required();

    c = leaf(w, "regge", "72-element symmetry orbit of a 3j symbol", ctx, [] {
        auto seed = three_j_label();
        Envelope e = exact_value(wigner_3j(seed), "Regge symmetry orbit of the 3j symbol");
        Table t{{"two_j1", "two_j2", "two_j3", "two_m1", "two_m2", "two_m3", "phase", "value_exact"}, {}};
        for (const auto& m : regge_orbit(seed)) {
            const auto& L = m.label;
            t.add({L.two_j[0], L.two_j[1], L.two_j[2], L.two_m[0], L.two_m[1], L.two_m[2], m.phase,
                   wigner_3j(L).str()});
        }
        e.table = std::move(t);
        return e;
    });
    c->add_option("--two-j", opt.two_j, "2*j1 2*j2 2*j3")->expected(3)->required();
    c->add_option("--two-m", opt.two_m, "2*m1 2*m2 2*m3")->expected(3)->required();

    c = leaf(w, "gaunt", "integral of three spherical harmonics", ctx, [] {
        Envelope e;
        e.meta = "Gaunt integral; value_exact is the coefficient of 1/sqrt(4 pi)";
        e.value_exact = gaunt_exact_part(opt.l[0], opt.m[0], opt.l[1], opt.m[1], opt.l[2], opt.m[2]).str();
        e.value_float = gaunt(opt.l[0], opt.m[0], opt.l[1], opt.m[1], opt.l[2], opt.m[2]);
        return e;
    });
    c->add_option("--l", opt.l, "l1 l2 l3")->expected(3)->required();
    c->add_option("--m", opt.m, "m1 m2 m3")->expected(3)->required();
}

}  // namespace gfkit::cli
