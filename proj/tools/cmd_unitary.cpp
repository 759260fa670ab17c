#include <gfkit/unitary.hpp>

#include "commands.hpp"

namespace gfkit::cli {

namespace {

struct {
    int l1 = 0, l2 = 0;
    std::vector<int> irrep, a1, a2, a3;
    std::vector<double> ea{0, 0, 0}, eb{0, 0, 0};
    double nu3 = 0, beta3 = 0;
} su3;

struct {
    std::vector<int> h;
    std::string pattern;
} gel;

Su3Coupling coupling() {
    auto lab = [](int l, const std::vector<int>& a) { return Su3Label::make(l, 0, a[0], a[1], a[2]); };
    auto a3 = Su3Label::make(su3.irrep[0], su3.irrep[1], su3.a3[0], su3.a3[1], su3.a3[2]);
    return su3_wigner_multfree(su3.l1, su3.l2, su3.irrep[0], su3.irrep[1], lab(su3.l1, su3.a1), lab(su3.l2, su3.a2), a3);
}

void coupling_options(CLI::App* c) {
    c->add_option("--l1", su3.l1, "first factor (l1, 0)")->required();
    c->add_option("--l2", su3.l2, "second factor (l2, 0)")->required();
    c->add_option("--irrep", su3.irrep, "coupled irrep lambda mu")->expected(2)->required();
    c->add_option("--a1", su3.a1, "p q r of the first state")->expected(3)->required();
    c->add_option("--a2", su3.a2, "p q r of the second state")->expected(3)->required();
    c->add_option("--a3", su3.a3, "p q r of the coupled state")->expected(3)->required();
}

std::string monomial(const BosonPolynomial& b, const std::vector<int>& exps) {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "D";
        for (int c : b.minors[i]) out += std::to_string(c);
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

void add_su3(CLI::App& app, Context& ctx) {
    auto* s = app.add_subcommand("su3", "SU(3) multiplicity-free couplings and Euler matrices");
    s->require_subcommand(1);

    auto* c = leaf(s, "decompose", "(l1,0) x (l2,0) into irreps", ctx, [] {
        Envelope e;
        e.meta = "multiplicity-free SU(3) product decomposition";
        Table t{{"lambda", "mu", "dim"}, {}};
        Integer total = 0;
        for (auto [l, m] : su3_decompose_multfree(su3.l1, su3.l2)) {
            Integer d = su3_dimension(l, m);
            total += d;
            t.add({l, m, d.get_str()});
        }
        e.value_exact = total.get_str();
        e.value_float = total.get_d();
        e.table = std::move(t);
        return e;
    });
    c->add_option("--l1", su3.l1)->required();
    c->add_option("--l2", su3.l2)->required();

    c = leaf(s, "wigner", "SU(3) Wigner coefficient", ctx, [] {
        return exact_value(coupling().wigner, "SU(3) Wigner coefficient from the product generating function");
    });
    coupling_options(c);

    c = leaf(s, "isoscalar", "isoscalar factor and its SU(2) partner", ctx, [] {
        auto k = coupling();
        Envelope e = exact_value(k.isoscalar, "isoscalar factor = SU(3) coefficient / SU(2) factor");
        e.table = Table{{"factor", "value_exact", "value_float"},
                        {{"wigner", k.wigner.str(), k.wigner.to_double()},
                         {"isoscalar", k.isoscalar.str(), k.isoscalar.to_double()},
                         {"su2", k.su2_factor.str(), k.su2_factor.to_double()}}};
        return e;
    });
    coupling_options(c);

    c = leaf(s, "euler", "SU(3) matrix from two SU(2) Euler triples", ctx, [] {
        Su2Euler a{su3.ea[0], su3.ea[1], su3.ea[2]}, b{su3.eb[0], su3.eb[1], su3.eb[2]};
        Eigen::Matrix3cd u = su3_euler_matrix(a, su3.nu3, su3.beta3, b);
        Envelope e;
        e.meta = "SU(3) Euler parametrization; value_float is |U^+ U - 1|";
        e.value_float = (u.adjoint() * u - Eigen::Matrix3cd::Identity()).norm();
        Table t{{"row", "col", "re", "im"}, {}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.add({i, j, u(i, j).real(), u(i, j).imag()});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--a", su3.ea, "alpha beta gamma of the first SU(2)")->expected(3);
    c->add_option("--nu3", su3.nu3);
    c->add_option("--beta3", su3.beta3);
    c->add_option("--b", su3.eb, "alpha beta gamma of the second SU(2)")->expected(3);
}

void add_gelfand(CLI::App& app, Context& ctx) {
    auto* g = app.add_subcommand("gelfand", "Gel'fand patterns of U(n)");
    g->require_subcommand(1);

    auto* c = leaf(g, "dim", "Weyl dimension of an irrep", ctx, [] {
        validate_irrep(gel.h);
        Integer d = weyl_dimension(gel.h);
        Envelope e;
        e.meta = "Weyl dimension formula";
        e.value_exact = d.get_str();
        e.value_float = d.get_d();
        return e;
    });
    c->set_help_flag("--help", "Print this help message and exit");
    c->add_option("--h", gel.h, "irrep label h_1n .. h_nn")->required();

    c = leaf(g, "enumerate", "all patterns of an irrep", ctx, [] {
        auto pats = gelfand_enumerate(gel.h);
        Envelope e;
        e.meta = "Gel'fand pattern enumeration by betweenness";
        e.value_exact = std::to_string(pats.size());
        e.value_float = double(pats.size());
        Table t{{"index", "pattern", "weight"}, {}};
        for (size_t i = 0; i < pats.size(); ++i) {
            std::string w;
            for (int x : pattern_weight(pats[i])) w += (w.empty() ? "" : " ") + std::to_string(x);
            t.add({i, pats[i].str(), w});
        }
        e.table = std::move(t);
        return e;
    });
    c->set_help_flag("--help", "Print this help message and exit");
    c->add_option("--h", gel.h, "irrep label h_1n .. h_nn")->required();

    c = leaf(g, "weight", "weight of a pattern", ctx, [] {
        auto p = GelfandPattern::parse(gel.pattern);
        Envelope e;
        e.meta = "pattern weight from row sums";
        Table t{{"index", "weight"}, {}};
        auto w = pattern_weight(p);
        for (size_t i = 0; i < w.size(); ++i) t.add({i + 1, w[i]});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--pattern", gel.pattern, "rows separated by '/', e.g. \"2 1 0 / 2 1 / 1\"")->required();

    c = leaf(g, "poly", "U(3)/U(4) boson polynomial of a pattern", ctx, [] {
        auto p = GelfandPattern::parse(gel.pattern);
        BosonPolynomial b;
        if (p.n() == 3)
            b = u3_boson_polynomial(p);
        else if (p.n() == 4)
            b = u4_boson_polynomial(p);
        else
            throw DomainError("gelfand poly: only U(3) and U(4) patterns");
        Envelope e;
        e.meta = "boson polynomial in leading minors; value_exact is its Fock norm squared";
        Rational n2 = b.fock_norm2;
        n2.canonicalize();
        e.value_exact = SqrtRational(n2).str();
        e.value_float = n2.get_d();
        Table t{{"coefficient", "monomial"}, {}};
        for (const auto& [coef, exps] : b.terms) t.add({SqrtRational(coef).str(), monomial(b, exps)});
        e.table = std::move(t);
        return e;
    });
    c->add_option("--pattern", gel.pattern, "U(3) or U(4) pattern")->required();
}

}  // namespace gfkit::cli
