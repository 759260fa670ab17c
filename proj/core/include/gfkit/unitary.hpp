#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "gfkit/arith.hpp"
#include "gfkit/poly.hpp"

namespace gfkit {

// [h_1n, ..., h_nn], non-increasing, h_nn >= 0
using IrrepLabel = std::vector<int>;

void validate_irrep(const IrrepLabel& h);

// rows[0] is the irrep label (n entries), rows[k] has n-k entries.
struct GelfandPattern {
    std::vector<std::vector<int>> rows;

    int n() const { return static_cast<int>(rows.size()); }
    // h_{mu,lambda}: mu-th entry (1-based) of the row with lambda entries
    int h(int mu, int lambda) const { return rows[n() - lambda][mu - 1]; }
    bool valid() const;
    // "2 1 0 / 2 1 / 1"
    std::string str() const;
    static GelfandPattern parse(const std::string& text);

    friend auto operator<=>(const GelfandPattern&, const GelfandPattern&) = default;
};

std::vector<GelfandPattern> gelfand_enumerate(const IrrepLabel& h);
Integer weyl_dimension(const IrrepLabel& h);
std::vector<int> pattern_weight(const GelfandPattern& p);
GelfandPattern highest_pattern(const IrrepLabel& h);
GelfandPattern lowest_pattern(const IrrepLabel& h);

// Binary word of a minor: bits[i] = 1 if row i+1 enters the minor.
struct BfrTable {
    std::vector<int> bits;

    int n() const { return static_cast<int>(bits.size()); }
    int k() const;
    std::vector<int> columns() const;  // 1-based
    std::string minor_name() const;    // "D13"
    static BfrTable from_columns(int n, const std::vector<int>& cols);
};

struct ParamFactor {
    char kind = 'x';  // 'x' or 'y'
    int lambda = 2;
    int mu = 1;

    friend auto operator<=>(const ParamFactor&, const ParamFactor&) = default;
};

struct ParamMonomial {
    std::vector<ParamFactor> factors;

    std::string str() const;  // "y21*x32*y42"
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

ParamMonomial bfr_phi(const BfrTable& t);

// All 2^n - 1 minors with their parameter monomials, ordered by (k, columns).
std::vector<std::pair<BfrTable, ParamMonomial>> bfr_generating_function(int n);

// P_n(1) for n in 2..5, built from rows n-1 .. 1 of the pattern.
Integer pn1(int n, const GelfandPattern& p);

// Polynomial in the leading minors Delta_S(z) = det(z[rows 0..|S|-1][cols S]).
struct BosonPolynomial {
    int n = 0;
    std::vector<std::vector<int>> minors;  // column sets, 1-based
    std::vector<std::pair<Rational, std::vector<int>>> terms;
    Rational fock_norm2;  // of the expansion in z

    // Expansion in the n*n variables z[r][c] (index r*n + c).
    RatPoly in_z() const;
};

BosonPolynomial u3_boson_polynomial(const GelfandPattern& p);
BosonPolynomial u4_boson_polynomial(const GelfandPattern& p);

// Squared bracket of the printed U(3) normalisation constant.
Rational u3_printed_n3(const GelfandPattern& p);

// Leading minor of an n x n matrix of variables as a polynomial.
RatPoly leading_minor(int n, const std::vector<int>& cols);

// ---- SU(3) ----

struct Su3Label {
    int lambda = 0, mu = 0, p = 0, q = 0;
    HalfInt t, t0;
    int y = 0;

    int r() const { return (t.two - t0.two) / 2; }
    std::string str() const;
    static Su3Label make(int lambda, int mu, int p, int q, int r);
    friend auto operator<=>(const Su3Label&, const Su3Label&) = default;
};

void validate(const Su3Label& a);
std::vector<Su3Label> su3_labels(int lambda, int mu);
Integer su3_dimension(int lambda, int mu);

std::vector<std::pair<int, int>> su3_decompose_multfree(int l1, int l2);

// Bare basis polynomial P_alpha in z = vars 0..2 and z' = vars 3..5, the
// coefficient of x1^p x2^(l-p) y1^(m-q) y2^q xi^(t+t0) eta^(t-t0) in
// exp[f.z + g.(z x z')].
RatPoly su3_basis_polynomial(const Su3Label& a);
// Fock norm squared of P_alpha, closed form.
Rational su3_basis_norm2(const Su3Label& a);
// Same quantity as printed (reported only).
Rational su3_printed_norm2(const Su3Label& a);

struct Su3Coupling {
    SqrtRational wigner;
    SqrtRational isoscalar;   // SU(3) Clebsch-Gordan / SU(2) Clebsch-Gordan
    SqrtRational su2_factor;  // <t1 t01 t2 t02 | t3 t03> / sqrt(dim(lambda3, mu3))
};

// (l1,0) x (l2,0) -> (lambda3, mu3) coupling coefficient with the highest
// weight coefficient positive.
Su3Coupling su3_wigner_multfree(int l1, int l2, int lambda3, int mu3, const Su3Label& a1, const Su3Label& a2,
                                const Su3Label& a3);

struct Su2Euler {
    double alpha = 0, beta = 0, gamma = 0;
};

Eigen::Matrix2cd su2_matrix(const Su2Euler& e);
Eigen::Matrix3cd su3_euler_matrix(const Su2Euler& a, double nu3, double beta3, const Su2Euler& b);

}  // namespace gfkit
