#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "gfkit/arith.hpp"

namespace gfkit {

// Columns target_positions[l] of A are replaced by column l of B.
template <class T>
struct SubstitutionQuery {
    std::vector<std::vector<T>> A;  // row-major n x n
    std::vector<std::vector<T>> B;  // row-major n x s
    std::vector<int> target_positions;
};

using RationalMatrix = std::vector<std::vector<Rational>>;
using RealMatrix = std::vector<std::vector<double>>;

template <class T>
void validate(const SubstitutionQuery<T>& q);

// det(A with substituted columns) = det(A) det[x(k, i_l)], A X = B.
Rational generalized_cramer(const SubstitutionQuery<Rational>& q);
double generalized_cramer(const SubstitutionQuery<double>& q);

// Every ordered choice of s distinct positions from one solve, keyed by the position list.
std::map<std::vector<int>, Rational> cramer_table(const RationalMatrix& A, const RationalMatrix& B);

Rational determinant(RationalMatrix a);  // Gaussian elimination
// Solution of A X = B; throws SingularError.
RationalMatrix solve(RationalMatrix A, RationalMatrix B);

using CMatrix = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

// Orbitals 0..n_occ-1 occupied; R_{kl} = <c_k|R|c_l>, the many-body R maps c_l^+ to sum_k R_{kl} c_k^+.
struct SlaterSystem {
    int M = 0;
    int n_occ = 0;
    CMatrix R;
};

void validate(const SlaterSystem& s);

std::complex<double> slater_overlap(const SlaterSystem& s);
// <Phi|T R|Phi> for the one-body operator sum T_{pq} c_p^+ c_q.
std::complex<double> lowdin_matrix_element(const SlaterSystem& s, const CMatrix& T);

// Antisymmetrised two-body matrix elements V_{pq,rs}, V = 1/4 sum V_{pq,rs} c_p^+ c_q^+ c_s c_r.
struct TwoBody {
    int M = 0;
    std::vector<std::complex<double>> v;  // M^4
    std::complex<double>& operator()(int p, int q, int r, int s) { return v[((p * M + q) * M + r) * M + s]; }
    std::complex<double> operator()(int p, int q, int r, int s) const { return v[((p * M + q) * M + r) * M + s]; }
};

std::complex<double> lowdin_two_body(const SlaterSystem& s, const TwoBody& V);

// Fixed particle number Fock space on bitmask states.
class FockSpace {
public:
    FockSpace(int M, int n);
    int size() const { return static_cast<int>(states_.size()); }
    int M() const { return M_; }
    int n() const { return n_; }
    uint32_t state(int i) const { return states_[i]; }
    int index(uint32_t s) const;
    cvec apply_one_body(const CMatrix& T, const cvec& v) const;
    cvec reference() const;  // c_0^+ c_1^+ ... c_{n-1}^+ |0>
    // R|Phi> as a product of transformed creation operators.
    cvec transform_reference(const CMatrix& R) const;

private:
    int M_, n_;
    std::vector<uint32_t> states_;
    std::map<uint32_t, int> index_;
};

struct ThoulessResult {
    std::complex<double> overlap;
    CMatrix x;  // (M - n) x n, x(k, i) for particle k and hole i
    int terms = 0;  // nonzero terms of the exponential series
    double residual = 0;
};

ThoulessResult thouless(const SlaterSystem& s);
double thouless_residual(const SlaterSystem& s);

struct LipkinModel {
    int N = 2;  // even, J = N/2
    double e = 1;
    double V = 0;
};

void validate(const LipkinModel& m);
Eigen::MatrixXd lipkin_hamiltonian(const LipkinModel& m);
std::vector<double> lipkin_spectrum(const LipkinModel& m);

// alpha_0 .. alpha_kmax from sum_{k<n} (-1)^k n!/(n-k-1)! alpha_k = n sqrt(n).
std::vector<double> boson_expansion_coeffs(int k_max);
double boson_expansion_residual(const std::vector<double>& alpha, int n);

// Holstein-Primakoff type images on {Z^i/sqrt(i!)}, i = 0..N:
// J0 = Z d/dZ - J, J+ = sum alpha_j Z^{j+1} d^j, J+^2 = sum beta_j Z^{j+2} d^j, j < truncation.
struct LipkinImages {
    std::vector<double> alpha, beta;
    Eigen::MatrixXd J0, Jp, Jm, Jp2, Jm2, H;
};

std::vector<double> lipkin_alpha(int N, int count);
std::vector<double> lipkin_beta(int N, int count);
LipkinImages lipkin_boson_images(const LipkinModel& m, int truncation);
// |gap(truncated) - gap(exact)| for the two lowest levels.
double lipkin_gap_error(const LipkinModel& m, int truncation);

}  // namespace gfkit
