#include "gfkit/manybody.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "gfkit/errors.hpp"

namespace gfkit {

using cplx = std::complex<double>;

namespace {

// Gauss-Jordan on [A | B]; returns det(A), leaves X in B.
Rational eliminate(RationalMatrix& a, RationalMatrix& b, bool allow_singular = false) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) {
            if (allow_singular) return 0;
            throw SingularError("singular matrix");
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            std::swap(b[p], b[c]);
            det = -det;
        }
        Rational piv = a[c][c];
        det *= piv;
        for (size_t j = c; j < n; ++j) a[c][j] /= piv;
        for (auto& x : b[c]) x /= piv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            for (size_t j = 0; j < b[r].size(); ++j) b[r][j] -= f * b[c][j];
        }
    }
    return det;
}

template <class T>
std::vector<std::vector<T>> minor_matrix(const std::vector<std::vector<T>>& X, const std::vector<int>& pos) {
    const size_t s = pos.size();
    std::vector<std::vector<T>> m(s, std::vector<T>(s));
    for (size_t k = 0; k < s; ++k)
        for (size_t l = 0; l < s; ++l) m[k][l] = X[pos[l]][k];
    return m;
}

Eigen::MatrixXd to_eigen(const RealMatrix& a, size_t cols) {
    Eigen::MatrixXd m(a.size(), cols);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
    return m;
}

int bits_below(uint32_t s, int p) { return std::popcount(s & ((1u << p) - 1u)); }

// c_p^+ on a bitmask state; returns false if occupied.
bool create(uint32_t& s, int p, int& sign) {
    if (s >> p & 1u) return false;
    if (bits_below(s, p) % 2) sign = -sign;
    s |= 1u << p;
    return true;
}

bool annihilate(uint32_t& s, int q, int& sign) {
    if (!(s >> q & 1u)) return false;
    if (bits_below(s, q) % 2) sign = -sign;
    s &= ~(1u << q);
    return true;
}

}  // namespace

template <class T>
void validate(const SubstitutionQuery<T>& q) {
    const size_t n = q.A.size();
    if (n == 0) throw DomainError("generalized_cramer: empty matrix");
    for (const auto& r : q.A)
        if (r.size() != n) throw DomainError("generalized_cramer: A must be square");
    if (q.B.size() != n) throw DomainError("generalized_cramer: B must have n rows");
    const size_t s = q.target_positions.size();
    if (s > n) throw DomainError("generalized_cramer: more replacements than columns");
    for (const auto& r : q.B)
        if (r.size() != s) throw DomainError("generalized_cramer: B must have one column per position");
    std::set<int> seen;
    for (int p : q.target_positions) {
        if (p < 0 || p >= static_cast<int>(n)) throw DomainError("generalized_cramer: position out of range");
        if (!seen.insert(p).second) throw DomainError("generalized_cramer: positions must be distinct");
    }
}

template void validate(const SubstitutionQuery<Rational>&);
template void validate(const SubstitutionQuery<double>&);

Rational determinant(RationalMatrix a) {
    RationalMatrix b(a.size());
    return eliminate(a, b, true);
}

RationalMatrix solve(RationalMatrix A, RationalMatrix B) {
    eliminate(A, B);
    return B;
}

Rational generalized_cramer(const SubstitutionQuery<Rational>& q) {
    validate(q);
    RationalMatrix a = q.A, x = q.B;
    Rational det = eliminate(a, x);
    if (q.target_positions.empty()) return det;
    return det * determinant(minor_matrix(x, q.target_positions));
}

double generalized_cramer(const SubstitutionQuery<double>& q) {
    validate(q);
    const size_t n = q.A.size(), s = q.target_positions.size();
    Eigen::MatrixXd a = to_eigen(q.A, n);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    double det = lu.determinant();
    double scale = 1;
    for (size_t j = 0; j < n; ++j) scale *= a.col(j).norm();
    if (std::abs(det) <= 1e-13 * scale) throw SingularError("generalized_cramer: singular matrix");
    if (s == 0) return det;
    Eigen::MatrixXd x = lu.solve(to_eigen(q.B, s));
    Eigen::MatrixXd m(s, s);
    for (size_t k = 0; k < s; ++k)
        for (size_t l = 0; l < s; ++l) m(k, l) = x(q.target_positions[l], k);
    return det * m.determinant();
}

std::map<std::vector<int>, Rational> cramer_table(const RationalMatrix& A, const RationalMatrix& B) {
    SubstitutionQuery<Rational> q{A, B, {}};
    const int n = static_cast<int>(A.size());
    const int s = B.empty() ? 0 : static_cast<int>(B[0].size());
    for (int l = 0; l < s; ++l) q.target_positions.push_back(l);
    validate(q);
    RationalMatrix a = A, x = B;
    Rational det = eliminate(a, x);
    std::map<std::vector<int>, Rational> out;
    std::vector<int> pos(s);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int l) -> void {
        if (l == s) {
            out[pos] = det * determinant(minor_matrix(x, pos));
            return;
        }
        for (int p = 0; p < n; ++p) {
            if (used[p]) continue;
            used[p] = true;
            pos[l] = p;
            self(self, l + 1);
            used[p] = false;
        }
    };
    rec(rec, 0);
    return out;
}

void validate(const SlaterSystem& s) {
    if (s.M < 1 || s.M > 10) throw DomainError("slater: need 1 <= M <= 10");
    if (s.n_occ < 0 || s.n_occ > s.M) throw DomainError("slater: need 0 <= n_occ <= M");
    if (s.R.rows() != s.M || s.R.cols() != s.M) throw DomainError("slater: R must be M x M");
}

cplx slater_overlap(const SlaterSystem& s) {
    validate(s);
    if (s.n_occ == 0) return 1;
    return s.R.topLeftCorner(s.n_occ, s.n_occ).determinant();
}

namespace {

// A^{-1} and det A of the occupied block, or SingularError.
std::pair<CMatrix, cplx> occupied_inverse(const SlaterSystem& s) {
    const int n = s.n_occ;
    CMatrix A = s.R.topLeftCorner(n, n);
    Eigen::PartialPivLU<CMatrix> lu(A);
    cplx det = lu.determinant();
    double scale = 1;
    for (int j = 0; j < n; ++j) scale *= A.col(j).norm();
    if (n > 0 && std::abs(det) <= 1e-12 * scale) throw SingularError("slater: vanishing overlap");
    return {n > 0 ? CMatrix(lu.inverse()) : CMatrix(0, 0), det};
}

}  // namespace

cplx lowdin_matrix_element(const SlaterSystem& s, const CMatrix& T) {
    validate(s);
    if (T.rows() != s.M || T.cols() != s.M) throw DomainError("lowdin: T must be M x M");
    auto [inv, det] = occupied_inverse(s);
    const int n = s.n_occ;
    CMatrix TR = T * s.R;
    cplx sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum += TR(i, j) * inv(j, i);
    return sum * det;
}

cplx lowdin_two_body(const SlaterSystem& s, const TwoBody& V) {
    validate(s);
    if (V.M != s.M || V.v.size() != size_t(s.M) * s.M * s.M * s.M) throw DomainError("lowdin: V must be M^4");
    auto [inv, det] = occupied_inverse(s);
    const int n = s.n_occ, M = s.M;
    // <a_i a_j | V R | a_k a_l> = sum_rs V_{ij,rs} R_{rk} R_{sl}
    std::vector<cplx> w(size_t(n) * n * n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMatrix vij(M, M);
            for (int r = 0; r < M; ++r)
                for (int q = 0; q < M; ++q) vij(r, q) = V(i, j, r, q);
            CMatrix t = s.R.transpose() * vij * s.R;  // (k, l) -> sum_rs R_rk V_ij,rs R_sl
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) w[((i * n + j) * n + k) * n + l] = t(k, l);
        }
    cplx sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    cplx minor = inv(k, i) * inv(l, j) - inv(k, j) * inv(l, i);
                    sum += w[((i * n + j) * n + k) * n + l] * minor;
                }
    return sum * det / 4.0;
}

FockSpace::FockSpace(int M, int n) : M_(M), n_(n) {
    if (M < 1 || M > 10 || n < 0 || n > M) throw DomainError("fock space: need n <= M <= 10");
    for (uint32_t s = 0; s < (1u << M); ++s)
        if (std::popcount(s) == n) {
            index_[s] = static_cast<int>(states_.size());
            states_.push_back(s);
        }
}

int FockSpace::index(uint32_t s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

cvec FockSpace::apply_one_body(const CMatrix& T, const cvec& v) const {
    cvec out = cvec::Zero(size());
    for (int a = 0; a < size(); ++a) {
        if (v(a) == 0.0) continue;
        for (int q = 0; q < M_; ++q)
            for (int p = 0; p < M_; ++p) {
                if (T(p, q) == 0.0) continue;
                uint32_t s = states_[a];
                int sign = 1;
                if (!annihilate(s, q, sign) || !create(s, p, sign)) continue;
                out(index(s)) += double(sign) * T(p, q) * v(a);
            }
    }
    return out;
}

cvec FockSpace::reference() const {
    cvec v = cvec::Zero(size());
    v(index((1u << n_) - 1u)) = 1;
    return v;
}

cvec FockSpace::transform_reference(const CMatrix& R) const {
    std::map<uint32_t, cplx> cur{{0u, 1.0}};
    for (int j = n_ - 1; j >= 0; --j) {
        std::map<uint32_t, cplx> next;
        for (const auto& [s0, c] : cur)
            for (int k = 0; k < M_; ++k) {
                if (R(k, j) == 0.0) continue;
                uint32_t s = s0;
                int sign = 1;
                if (!create(s, k, sign)) continue;
                next[s] += double(sign) * R(k, j) * c;
            }
        cur = std::move(next);
    }
    cvec v = cvec::Zero(size());
    for (const auto& [s, c] : cur) v(index(s)) += c;
    return v;
}

ThoulessResult thouless(const SlaterSystem& s) {
    validate(s);
    const int n = s.n_occ, M = s.M;
    ThoulessResult r;
    CMatrix A = s.R.topLeftCorner(n, n);
    r.overlap = n > 0 ? A.determinant() : cplx(1);
    if (std::abs(r.overlap) < 1e-12) throw SingularError("thouless: vanishing overlap <Phi|U|Phi>");
    r.x = n > 0 ? CMatrix(s.R.bottomLeftCorner(M - n, n) * A.inverse()) : CMatrix(M - n, 0);

    FockSpace fs(M, n);
    CMatrix X = CMatrix::Zero(M, M);
    for (int k = 0; k < M - n; ++k)
        for (int i = 0; i < n; ++i) X(n + k, i) = r.x(k, i);
    cvec term = fs.reference(), sum = term;
    r.terms = 1;
    for (int p = 1; p <= M; ++p) {
        term = fs.apply_one_body(X, term) / double(p);
        if (term.cwiseAbs().maxCoeff() == 0.0) break;
        sum += term;
        ++r.terms;
    }
    cvec lhs = fs.transform_reference(s.R);
    r.residual = (lhs - r.overlap * sum).norm();
    return r;
}

double thouless_residual(const SlaterSystem& s) { return thouless(s).residual; }

void validate(const LipkinModel& m) {
    if (m.N < 2 || m.N % 2) throw DomainError("lipkin: N must be even and >= 2");
}

Eigen::MatrixXd lipkin_hamiltonian(const LipkinModel& m) {
    validate(m);
    const int N = m.N;
    const double J = N / 2.0;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) h(n, n) = m.e * (n - J);
    for (int n = 0; n + 2 <= N; ++n) {
        double v = m.V / 2 * std::sqrt(double(N - n) * (n + 1)) * std::sqrt(double(N - n - 1) * (n + 2));
        h(n + 2, n) = h(n, n + 2) = v;
    }
    return h;
}

std::vector<double> lipkin_spectrum(const LipkinModel& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lipkin_hamiltonian(m), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> boson_expansion_coeffs(int k_max) {
    if (k_max < 0) throw DomainError("boson_expansion_coeffs: k_max >= 0");
    std::vector<double> a;
    for (int n = 1; n <= k_max + 1; ++n) {
        double s = 0, ff = n;  // n!/(n-k-1)!
        for (int k = 0; k < n - 1; ++k) {
            s += (k % 2 ? -ff : ff) * a[k];
            ff *= n - k - 1;
        }
        double last = (n - 1) % 2 ? -ff : ff;
        a.push_back((n * std::sqrt(double(n)) - s) / last);
    }
    return a;
}

double boson_expansion_residual(const std::vector<double>& alpha, int n) {
    if (n < 1 || n > static_cast<int>(alpha.size())) throw DomainError("boson_expansion_residual: need 1 <= n <= size");
    double s = 0, ff = n;
    for (int k = 0; k < n; ++k) {
        s += (k % 2 ? -ff : ff) * alpha[k];
        ff *= n - k - 1;
    }
    double target = n * std::sqrt(double(n));
    return std::abs(s - target) / target;
}

namespace {

// c_0 .. c_{count-1} with sum_{j<=m} c_j m!/(m-j)! = f(m)
template <class F>
std::vector<double> falling_series(int count, F f) {
    std::vector<double> c;
    for (int m = 0; m < count; ++m) {
        double s = 0, ff = 1;
        for (int j = 0; j < m; ++j) {
            s += c[j] * ff;
            ff *= m - j;
        }
        c.push_back((f(m) - s) / ff);  // ff = m! here
    }
    return c;
}

}  // namespace

std::vector<double> lipkin_alpha(int N, int count) {
    if (count < 0 || count > N + 1) throw DomainError("lipkin_alpha: need 0 <= count <= N + 1");
    return falling_series(count, [N](int m) { return std::sqrt(double(N - m)); });
}

std::vector<double> lipkin_beta(int N, int count) {
    if (count < 0 || count > N + 1) throw DomainError("lipkin_beta: need 0 <= count <= N + 1");
    return falling_series(count, [N](int m) { return std::sqrt(std::max(0.0, double(N - m) * (N - m - 1))); });
}

LipkinImages lipkin_boson_images(const LipkinModel& m, int truncation) {
    validate(m);
    if (truncation < 1) throw DomainError("lipkin_boson_images: truncation >= 1");
    const int N = m.N, D = N + 1, T = std::min(truncation, D);
    LipkinImages im;
    im.alpha = lipkin_alpha(N, T);
    im.beta = lipkin_beta(N, T);
    im.J0 = Eigen::MatrixXd::Zero(D, D);
    im.Jp = Eigen::MatrixXd::Zero(D, D);
    im.Jp2 = Eigen::MatrixXd::Zero(D, D);
    for (int i = 0; i < D; ++i) {
        im.J0(i, i) = i - N / 2.0;
        double sa = 0, sb = 0, ff = 1;
        for (int j = 0; j < T && j <= i; ++j) {
            sa += im.alpha[j] * ff;
            sb += im.beta[j] * ff;
            ff *= i - j;
        }
        if (i + 1 < D) im.Jp(i + 1, i) = std::sqrt(i + 1.0) * sa;
        if (i + 2 < D) im.Jp2(i + 2, i) = std::sqrt((i + 1.0) * (i + 2.0)) * sb;
    }
    im.Jm = im.Jp.transpose();
    im.Jm2 = im.Jp2.transpose();
    im.H = m.e * im.J0 + m.V / 2 * (im.Jp2 + im.Jm2);
    return im;
}

double lipkin_gap_error(const LipkinModel& m, int truncation) {
    auto exact = lipkin_spectrum(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lipkin_boson_images(m, truncation).H, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::abs((ev(1) - ev(0)) - (exact[1] - exact[0]));
}

}  // namespace gfkit
