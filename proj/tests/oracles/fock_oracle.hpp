#pragma once

// Brute-force second quantization on sorted orbital lists.  Signs come from
// counting transpositions in a bubble sort, and R acts through minors.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace oracle {

using cplx = std::complex<double>;
using Orbs = std::vector<int>;

// all increasing n-subsets of 0..M-1
inline std::vector<Orbs> subsets(int M, int n) {
    std::vector<Orbs> out;
    Orbs cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int p = start; p < M; ++p) {
            cur.push_back(p);
            self(self, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// sort in place, return (-1)^{swaps}; 0 if a repeated orbital appears
inline int sort_sign(Orbs& v) {
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            } else if (v[j] == v[j + 1]) {
                return 0;
            }
    for (size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] == v[j + 1]) return 0;
    return sign;
}

// c_p^+ on the ordered product c_{v0}^+ c_{v1}^+ ...: prepend and sort
inline int create(Orbs& v, int p) {
    v.insert(v.begin(), p);
    return sort_sign(v);
}

// c_q: move q to the front, then drop it
inline int annihilate(Orbs& v, int q) {
    auto it = std::find(v.begin(), v.end(), q);
    if (it == v.end()) return 0;
    int pos = static_cast<int>(it - v.begin());
    v.erase(it);
    return pos % 2 ? -1 : 1;
}

struct Space {
    std::vector<Orbs> states;
    Space(int M, int n) : states(subsets(M, n)) {}
    int size() const { return static_cast<int>(states.size()); }
    int find(const Orbs& v) const {
        auto it = std::find(states.begin(), states.end(), v);
        return it == states.end() ? -1 : static_cast<int>(it - states.begin());
    }
};

// <S|R|S'> = det R[S, S']
inline Eigen::MatrixXcd many_body_R(const Space& sp, const Eigen::MatrixXcd& R) {
    int d = sp.size();
    Eigen::MatrixXcd out(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const auto& s = sp.states[a];
            const auto& t = sp.states[b];
            int n = static_cast<int>(s.size());
            if (n == 0) {
                out(a, b) = 1;
                continue;
            }
            Eigen::MatrixXcd m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = R(s[i], t[j]);
            out(a, b) = m.determinant();
        }
    return out;
}

// sum T_{pq} c_p^+ c_q
inline Eigen::MatrixXcd many_body_one(const Space& sp, const Eigen::MatrixXcd& T) {
    int d = sp.size(), M = static_cast<int>(T.rows());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (int b = 0; b < d; ++b)
        for (int p = 0; p < M; ++p)
            for (int q = 0; q < M; ++q) {
                Orbs v = sp.states[b];
                int s = annihilate(v, q);
                if (!s) continue;
                s *= create(v, p);
                if (!s) continue;
                out(sp.find(v), b) += double(s) * T(p, q);
            }
    return out;
}

// 1/4 sum V_{pq,rs} c_p^+ c_q^+ c_s c_r
template <class V>
Eigen::MatrixXcd many_body_two(const Space& sp, int M, const V& v) {
    int d = sp.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (int b = 0; b < d; ++b)
        for (int p = 0; p < M; ++p)
            for (int q = 0; q < M; ++q)
                for (int r = 0; r < M; ++r)
                    for (int s = 0; s < M; ++s) {
                        Orbs w = sp.states[b];
                        int sg = annihilate(w, r);
                        if (!sg) continue;
                        sg *= annihilate(w, s);
                        if (!sg) continue;
                        sg *= create(w, q);
                        if (!sg) continue;
                        sg *= create(w, p);
                        if (!sg) continue;
                        out(sp.find(w), b) += 0.25 * double(sg) * v(p, q, r, s);
                    }
    return out;
}

inline Eigen::MatrixXcd random_unitary(int M, std::mt19937& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd z(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) z(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    return qr.householderQ();
}

inline Eigen::MatrixXcd random_complex(int M, std::mt19937& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd z(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) z(i, j) = cplx(g(rng), g(rng));
    return z;
}

// exp(i eps H) for a random Hermitian H
inline Eigen::MatrixXcd near_identity(int M, double eps, std::mt19937& rng) {
    Eigen::MatrixXcd z = random_complex(M, rng);
    Eigen::MatrixXcd h = (z + z.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd ph = (cplx(0, eps) * es.eigenvalues().cast<cplx>()).array().exp();
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Leibniz determinant over all permutations
inline mpq_class leibniz(const std::vector<std::vector<mpq_class>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class sum = 0;
    do {
        Orbs p(perm.begin(), perm.end());
        int s = sort_sign(p);
        mpq_class term = s;
        for (int i = 0; i < n; ++i) term *= a[i][perm[i]];
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

inline double leibniz(const std::vector<std::vector<double>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double sum = 0;
    do {
        Orbs p(perm.begin(), perm.end());
        double term = sort_sign(p);
        for (int i = 0; i < n; ++i) term *= a[i][perm[i]];
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

template <class T>
std::vector<std::vector<T>> substituted(std::vector<std::vector<T>> a, const std::vector<std::vector<T>>& b,
                                        const std::vector<int>& pos) {
    for (size_t l = 0; l < pos.size(); ++l)
        for (size_t r = 0; r < a.size(); ++r) a[r][pos[l]] = b[r][l];
    return a;
}

}  // namespace oracle
