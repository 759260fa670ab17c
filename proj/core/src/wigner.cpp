#include "gfkit/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <unordered_map>

namespace gfkit {

void validate(const ThreeJLabel& l) {
    for (int i = 0; i < 3; ++i) {
        if (l.two_j[i] < 0) throw DomainError("negative angular momentum");
        if ((l.two_j[i] - l.two_m[i]) % 2) throw DomainError("m and j differ by a half-odd integer");
    }
}

SqrtRational wigner_3j(const ThreeJLabel& l) {
    validate(l);
    const auto& tj = l.two_j;
    const auto& tm = l.two_m;
    if (tm[0] + tm[1] + tm[2] != 0) return {};
    for (int i = 0; i < 3; ++i)
        if (std::abs(tm[i]) > tj[i]) return {};
    if (!triangle_ok(HalfInt(tj[0]), HalfInt(tj[1]), HalfInt(tj[2]))) return {};

    // all integers below
    const long a = (tj[0] + tj[1] - tj[2]) / 2;
    const long b = (tj[0] - tm[0]) / 2;
    const long c = (tj[1] + tm[1]) / 2;
    const long d = (tj[2] - tj[1] + tm[0]) / 2;
    const long e = (tj[2] - tj[0] - tm[1]) / 2;
    const long kmin = std::max({0L, -d, -e});
    const long kmax = std::min({a, b, c});
    if (kmin > kmax) return {};

    Rational sum = 0;
    for (long k = kmin; k <= kmax; ++k) {
        Integer den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                      factorial(d + k) * factorial(e + k);
        Rational term(1, den);
        if (k % 2) term = -term;
        sum += term;
    }
    sum.canonicalize();
    if (sum == 0) return {};

    const long J = (tj[0] + tj[1] + tj[2]) / 2;
    std::vector<long> num{J - tj[0], J - tj[1], J - tj[2]};
    for (int i = 0; i < 3; ++i) {
        num.push_back((tj[i] + tm[i]) / 2);
        num.push_back((tj[i] - tm[i]) / 2);
    }
    SqrtRational root = sqrt_factorial_ratio(num, {J + 1});
    int phase = phase_from_doubled(tj[0] - tj[1] - tm[2]);
    return root * Rational(phase * sum);
}

SqrtRational wigner_3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    return wigner_3j(ThreeJLabel{{tj1, tj2, tj3}, {tm1, tm2, tm3}});
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3) {
    SqrtRational w = wigner_3j(j1.two, j2.two, j3.two, m1.two, m2.two, -m3.two);
    if (w.is_zero()) return w;
    int phase = phase_from_doubled(j1.two - j2.two + m3.two);
    return w * SqrtRational::sqrt_of(Rational(j3.two + 1)) * Rational(phase);
}

namespace {

bool triad_ok(int a, int b, int c) { return triangle_ok(HalfInt(a), HalfInt(b), HalfInt(c)); }

bool sixj_triads_ok(const SixJLabel& s) {
    const auto& t = s.two_j;
    return triad_ok(t[0], t[1], t[2]) && triad_ok(t[0], t[4], t[5]) && triad_ok(t[3], t[1], t[5]) &&
           triad_ok(t[3], t[4], t[2]);
}

}  // namespace

SqrtRational wigner_6j_oracle(const SixJLabel& s, SixJMConvention conv) {
    if (!sixj_triads_ok(s)) return {};
    const auto& t = s.two_j;
    SqrtAccumulator acc;
    auto term = [&](int m1, int m2, int m3, int m4, int m5, int m6) {
        const int tm[6] = {m1, m2, m3, m4, m5, m6};
        for (int i = 0; i < 6; ++i)
            if (std::abs(tm[i]) > t[i]) return;
        SqrtRational p = wigner_3j(t[0], t[1], t[2], -m1, -m2, -m3);
        if (p.is_zero()) return;
        p = p * wigner_3j(t[0], t[4], t[5], m1, -m5, m6);
        if (p.is_zero()) return;
        p = p * wigner_3j(t[3], t[1], t[5], m4, m2, -m6);
        if (p.is_zero()) return;
        p = p * wigner_3j(t[3], t[4], t[2], -m4, m5, m3);
        if (p.is_zero()) return;
        int two_s = 0;
        for (int i = 0; i < 6; ++i) two_s += t[i] - tm[i];
        acc.add(p * Rational(phase_from_doubled(two_s)));
    };
    if (conv == SixJMConvention::FreeM125) {
        for (int m1 = -t[0]; m1 <= t[0]; m1 += 2)
            for (int m2 = -t[1]; m2 <= t[1]; m2 += 2)
                for (int m5 = -t[4]; m5 <= t[4]; m5 += 2) {
                    int m3 = -m1 - m2, m6 = m5 - m1, m4 = m6 - m2;
                    term(m1, m2, m3, m4, m5, m6);
                }
    } else {
        for (int m3 = -t[2]; m3 <= t[2]; m3 += 2)
            for (int m4 = -t[3]; m4 <= t[3]; m4 += 2)
                for (int m6 = -t[5]; m6 <= t[5]; m6 += 2) {
                    int m5 = m4 - m3, m2 = m6 - m4, m1 = -m2 - m3;
                    term(m1, m2, m3, m4, m5, m6);
                }
    }
    return acc.result();
}

namespace {

// Triad sums alpha_i (doubled) and quad sums beta_c (doubled).
struct RacahSums {
    std::array<int, 4> alpha;
    std::array<int, 3> beta;
};

RacahSums racah_sums(const SixJLabel& s) {
    const auto& t = s.two_j;
    return {{t[0] + t[1] + t[2], t[0] + t[4] + t[5], t[3] + t[1] + t[5], t[3] + t[4] + t[2]},
            {t[0] + t[1] + t[3] + t[4], t[1] + t[2] + t[4] + t[5], t[2] + t[0] + t[5] + t[3]}};
}

// pairing of triads {i,j}: 0 -> {01|23}, 1 -> {02|13}, 2 -> {03|12}
int pairing(int i, int j) {
    if (i > j) std::swap(i, j);
    if ((i == 0 && j == 1) || (i == 2 && j == 3)) return 0;
    if ((i == 0 && j == 2) || (i == 1 && j == 3)) return 1;
    return 2;
}

using Mono = std::array<uint8_t, 16>;  // index 4*j + i for tau_{ji}

struct MonoHash {
    size_t operator()(const Mono& m) const {
        size_t h = 1469598103934665603ULL;
        for (uint8_t v : m) h = (h ^ v) * 1099511628211ULL;
        return h;
    }
};

std::vector<Mono> gf_terms(bool printed_b3) {
    auto tau = [](std::initializer_list<std::pair<int, int>> ps) {
        Mono m{};
        for (auto [j, i] : ps) m[4 * j + i] += 1;
        return m;
    };
    std::vector<Mono> terms;
    terms.push_back(tau({{1, 0}, {2, 0}, {3, 0}}));
    terms.push_back(tau({{0, 1}, {3, 1}, {2, 1}}));
    terms.push_back(tau({{3, 2}, {0, 2}, {1, 2}}));
    terms.push_back(tau({{2, 3}, {1, 3}, {0, 3}}));
    terms.push_back(tau({{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
    terms.push_back(tau({{0, 2}, {2, 0}, {1, 3}, {3, 1}}));
    if (printed_b3)
        terms.push_back(tau({{0, 3}, {3, 0}, {1, 3}, {3, 1}}));
    else
        terms.push_back(tau({{0, 3}, {3, 0}, {1, 2}, {2, 1}}));
    return terms;
}

bool divides(const Mono& t, const Mono& m) {
    for (int i = 0; i < 16; ++i)
        if (t[i] > m[i]) return false;
    return true;
}

Mono quotient(const Mono& m, const Mono& t) {
    Mono q;
    for (int i = 0; i < 16; ++i) q[i] = static_cast<uint8_t>(m[i] - t[i]);
    return q;
}

}  // namespace

std::array<std::array<int, 4>, 4> sixj_gf_exponents(const SixJLabel& s) {
    auto rs = racah_sums(s);
    std::array<std::array<int, 4>, 4> k{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            if (i != j) k[j][i] = (rs.beta[pairing(i, j)] - rs.alpha[i]) / 2;
    return k;
}

Integer sixj_gf_coefficient(const std::array<std::array<int, 4>, 4>& k, const SixJGfOptions& opt) {
    Mono target{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            if (i == j) continue;
            if (k[j][i] < 0) return 0;
            if (k[j][i] > 255) throw UnsupportedError("6j exponent too large");
            target[4 * j + i] = static_cast<uint8_t>(k[j][i]);
        }
    const auto terms = gf_terms(opt.printed_b3);

    // Monomials below the target reachable as products of terms, by degree.
    std::unordered_map<Mono, Integer, MonoHash> h;
    std::map<int, std::vector<Mono>> by_degree;
    auto degree = [](const Mono& m) {
        int d = 0;
        for (uint8_t v : m) d += v;
        return d;
    };
    Mono one{};
    h.emplace(one, 0);
    std::vector<Mono> frontier{one};
    while (!frontier.empty()) {
        std::vector<Mono> next;
        for (const auto& m : frontier) {
            for (const auto& t : terms) {
                Mono p;
                bool ok = true;
                for (int i = 0; i < 16 && ok; ++i) {
                    int v = m[i] + t[i];
                    if (v > target[i]) ok = false;
                    p[i] = static_cast<uint8_t>(v);
                }
                if (ok && h.emplace(p, 0).second) next.push_back(p);
            }
        }
        frontier.swap(next);
    }
    for (auto& [m, v] : h) by_degree[degree(m)].push_back(m);

    // g * H = 1 gives H[m] = -sum_T H[m / T]
    for (auto& [d, monos] : by_degree) {
        for (const auto& m : monos) {
            if (d == 0) {
                h[m] = 1;
                continue;
            }
            Integer acc = 0;
            for (const auto& t : terms) {
                if (!divides(t, m)) continue;
                auto it = h.find(quotient(m, t));
                if (it != h.end()) acc -= it->second;
            }
            h[m] = acc;
        }
    }

    // coefficient of the target in H^2
    Integer out = 0;
    for (const auto& [m, v] : h) {
        if (v == 0) continue;
        auto it = h.find(quotient(target, m));
        if (it != h.end()) out += v * it->second;
    }
    return out;
}

SqrtRational wigner_6j_gf(const SixJLabel& s, const SixJGfOptions& opt) {
    if (!sixj_triads_ok(s)) return {};
    const auto& t = s.two_j;
    Integer c = sixj_gf_coefficient(sixj_gf_exponents(s), opt);
    if (c == 0) return {};
    SqrtRational delta = triangle_delta(HalfInt(t[0]), HalfInt(t[1]), HalfInt(t[2])) *
                         triangle_delta(HalfInt(t[0]), HalfInt(t[4]), HalfInt(t[5])) *
                         triangle_delta(HalfInt(t[3]), HalfInt(t[1]), HalfInt(t[5])) *
                         triangle_delta(HalfInt(t[3]), HalfInt(t[4]), HalfInt(t[2]));
    return delta * Rational(c);
}

SqrtRational wigner_9j(const NineJLabel& n) {
    const auto& j = n.two_j;
    for (int r = 0; r < 3; ++r) {
        if (!triad_ok(j[r][0], j[r][1], j[r][2])) return {};
        if (!triad_ok(j[0][r], j[1][r], j[2][r])) return {};
    }
    SqrtAccumulator acc;
    for (int m1 = -j[0][0]; m1 <= j[0][0]; m1 += 2)
        for (int m2 = -j[0][1]; m2 <= j[0][1]; m2 += 2)
            for (int m4 = -j[1][0]; m4 <= j[1][0]; m4 += 2)
                for (int m5 = -j[1][1]; m5 <= j[1][1]; m5 += 2) {
                    int m3 = -m1 - m2, m6 = -m4 - m5, m7 = -m1 - m4, m8 = -m2 - m5, m9 = -m3 - m6;
                    if (std::abs(m3) > j[0][2] || std::abs(m6) > j[1][2] || std::abs(m7) > j[2][0] ||
                        std::abs(m8) > j[2][1] || std::abs(m9) > j[2][2])
                        continue;
                    SqrtRational p = wigner_3j(j[0][0], j[0][1], j[0][2], m1, m2, m3);
                    if (p.is_zero()) continue;
                    p = p * wigner_3j(j[1][0], j[1][1], j[1][2], m4, m5, m6);
                    if (p.is_zero()) continue;
                    p = p * wigner_3j(j[2][0], j[2][1], j[2][2], m7, m8, m9);
                    if (p.is_zero()) continue;
                    p = p * wigner_3j(j[0][0], j[1][0], j[2][0], m1, m4, m7);
                    if (p.is_zero()) continue;
                    p = p * wigner_3j(j[0][1], j[1][1], j[2][1], m2, m5, m8);
                    if (p.is_zero()) continue;
                    p = p * wigner_3j(j[0][2], j[1][2], j[2][2], m3, m6, m9);
                    acc.add(p);
                }
    return acc.result();
}

std::array<std::array<int, 3>, 3> regge_square(const ThreeJLabel& l) {
    validate(l);
    const auto& tj = l.two_j;
    const auto& tm = l.two_m;
    std::array<std::array<int, 3>, 3> sq{};
    sq[0] = {(-tj[0] + tj[1] + tj[2]) / 2, (tj[0] - tj[1] + tj[2]) / 2, (tj[0] + tj[1] - tj[2]) / 2};
    for (int i = 0; i < 3; ++i) {
        sq[1][i] = (tj[i] - tm[i]) / 2;
        sq[2][i] = (tj[i] + tm[i]) / 2;
    }
    return sq;
}

ThreeJLabel label_from_square(const std::array<std::array<int, 3>, 3>& sq) {
    ThreeJLabel l;
    for (int i = 0; i < 3; ++i) {
        l.two_j[i] = sq[1][i] + sq[2][i];
        l.two_m[i] = sq[2][i] - sq[1][i];
    }
    return l;
}

std::vector<ReggeMember> regge_orbit(const ThreeJLabel& seed) {
    validate(seed);
    const auto& tj = seed.two_j;
    if (seed.two_m[0] + seed.two_m[1] + seed.two_m[2] != 0 || !triad_ok(tj[0], tj[1], tj[2]))
        throw DomainError("label violates the selection rules");
    for (int i = 0; i < 3; ++i)
        if (std::abs(seed.two_m[i]) > tj[i]) throw DomainError("|m| exceeds j");
    const auto sq = regge_square(seed);
    const int J = (tj[0] + tj[1] + tj[2]) / 2;
    const int odd_sign = (J % 2) ? -1 : 1;

    std::array<int, 3> perm_rows{0, 1, 2};
    std::map<ThreeJLabel, int> seen;
    auto parity = [](const std::array<int, 3>& p) {
        int inv = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (p[a] > p[b]) ++inv;
        return inv % 2;
    };
    do {
        std::array<int, 3> perm_cols{0, 1, 2};
        do {
            for (int transpose = 0; transpose < 2; ++transpose) {
                std::array<std::array<int, 3>, 3> out{};
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) {
                        int v = sq[perm_rows[r]][perm_cols[c]];
                        if (transpose)
                            out[c][r] = v;
                        else
                            out[r][c] = v;
                    }
                int phase = ((parity(perm_rows) + parity(perm_cols)) % 2) ? odd_sign : 1;
                seen.emplace(label_from_square(out), phase);
            }
        } while (std::next_permutation(perm_cols.begin(), perm_cols.end()));
    } while (std::next_permutation(perm_rows.begin(), perm_rows.end()));

    std::vector<ReggeMember> orbit;
    orbit.reserve(seen.size());
    for (auto& [l, ph] : seen) orbit.push_back({l, ph});
    return orbit;
}

SqrtRational gaunt_exact_part(int l1, int m1, int l2, int m2, int l3, int m3) {
    if (l1 < 0 || l2 < 0 || l3 < 0) throw DomainError("negative l");
    if ((l1 + l2 + l3) % 2 || m1 + m2 + m3 != 0) return {};
    if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) return {};
    SqrtRational a = wigner_3j(2 * l1, 2 * l2, 2 * l3, 0, 0, 0);
    if (a.is_zero()) return a;
    SqrtRational b = wigner_3j(2 * l1, 2 * l2, 2 * l3, 2 * m1, 2 * m2, 2 * m3);
    return a * b * SqrtRational::sqrt_of(Rational((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1)));
}

double gaunt(int l1, int m1, int l2, int m2, int l3, int m3) {
    return gaunt_exact_part(l1, m1, l2, m2, l3, m3).to_double() / std::sqrt(4.0 * std::numbers::pi);
}

}  // namespace gfkit
