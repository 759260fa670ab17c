#include "gfkit/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "gfkit/errors.hpp"
#include "gfkit/wigner.hpp"

namespace gfkit {

void validate_irrep(const IrrepLabel& h) {
    if (h.empty()) throw DomainError("empty irrep label");
    for (size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 0) throw DomainError("irrep label entries must be non-negative");
        if (i > 0 && h[i] > h[i - 1]) throw DomainError("irrep label must be non-increasing");
    }
}

bool GelfandPattern::valid() const {
    const int m = n();
    if (m == 0) return false;
    for (int k = 0; k < m; ++k)
        if (static_cast<int>(rows[k].size()) != m - k) return false;
    for (int v : rows[0])
        if (v < 0) return false;
    for (int k = 1; k < m; ++k)
        for (int i = 0; i < m - k; ++i)
            if (rows[k - 1][i] < rows[k][i] || rows[k][i] < rows[k - 1][i + 1]) return false;
    return true;
}

std::string GelfandPattern::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < rows.size(); ++k) {
        if (k) os << " / ";
        for (size_t i = 0; i < rows[k].size(); ++i) os << (i ? " " : "") << rows[k][i];
    }
    return os.str();
}

GelfandPattern GelfandPattern::parse(const std::string& text) {
    GelfandPattern p;
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), '\n', '/');
    std::istringstream rows(norm);
    std::string row;
    while (std::getline(rows, row, '/')) {
        std::istringstream is(row);
        std::vector<int> r;
        std::string tok;
        while (is >> tok) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw DomainError("bad pattern entry '" + tok + "'");
            }
            if (used != tok.size()) throw DomainError("bad pattern entry '" + tok + "'");
            r.push_back(v);
        }
        if (!r.empty()) p.rows.push_back(std::move(r));
    }
    if (!p.valid()) throw DomainError("not a valid Gel'fand pattern: " + text);
    return p;
}

namespace {

void enumerate_rows(GelfandPattern& cur, size_t k, std::vector<int>& row, size_t i,
                    std::vector<GelfandPattern>& out) {
    const std::vector<int> above = cur.rows[k - 1];
    if (i == row.size()) {
        cur.rows.push_back(row);
        if (row.size() == 1)
            out.push_back(cur);
        else {
            std::vector<int> next(row.size() - 1);
            enumerate_rows(cur, k + 1, next, 0, out);
        }
        cur.rows.pop_back();
        return;
    }
    for (int v = above[i + 1]; v <= above[i]; ++v) {
        row[i] = v;
        enumerate_rows(cur, k, row, i + 1, out);
    }
}

}  // namespace

std::vector<GelfandPattern> gelfand_enumerate(const IrrepLabel& h) {
    validate_irrep(h);
    std::vector<GelfandPattern> out;
    GelfandPattern cur;
    cur.rows.push_back(h);
    if (h.size() == 1) {
        out.push_back(cur);
        return out;
    }
    std::vector<int> row(h.size() - 1);
    enumerate_rows(cur, 1, row, 0, out);
    return out;
}

Integer weyl_dimension(const IrrepLabel& h) {
    validate_irrep(h);
    const int n = static_cast<int>(h.size());
    Integer num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) num *= (h[i] + n - i) - (h[j] + n - j);
    for (int k = 1; k < n; ++k) den *= factorial(k);
    return num / den;
}

std::vector<int> pattern_weight(const GelfandPattern& p) {
    if (!p.valid()) throw DomainError("invalid Gel'fand pattern");
    const int n = p.n();
    std::vector<int> w(n);
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        const auto& r = p.rows[n - i];
        int s = std::accumulate(r.begin(), r.end(), 0);
        w[i - 1] = s - prev;
        prev = s;
    }
    return w;
}

GelfandPattern highest_pattern(const IrrepLabel& h) {
    validate_irrep(h);
    GelfandPattern p;
    p.rows.push_back(h);
    for (size_t k = 1; k < h.size(); ++k) {
        const auto& a = p.rows.back();
        p.rows.emplace_back(a.begin(), a.end() - 1);
    }
    return p;
}

GelfandPattern lowest_pattern(const IrrepLabel& h) {
    validate_irrep(h);
    GelfandPattern p;
    p.rows.push_back(h);
    for (size_t k = 1; k < h.size(); ++k) {
        const auto& a = p.rows.back();
        p.rows.emplace_back(a.begin() + 1, a.end());
    }
    return p;
}

// ---- B.F.R. coding ----

int BfrTable::k() const { return static_cast<int>(std::count(bits.begin(), bits.end(), 1)); }

std::vector<int> BfrTable::columns() const {
    std::vector<int> c;
    for (int i = 0; i < n(); ++i)
        if (bits[i]) c.push_back(i + 1);
    return c;
}

std::string BfrTable::minor_name() const {
    std::string s = "D";
    for (int c : columns()) s += std::to_string(c);
    return s;
}

BfrTable BfrTable::from_columns(int n, const std::vector<int>& cols) {
    if (n < 1) throw DomainError("table length must be positive");
    BfrTable t;
    t.bits.assign(n, 0);
    for (int c : cols) {
        if (c < 1 || c > n || t.bits[c - 1]) throw DomainError("bad minor column set");
        t.bits[c - 1] = 1;
    }
    if (t.k() == 0) throw DomainError("minor needs at least one column");
    return t;
}

std::string ParamMonomial::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i].kind;
        s += std::to_string(factors[i].lambda) + std::to_string(factors[i].mu);
    }
    return s;
}

ParamMonomial bfr_phi(const BfrTable& t) {
    const int n = t.n();
    const int k = t.k();
    if (k < 1) throw DomainError("empty table");
    for (int b : t.bits)
        if (b != 0 && b != 1) throw DomainError("table bits must be 0 or 1");
    ParamMonomial m;
    if (k == n) {
        if (n >= 2) m.factors.push_back({'y', n, n});
        return m;
    }
    bool seen_one = false, seen_zero = false;
    int ones = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (t.bits[pos - 1]) {
            if (seen_zero) m.factors.push_back({'x', pos, ones + 1});
            seen_one = true;
            ++ones;
        } else {
            if (seen_one) m.factors.push_back({'y', pos, ones});
            seen_zero = true;
        }
    }
    return m;
}

std::vector<std::pair<BfrTable, ParamMonomial>> bfr_generating_function(int n) {
    if (n < 1 || n > 20) throw DomainError("n out of range");
    std::vector<std::vector<int>> sets;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        std::vector<int> c;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) c.push_back(i + 1);
        sets.push_back(std::move(c));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::pair<BfrTable, ParamMonomial>> out;
    for (const auto& c : sets) {
        auto t = BfrTable::from_columns(n, c);
        out.emplace_back(t, bfr_phi(t));
    }
    return out;
}

Integer pn1(int n, const GelfandPattern& p) {
    if (n < 2) throw DomainError("pn1 needs n >= 2");
    if (n > 5) throw UnsupportedError("pn1 is available for n <= 5 only");
    if (!p.valid() || p.n() != n) throw DomainError("pattern does not belong to U(" + std::to_string(n) + ")");
    Integer r = 1;
    for (int lam = 2; lam <= n - 1; ++lam)
        for (int mu = 1; mu <= lam - 1; ++mu)
            r *= binomial(p.h(mu, lam) - p.h(mu + 1, lam), p.h(mu, lam) - p.h(mu, lam - 1));
    return r;
}

// ---- boson polynomials ----

RatPoly leading_minor(int n, const std::vector<int>& cols) {
    const int k = static_cast<int>(cols.size());
    if (n * n > kMaxPolyVars) throw UnsupportedError("matrix too large for polynomial minors");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    RatPoly det(n * n);
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inv;
        Exponents e{};
        for (int r = 0; r < k; ++r) e[r * n + cols[perm[r]] - 1] += 1;
        det.add_term(e, Rational(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

RatPoly BosonPolynomial::in_z() const {
    std::vector<RatPoly> mins;
    for (const auto& c : minors) mins.push_back(leading_minor(n, c));
    RatPoly sum(n * n);
    for (const auto& [c, ex] : terms) {
        RatPoly t = RatPoly::constant(n * n, c);
        for (size_t i = 0; i < ex.size(); ++i)
            if (ex[i]) t = t * mins[i].pow(ex[i]);
        sum += t;
    }
    return sum;
}

namespace {

void finish(BosonPolynomial& b) {
    RatPoly z = b.in_z();
    b.fock_norm2 = fock_inner(z, z);
}

}  // namespace

BosonPolynomial u3_boson_polynomial(const GelfandPattern& p) {
    if (!p.valid() || p.n() != 3) throw DomainError("u3_boson_polynomial needs a U(3) pattern");
    auto h = [&](int mu, int lam) { return p.h(mu, lam); };
    BosonPolynomial b;
    b.n = 3;
    b.minors = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    const int s = h(1, 1) - h(2, 2);
    const int ni = h(1, 2) - h(2, 3), nj = h(2, 3) - h(2, 2);
    for (int i = 0; i <= s; ++i) {
        int j = s - i;
        if (i > ni || j > nj) continue;
        Rational c(binomial(ni, i) * binomial(nj, j));
        b.terms.push_back({c, {i, ni - i, h(1, 3) - h(1, 2), h(2, 2) - h(3, 3), j, nj - j, h(3, 3)}});
    }
    finish(b);
    return b;
}

BosonPolynomial u4_boson_polynomial(const GelfandPattern& p) {
    if (!p.valid() || p.n() != 4) throw DomainError("u4_boson_polynomial needs a U(4) pattern");
    auto h = [&](int mu, int lam) { return p.h(mu, lam); };
    BosonPolynomial b;
    b.n = 4;
    // D1 D2 D3 D4 D12 D13 D14 D23 D24 D34 D123 D124 D134 D234 D1234
    b.minors = {{1},       {2},       {3},       {4},       {1, 2},    {1, 3},    {1, 4},       {2, 3},
                {2, 4},    {3, 4},    {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}};
    const int e1 = h(1, 3) - h(2, 4), e2 = h(2, 3) - h(3, 4);
    const int e3 = h(2, 4) - h(2, 3), e4 = h(3, 4) - h(3, 3);
    const int x31 = h(1, 3) - h(1, 2), y32 = h(2, 2) - h(3, 3);
    const int y21 = h(1, 1) - h(2, 2);
    const Integer top = factorial(e1) * factorial(e2) * factorial(e3) * factorial(e4);
    for (int i = 0; i <= x31; ++i) {
        const int i1 = x31 - i;
        for (int j = 0; j <= y32; ++j) {
            const int j1 = y32 - j;
            for (int k = 0; k <= y21; ++k)
                for (int l = 0; k + l <= y21; ++l)
                    for (int m = 0; k + l + m <= y21; ++m) {
                        const int n = y21 - k - l - m;
                        const int k1 = e1 - i - k, l1 = e2 - j - l, m1 = e3 - i1 - m, n1 = e4 - j1 - n;
                        if (k1 < 0 || l1 < 0 || m1 < 0 || n1 < 0) continue;
                        Integer den = factorial(i) * factorial(k) * factorial(k1) * factorial(j) * factorial(l) *
                                      factorial(l1) * factorial(i1) * factorial(m) * factorial(m1) * factorial(j1) *
                                      factorial(n) * factorial(n1);
                        Rational c = ratio(top, den);
                        b.terms.push_back({c,
                                           {k, k1, i, h(1, 4) - h(1, 3), j, l, m, l1, m1, i1, h(3, 3) - h(4, 4), j1, n,
                                            n1, h(4, 4)}});
                    }
        }
    }
    finish(b);
    return b;
}

Rational u3_printed_n3(const GelfandPattern& p) {
    if (!p.valid() || p.n() != 3) throw DomainError("needs a U(3) pattern");
    auto h = [&](int mu, int lam) { return p.h(mu, lam); };
    auto f = [](int v) -> Integer {
        if (v < 0) throw DomainError("printed U(3) normalisation undefined for this pattern");
        return factorial(v);
    };
    Integer num = f(h(1, 1) - h(2, 2)) * f(h(1, 2) - h(2, 3)) * f(h(1, 2) - h(2, 2) + 1) * f(h(1, 3) - h(2, 3) + 1) *
                  f(h(1, 2) - h(1, 1)) * f(h(1, 1) - h(2, 3)) * f(h(2, 3) - h(2, 2));
    Integer den = f(h(1, 1) - h(2, 3)) * f(h(1, 2) - h(2, 2)) * f(h(1, 2) + 1) * f(h(2, 2)) *
                  f(h(1, 3) - h(2, 2) + 1) * f(h(1, 3) - h(1, 2));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// ---- SU(3) ----

std::string Su3Label::str() const {
    std::ostringstream os;
    os << "(" << lambda << "," << mu << ";" << p << "," << q << "," << r() << ")";
    return os.str();
}

Su3Label Su3Label::make(int lambda, int mu, int p, int q, int r) {
    Su3Label a;
    a.lambda = lambda;
    a.mu = mu;
    a.p = p;
    a.q = q;
    a.t = HalfInt(mu + p - q);
    a.t0 = HalfInt(mu + p - q - 2 * r);
    a.y = -(2 * lambda + mu) + 3 * (p + q);
    validate(a);
    return a;
}

void validate(const Su3Label& a) {
    if (a.lambda < 0 || a.mu < 0) throw DomainError("SU(3) irrep labels must be non-negative");
    if (a.p < 0 || a.p > a.lambda) throw DomainError("SU(3) label needs 0 <= p <= lambda");
    if (a.q < 0 || a.q > a.mu) throw DomainError("SU(3) label needs 0 <= q <= mu");
    if (a.t.two != a.mu + a.p - a.q) throw DomainError("SU(3) label has inconsistent t");
    if (a.y != -(2 * a.lambda + a.mu) + 3 * (a.p + a.q)) throw DomainError("SU(3) label has inconsistent y");
    if (std::abs(a.t0.two) > a.t.two || (a.t.two - a.t0.two) % 2) throw DomainError("SU(3) label has bad t0");
}

std::vector<Su3Label> su3_labels(int lambda, int mu) {
    if (lambda < 0 || mu < 0) throw DomainError("SU(3) irrep labels must be non-negative");
    std::vector<Su3Label> out;
    for (int p = 0; p <= lambda; ++p)
        for (int q = 0; q <= mu; ++q)
            for (int r = 0; r <= mu + p - q; ++r) out.push_back(Su3Label::make(lambda, mu, p, q, r));
    return out;
}

Integer su3_dimension(int lambda, int mu) {
    if (lambda < 0 || mu < 0) throw DomainError("SU(3) irrep labels must be non-negative");
    return Integer(lambda + 1) * (mu + 1) * (lambda + mu + 2) / 2;
}

std::vector<std::pair<int, int>> su3_decompose_multfree(int l1, int l2) {
    if (l1 < 0 || l2 < 0) throw DomainError("SU(3) irrep labels must be non-negative");
    std::vector<std::pair<int, int>> out;
    for (int mu3 = 0; mu3 <= std::min(l1, l2); ++mu3) out.emplace_back(l1 + l2 - 2 * mu3, mu3);
    return out;
}

RatPoly su3_basis_polynomial(const Su3Label& a) {
    validate(a);
    const int nv = 6;
    std::vector<RatPoly> z, zp;
    for (int i = 0; i < 3; ++i) {
        z.push_back(RatPoly::var(nv, i));
        zp.push_back(RatPoly::var(nv, 3 + i));
    }
    RatPoly D1 = z[1] * zp[2] - z[2] * zp[1];
    RatPoly D2 = z[2] * zp[0] - z[0] * zp[2];
    RatPoly D3 = z[0] * zp[1] - z[1] * zp[0];
    const int lam = a.lambda, mu = a.mu, p = a.p, q = a.q;
    const int xi = (a.t.two + a.t0.two) / 2;
    RatPoly sum(nv);
    RatPoly tail = z[2].pow(lam - p) * D3.pow(q) *
                   Rational(Integer(1), factorial(lam - p) * factorial(q) * factorial(p) * factorial(mu - q));
    for (int k = 0; k <= mu - q; ++k) {
        const int i = xi - k;
        if (i < 0 || i > p) continue;
        Rational c(binomial(p, i) * binomial(mu - q, k));
        if (k % 2) c = -c;
        sum += z[0].pow(i) * z[1].pow(p - i) * D2.pow(k) * D1.pow(mu - q - k) * tail * c;
    }
    return sum;
}

Rational su3_basis_norm2(const Su3Label& a) {
    validate(a);
    const int lam = a.lambda, mu = a.mu, p = a.p, q = a.q, t2 = a.t.two, r = a.r();
    Rational v(factorial(mu + p + 1) * factorial(lam + mu - q + 1),
               factorial(lam + 1) * (t2 + 1) * factorial(p) * factorial(lam - p) * factorial(q) * factorial(mu - q) *
                   factorial(t2 - r) * factorial(r));
    v.canonicalize();
    return v;
}

Rational su3_printed_norm2(const Su3Label& a) {
    Rational v = su3_basis_norm2(a) / Rational(factorial(a.lambda));
    v.canonicalize();
    return v;
}

namespace {

struct CouplingData {
    RatPoly expansion;
    int sign = 1;
};

// Variables of the coupling generating function.
enum : int { A1, A2, XI1, ETA1, B1, B2, XI3, ETA3, C1, C2, DD1, DD2, XI5, ETA5, NV };

RatPoly coupling_expansion(int l1, int l2, int mu3) {
    const int lam3 = l1 + l2 - 2 * mu3, k2 = l2 - mu3, k3 = l1 - mu3;
    auto v = [](int i) { return RatPoly::var(NV, i); };
    std::array<RatPoly, 3> f1{v(A1) * v(XI1), v(A1) * v(ETA1), v(A2)};
    std::array<RatPoly, 3> f3{v(B1) * v(XI3), v(B1) * v(ETA3), v(B2)};
    std::array<RatPoly, 3> f5{v(C1) * v(XI5), v(C1) * v(ETA5), v(C2)};
    std::array<RatPoly, 3> g{v(DD1) * v(ETA5), -(v(DD1) * v(XI5)), v(DD2)};
    auto dot = [](const auto& a, const auto& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    std::array<RatPoly, 3> x{f1[1] * f3[2] - f1[2] * f3[1], f1[2] * f3[0] - f1[0] * f3[2],
                             f1[0] * f3[1] - f1[1] * f3[0]};
    Rational pref(binomial(lam3 + mu3 + 1, lam3) * binomial(lam3, k2), factorial(mu3));
    pref.canonicalize();
    return dot(f5, x).pow(mu3) * dot(f3, g).pow(k2) * dot(f1, g).pow(k3) * pref;
}

SqrtRational coupling_value(const CouplingData& d, int l1, int l2, int mu3, int p1, int r1, int p2, int r2, int p,
                            int q, int r) {
    const int lam3 = l1 + l2 - 2 * mu3;
    const int t2 = mu3 + p - q;
    const int pp = mu3 - q, qq = lam3 - p, rr = t2 - r;
    Exponents e{};
    const int ex[NV] = {p1, l1 - p1, p1 - r1, r1, p2, l2 - p2, p2 - r2, r2, pp, mu3 - pp, lam3 - qq, qq, t2 - rr, rr};
    for (int i = 0; i < NV; ++i) e[i] = static_cast<uint8_t>(ex[i]);
    Rational c = d.expansion.coeff(e);
    if (c == 0) return SqrtRational();
    Rational nk2 = ratio(2 * factorial(mu3) * factorial(l2 - mu3) * factorial(l1 - mu3),
                         factorial(l1 + l2 - mu3 + 2) * factorial(l1 + l2 - mu3 + 1));
    Rational states(factorial(p1 - r1) * factorial(r1) * factorial(l1 - p1) * factorial(p2 - r2) * factorial(r2) *
                    factorial(l2 - p2));
    Rational nb = su3_basis_norm2(Su3Label::make(mu3, lam3, pp, qq, rr));
    Rational rad = nk2 * states / nb;
    rad.canonicalize();
    if (r % 2) c = -c;
    return SqrtRational(Rational(c * d.sign), rad);
}

std::shared_ptr<const CouplingData> coupling_data(int l1, int l2, int mu3) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const CouplingData>> cache;
    const auto key = std::make_tuple(l1, l2, mu3);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto d = std::make_shared<CouplingData>();
    d->expansion = coupling_expansion(l1, l2, mu3);
    const int lam3 = l1 + l2 - 2 * mu3;
    SqrtRational hw = coupling_value(*d, l1, l2, mu3, l1, 0, l2, mu3, lam3, mu3, 0);
    if (hw.is_zero()) throw Error("highest weight coupling coefficient vanished");
    d->sign = hw.sign();
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(d));
    return it->second;
}

SqrtRational su2_part(const Su3Label& a1, const Su3Label& a2, const Su3Label& a3) {
    SqrtRational cg = clebsch_gordan(a1.t, a1.t0, a2.t, a2.t0, a3.t, a3.t0);
    return cg / SqrtRational::sqrt_of(Rational(su3_dimension(a3.lambda, a3.mu)));
}

}  // namespace

Su3Coupling su3_wigner_multfree(int l1, int l2, int lambda3, int mu3, const Su3Label& a1, const Su3Label& a2,
                                const Su3Label& a3) {
    if (l1 < 0 || l2 < 0 || mu3 < 0 || mu3 > std::min(l1, l2) || lambda3 != l1 + l2 - 2 * mu3)
        throw DomainError("(lambda3, mu3) does not occur in (l1,0) x (l2,0)");
    validate(a1);
    validate(a2);
    validate(a3);
    if (a1.lambda != l1 || a1.mu != 0 || a2.lambda != l2 || a2.mu != 0 || a3.lambda != lambda3 || a3.mu != mu3)
        throw DomainError("state labels do not belong to the coupled irreps");
    Su3Coupling out;
    if (a1.y + a2.y != a3.y) return out;
    auto d = coupling_data(l1, l2, mu3);
    if (a1.t0.two + a2.t0.two == a3.t0.two) {
        out.wigner = coupling_value(*d, l1, l2, mu3, a1.p, a1.r(), a2.p, a2.r(), a3.p, a3.q, a3.r());
        out.su2_factor = su2_part(a1, a2, a3);
    }
    if (!triangle_ok(a1.t, a2.t, a3.t)) return out;
    for (int m3 = a3.t.two; m3 >= -a3.t.two; m3 -= 2)
        for (int m1 = a1.t.two; m1 >= -a1.t.two; m1 -= 2) {
            const int m2 = m3 - m1;
            if (std::abs(m2) > a2.t.two || (a2.t.two - m2) % 2) continue;
            Su3Label b1 = Su3Label::make(l1, 0, a1.p, 0, (a1.t.two - m1) / 2);
            Su3Label b2 = Su3Label::make(l2, 0, a2.p, 0, (a2.t.two - m2) / 2);
            Su3Label b3 = Su3Label::make(lambda3, mu3, a3.p, a3.q, (a3.t.two - m3) / 2);
            SqrtRational f = su2_part(b1, b2, b3);
            if (f.is_zero()) continue;
            SqrtRational w = coupling_value(*d, l1, l2, mu3, b1.p, b1.r(), b2.p, b2.r(), b3.p, b3.q, b3.r());
            out.isoscalar = w / f;
            return out;
        }
    return out;
}

Eigen::Matrix2cd su2_matrix(const Su2Euler& e) {
    using C = std::complex<double>;
    C a1 = std::cos(e.beta / 2) * std::exp(C(0, (e.alpha + e.gamma) / 2));
    C a2 = std::sin(e.beta / 2) * std::exp(C(0, (e.alpha - e.gamma) / 2));
    Eigen::Matrix2cd m;
    m << a1, a2, -std::conj(a2), std::conj(a1);
    return m;
}

Eigen::Matrix3cd su3_euler_matrix(const Su2Euler& a, double nu3, double beta3, const Su2Euler& b) {
    using C = std::complex<double>;
    auto embed = [](const Eigen::Matrix2cd& s) {
        Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
        m.topLeftCorner<2, 2>() = s;
        return m;
    };
    Eigen::Matrix3cd rot = Eigen::Matrix3cd::Identity();
    const double c = std::cos(nu3 / 2), s = std::sin(nu3 / 2);
    rot(1, 1) = c;
    rot(1, 2) = s;
    rot(2, 1) = -s;
    rot(2, 2) = c;
    const C d3 = std::exp(C(0, beta3));
    Eigen::Matrix3cd ph = Eigen::Matrix3cd::Zero();
    ph(0, 0) = d3;
    ph(1, 1) = d3;
    ph(2, 2) = std::conj(d3) * std::conj(d3);
    return embed(su2_matrix(a)) * rot * ph * embed(su2_matrix(b));
}

}  // namespace gfkit
