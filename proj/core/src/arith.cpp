#include "gfkit/arith.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <regex>

namespace gfkit {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(two / 2);
    return std::to_string(two) + "/2";
}

namespace {

std::vector<unsigned long> sieve(unsigned long bound) {
    std::vector<char> composite(bound + 1, 0);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return primes;
}

std::atomic<unsigned long> g_trial_bound{1000000UL};

std::shared_ptr<const std::vector<unsigned long>> trial_primes() {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<unsigned long>> cached;
    static unsigned long cached_bound = 0;
    unsigned long bound = g_trial_bound.load();
    std::lock_guard<std::mutex> lock(mu);
    if (!cached || cached_bound != bound) {
        cached = std::make_shared<const std::vector<unsigned long>>(sieve(bound));
        cached_bound = bound;
    }
    return cached;
}

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            return Integer(t % n);
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = abs(x - y);
                    q = (q * d) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        split_large(s, out);
        split_large(s, out);
        return;
    }
    Integer d = pollard_brent(n);
    split_large(d, out);
    split_large(Integer(n / d), out);
}

// Correctly rounded conversion of a positive integer scaled by 2^-shift.
double scaled_to_double(const Integer& q, long shift) {
    long e = 0;
    double m = round_to_double(q, e);
    return std::ldexp(m, static_cast<int>(e - shift));
}

// Nearest double to |p/q| (q > 0, p != 0).
double ratio_to_double(const Integer& p, const Integer& q) {
    Integer n = abs(p);
    long k = 66 + static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    Integer num = n, den = q;
    if (k >= 0)
        num <<= k;
    else
        den <<= -k;
    Integer quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // sticky bit keeps the rounding correct
    quo = (quo << 1) + (rem != 0 ? 1 : 0);
    return scaled_to_double(quo, k + 1);
}

}  // namespace

void set_trial_division_bound(unsigned long bound) { g_trial_bound.store(std::max(bound, 2UL)); }

double round_to_double(const Integer& n, long& exp2) {
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (bits <= 53) {
        exp2 = 0;
        return n.get_d();
    }
    long shift = static_cast<long>(bits) - 53;
    Integer top = n >> shift;
    Integer rem = n - (top << shift);
    Integer half = Integer(1) << (shift - 1);
    if (rem > half || (rem == half && mpz_odd_p(top.get_mpz_t()))) top += 1;
    exp2 = shift;
    return top.get_d();
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n_in) {
    if (n_in <= 0) throw DomainError("factorize: argument must be positive");
    std::vector<std::pair<Integer, unsigned>> out;
    Integer n = n_in;
    auto primes = trial_primes();
    for (unsigned long p : *primes) {
        if (n == 1) break;
        if (Integer(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(Integer(p), e);
    }
    if (n > 1) {
        std::vector<Integer> rest;
        split_large(n, rest);
        std::sort(rest.begin(), rest.end());
        for (auto& r : rest) {
            if (!out.empty() && out.back().first == r)
                ++out.back().second;
            else
                out.emplace_back(r, 1);
        }
    }
    return out;
}

SquarefreeSplit squarefree_split(const Integer& n) {
    SquarefreeSplit s{1, 1};
    if (n == 1) return s;
    for (auto& [p, e] : factorize(n)) {
        if (e % 2) s.squarefree *= p;
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
        s.root *= pk;
    }
    return s;
}

SqrtRational::SqrtRational(const Rational& coeff, const Rational& radicand) {
    if (radicand < 0) throw DomainError("negative radicand");
    Rational c = coeff;
    c.canonicalize();
    Rational r = radicand;
    r.canonicalize();
    if (c == 0 || r == 0) {
        coeff_ = 0;
        radicand_ = 1;
        return;
    }
    auto sn = squarefree_split(r.get_num());
    auto sd = squarefree_split(r.get_den());
    Rational cc = c * Rational(sn.root, sd.root);
    cc.canonicalize();
    *this = from_canonical(cc, Rational(sn.squarefree, sd.squarefree));
}

SqrtRational SqrtRational::from_canonical(Rational coeff, Rational radicand) {
    SqrtRational v;
    if (coeff == 0) return v;
    // p/q sqrt(a/b) with a, b squarefree: move common primes of q and a (and of
    // p and b) under the root so the representation is unique.
    Integer p = coeff.get_num(), q = coeff.get_den();
    Integer a = radicand.get_num(), b = radicand.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t());
    if (g != 1) {
        q /= g;
        a /= g;
        b *= g;
    }
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        p /= g;
        b /= g;
        a *= g;
    }
    v.coeff_ = Rational(p, q);
    v.coeff_.canonicalize();
    v.radicand_ = Rational(a, b);
    v.radicand_.canonicalize();
    return v;
}

SqrtRational SqrtRational::sqrt_of(const Rational& q) { return SqrtRational(Rational(1), q); }

SqrtRational canonicalize(const SqrtRational& v) { return SqrtRational(v.coeff(), v.radicand()); }

double SqrtRational::to_double() const {
    if (is_zero()) return 0.0;
    const double s = sign() < 0 ? -1.0 : 1.0;
    if (is_rational()) return s * ratio_to_double(coeff_.get_num(), coeff_.get_den());
    Rational sq = square();
    return s * std::sqrt(ratio_to_double(sq.get_num(), sq.get_den()));
}

std::string SqrtRational::str() const {
    std::string out = coeff_.get_num().get_str() + "/" + coeff_.get_den().get_str();
    if (radicand_ != 1)
        out += "*sqrt(" + radicand_.get_num().get_str() + "/" + radicand_.get_den().get_str() + ")";
    return out;
}

SqrtRational SqrtRational::parse(const std::string& text) {
    static const std::regex re(R"(^\s*([+-]?\d+)(?:/(\d+))?(?:\*sqrt\((\d+)(?:/(\d+))?\))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw DomainError("cannot parse exact value: " + text);
    Integer p(m[1].str()), q(m[2].matched ? m[2].str() : "1");
    Integer r(m[3].matched ? m[3].str() : "1"), s(m[4].matched ? m[4].str() : "1");
    if (q == 0 || s == 0) throw DomainError("zero denominator in: " + text);
    return SqrtRational(Rational(p, q), Rational(r, s));
}

SqrtRational sr_mul(const SqrtRational& a, const SqrtRational& b) {
    if (a.is_zero() || b.is_zero()) return SqrtRational();
    const Integer& a1 = a.radicand().get_num();
    const Integer& b1 = a.radicand().get_den();
    const Integer& a2 = b.radicand().get_num();
    const Integer& b2 = b.radicand().get_den();
    Integer g, h;
    mpz_gcd(g.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
    mpz_gcd(h.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t());
    Integer num = (a1 / g) * (a2 / g);
    Integer den = (b1 / h) * (b2 / h);
    Integer u;
    mpz_gcd(u.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational coeff = a.coeff() * b.coeff() * Rational(g, h);
    coeff.canonicalize();
    num /= u;
    den /= u;
    Rational rad(num, den);
    rad.canonicalize();
    return SqrtRational::from_canonical(coeff, rad);
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) { return sr_mul(a, b); }

SqrtRational operator*(const SqrtRational& a, const Rational& q) {
    Rational c = a.coeff() * q;
    c.canonicalize();
    return SqrtRational::from_canonical(c, a.radicand());
}

SqrtRational operator/(const SqrtRational& a, const SqrtRational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    // 1/(c sqrt(r/s)) = sqrt(r s) / (c r); r s stays squarefree
    const Integer& r = b.radicand().get_num();
    Rational inv_c = 1 / (b.coeff() * r);
    inv_c.canonicalize();
    Rational inv_r(r * b.radicand().get_den(), 1);
    return sr_mul(a, SqrtRational::from_canonical(inv_c, inv_r));
}

bool operator<(const SqrtRational& a, const SqrtRational& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign();
    if (a.sign() == 0) return false;
    Rational sa = a.square(), sb = b.square();
    return a.sign() > 0 ? sa < sb : sa > sb;
}

namespace {

// c sqrt(a/b) = (c/b) sqrt(a b): values sharing the squarefree integer a b are
// rational multiples of each other.
std::pair<Integer, Rational> radical_class(const SqrtRational& v) {
    const Integer& b = v.radicand().get_den();
    Rational c = v.coeff() / Rational(b);
    c.canonicalize();
    return {v.radicand().get_num() * b, c};
}

SqrtRational from_class(const Integer& key, const Rational& c) {
    return SqrtRational::from_canonical(c, Rational(key));
}

}  // namespace

SqrtRational sr_add_same_radicand(const SqrtRational& a, const SqrtRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [ka, ca] = radical_class(a);
    auto [kb, cb] = radical_class(b);
    if (ka != kb)
        throw UnsupportedError("addition of values with different radicands: " + a.str() + " + " + b.str());
    Rational c = ca + cb;
    c.canonicalize();
    return from_class(ka, c);
}

void SqrtAccumulator::add(const SqrtRational& term) {
    if (term.is_zero()) return;
    auto [key, c] = radical_class(term);
    auto [it, inserted] = groups_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) groups_.erase(it);
    }
}

bool SqrtAccumulator::empty() const { return groups_.empty(); }

SqrtRational SqrtAccumulator::result() const {
    if (groups_.empty()) return SqrtRational();
    if (groups_.size() > 1) throw UnsupportedError("sum does not reduce to a single radical");
    auto& [key, c] = *groups_.begin();
    Rational cc = c;
    cc.canonicalize();
    return from_class(key, cc);
}

struct FactorialCache::Impl {
    static constexpr long kChunk = 1024;
    static constexpr long kMaxChunks = 4096;
    std::array<std::atomic<Integer*>, kMaxChunks> chunks{};
    std::atomic<long> count{0};
    std::mutex grow;

    ~Impl() {
        for (auto& c : chunks) delete[] c.load();
    }

    void grow_to(long n) {
        std::lock_guard<std::mutex> lock(grow);
        long have = count.load(std::memory_order_relaxed);
        if (n <= have) return;
        if (n > kChunk * kMaxChunks) throw DomainError("factorial argument too large");
        for (long k = have; k < n; ++k) {
            long ci = k / kChunk;
            Integer* chunk = chunks[ci].load(std::memory_order_relaxed);
            if (!chunk) {
                chunk = new Integer[kChunk];
                chunks[ci].store(chunk, std::memory_order_release);
            }
            if (k == 0)
                chunk[0] = 1;
            else
                chunk[k % kChunk] = chunks[(k - 1) / kChunk].load(std::memory_order_relaxed)[(k - 1) % kChunk] * k;
        }
        count.store(n, std::memory_order_release);
    }
};

FactorialCache::FactorialCache() : impl_(new Impl) {
    long initial = 512;
    if (const char* env = std::getenv("GFKIT_FACT_MAX")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) initial = v;
    }
    impl_->grow_to(initial + 1);
}

FactorialCache& FactorialCache::instance() {
    static FactorialCache cache;
    return cache;
}

long FactorialCache::capacity() const { return impl_->count.load(std::memory_order_acquire) - 1; }

void FactorialCache::reserve(long n) { impl_->grow_to(n + 1); }

const Integer& FactorialCache::factorial(long k) {
    if (k < 0) throw DomainError("factorial of negative integer");
    if (k >= impl_->count.load(std::memory_order_acquire)) impl_->grow_to(k + 1);
    return impl_->chunks[k / Impl::kChunk].load(std::memory_order_acquire)[k % Impl::kChunk];
}

Integer FactorialCache::binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

SqrtRational sqrt_factorial_ratio(const std::vector<long>& num, const std::vector<long>& den) {
    long top = 1;
    for (long v : num) {
        if (v < 0) throw DomainError("factorial of negative integer");
        top = std::max(top, v);
    }
    for (long v : den) {
        if (v < 0) throw DomainError("factorial of negative integer");
        top = std::max(top, v);
    }
    Integer cn = 1, cd = 1, rn = 1, rd = 1;
    for (unsigned long p : sieve(static_cast<unsigned long>(top))) {
        long e = 0;
        auto legendre = [p](long n) {
            long s = 0;
            for (long q = static_cast<long>(p); q <= n; q *= static_cast<long>(p)) {
                s += n / q;
                if (q > n / static_cast<long>(p)) break;
            }
            return s;
        };
        for (long v : num) e += legendre(v);
        for (long v : den) e -= legendre(v);
        if (e == 0) continue;
        Integer pp(p), pk;
        unsigned long half = static_cast<unsigned long>(std::labs(e) / 2);
        mpz_pow_ui(pk.get_mpz_t(), pp.get_mpz_t(), half);
        if (e > 0) {
            cn *= pk;
            if (e % 2) rn *= pp;
        } else {
            cd *= pk;
            if (-e % 2) rd *= pp;
        }
    }
    return SqrtRational::from_canonical(Rational(cn, cd), Rational(rn, rd));
}

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    if (a.two < 0 || b.two < 0 || c.two < 0) return false;
    if ((a.two + b.two + c.two) % 2) return false;
    return c.two >= std::abs(a.two - b.two) && c.two <= a.two + b.two;
}

SqrtRational triangle_delta(HalfInt a, HalfInt b, HalfInt c) {
    if ((a.two + b.two + c.two) % 2) throw DomainError("a+b+c is not an integer");
    if (a.two < 0 || b.two < 0 || c.two < 0 || c.two < std::abs(a.two - b.two) || c.two > a.two + b.two)
        throw TriangleError("triangle condition violated");
    long J = (a.two + b.two + c.two) / 2;
    return sqrt_factorial_ratio({J - a.two, J - b.two, J - c.two}, {J + 1});
}

int phase_from_doubled(int two_k) {
    if (two_k % 2) throw DomainError("phase exponent is not an integer");
    int k = two_k / 2;
    return (k % 2 == 0) ? 1 : -1;
}

}  // namespace gfkit
