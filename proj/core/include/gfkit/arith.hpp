#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gfkit/errors.hpp"

namespace gfkit {

using Integer = mpz_class;
using Rational = mpq_class;

// Angular momentum stored doubled: j = two / 2.
struct HalfInt {
    int two = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int doubled) : two(doubled) {}
    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

    constexpr bool is_integer() const { return two % 2 == 0; }
    double value() const { return two / 2.0; }
    std::string str() const;

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.two + b.two); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.two - b.two); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.two); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

// Exact value coeff * sqrt(radicand).  Canonical form: with value^2 = N/D in
// lowest terms, radicand = squarefree(N)/squarefree(D); zero is 0 * sqrt(1).
class SqrtRational {
public:
    SqrtRational() : coeff_(0), radicand_(1) {}
    SqrtRational(long v) : coeff_(v), radicand_(1) {}  // NOLINT(implicit)
    explicit SqrtRational(const Rational& q) : coeff_(q), radicand_(1) { coeff_.canonicalize(); }
    SqrtRational(const Rational& coeff, const Rational& radicand);

    // Caller guarantees a squarefree, coprime radicand; the coefficient is then
    // balanced against it.
    static SqrtRational from_canonical(Rational coeff, Rational radicand);
    // sqrt(q) for q >= 0.
    static SqrtRational sqrt_of(const Rational& q);

    const Rational& coeff() const { return coeff_; }
    const Rational& radicand() const { return radicand_; }

    bool is_zero() const { return coeff_ == 0; }
    int sign() const { return sgn(coeff_); }
    bool is_rational() const { return radicand_ == 1; }

    // value squared, with the sign kept separately
    Rational square() const { return coeff_ * coeff_ * radicand_; }

    double to_double() const;
    std::string str() const;
    static SqrtRational parse(const std::string& text);

    SqrtRational operator-() const { return from_canonical(-coeff_, radicand_); }
    SqrtRational abs() const { return from_canonical(::abs(coeff_), radicand_); }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
    friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b);
    friend SqrtRational operator*(const SqrtRational& a, const Rational& q);
    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }
    // Value ordering; exact.
    friend bool operator<(const SqrtRational& a, const SqrtRational& b);

private:
    Rational coeff_;
    Rational radicand_;
};

SqrtRational canonicalize(const SqrtRational& v);
SqrtRational sr_mul(const SqrtRational& a, const SqrtRational& b);
SqrtRational sr_add_same_radicand(const SqrtRational& a, const SqrtRational& b);

// Sums terms whose total collapses to a single radical.  Terms are grouped by
// radical class (sqrt(a/b) ~ sqrt(a b)); result() throws UnsupportedError if
// more than one class survives.
class SqrtAccumulator {
public:
    void add(const SqrtRational& term);
    SqrtRational result() const;
    bool empty() const;

private:
    std::map<Integer, Rational> groups_;
};

// Squarefree split n = s * k^2 for n > 0.
struct SquarefreeSplit {
    Integer squarefree;
    Integer root;
};
SquarefreeSplit squarefree_split(const Integer& n);

// Trial division runs to this bound before Pollard-rho takes over.
void set_trial_division_bound(unsigned long bound);

// Prime factorisation (ascending primes with multiplicity exponents) of n > 0.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

// Thread-safe, lazily grown table of k!.  Reads of an entry never block once it
// has been published.
class FactorialCache {
public:
    static FactorialCache& instance();

    const Integer& factorial(long k);
    Integer binomial(long n, long k);
    long capacity() const;
    void reserve(long n);

private:
    FactorialCache();
    struct Impl;
    Impl* impl_;
};

inline const Integer& factorial(long k) { return FactorialCache::instance().factorial(k); }
inline Integer binomial(long n, long k) { return FactorialCache::instance().binomial(n, k); }

// sqrt( prod num_i! / prod den_i! ) reduced through prime exponents without
// forming the factorials.
// n/d in lowest terms
inline Rational ratio(const Integer& n, const Integer& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

SqrtRational sqrt_factorial_ratio(const std::vector<long>& num, const std::vector<long>& den);

// sqrt((J-2a)!(J-2b)!(J-2c)!/(J+1)!) with J = a+b+c.
SqrtRational triangle_delta(HalfInt a, HalfInt b, HalfInt c);

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);

// (-1)^k for integer k given doubled; throws if the exponent is half-odd.
int phase_from_doubled(int two_k);

// Nearest double to a positive integer's value as mantissa * 2^exp (mantissa in
// [2^52, 2^53) or exact when small).
double round_to_double(const Integer& n, long& exp2);

}  // namespace gfkit
