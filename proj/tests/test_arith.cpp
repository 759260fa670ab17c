#include <doctest.h>

#include <gfkit/arith.hpp>

#include "support.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <thread>

using namespace gfkit;

namespace {

SqrtRational sr(long p, long q, long r, long s = 1) { return SqrtRational(Rational(p, q), Rational(r, s)); }

bool is_squarefree(const Integer& n) {
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

}  // namespace

TEST_CASE("canonicalize examples") {
    auto a = canonicalize(SqrtRational::from_canonical(Rational(2, 3), Rational(18)));
    CHECK(a.coeff() == 2);
    CHECK(a.radicand() == 2);

    auto b = canonicalize(SqrtRational::from_canonical(Rational(0), Rational(7)));
    CHECK(b.coeff() == 0);
    CHECK(b.radicand() == 1);

    auto c = canonicalize(SqrtRational::from_canonical(Rational(-1, 2), Rational(9)));
    CHECK(c.coeff() == Rational(-3, 2));
    CHECK(c.radicand() == 1);

    CHECK_THROWS_AS(SqrtRational(Rational(1), Rational(-2)), DomainError);
}

TEST_CASE("canonical radicand is squarefree and coprime") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(1, 200000);
    for (int i = 0; i < 300; ++i) {
        SqrtRational v(Rational(d(rng), d(rng)), Rational(d(rng), d(rng)));
        CHECK(is_squarefree(v.radicand().get_num()));
        CHECK(is_squarefree(v.radicand().get_den()));
        Integer g;
        mpz_gcd(g.get_mpz_t(), v.radicand().get_num().get_mpz_t(), v.radicand().get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(canonicalize(v) == v);
    }
}

TEST_CASE("sr_mul examples") {
    CHECK(sr_mul(sr(1, 1, 2), sr(1, 1, 2)) == sr(2, 1, 1));
    CHECK(sr_mul(sr(1, 2, 3), sr(2, 1, 3)) == sr(3, 1, 1));
    CHECK(sr_mul(sr(1, 1, 2), sr(1, 1, 3)) == sr(1, 1, 6));
    CHECK(sr_mul(sr(1, 1, 2, 3), sr(1, 1, 3, 2)) == sr(1, 1, 1));
    CHECK(sr(1, 1, 6) / sr(1, 1, 2) == sr(1, 1, 3));
    CHECK(sr(3, 1, 1) / sr(1, 1, 3) == sr(1, 1, 3));
}

TEST_CASE("sr_mul agrees with floating point") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(1, 999999);
    std::bernoulli_distribution neg(0.5);
    for (int i = 0; i < 500; ++i) {
        SqrtRational a(Rational(neg(rng) ? -d(rng) : d(rng), d(rng)), Rational(d(rng), d(rng)));
        SqrtRational b(Rational(d(rng), d(rng)), Rational(d(rng), d(rng)));
        double want = a.to_double() * b.to_double();
        double got = sr_mul(a, b).to_double();
        CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
        double q = (a / b).to_double();
        CHECK(std::abs(q - a.to_double() / b.to_double()) <= 1e-12 * std::abs(q));
    }
}

TEST_CASE("sr_add_same_radicand") {
    CHECK(sr_add_same_radicand(sr(1, 1, 6), sr(1, 1, 6)) == sr(2, 1, 6));
    CHECK(sr_add_same_radicand(sr(1, 1, 2), sr(-1, 1, 2)).is_zero());
    CHECK_THROWS_AS(sr_add_same_radicand(sr(1, 1, 2), sr(1, 1, 3)), UnsupportedError);

    SqrtAccumulator acc;
    acc.add(sr(1, 2, 3));
    acc.add(sr(1, 1, 5));
    acc.add(sr(-1, 1, 5));
    acc.add(sr(1, 2, 12));
    CHECK(acc.result() == sr(3, 2, 3));
    acc.add(sr(1, 1, 7));
    CHECK_THROWS_AS(acc.result(), UnsupportedError);
}

TEST_CASE("text round trip") {
    CHECK(sr(1, 1, 1, 6).str() == "1/1*sqrt(1/6)");
    CHECK(sr(2, 3, 1).str() == "2/3");
    CHECK(SqrtRational().str() == "0/1");
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(1, 100000);
    for (int i = 0; i < 200; ++i) {
        SqrtRational v(Rational(d(rng) - 50000, d(rng)), Rational(d(rng), d(rng)));
        CHECK(SqrtRational::parse(v.str()) == v);
    }
    CHECK(SqrtRational::parse("-4/2*sqrt(8)") == sr(-4, 1, 2));
    CHECK_THROWS_AS(SqrtRational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(SqrtRational::parse("sqrt(2)"), DomainError);
}

TEST_CASE("float conversion") {
    CHECK(sr(1, 1, 1, 6).to_double() == doctest::Approx(0.408248290463863).epsilon(1e-15));
    CHECK(sr(-3, 7, 1).to_double() == -3.0 / 7.0);
    CHECK(sr(1, 3, 1).to_double() == 1.0 / 3.0);
    // huge numerator and denominator that overflow a double on their own
    Integer big = factorial(300);
    SqrtRational h(Rational(big, big + 1), Rational(1));
    CHECK(h.to_double() == doctest::Approx(1.0).epsilon(1e-15));

    // monotone in the coefficient for a fixed radicand
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(1, 1000000);
    for (int i = 0; i < 300; ++i) {
        Rational r(d(rng), d(rng));
        SqrtRational base = SqrtRational::sqrt_of(r);
        Rational c1(d(rng) - 500000, d(rng)), c2(d(rng) - 500000, d(rng));
        if (c1 > c2) std::swap(c1, c2);
        CHECK((base * c1).to_double() <= (base * c2).to_double());
    }
}

TEST_CASE("value ordering") {
    CHECK(sr(1, 1, 2) < sr(3, 2, 1));
    CHECK(sr(-3, 2, 1) < sr(-1, 1, 2));
    CHECK_FALSE(sr(1, 1, 2) < sr(1, 1, 2));
}

TEST_CASE("factorization handles large cofactors") {
    Integer p("1000000007"), q("998244353");
    auto f = factorize(p * p * q * 12);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::make_pair(Integer(2), 2u));
    CHECK(f[1] == std::make_pair(Integer(3), 1u));
    CHECK(f[2] == std::make_pair(q, 1u));
    CHECK(f[3] == std::make_pair(p, 2u));
    auto s = squarefree_split(p * p * q * 12);
    CHECK(s.squarefree == 3 * q);
    CHECK(s.root == 2 * p);

    Integer r("1000000000039"), t("1000000000061");
    auto g = factorize(r * t);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == r);
    CHECK(g[1].first == t);
}

TEST_CASE("factorial ratios reduce exactly") {
    for (long a = 0; a <= 12; ++a)
        for (long b = 0; b <= 12; ++b) {
            SqrtRational v = sqrt_factorial_ratio({a, 3}, {b});
            CHECK(v == SqrtRational::sqrt_of(Rational(factorial(a) * 6, factorial(b))));
        }
    SqrtRational big = sqrt_factorial_ratio({400}, {398});
    CHECK(big == SqrtRational::sqrt_of(Rational(400 * 399)));
}

TEST_CASE("triangle_delta") {
    CHECK(triangle_delta(HalfInt(0), HalfInt(0), HalfInt(0)) == SqrtRational(1));
    CHECK(triangle_delta(HalfInt(2), HalfInt(2), HalfInt(2)) == SqrtRational::sqrt_of(Rational(1, 24)));
    CHECK_THROWS_AS(triangle_delta(HalfInt(4), HalfInt(2), HalfInt(0)), TriangleError);
    CHECK_THROWS_AS(triangle_delta(HalfInt(1), HalfInt(1), HalfInt(1)), DomainError);

    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            for (int c = 0; c <= 8; ++c) {
                if (!triangle_ok(HalfInt(a), HalfInt(b), HalfInt(c))) continue;
                std::array<int, 3> v{a, b, c};
                auto ref = triangle_delta(HalfInt(a), HalfInt(b), HalfInt(c));
                CHECK(ref.sign() > 0);
                std::sort(v.begin(), v.end());
                do {
                    CHECK(triangle_delta(HalfInt(v[0]), HalfInt(v[1]), HalfInt(v[2])) == ref);
                } while (std::next_permutation(v.begin(), v.end()));
            }
}

TEST_CASE("half integers") {
    HalfInt h(3);
    CHECK(h.str() == "3/2");
    CHECK(HalfInt::from_int(2).str() == "2");
    CHECK((h + HalfInt(1)).is_integer());
    CHECK(phase_from_doubled(2) == -1);
    CHECK(phase_from_doubled(-4) == 1);
    CHECK(phase_from_doubled(-2) == -1);
    CHECK_THROWS_AS(phase_from_doubled(1), DomainError);
}

TEST_CASE("factorial cache grows under concurrent readers") {
    auto& cache = FactorialCache::instance();
    CHECK(cache.capacity() >= 512);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    std::vector<std::thread> threads;
    std::atomic<int> bad{0};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &bad] {
            for (long k = 600 + t; k < 3000; k += 37) {
                if (factorial(k) != factorial(k - 1) * k) ++bad;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(bad.load() == 0);
    CHECK(cache.capacity() >= 2900);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}
