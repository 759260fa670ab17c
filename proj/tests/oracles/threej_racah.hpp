#pragma once

// Racah's closed form for the Clebsch-Gordan coefficient with the
// (J+j2+m1-k)!(j1-m1+k)! numerator, turned into a 3j.  Shares nothing with the
// library's summation besides factorials.

#include <gfkit/arith.hpp>

#include <algorithm>
#include <cstdlib>

namespace oracle {

inline gfkit::SqrtRational threej_racah(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    using gfkit::Integer;
    using gfkit::Rational;
    if (tm1 + tm2 + tm3 != 0) return {};
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return {};
    if ((tj1 + tj2 + tj3) % 2 || tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2) return {};
    auto f = [](long n) -> Integer { return gfkit::factorial(n); };
    // CG <j1 m1 j2 m2 | J M> with M = -m3, all doubled integers halved where integral
    const int tJ = tj3, tM = -tm3;
    const long a = (tJ + tj1 - tj2) / 2, b = (tJ - tj1 + tj2) / 2, c = (tj1 + tj2 - tJ) / 2;
    const long top = (tj1 + tj2 + tJ) / 2 + 1;
    const long Jp = (tJ + tM) / 2, Jm = (tJ - tM) / 2;
    const long j1m = (tj1 - tm1) / 2, j1p = (tj1 + tm1) / 2, j2m = (tj2 - tm2) / 2, j2p = (tj2 + tm2) / 2;
    // (2J+1) cancels against the 3j normalisation
    Rational radicand(f(a) * f(b) * f(c) * f(Jp) * f(Jm), f(top) * f(j1m) * f(j1p) * f(j2m) * f(j2p));
    radicand.canonicalize();
    Rational sum = 0;
    for (long k = 0;; ++k) {
        long d1 = b - k, d2 = Jp - k, d3 = k + (tj1 - tj2 - tM) / 2;
        if (d1 < 0 || d2 < 0) break;
        if (d3 < 0) continue;
        Integer num = f((tJ + tj2 + tm1) / 2 - k) * f(j1m + k);
        Rational t(num, f(k) * f(d1) * f(d2) * f(d3));
        // (-1)^(k + j2 + m2)
        if ((k + j2p) % 2) t = -t;
        sum += t;
    }
    sum.canonicalize();
    // 3j = (-1)^(j1-j2-m3) / sqrt(2J+1) * CG
    int two_ph = tj1 - tj2 - tm3;
    if ((two_ph / 2) % 2) sum = -sum;
    return gfkit::SqrtRational(sum, radicand);
}

}  // namespace oracle
