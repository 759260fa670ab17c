#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "gfkit/arith.hpp"

namespace gfkit {

inline constexpr int kMaxPolyVars = 16;
using Exponents = std::array<uint8_t, kMaxPolyVars>;

// Sparse polynomial in up to 16 commuting variables.  Terms are kept in a
// std::map so iteration order (and therefore any output) is deterministic.
template <class C>
class Poly {
public:
    using Terms = std::map<Exponents, C>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 0 || nvars > kMaxPolyVars) throw UnsupportedError("too many polynomial variables");
    }

    static Poly constant(int nvars, const C& c) {
        Poly p(nvars);
        if (c != C(0)) p.terms_[Exponents{}] = c;
        return p;
    }
    static Poly var(int nvars, int i, const C& c = C(1)) {
        Poly p(nvars);
        Exponents e{};
        e[i] = 1;
        if (c != C(0)) p.terms_[e] = c;
        return p;
    }
    static Poly monomial(int nvars, const Exponents& e, const C& c) {
        Poly p(nvars);
        if (c != C(0)) p.terms_[e] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Exponents& e, const C& c) {
        if (c == C(0)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const C& s) {
        if (s == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const C& s) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= C(-1); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(std::max(a.nvars_, b.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < kMaxPolyVars; ++i) {
                    int v = ea[i] + eb[i];
                    if (v > 255) throw UnsupportedError("polynomial degree overflow");
                    e[i] = static_cast<uint8_t>(v);
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Poly pow(unsigned n) const {
        Poly r = constant(nvars_, C(1));
        Poly b = *this;
        while (n) {
            if (n & 1U) r = r * b;
            n >>= 1U;
            if (n) b = b * b;
        }
        return r;
    }

    Poly derivative(int i) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents f = e;
            f[i] -= 1;
            r.add_term(f, c * C(e[i]));
        }
        return r;
    }

    // Replace variable i by a polynomial.
    Poly substitute(int i, const Poly& value) const {
        Poly r(nvars_);
        std::map<int, Poly> powers;
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            int k = rest[i];
            rest[i] = 0;
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
            r += monomial(nvars_, rest, c) * it->second;
        }
        return r;
    }

    template <class T>
    T evaluate(const T* x) const {
        T sum = T(0);
        for (const auto& [e, c] : terms_) {
            T term = convert<T>(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) term *= x[i];
            sum += term;
        }
        return sum;
    }

private:
    template <class T>
    static T convert(const C& c) {
        if constexpr (std::is_same_v<C, Rational>)
            return T(c.get_d());
        else
            return T(c);
    }

    int nvars_ = 0;
    Terms terms_;
};

using RatPoly = Poly<Rational>;

// Fock-Bargmann inner product: <z^a | z^b> = delta_ab prod a_i!.
inline Rational fock_inner(const RatPoly& a, const RatPoly& b) {
    Rational s = 0;
    const RatPoly& small = a.size() <= b.size() ? a : b;
    const RatPoly& big = a.size() <= b.size() ? b : a;
    for (const auto& [e, c] : small.terms()) {
        auto it = big.terms().find(e);
        if (it == big.terms().end()) continue;
        Integer w = 1;
        for (uint8_t v : e) w *= factorial(v);
        s += c * it->second * w;
    }
    s.canonicalize();
    return s;
}

}  // namespace gfkit
