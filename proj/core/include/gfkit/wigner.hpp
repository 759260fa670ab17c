#pragma once

#include <array>
#include <vector>

#include "gfkit/arith.hpp"

namespace gfkit {

struct ThreeJLabel {
    std::array<int, 3> two_j{};
    std::array<int, 3> two_m{};

    friend auto operator<=>(const ThreeJLabel&, const ThreeJLabel&) = default;
};

// {j1 j2 j3; l1 l2 l3}, stored as two_j = {j1, j2, j3, l1, l2, l3}
struct SixJLabel {
    std::array<int, 6> two_j{};
};

struct NineJLabel {
    std::array<std::array<int, 3>, 3> two_j{};
};

// Throws DomainError if the m's do not match the j parities or a j is negative.
void validate(const ThreeJLabel& label);

SqrtRational wigner_3j(const ThreeJLabel& label);
SqrtRational wigner_3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3);

// <j1 m1, j2 m2 | j3 m3>
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3);

enum class SixJMConvention { FreeM125, FreeM346 };

// Contraction of four 3j symbols over the magnetic quantum numbers.
SqrtRational wigner_6j_oracle(const SixJLabel& label, SixJMConvention conv = SixJMConvention::FreeM125);

struct SixJGfOptions {
    // Use b3 exactly as printed (tau03 tau30 tau13 tau31) instead of tau03 tau30 tau12 tau21.
    bool printed_b3 = false;
};

// Exponent matrix k[j][i] of tau_{ji} for the target monomial; diagonal unused.
std::array<std::array<int, 4>, 4> sixj_gf_exponents(const SixJLabel& label);

// Coefficient of the target monomial in g(tau)^-2.
Integer sixj_gf_coefficient(const std::array<std::array<int, 4>, 4>& k, const SixJGfOptions& opt = {});

SqrtRational wigner_6j_gf(const SixJLabel& label, const SixJGfOptions& opt = {});

SqrtRational wigner_9j(const NineJLabel& label);

struct ReggeMember {
    ThreeJLabel label;
    int phase = 1;  // 3j(label) = phase * 3j(seed)
};

// Orbit of the label under the 72-element symmetry group of the 3j symbol.
std::vector<ReggeMember> regge_orbit(const ThreeJLabel& label);

// Regge square [[-j1+j2+j3, j1-j2+j3, j1+j2-j3], [j1-m1, ...], [j1+m1, ...]].
std::array<std::array<int, 3>, 3> regge_square(const ThreeJLabel& label);
ThreeJLabel label_from_square(const std::array<std::array<int, 3>, 3>& sq);

// Integral of Y_{l1 m1} Y_{l2 m2} Y_{l3 m3} over the sphere, as
// exact_part / sqrt(4 pi).
SqrtRational gaunt_exact_part(int l1, int m1, int l2, int m2, int l3, int m3);
double gaunt(int l1, int m1, int l2, int m2, int l3, int m3);

}  // namespace gfkit
