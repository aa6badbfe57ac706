#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

// Vectors of the 3-dimensional Lorentz-Minkowski space: the pairing is
//     <x, y> = -x1*y1 + x2*y2 + x3*y3,
// and the wedge is the formal determinant with basis row (-e1, e2, e3), so
// that <z, x ^ y> = det(z, x, y) row-wise.

namespace lcf {

struct MVec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

constexpr MVec3 operator+(MVec3 a, MVec3 b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
constexpr MVec3 operator-(MVec3 a, MVec3 b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
constexpr MVec3 operator-(MVec3 a) { return {-a.x1, -a.x2, -a.x3}; }
constexpr MVec3 operator*(double s, MVec3 a) { return {s * a.x1, s * a.x2, s * a.x3}; }
constexpr MVec3 operator*(MVec3 a, double s) { return s * a; }

constexpr double pseudo_inner(MVec3 a, MVec3 b) {
    return -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

constexpr MVec3 wedge(MVec3 a, MVec3 b) {
    return {-(a.x2 * b.x3 - a.x3 * b.x2),
            -(a.x1 * b.x3 - a.x3 * b.x1),
            a.x1 * b.x2 - a.x2 * b.x1};
}

inline double minkowski_norm(MVec3 a) { return std::sqrt(std::fabs(pseudo_inner(a, a))); }

constexpr double sup_norm(MVec3 a) {
    double m = a.x1 < 0 ? -a.x1 : a.x1;
    double m2 = a.x2 < 0 ? -a.x2 : a.x2;
    double m3 = a.x3 < 0 ? -a.x3 : a.x3;
    if (m2 > m) m = m2;
    if (m3 > m) m = m3;
    return m;
}

enum class CausalCharacter { spacelike, timelike, lightlike, zero };

constexpr std::string_view to_string(CausalCharacter c) {
    switch (c) {
    case CausalCharacter::spacelike: return "spacelike";
    case CausalCharacter::timelike: return "timelike";
    case CausalCharacter::lightlike: return "lightlike";
    case CausalCharacter::zero: return "zero";
    }
    return "?";
}

// The pairing scales quadratically with the components, so the comparison
// tolerance does too (floored at 1 for subnormal-scale inputs).
inline double default_causal_tol(MVec3 x) {
    double s = sup_norm(x);
    return 1e-9 * std::max(1.0, s * s);
}

inline CausalCharacter causal_character(MVec3 x, double tol) {
    double q = pseudo_inner(x, x);
    if (q > tol) return CausalCharacter::spacelike;
    if (q < -tol) return CausalCharacter::timelike;
    if (sup_norm(x) > tol) return CausalCharacter::lightlike;
    return CausalCharacter::zero;
}

inline CausalCharacter causal_character(MVec3 x) { return causal_character(x, default_causal_tol(x)); }

// Membership predicates for the standard pseudo-spheres.
inline bool in_hyperbolic2(MVec3 x, double tol = 1e-9) {
    return std::fabs(pseudo_inner(x, x) + 1.0) <= tol;
}
inline bool in_de_sitter2(MVec3 x, double tol = 1e-9) {
    return std::fabs(pseudo_inner(x, x) - 1.0) <= tol;
}
inline bool in_lightcone(MVec3 x, double tol = 1e-9) {
    return std::fabs(pseudo_inner(x, x)) <= tol && sup_norm(x) > tol;
}

// A pair of future/past-type null frame vectors normalized to <v, w> = -2.
struct Delta4Pair {
    MVec3 v;
    MVec3 w;
};

// Residuals of the three defining constraints: <v,v>, <w,w>, <v,w> + 2.
constexpr std::array<double, 3> delta4_residuals(Delta4Pair p) {
    return {pseudo_inner(p.v, p.v), pseudo_inner(p.w, p.w), pseudo_inner(p.v, p.w) + 2.0};
}

inline bool in_delta4(Delta4Pair p, double tol = 1e-8) {
    auto r = delta4_residuals(p);
    return std::fabs(r[0]) <= tol && std::fabs(r[1]) <= tol && std::fabs(r[2]) <= tol;
}

} // namespace lcf
