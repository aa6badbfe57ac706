#pragma once

#include <array>
#include <string>
#include <vector>

#include "lcframed/expr.hpp"
#include "lcframed/minkowski.hpp"

// Curves gamma(t) carried by a pair of null frame vectors (l+, l-) with
// <l+, l-> = -2 whose span contains the velocity: gamma' = alpha l+ + beta l-.
// The associated spacelike normal is n = -(1/2) l+ ^ l-.  The five scalar
// invariants are
//   kappa1 = -(1/2)<l+', l->   kappa2 = -(1/2)<n', l->   kappa3 = -(1/2)<n', l+>
//   alpha  = -(1/2)<gamma', l->   beta = -(1/2)<gamma', l+>
// and the frame obeys  l+' = kappa1 l+ + 2 kappa3 n,  l-' = -kappa1 l- + 2 kappa2 n,
// n' = kappa2 l+ + kappa3 l-.
//
// Curve components are expressions in the single parameter written as `u`
// (the same grammar as surfaces; `v` is unused).

namespace lcf {

// Pre-parse form: nine component expressions of t as text.
struct CurveInput {
    std::string name;
    std::array<std::string, 3> gamma, ell_plus, ell_minus;
    double t_min = 0.0, t_max = 1.0;
};

struct FramedCurve {
    std::string name;
    std::array<ExprAst, 3> gamma, ell_plus, ell_minus;
    double t_min = 0.0, t_max = 1.0;
};

struct CurveInvariants {
    double kappa1 = 0.0, kappa2 = 0.0, kappa3 = 0.0;
    double alpha = 0.0, beta = 0.0;
};

// One grid sample of the rescaled ("adapted") frame: c(t) = exp of the
// running integral of kappa1, l+_bar = l+ / c, l-_bar = c l-.  In this frame
// the recomputed kappa1 vanishes.
struct AdaptedFrameSample {
    double t = 0.0;
    double c = 1.0;
    MVec3 ell_plus_bar, ell_minus_bar;
};

// Parses the nine components and validates, on a probe grid, that (l+, l-)
// stays on the null-pair manifold and that gamma' has no normal component
// (|<gamma', n>| small) -- i.e. the input really is framed by (l+, l-).
FramedCurve build_curve(const CurveInput& input);

// The five invariants at t, by exact jet differentiation.  Throws
// FrameViolation if the null-pair residuals exceed 1e-6 at t.
CurveInvariants curve_invariants(const FramedCurve& c, double t);

// gamma', l+, l-, n as values at t (for reconstruction-style checks).
struct CurveFrameSample {
    MVec3 gamma, gamma_dot, ell_plus, ell_minus, n;
};
CurveFrameSample curve_frame_at(const FramedCurve& c, double t);

// Causal character of the curve point from the invariants:
// spacelike iff alpha*beta < -tol, timelike iff alpha*beta > tol, lightlike
// iff |alpha*beta| <= tol with alpha^2+beta^2 > tol, zero otherwise
// (the curve is singular there).  Matches <gamma',gamma'> = -4 alpha beta.
CausalCharacter curve_causal_character(const CurveInvariants& inv, double tol = 1e-9);

// Rescales the frame so kappa1 vanishes: c(t) = exp(integral of kappa1 from
// t_grid.front()), integrated per interval by Simpson's rule (endpoint +
// midpoint evaluations).  The grid must be strictly increasing with at least
// 3 nodes and lie inside the curve domain; otherwise QuadratureError.
std::vector<AdaptedFrameSample> adapted_rescale(const FramedCurve& c,
                                                const std::vector<double>& t_grid);

} // namespace lcf
