#pragma once

#include <array>
#include <string>

#include "lcframed/expr.hpp"
#include "lcframed/jet.hpp"
#include "lcframed/minkowski.hpp"

// Surfaces X(u,v) carried by a null frame pair (v, w) with <v,w> = -2 and
// the tangent normalization  <X_v, v> = <X_v, w> = 0, so that X_v is
// proportional to the unit spacelike normal m = -(1/2) v ^ w of the frame.
// Everything downstream (curvature, singularity classification, focal
// sheets) is computed from the twelve scalar invariants evaluated here.

namespace lcf {

inline constexpr double kDefaultZeroTol = 1e-9;

struct SurfaceDomain {
    double u_min = 0.0, u_max = 1.0;
    double v_min = 0.0, v_max = 1.0;
    bool contains(double u, double v) const {
        return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
    }
};

// Pre-parse form: nine component expressions as text.
struct SurfaceInput {
    std::string name;
    std::array<std::string, 3> X, v, w;
    SurfaceDomain domain;
};

// Parsed and validated surface definition.
struct SurfaceDef {
    std::string name;
    std::array<ExprAst, 3> X, v, w;
    SurfaceDomain domain;
};

// The twelve frame invariants as order-3 jets at one parameter point:
//   a1 = -(1/2)<X_u, w>   b1 = -(1/2)<X_u, v>   c1 = <X_u, m>
//   a2 = -(1/2)<X_v, w>   b2 = -(1/2)<X_v, v>   c2 = <X_v, m>
//   e1 = (1/2)<v, w_u>    f1 = (1/2)<w_u, m>    g1 = (1/2)<v_u, m>
//   e2 = (1/2)<v, w_v>    f2 = (1/2)<w_v, m>    g2 = (1/2)<v_v, m>
// The jets carry raw partials; a1/b1 are exact through total order 3 and
// the rest through at least order 2 (all slots are filled exactly).
struct InvariantField {
    double u = 0.0, v = 0.0;
    Jet2 a1, b1, c1, a2, b2, c2, e1, f1, g1, e2, f2, g2;
};

// Pointwise frame data (values only).
struct FrameVectors {
    MVec3 X, X_u, X_v, v, w, m;
};

enum class StratumTag { spacelike, timelike, lightlike, singular_S1, singular_S2, degenerate_other };

std::string_view to_string(StratumTag t);

struct PointStratum {
    StratumTag tag{};
    double lambda_tilde = 0.0;
};

// Parses the nine components and validates the frame constraints and the
// tangent normalization on a 5x5 probe grid (throws ValidationError with
// the failing point; parse failures propagate).
SurfaceDef build_surface(const SurfaceInput& input);

InvariantField invariants_at(const SurfaceDef& s, double u, double v);
FrameVectors frame_at(const SurfaceDef& s, double u, double v);

// lambda-tilde = -4 a1 b1, the degeneracy function of the induced metric,
// as a jet (exact through order 3).
Jet2 lambda_tilde_jet(const InvariantField& f);

// Residuals of the six compatibility conditions tying the (u- and v-)
// derivative invariants together; all six vanish on an honest surface.
std::array<double, 6> integrability_residuals(const InvariantField& f);
std::array<double, 6> integrability_residuals(const SurfaceDef& s, double u, double v);

// Residuals of the pointwise frame identities:
//   |v ^ m + v|_inf,  |w ^ m - w|_inf,  <m,m> - 1,  <n,n> + lambda-tilde
// with n = -a1 v + b1 w.
std::array<double, 4> frame_identity_residuals(const SurfaceDef& s, double u, double v);

// Scale-aware zero tolerance: tol_base * (1 + |a1| + |b1| + |c2|).
double surface_tol(const InvariantField& f, double tol_base = kDefaultZeroTol);

// Point classification by metric degeneracy and frame-singularity type.
// tol_base < 0 selects the default base (1e-9).
PointStratum stratify(const InvariantField& f, double tol_base = -1.0);
PointStratum stratify(const SurfaceDef& s, double u, double v, double tol_base = -1.0);

// The same field with the roles of the two null frame vectors exchanged
// (v <-> w).  Swaps a1/b1, negates c1, c2 and e1, e2, and exchanges
// f_i <-> -g_i.  Used to analyse points where b1, not a1, vanishes.
InvariantField swap_null_roles(const InvariantField& f);

} // namespace lcf
