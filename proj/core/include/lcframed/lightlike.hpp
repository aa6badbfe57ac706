#pragma once

// Lightlike-point analysis: the null direction of the degenerate metric, the
// singularity-kind classification of lightlike points, numerical tracing of
// the lightlike locus {lambda~ = 0}, and curvature boundedness probes along
// paths approaching that locus.

#include <optional>
#include <string>
#include <vector>

#include "lcframed/expr.hpp"
#include "lcframed/framed_surface.hpp"

namespace lcf {

// Direction (eta_u, eta_v) = (c2, -c1) in the (du, dv) basis.  At a lightlike
// point dX applied to it is a null vector; `residual` is the value of the
// first fundamental form on it, which the constructor checks against zero.
struct NullVector {
    double eta_u = 0.0;
    double eta_v = 0.0;
    double residual = 0.0;
};

NullVector null_vector(const InvariantField& f, double tol_base = kDefaultZeroTol);
NullVector null_vector(const SurfaceDef& s, double u0, double v0,
                       double tol_base = kDefaultZeroTol);

enum class LightlikeTag {
    cuspidal_edge,
    swallowtail,
    cuspidal_butterfly,
    cuspidal_lips,
    cuspidal_beaks,
    undetermined,
};

std::string_view to_string(LightlikeTag t);

// Classification result.  All reported quantities live in the normalized
// frame in which a1 is the invariant vanishing at the point; `swapped` records
// whether the roles of the two null frame fields were exchanged to get there.
struct LightlikeKind {
    LightlikeTag tag = LightlikeTag::undetermined;
    bool degenerate = false; // a1, a1_u, a1_v all ~ 0 at the point
    bool swapped = false;

    // Criterion quantities, invariant form:
    double bracket_first = 0.0;  // a1_v c1 - a1_u c2
    double bracket_second = 0.0; // second-order expression (swallowtail test)
    double bracket_third = 0.0;  // third-order expression (butterfly test)
    double hessian_disc = 0.0;   // a1_uu a1_vv - a1_uv^2   (degenerate branch)
    double beaks_second = 0.0;   // 2 a1_uv c1 c2 - a1_uu c2^2 - a1_vv c1^2

    // Directional derivatives of lambda~ along eta = c2 du - c1 dv (variable
    // coefficients), and the Hessian determinant of lambda~; these witness the
    // same conditions through the degeneracy function itself.
    double eta_lambda = 0.0;
    double eta2_lambda = 0.0;
    double eta3_lambda = 0.0;
    double hessian_det = 0.0;

    double tol = 0.0; // zero-threshold the decisions were made against
};

LightlikeKind classify_lightlike(const InvariantField& f, double tol_base = kDefaultZeroTol);
LightlikeKind classify_lightlike(const SurfaceDef& s, double u0, double v0,
                                 double tol_base = kDefaultZeroTol);

// Numerical trace of the implicit curve lambda~ = 0 from a seed near it.
// Predictor: unit tangent (-lambda~_v, lambda~_u)/|grad|, kept orientation-
// consistent step to step.  Corrector: bisection on lambda~ along the gradient
// direction to |lambda~| <= 1e-10.  Each emitted point has |lambda~| <= 1e-9.
// Stops at the domain boundary, after max_steps, or on loop closure (returning
// within step/2 of the start after at least 3 steps).
struct LocusPoint {
    double u = 0.0, v = 0.0;
    double lambda_tilde = 0.0;
};

struct LocusTrace {
    std::vector<LocusPoint> points;
    bool closed = false;
    bool hit_boundary = false;
    std::string stop_reason; // "closed", "boundary", "max_steps", "corrector_failed"
};

LocusTrace trace_lightlike_locus(const SurfaceDef& s, double u0, double v0, double step,
                                 int max_steps, double tol_base = kDefaultZeroTol);

// Curvature boundedness probe: sample lambda~, K^, H^, K, H along the path
// (u(t), v(t)) on the geometric sequence t_k = t_target + (t_start - t_target)
// * ratio^k and classify each quantity's limit behavior.
enum class ProbeVerdict { converges_to_zero, converges_to_nonzero, diverges, inconclusive };

std::string_view to_string(ProbeVerdict v);

struct ProbeSample {
    double t = 0.0;
    double u = 0.0, v = 0.0;
    double lambda_tilde = 0.0;
    double K_hat = 0.0, H_hat = 0.0;
    // Unclamped classical values K^ / lambda~^2 and H^ / |lambda~|^(3/2);
    // absent only where lambda~ is exactly zero in floating point.
    std::optional<double> K, H;
};

struct SeriesVerdict {
    ProbeVerdict verdict = ProbeVerdict::inconclusive;
    double last = 0.0; // final sample: the estimated limit for converging series
};

struct ProbeReport {
    double t_target = 0.0, t_start = 0.0, ratio = 0.5;
    std::vector<ProbeSample> samples;
    SeriesVerdict lambda_tilde, K_hat, H_hat, K, H;
};

// Path components use the expression variable `u` as the parameter t.
ProbeReport curvature_limit_probe(const SurfaceDef& s, const ExprAst& path_u,
                                  const ExprAst& path_v, double t_target, double t_start,
                                  int samples = 28, double ratio = 0.5,
                                  double tol_base = kDefaultZeroTol);

} // namespace lcf
