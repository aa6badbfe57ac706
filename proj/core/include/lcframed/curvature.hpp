#pragma once

// Extended curvature of a lightcone framed surface.
//
// All second-order data is expressed through "hatted" quantities that stay
// finite across lightlike points, where the classical shape operator blows
// up.  With the invariant shorthand of framed_surface.hpp:
//
//   E~ = c1^2 - 4 a1 b1          (first fundamental form, scaled)
//   F~ = c1
//   G~ = 1
//   lambda~ = -4 a1 b1           (degeneracy function; 0 exactly at lightlike points)
//
//   L^ = 2 a1 (b1_u - b1 e1 + c1 g1) - 2 b1 (a1_u + a1 e1 + c1 f1)
//   M^ = 2 (a1 g1 - b1 f1)
//   N^ = 2 (a1 g2 - b1 f2)
//
// Unsigned focal-quadratic coefficients (roots mu of Q mu^2 + P mu + R = 0
// locate the focal sheets F = X - mu n^):
//
//   Q = L^ N^ - c2 M^^2
//   P = c2 L^ G~ - 2 c2 M^ F~ + N^ E~
//   R = c2 lambda~
//
// The extended curvatures carry the sign s = +1 if c2 >= 0, else -1:
//
//   K^ = s Q,         H^ = s P / 2
//
// and recover the classical curvatures on non-lightlike patches via
//
//   K = K^ / lambda~^2,     H = H^ / |lambda~|^(3/2).
//
// Extended principal curvatures solve  |c2| k^2 - 2 H^ k + lambda~ K^ = 0;
// at regular points the Weingarten eigenvalues are k_i / (lambda~ |lambda~|^(1/2)).

#include <array>
#include <optional>

#include "lcframed/framed_surface.hpp"
#include "lcframed/jet.hpp"
#include "lcframed/minkowski.hpp"

namespace lcf {

// Hatted second-order values computed from plain scalar ingredients.  Kept as
// a free function so focal-sheet code can feed it the induced (barred)
// invariants of a caustic sheet and get that sheet's curvature bundle.
struct HatValues {
    double E_t = 0, F_t = 0, G_t = 0; // E~, F~, G~
    double L_hat = 0, M_hat = 0, N_hat = 0;
    double lambda_tilde = 0;
    double Q = 0, P = 0, R = 0; // unsigned focal-quadratic coefficients
    int sign = 1;               // +1 iff c2 >= 0
    double K_hat = 0, H_hat = 0;
};

HatValues hat_values(double a1, double b1, double c1, double c2, double a1u, double b1u,
                     double e1, double f1, double g1, double f2, double g2);

// Same quantities as order-2 jets in (u, v); used to differentiate the focal
// radius mu implicitly.
struct HatJets {
    Jet<2> E_t, F_t, G_t;
    Jet<2> L_hat, M_hat, N_hat;
    Jet<2> lambda_tilde;
    Jet<2> Q, P, R;
};

HatJets hat_jets(const InvariantField& f);

// Point evaluation of the curvature data.
struct CurvatureBundle {
    double u = 0, v = 0;
    double E_t = 0, F_t = 0, G_t = 0;
    double L_hat = 0, M_hat = 0, N_hat = 0;
    double lambda_tilde = 0;
    int sign = 1; // +1 iff c2 >= 0
    double K_hat = 0, H_hat = 0;
    MVec3 n_hat{}; // -a1 v + b1 w (lightlike exactly where lambda~ = 0)
    // Classical curvatures; absent within tolerance of the lightlike locus.
    std::optional<double> K, H;
};

CurvatureBundle bundle_from_field(const InvariantField& f, const FrameVectors& fr,
                                  double tol_base = kDefaultZeroTol);
CurvatureBundle curvature_bundle(const SurfaceDef& s, double u, double v,
                                 double tol_base = kDefaultZeroTol);

// Extended principal curvatures.
//
// regular:        |c2| > tol.  kappa_hat_i = (H^ +- sqrt(H^2 - |c2| lambda~ K^)) / |c2|,
//                 with coordinate principal directions V_hat_i.
// singular_limit: |c2| <= tol.  The quadratic degenerates; the surviving root
//                 is kappa_hat_1 = K^ / (2 H^), carrying the weaker scaling
//                 |lambda~|^(1/2) * (classical principal curvature).  The second
//                 root and the direction fields are absent.
//
// Throws DegeneratePrincipal when the discriminant is genuinely negative
// (complex principal pair) or when the singular limit has H^ ~ 0.
enum class PrincipalBranch { regular, singular_limit };

struct PrincipalData {
    PrincipalBranch branch = PrincipalBranch::regular;
    double kappa_hat_1 = 0;
    std::optional<double> kappa_hat_2;
    // Principal directions as (du, dv) coefficient pairs, Euclidean-normalized.
    std::optional<std::array<double, 2>> V_hat_1, V_hat_2;
};

PrincipalData principal_from_field(const InvariantField& f, double tol_base = kDefaultZeroTol);
PrincipalData principal(const SurfaceDef& s, double u, double v,
                        double tol_base = kDefaultZeroTol);

// Eigenvalues of the classical Weingarten map, derived independently from the
// plain fundamental forms
//   E = E~,  F = c2 F~,  G = c2^2 G~,
//   L = L^ / sqrt|lambda~|,  M = c2 M^ / sqrt|lambda~|,  N = c2 N^ / sqrt|lambda~|
// via the trace/determinant of II * I^{-1}.  Cross-checks the extended
// principal curvatures at regular points.
// Throws LightlikePoint when |lambda~| <= tol and SingularPoint when |c2| <= tol.
std::array<double, 2> weingarten_eigenvalues(const InvariantField& f,
                                             double tol_base = kDefaultZeroTol);
std::array<double, 2> weingarten_eigenvalues(const SurfaceDef& s, double u, double v,
                                             double tol_base = kDefaultZeroTol);

} // namespace lcf
