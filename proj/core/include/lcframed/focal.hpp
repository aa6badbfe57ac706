#pragma once

// Focal sheets of a lightcone framed surface.
//
// The squared-distance family from a point q degenerates exactly when
// q = X - mu n^ with mu a root of the (unsigned) quadratic
//
//   Q mu^2 + P mu + R = 0,
//   Q = L^ N^ - c2 M^^2,   P = c2 L^ G~ - 2 c2 M^ F~ + N^ E~,   R = c2 lambda~,
//
// i.e. Q, P, R are the focal coefficients of curvature.hpp (by K^ = s Q,
// H^ = s P / 2 with s = sgn c2, the roots also solve K^ mu^2 + 2 H^ mu +
// s c2 lambda~ = 0).  Each root generates one focal sheet F = X - mu n^,
// which inherits induced invariants (the "barred" family below) against the
// original null frame.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lcframed/curvature.hpp"
#include "lcframed/framed_surface.hpp"
#include "lcframed/jet.hpp"
#include "lcframed/minkowski.hpp"

namespace lcf {

enum class BranchLabel { plus, minus, linear };

std::string_view to_string(BranchLabel b);

struct MuRoot {
    double mu = 0.0;
    BranchLabel label = BranchLabel::plus;
    // Order-2 jet of mu in (u, v) by implicit differentiation of the
    // defining quadratic; valid only when the root is simple enough that
    // |2 Q mu + P| stays above tolerance.
    Jet<2> jet{};
    bool jets_valid = false;
    bool near_double = false; // |mu_plus - mu_minus| < 1e-6 at this point
};

struct MuRoots {
    std::vector<MuRoot> roots; // 0, 1, or 2 entries
    bool degenerate = false;   // both Q and P below tolerance: every mu degenerates d^2
    double Q = 0.0, P = 0.0, R = 0.0;
};

MuRoots mu_roots(const InvariantField& f, double tol_base = kDefaultZeroTol);
MuRoots mu_roots(const SurfaceDef& s, double u0, double v0, double tol_base = kDefaultZeroTol);

// nullptr when the requested branch does not exist at this point.
const MuRoot* find_branch(const MuRoots& r, BranchLabel b);

// Induced invariants of the focal sheet F = X - mu n^ against the original
// frame, as order-1 jets (enough for the sheet's own curvature bundle):
//   a1_bar = a1 (1 + mu e1 + mu_u) + mu a1_u
//   b1_bar = b1 (1 + mu e1 - mu_u) - mu b1_u
//   c1_bar = c1 + 2 mu (a1 g1 - b1 f1)
//   a2_bar = a1 (mu e2 + mu_v) + mu a1_v
//   b2_bar = -b1 (-mu e2 + mu_v) - mu b1_v
//   c2_bar = c2 + 2 mu (a1 g2 - b1 f2)
struct BarredInvariants {
    Jet<1> a1, b1, c1, a2, b2, c2;
};

// Throws DoubleRootNoJet when the root carries no valid jet.
BarredInvariants barred_invariants(const InvariantField& f, const MuRoot& root);

struct FocalSheet {
    BranchLabel branch = BranchLabel::plus;
    double mu = 0.0;
    MVec3 F{}; // X - mu n^
    double a1_bar = 0, b1_bar = 0, c1_bar = 0, a2_bar = 0, b2_bar = 0, c2_bar = 0;
    // Curvature bundle of the sheet: same structural formulas with barred
    // a, b, c and the original connection invariants e, f, g; sign from c2_bar.
    CurvatureBundle bundle;
    // Max abs difference between the closed-form invariants above and the
    // finite-difference frame-decomposition oracle; absent when the oracle
    // could not run (e.g. branch collision inside the stencil).
    std::optional<double> oracle_residual;
};

MVec3 focal_point(const SurfaceDef& s, double u0, double v0, BranchLabel branch,
                  double tol_base = kDefaultZeroTol);
FocalSheet focal_invariants(const SurfaceDef& s, double u0, double v0, BranchLabel branch,
                            double tol_base = kDefaultZeroTol);
CurvatureBundle focal_curvatures(const SurfaceDef& s, double u0, double v0, BranchLabel branch,
                                 double tol_base = kDefaultZeroTol);

// Independent check: evaluates F on a 5-point stencil (step 1e-5), takes
// centered differences F_u, F_v, and decomposes them against the frame:
//   {-(1/2)<F_u,w>, -(1/2)<F_u,v>, <F_u,m>, -(1/2)<F_v,w>, -(1/2)<F_v,v>, <F_v,m>}.
// Throws StencilCrossesBranchCut when the mu branches reorder inside the stencil.
std::array<double, 6> focal_invariant_oracle(const SurfaceDef& s, double u0, double v0,
                                             BranchLabel branch,
                                             double tol_base = kDefaultZeroTol);

// Grid-wise branch continuation.  Sheet 0/1 are seeded from the plus/minus
// labels at the grid origin and continued by jet-based prediction plus joint
// nearest-value assignment, so each sheet stays a continuous function of the
// grid even where the raw plus/minus labels reorder.
struct BranchCell {
    std::array<bool, 2> available{false, false};
    std::array<double, 2> mu{0.0, 0.0};
    bool branch_cut = false; // roots closer than 1e-6 here
};

struct BranchGrid {
    std::vector<double> us, vs;
    std::vector<BranchCell> cells; // row-major: index = i * vs.size() + j
    const BranchCell& at(std::size_t i, std::size_t j) const { return cells[i * vs.size() + j]; }
};

BranchGrid continue_branches(const SurfaceDef& s, int nu, int nv,
                             const SurfaceDomain* range = nullptr,
                             double tol_base = kDefaultZeroTol);

// Structured verdicts for the base-vs-focal relationship statements:
//  (i)   degenerate lightlike point of X  =>  a1_bar = 0 on the mu->0 branch;
//  (ii)  a1 g2 = b1 f2                    =>  (c2 = 0 <=> c2_bar = 0);
//  (iii) lightlike, H^ = 0, mu->0 branch:     H^_bar = 0 <=> (mu_u - 1) mu_u a1_u = 0;
//  (iv)  lightlike, K^ = 0, mu->0 branch:     K^_bar = 0 <=> (1 - mu_u) mu_u a1_u f2 = 0.
enum class VerdictState { holds, fails, not_applicable };

std::string_view to_string(VerdictState s);

struct RelationVerdict {
    VerdictState state = VerdictState::not_applicable;
    double lhs = 0.0, rhs = 0.0;
};

struct RelationChecks {
    RelationVerdict degenerate_lightlike_focal;
    RelationVerdict c2_iff_c2_bar;
    RelationVerdict mean_transfer;
    RelationVerdict gauss_transfer;
};

RelationChecks relation_checks(const InvariantField& f, double tol_base = kDefaultZeroTol);
RelationChecks relation_checks(const SurfaceDef& s, double u0, double v0,
                               double tol_base = kDefaultZeroTol);

} // namespace lcf
