#include "lcframed/framed_curve.hpp"

#include <cmath>

#include "lcframed/errors.hpp"
#include "lcframed/jet.hpp"

namespace lcf {

namespace {

JVec3<3> eval_curve_vec(const std::array<ExprAst, 3>& comp, double t) {
    // Curves use `u` as the parameter; v is pinned to 0 and its slots stay dead.
    return {eval_jet(comp[0], t, 0.0), eval_jet(comp[1], t, 0.0), eval_jet(comp[2], t, 0.0)};
}

struct CurveJets {
    JVec3<3> gamma, lp, lm;
    JVec3<2> n; // n = -(1/2) l+ ^ l-, one order lower after the product is differentiated
};

CurveJets jets_at(const FramedCurve& c, double t) {
    CurveJets j;
    j.gamma = eval_curve_vec(c.gamma, t);
    j.lp = eval_curve_vec(c.ell_plus, t);
    j.lm = eval_curve_vec(c.ell_minus, t);
    j.n = (-0.5 * wedge(j.lp, j.lm)).truncate<2>();
    return j;
}

} // namespace

FramedCurve build_curve(const CurveInput& input) {
    FramedCurve c;
    c.name = input.name;
    c.t_min = input.t_min;
    c.t_max = input.t_max;
    for (int k = 0; k < 3; ++k) {
        c.gamma[k] = parse_expr(input.gamma[k]);
        c.ell_plus[k] = parse_expr(input.ell_plus[k]);
        c.ell_minus[k] = parse_expr(input.ell_minus[k]);
    }
    if (!(input.t_min < input.t_max))
        throw ValidationError("curve '" + c.name + "': empty parameter interval");

    for (int i = 0; i < 9; ++i) {
        const double t = c.t_min + (2.0 * i + 1.0) / 18.0 * (c.t_max - c.t_min);
        const CurveJets j = jets_at(c, t);
        const auto res = delta4_residuals({j.lp.values(), j.lm.values()});
        const char* what = nullptr;
        if (std::fabs(res[0]) > 1e-8) what = "<l+,l+> != 0";
        else if (std::fabs(res[1]) > 1e-8) what = "<l-,l-> != 0";
        else if (std::fabs(res[2]) > 1e-8) what = "<l+,l-> != -2";
        if (what)
            throw ValidationError("curve '" + c.name + "': frame constraint " + what +
                                  " violated at t = " + std::to_string(t));
        const MVec3 gdot = j.gamma.du().values();
        const double normal_part = pseudo_inner(gdot, j.n.values());
        if (std::fabs(normal_part) > 1e-8 * (1.0 + sup_norm(gdot)))
            throw ValidationError("curve '" + c.name +
                                  "': velocity leaves the null-frame span (<gamma',n> = " +
                                  std::to_string(normal_part) + ") at t = " + std::to_string(t));
    }
    return c;
}

CurveInvariants curve_invariants(const FramedCurve& c, double t) {
    const CurveJets j = jets_at(c, t);
    const auto res = delta4_residuals({j.lp.values(), j.lm.values()});
    if (std::fabs(res[0]) > 1e-6 || std::fabs(res[1]) > 1e-6 || std::fabs(res[2]) > 1e-6)
        throw FrameViolation("curve '" + c.name + "': null-pair residuals (" +
                             std::to_string(res[0]) + ", " + std::to_string(res[1]) + ", " +
                             std::to_string(res[2]) + ") exceed 1e-6 at t = " + std::to_string(t));

    const MVec3 gdot = j.gamma.du().values();
    const MVec3 lpdot = j.lp.du().values();
    const MVec3 ndot = j.n.du().values();
    const MVec3 lp = j.lp.values(), lm = j.lm.values();

    CurveInvariants inv;
    inv.kappa1 = -0.5 * pseudo_inner(lpdot, lm);
    inv.kappa2 = -0.5 * pseudo_inner(ndot, lm);
    inv.kappa3 = -0.5 * pseudo_inner(ndot, lp);
    inv.alpha = -0.5 * pseudo_inner(gdot, lm);
    inv.beta = -0.5 * pseudo_inner(gdot, lp);
    return inv;
}

CurveFrameSample curve_frame_at(const FramedCurve& c, double t) {
    const CurveJets j = jets_at(c, t);
    CurveFrameSample s;
    s.gamma = j.gamma.values();
    s.gamma_dot = j.gamma.du().values();
    s.ell_plus = j.lp.values();
    s.ell_minus = j.lm.values();
    s.n = j.n.values();
    return s;
}

CausalCharacter curve_causal_character(const CurveInvariants& inv, double tol) {
    const double ab = inv.alpha * inv.beta;
    if (ab < -tol) return CausalCharacter::spacelike;
    if (ab > tol) return CausalCharacter::timelike;
    if (inv.alpha * inv.alpha + inv.beta * inv.beta > tol) return CausalCharacter::lightlike;
    return CausalCharacter::zero;
}

std::vector<AdaptedFrameSample> adapted_rescale(const FramedCurve& c,
                                                const std::vector<double>& t_grid) {
    if (t_grid.size() < 3)
        throw QuadratureError("adapted_rescale: need at least 3 grid nodes, got " +
                              std::to_string(t_grid.size()));
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
        if (!(t_grid[i] < t_grid[i + 1]))
            throw QuadratureError("adapted_rescale: grid must be strictly increasing (node " +
                                  std::to_string(i + 1) + ")");
    if (t_grid.front() < c.t_min || t_grid.back() > c.t_max)
        throw QuadratureError("adapted_rescale: grid leaves the curve domain");

    const auto k1 = [&](double t) { return curve_invariants(c, t).kappa1; };

    std::vector<AdaptedFrameSample> out(t_grid.size());
    double integral = 0.0;
    double k1_left = k1(t_grid[0]);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (i > 0) {
            // Simpson on [t_{i-1}, t_i] with a midpoint evaluation.
            const double a = t_grid[i - 1], b = t_grid[i];
            const double k1_mid = k1(0.5 * (a + b));
            const double k1_right = k1(b);
            integral += (b - a) / 6.0 * (k1_left + 4.0 * k1_mid + k1_right);
            k1_left = k1_right;
        }
        AdaptedFrameSample& s = out[i];
        s.t = t_grid[i];
        s.c = std::exp(integral);
        const CurveFrameSample fr = curve_frame_at(c, s.t);
        s.ell_plus_bar = (1.0 / s.c) * fr.ell_plus;
        s.ell_minus_bar = s.c * fr.ell_minus;
    }
    return out;
}

} // namespace lcf
