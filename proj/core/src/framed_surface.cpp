#include "lcframed/framed_surface.hpp"

#include <cmath>

#include "lcframed/errors.hpp"

namespace lcf {

namespace {

JVec3<4> eval_vec4(const std::array<ExprAst, 3>& comp, double u, double v) {
    return {eval_jet4(comp[0], u, v), eval_jet4(comp[1], u, v), eval_jet4(comp[2], u, v)};
}

} // namespace

std::string_view to_string(StratumTag t) {
    switch (t) {
    case StratumTag::spacelike: return "spacelike";
    case StratumTag::timelike: return "timelike";
    case StratumTag::lightlike: return "lightlike";
    case StratumTag::singular_S1: return "singular_S1";
    case StratumTag::singular_S2: return "singular_S2";
    case StratumTag::degenerate_other: return "degenerate_other";
    }
    return "?";
}

SurfaceDef build_surface(const SurfaceInput& input) {
    SurfaceDef s;
    s.name = input.name;
    s.domain = input.domain;
    for (int k = 0; k < 3; ++k) {
        s.X[k] = parse_expr(input.X[k]);
        s.v[k] = parse_expr(input.v[k]);
        s.w[k] = parse_expr(input.w[k]);
    }
    if (!(input.domain.u_min < input.domain.u_max) || !(input.domain.v_min < input.domain.v_max))
        throw ValidationError("surface '" + s.name + "': empty parameter domain");

    // Probe the frame constraints and the tangent normalization on a 5x5
    // interior grid.  <v,v> = <w,w> = 0, <v,w> = -2 must hold, and X_v may
    // have no component along v or w (a2 = b2 = 0).
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double fu = (2.0 * i + 1.0) / 10.0;
            const double fv = (2.0 * j + 1.0) / 10.0;
            const double u = s.domain.u_min + fu * (s.domain.u_max - s.domain.u_min);
            const double v = s.domain.v_min + fv * (s.domain.v_max - s.domain.v_min);
            const FrameVectors fr = frame_at(s, u, v);
            const auto res = delta4_residuals({fr.v, fr.w});
            const char* what = nullptr;
            if (std::fabs(res[0]) > 1e-8) what = "<v,v> != 0";
            else if (std::fabs(res[1]) > 1e-8) what = "<w,w> != 0";
            else if (std::fabs(res[2]) > 1e-8) what = "<v,w> != -2";
            if (what)
                throw ValidationError("surface '" + s.name + "': frame constraint " + what +
                                      " violated at (u,v) = (" + std::to_string(u) + ", " +
                                      std::to_string(v) + ")");
            const double a2 = -0.5 * pseudo_inner(fr.X_v, fr.w);
            const double b2 = -0.5 * pseudo_inner(fr.X_v, fr.v);
            const double scale = 1.0 + std::fabs(pseudo_inner(fr.X_v, fr.m));
            if (std::fabs(a2) > 1e-8 * scale || std::fabs(b2) > 1e-8 * scale)
                throw ValidationError("surface '" + s.name +
                                      "': tangent normalization violated (X_v has a null-frame "
                                      "component) at (u,v) = (" +
                                      std::to_string(u) + ", " + std::to_string(v) + ")");
        }
    }
    return s;
}

InvariantField invariants_at(const SurfaceDef& s, double u, double v) {
    const JVec3<4> X = eval_vec4(s.X, u, v);
    const JVec3<4> V = eval_vec4(s.v, u, v);
    const JVec3<4> W = eval_vec4(s.w, u, v);

    const JVec3<3> Xu = X.du(), Xv = X.dv();
    const JVec3<3> Vu = V.du(), Vv = V.dv();
    const JVec3<3> Wu = W.du(), Wv = W.dv();
    const JVec3<3> V3 = V.truncate<3>(), W3 = W.truncate<3>();
    const JVec3<3> m = (-0.5 * wedge(V, W)).truncate<3>();

    InvariantField f;
    f.u = u;
    f.v = v;
    f.a1 = -0.5 * pseudo_inner(Xu, W3);
    f.b1 = -0.5 * pseudo_inner(Xu, V3);
    f.c1 = pseudo_inner(Xu, m);
    f.a2 = -0.5 * pseudo_inner(Xv, W3);
    f.b2 = -0.5 * pseudo_inner(Xv, V3);
    f.c2 = pseudo_inner(Xv, m);
    f.e1 = 0.5 * pseudo_inner(V3, Wu);
    f.f1 = 0.5 * pseudo_inner(Wu, m);
    f.g1 = 0.5 * pseudo_inner(Vu, m);
    f.e2 = 0.5 * pseudo_inner(V3, Wv);
    f.f2 = 0.5 * pseudo_inner(Wv, m);
    f.g2 = 0.5 * pseudo_inner(Vv, m);
    return f;
}

FrameVectors frame_at(const SurfaceDef& s, double u, double v) {
    const JVec3<4> X = eval_vec4(s.X, u, v);
    const JVec3<4> V = eval_vec4(s.v, u, v);
    const JVec3<4> W = eval_vec4(s.w, u, v);
    FrameVectors fr;
    fr.X = X.values();
    fr.X_u = X.du().values();
    fr.X_v = X.dv().values();
    fr.v = V.values();
    fr.w = W.values();
    fr.m = -0.5 * wedge(fr.v, fr.w);
    return fr;
}

Jet2 lambda_tilde_jet(const InvariantField& f) { return -4.0 * (f.a1 * f.b1); }

std::array<double, 6> integrability_residuals(const InvariantField& f) {
    const double a1 = f.a1.value(), b1 = f.b1.value(), c1 = f.c1.value(), c2 = f.c2.value();
    const double e1 = f.e1.value(), f1 = f.f1.value(), g1 = f.g1.value();
    const double e2 = f.e2.value(), f2 = f.f2.value(), g2 = f.g2.value();
    return {
        f.a1.dv_value() - (-a1 * e2 + c2 * f1 - c1 * f2),
        f.b1.dv_value() - (b1 * e2 + c2 * g1 - c1 * g2),
        (f.c1.dv_value() - f.c2.du_value()) + 2.0 * (a1 * g2 + b1 * f2),
        (f.e1.dv_value() - f.e2.du_value()) - 2.0 * (f1 * g2 - f2 * g1),
        (f.f1.dv_value() - f.f2.du_value()) - (e1 * f2 - e2 * f1),
        (f.g1.dv_value() - f.g2.du_value()) - (e2 * g1 - e1 * g2),
    };
}

std::array<double, 6> integrability_residuals(const SurfaceDef& s, double u, double v) {
    return integrability_residuals(invariants_at(s, u, v));
}

std::array<double, 4> frame_identity_residuals(const SurfaceDef& s, double u, double v) {
    const FrameVectors fr = frame_at(s, u, v);
    const InvariantField f = invariants_at(s, u, v);
    const MVec3 n = -f.a1.value() * fr.v + f.b1.value() * fr.w;
    const double lam = -4.0 * f.a1.value() * f.b1.value();
    return {
        sup_norm(wedge(fr.v, fr.m) + fr.v),
        sup_norm(wedge(fr.w, fr.m) - fr.w),
        pseudo_inner(fr.m, fr.m) - 1.0,
        pseudo_inner(n, n) + lam,
    };
}

double surface_tol(const InvariantField& f, double tol_base) {
    return tol_base *
           (1.0 + std::fabs(f.a1.value()) + std::fabs(f.b1.value()) + std::fabs(f.c2.value()));
}

PointStratum stratify(const InvariantField& f, double tol_base) {
    if (tol_base < 0.0) tol_base = kDefaultZeroTol;
    const double tau = surface_tol(f, tol_base);
    const double a1 = f.a1.value(), b1 = f.b1.value(), c2 = f.c2.value();
    const double lam = -4.0 * a1 * b1;
    PointStratum st;
    st.lambda_tilde = lam;
    const bool frame_regular = a1 * a1 + b1 * b1 > tau;
    if (std::fabs(c2) <= tau)
        st.tag = frame_regular ? StratumTag::singular_S1 : StratumTag::degenerate_other;
    else if (!frame_regular)
        st.tag = StratumTag::singular_S2;
    else if (std::fabs(lam) <= tau)
        st.tag = StratumTag::lightlike;
    else
        st.tag = lam > 0.0 ? StratumTag::spacelike : StratumTag::timelike;
    return st;
}

PointStratum stratify(const SurfaceDef& s, double u, double v, double tol_base) {
    return stratify(invariants_at(s, u, v), tol_base);
}

InvariantField swap_null_roles(const InvariantField& f) {
    InvariantField g;
    g.u = f.u;
    g.v = f.v;
    g.a1 = f.b1;
    g.b1 = f.a1;
    g.c1 = -f.c1;
    g.a2 = f.b2;
    g.b2 = f.a2;
    g.c2 = -f.c2;
    g.e1 = -f.e1;
    g.f1 = -f.g1;
    g.g1 = -f.f1;
    g.e2 = -f.e2;
    g.f2 = -f.g2;
    g.g2 = -f.f2;
    return g;
}

} // namespace lcf
