#include "lcframed/focal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lcframed/errors.hpp"
#include "lcframed/lightlike.hpp"

namespace lcf {

std::string_view to_string(BranchLabel b) {
    switch (b) {
    case BranchLabel::plus: return "plus";
    case BranchLabel::minus: return "minus";
    case BranchLabel::linear: return "linear";
    }
    return "plus";
}

std::string_view to_string(VerdictState s) {
    switch (s) {
    case VerdictState::holds: return "holds";
    case VerdictState::fails: return "fails";
    case VerdictState::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

namespace {

// Implicit 2nd-order jet of a root mu of Q mu^2 + P mu + R = 0, from the
// order-2 jets of the coefficients.  Returns false when 2 Q mu + P is too
// small (double root), leaving the jet value-only.
bool implicit_mu_jet(const HatJets& hj, double mu, double tol_base, Jet<2>& out) {
    const double Q = hj.Q.value(), P = hj.P.value();
    out = Jet<2>{};
    out.set(0, 0, mu);
    const double D = 2.0 * Q * mu + P;
    const double tol_D = tol_base * (1.0 + 2.0 * std::fabs(Q) * std::fabs(mu) + std::fabs(P));
    if (std::fabs(D) <= tol_D) return false;

    const auto phi_slot = [&](int i, int j) {
        return hj.Q.get(i, j) * mu * mu + hj.P.get(i, j) * mu + hj.R.get(i, j);
    };
    const double mu_u = -phi_slot(1, 0) / D;
    const double mu_v = -phi_slot(0, 1) / D;
    const double phi_umu = 2.0 * hj.Q.get(1, 0) * mu + hj.P.get(1, 0);
    const double phi_vmu = 2.0 * hj.Q.get(0, 1) * mu + hj.P.get(0, 1);
    const double phi_mumu = 2.0 * Q;
    const double mu_uu = -(phi_slot(2, 0) + 2.0 * phi_umu * mu_u + phi_mumu * mu_u * mu_u) / D;
    const double mu_uv =
        -(phi_slot(1, 1) + phi_umu * mu_v + phi_vmu * mu_u + phi_mumu * mu_u * mu_v) / D;
    const double mu_vv = -(phi_slot(0, 2) + 2.0 * phi_vmu * mu_v + phi_mumu * mu_v * mu_v) / D;
    out.set(1, 0, mu_u);
    out.set(0, 1, mu_v);
    out.set(2, 0, mu_uu);
    out.set(1, 1, mu_uv);
    out.set(0, 2, mu_vv);
    return true;
}

} // namespace

MuRoots mu_roots(const InvariantField& f, double tol_base) {
    const HatJets hj = hat_jets(f);
    MuRoots r;
    r.Q = hj.Q.value();
    r.P = hj.P.value();
    r.R = hj.R.value();

    // Cancellation-aware zero thresholds built from the terms each
    // coefficient is assembled from.
    const double sQ = 1.0 + std::fabs(hj.L_hat.value() * hj.N_hat.value()) +
                      std::fabs(f.c2.value()) * hj.M_hat.value() * hj.M_hat.value();
    const double sP = 1.0 + std::fabs(f.c2.value() * hj.L_hat.value()) +
                      2.0 * std::fabs(f.c2.value() * hj.M_hat.value() * hj.F_t.value()) +
                      std::fabs(hj.N_hat.value() * hj.E_t.value());
    const double tol_Q = tol_base * sQ;
    const double tol_P = tol_base * sP;

    const auto push = [&](double mu, BranchLabel label) {
        MuRoot root;
        root.mu = mu;
        root.label = label;
        root.jets_valid = implicit_mu_jet(hj, mu, tol_base, root.jet);
        r.roots.push_back(root);
    };

    if (std::fabs(r.Q) > tol_Q) {
        const double half_p = 0.5 * r.P;
        double disc = half_p * half_p - r.Q * r.R;
        if (disc < 0.0) {
            const double disc_scale = half_p * half_p + std::fabs(r.Q * r.R);
            if (disc >= -1e-10 * (disc_scale + 1e-300))
                disc = 0.0;
            else
                return r; // no real degeneracy radius on this normal line
        }
        const double sq = std::sqrt(disc);
        double mu_plus, mu_minus;
        if (half_p >= 0.0) {
            const double q = -(half_p + sq);
            mu_minus = q / r.Q;
            mu_plus = (q != 0.0) ? r.R / q : 0.0;
        } else {
            const double q = -half_p + sq;
            mu_plus = q / r.Q;
            mu_minus = (q != 0.0) ? r.R / q : 0.0;
        }
        push(mu_plus, BranchLabel::plus);
        push(mu_minus, BranchLabel::minus);
        if (std::fabs(mu_plus - mu_minus) < 1e-6)
            for (auto& root : r.roots) root.near_double = true;
    } else if (std::fabs(r.P) > tol_P) {
        push(-r.R / r.P, BranchLabel::linear);
    } else {
        r.degenerate = true;
    }
    return r;
}

MuRoots mu_roots(const SurfaceDef& s, double u0, double v0, double tol_base) {
    return mu_roots(invariants_at(s, u0, v0), tol_base);
}

const MuRoot* find_branch(const MuRoots& r, BranchLabel b) {
    for (const auto& root : r.roots)
        if (root.label == b) return &root;
    return nullptr;
}

BarredInvariants barred_invariants(const InvariantField& f, const MuRoot& root) {
    if (!root.jets_valid)
        throw DoubleRootNoJet("focal radius mu has no derivative data at this point "
                              "(double root of the degeneracy quadratic)");
    const Jet<1> mu = root.jet.truncate<1>();
    const Jet<1> mu_u = root.jet.du();
    const Jet<1> mu_v = root.jet.dv();
    const Jet<1> one = Jet<1>::constant(1.0);
    const Jet<1> a1 = f.a1.truncate<1>(), b1 = f.b1.truncate<1>(), c1 = f.c1.truncate<1>(),
                 c2 = f.c2.truncate<1>(), e1 = f.e1.truncate<1>(), e2 = f.e2.truncate<1>(),
                 f1 = f.f1.truncate<1>(), g1 = f.g1.truncate<1>(), f2 = f.f2.truncate<1>(),
                 g2 = f.g2.truncate<1>();
    const Jet<1> a1u = f.a1.du().truncate<1>(), a1v = f.a1.dv().truncate<1>();
    const Jet<1> b1u = f.b1.du().truncate<1>(), b1v = f.b1.dv().truncate<1>();

    BarredInvariants B;
    B.a1 = a1 * (one + mu * e1 + mu_u) + mu * a1u;
    B.b1 = b1 * (one + mu * e1 - mu_u) - mu * b1u;
    B.c1 = c1 + 2.0 * (mu * (a1 * g1 - b1 * f1));
    B.a2 = a1 * (mu * e2 + mu_v) + mu * a1v;
    B.b2 = b1 * (mu * e2 - mu_v) - mu * b1v;
    B.c2 = c2 + 2.0 * (mu * (a1 * g2 - b1 * f2));
    return B;
}

namespace {

CurvatureBundle barred_bundle(const InvariantField& f, const BarredInvariants& B,
                              const FrameVectors* fr, double tol_base) {
    const HatValues h =
        hat_values(B.a1.value(), B.b1.value(), B.c1.value(), B.c2.value(), B.a1.du_value(),
                   B.b1.du_value(), f.e1.value(), f.f1.value(), f.g1.value(), f.f2.value(),
                   f.g2.value());
    CurvatureBundle b;
    b.u = f.u;
    b.v = f.v;
    b.E_t = h.E_t;
    b.F_t = h.F_t;
    b.G_t = h.G_t;
    b.L_hat = h.L_hat;
    b.M_hat = h.M_hat;
    b.N_hat = h.N_hat;
    b.lambda_tilde = h.lambda_tilde;
    b.sign = h.sign;
    b.K_hat = h.K_hat;
    b.H_hat = h.H_hat;
    if (fr) b.n_hat = -B.a1.value() * fr->v + B.b1.value() * fr->w;
    const double tol =
        tol_base * (1.0 + std::fabs(B.a1.value()) + std::fabs(B.b1.value()) +
                    std::fabs(B.c2.value()));
    const double al = std::fabs(h.lambda_tilde);
    if (al > tol) {
        b.K = h.K_hat / (h.lambda_tilde * h.lambda_tilde);
        b.H = h.H_hat / (al * std::sqrt(al));
    }
    return b;
}

MVec3 focal_from(const InvariantField& f, const FrameVectors& fr, double mu) {
    const MVec3 n_hat = -f.a1.value() * fr.v + f.b1.value() * fr.w;
    return fr.X - mu * n_hat;
}

const MuRoot& need_branch(const MuRoots& r, BranchLabel branch, double u0, double v0) {
    const MuRoot* root = find_branch(r, branch);
    if (!root)
        throw BranchUnavailable("focal branch '" + std::string(to_string(branch)) +
                                "' does not exist at (u, v) = (" + std::to_string(u0) + ", " +
                                std::to_string(v0) + ")");
    return *root;
}

} // namespace

MVec3 focal_point(const SurfaceDef& s, double u0, double v0, BranchLabel branch,
                  double tol_base) {
    const InvariantField f = invariants_at(s, u0, v0);
    const MuRoots r = mu_roots(f, tol_base);
    const MuRoot& root = need_branch(r, branch, u0, v0);
    return focal_from(f, frame_at(s, u0, v0), root.mu);
}

FocalSheet focal_invariants(const SurfaceDef& s, double u0, double v0, BranchLabel branch,
                            double tol_base) {
    const InvariantField f = invariants_at(s, u0, v0);
    const FrameVectors fr = frame_at(s, u0, v0);
    const MuRoots r = mu_roots(f, tol_base);
    const MuRoot& root = need_branch(r, branch, u0, v0);
    const BarredInvariants B = barred_invariants(f, root);

    FocalSheet sheet;
    sheet.branch = root.label;
    sheet.mu = root.mu;
    sheet.F = focal_from(f, fr, root.mu);
    sheet.a1_bar = B.a1.value();
    sheet.b1_bar = B.b1.value();
    sheet.c1_bar = B.c1.value();
    sheet.a2_bar = B.a2.value();
    sheet.b2_bar = B.b2.value();
    sheet.c2_bar = B.c2.value();
    sheet.bundle = barred_bundle(f, B, &fr, tol_base);
    try {
        const std::array<double, 6> o = focal_invariant_oracle(s, u0, v0, branch, tol_base);
        const std::array<double, 6> mine{sheet.a1_bar, sheet.b1_bar, sheet.c1_bar,
                                         sheet.a2_bar, sheet.b2_bar, sheet.c2_bar};
        double res = 0.0;
        for (int i = 0; i < 6; ++i) res = std::max(res, std::fabs(mine[i] - o[i]));
        sheet.oracle_residual = res;
    } catch (const Error&) {
        sheet.oracle_residual.reset();
    }
    return sheet;
}

CurvatureBundle focal_curvatures(const SurfaceDef& s, double u0, double v0, BranchLabel branch,
                                 double tol_base) {
    const InvariantField f = invariants_at(s, u0, v0);
    const FrameVectors fr = frame_at(s, u0, v0);
    const MuRoots r = mu_roots(f, tol_base);
    const MuRoot& root = need_branch(r, branch, u0, v0);
    return barred_bundle(f, barred_invariants(f, root), &fr, tol_base);
}

namespace {

// mu at a stencil neighbor, continued from the center root by nearest-value
// matching.  Throws StencilCrossesBranchCut when the matching is not the
// label-preserving one (the branches reorder inside the stencil).
double continued_mu(const MuRoots& center, const MuRoot& center_root, const MuRoots& nb) {
    if (nb.roots.empty())
        throw StencilCrossesBranchCut("focal branch vanished inside the difference stencil");
    if (center.roots.size() == 2 && nb.roots.size() == 2) {
        const double c0 = center.roots[0].mu, c1 = center.roots[1].mu;
        const double n0 = nb.roots[0].mu, n1 = nb.roots[1].mu;
        const double cost_id = std::fabs(c0 - n0) + std::fabs(c1 - n1);
        const double cost_sw = std::fabs(c0 - n1) + std::fabs(c1 - n0);
        if (cost_sw < cost_id)
            throw StencilCrossesBranchCut(
                "focal branches reorder inside the difference stencil");
        return (&center_root == &center.roots[0]) ? n0 : n1;
    }
    // Fallback: nearest value to the center root.
    double best = nb.roots[0].mu;
    for (const auto& root : nb.roots)
        if (std::fabs(root.mu - center_root.mu) < std::fabs(best - center_root.mu))
            best = root.mu;
    return best;
}

} // namespace

std::array<double, 6> focal_invariant_oracle(const SurfaceDef& s, double u0, double v0,
                                             BranchLabel branch, double tol_base) {
    const double h = 1e-5;
    const MuRoots r0 = mu_roots(s, u0, v0, tol_base);
    const MuRoot& root0 = need_branch(r0, branch, u0, v0);

    const auto focal_at = [&](double u, double v) {
        const InvariantField f = invariants_at(s, u, v);
        const MuRoots rn = mu_roots(f, tol_base);
        const double mu = continued_mu(r0, root0, rn);
        return focal_from(f, frame_at(s, u, v), mu);
    };
    const MVec3 Fu = (1.0 / (2.0 * h)) * (focal_at(u0 + h, v0) - focal_at(u0 - h, v0));
    const MVec3 Fv = (1.0 / (2.0 * h)) * (focal_at(u0, v0 + h) - focal_at(u0, v0 - h));

    const FrameVectors fr = frame_at(s, u0, v0);
    return {-0.5 * pseudo_inner(Fu, fr.w), -0.5 * pseudo_inner(Fu, fr.v),
            pseudo_inner(Fu, fr.m),        -0.5 * pseudo_inner(Fv, fr.w),
            -0.5 * pseudo_inner(Fv, fr.v), pseudo_inner(Fv, fr.m)};
}

namespace {

struct SheetState {
    std::array<std::optional<MuRoot>, 2> roots;
};

// Predict a sheet's mu one grid step ahead along the given axis.
double predict_mu(const MuRoot& r, bool along_u, double h) {
    if (!r.jets_valid) return r.mu;
    if (along_u) return r.mu + r.jet.get(1, 0) * h + 0.5 * r.jet.get(2, 0) * h * h;
    return r.mu + r.jet.get(0, 1) * h + 0.5 * r.jet.get(0, 2) * h * h;
}

SheetState assign_sheets(const SheetState& prev, const MuRoots& rn, bool along_u, double h) {
    SheetState next;
    const bool p0 = prev.roots[0].has_value(), p1 = prev.roots[1].has_value();
    const std::size_t n = rn.roots.size();
    if (!p0 && !p1) {
        // Re-seed from raw labels after a gap.
        for (const auto& root : rn.roots) {
            if (root.label == BranchLabel::minus)
                next.roots[1] = root;
            else if (!next.roots[0])
                next.roots[0] = root;
        }
        return next;
    }
    if (n == 0) return next;

    if (p0 && p1 && n == 2) {
        // Value distance alone ties exactly when the step straddles a root
        // collision (one prediction lands on the far root and the other
        // overshoots past it), so the cost also compares slopes, which stay
        // separated across a simple collision.
        const auto pair_cost = [&](const MuRoot& from, const MuRoot& to) {
            double c = std::fabs(predict_mu(from, along_u, h) - to.mu);
            if (from.jets_valid && to.jets_valid) {
                const double qd = along_u ? from.jet.get(1, 0) + h * from.jet.get(2, 0)
                                          : from.jet.get(0, 1) + h * from.jet.get(0, 2);
                const double md = along_u ? to.jet.get(1, 0) : to.jet.get(0, 1);
                c += 0.5 * std::fabs(h) * std::fabs(qd - md);
            }
            return c;
        };
        const bool swap =
            pair_cost(*prev.roots[0], rn.roots[1]) + pair_cost(*prev.roots[1], rn.roots[0]) <
            pair_cost(*prev.roots[0], rn.roots[0]) + pair_cost(*prev.roots[1], rn.roots[1]);
        next.roots[0] = rn.roots[swap ? 1 : 0];
        next.roots[1] = rn.roots[swap ? 0 : 1];
        return next;
    }
    if (p0 && p1 && n == 1) {
        const double q0 = predict_mu(*prev.roots[0], along_u, h);
        const double q1 = predict_mu(*prev.roots[1], along_u, h);
        const int target = std::fabs(q0 - rn.roots[0].mu) <= std::fabs(q1 - rn.roots[0].mu) ? 0 : 1;
        next.roots[target] = rn.roots[0];
        return next;
    }
    // Exactly one sheet alive.
    const int alive = p0 ? 0 : 1;
    const double q = predict_mu(*prev.roots[alive], along_u, h);
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::fabs(rn.roots[i].mu - q) < std::fabs(rn.roots[best].mu - q)) best = i;
    next.roots[alive] = rn.roots[best];
    if (n == 2) next.roots[1 - alive] = rn.roots[1 - best];
    return next;
}

BranchCell cell_from_state(const SheetState& st) {
    BranchCell c;
    for (int k = 0; k < 2; ++k) {
        if (st.roots[k]) {
            c.available[k] = true;
            c.mu[k] = st.roots[k]->mu;
            if (st.roots[k]->near_double) c.branch_cut = true;
        }
    }
    return c;
}

} // namespace

BranchGrid continue_branches(const SurfaceDef& s, int nu, int nv, const SurfaceDomain* range,
                             double tol_base) {
    if (nu < 2 || nv < 2)
        throw ValidationError("branch continuation needs a grid of at least 2x2 samples");
    const SurfaceDomain dom = range ? *range : s.domain;
    if (!(dom.u_min < dom.u_max) || !(dom.v_min < dom.v_max))
        throw ValidationError("branch continuation range is empty");

    BranchGrid grid;
    grid.us.resize(nu);
    grid.vs.resize(nv);
    for (int i = 0; i < nu; ++i)
        grid.us[i] = dom.u_min + (dom.u_max - dom.u_min) * i / (nu - 1.0);
    for (int j = 0; j < nv; ++j)
        grid.vs[j] = dom.v_min + (dom.v_max - dom.v_min) * j / (nv - 1.0);
    grid.cells.resize(static_cast<std::size_t>(nu) * nv);

    std::vector<SheetState> column(nu);
    {
        const MuRoots r = mu_roots(s, grid.us[0], grid.vs[0], tol_base);
        SheetState seed;
        for (const auto& root : r.roots) {
            if (root.label == BranchLabel::minus)
                seed.roots[1] = root;
            else if (!seed.roots[0])
                seed.roots[0] = root;
        }
        column[0] = seed;
    }
    for (int i = 1; i < nu; ++i) {
        const MuRoots rn = mu_roots(s, grid.us[i], grid.vs[0], tol_base);
        column[i] = assign_sheets(column[i - 1], rn, true, grid.us[i] - grid.us[i - 1]);
    }
    for (int i = 0; i < nu; ++i) {
        SheetState st = column[i];
        grid.cells[static_cast<std::size_t>(i) * nv] = cell_from_state(st);
        for (int j = 1; j < nv; ++j) {
            const MuRoots rn = mu_roots(s, grid.us[i], grid.vs[j], tol_base);
            st = assign_sheets(st, rn, false, grid.vs[j] - grid.vs[j - 1]);
            grid.cells[static_cast<std::size_t>(i) * nv + j] = cell_from_state(st);
        }
    }
    return grid;
}

namespace {

bool zeroish(double x, double tol) { return std::fabs(x) <= tol; }

} // namespace

RelationChecks relation_checks(const InvariantField& f, double tol_base) {
    RelationChecks rc;
    const double tol = surface_tol(f, tol_base);
    const PointStratum st = stratify(f, tol_base);

    // (ii) a1 g2 = b1 f2  =>  c2 = 0 <=> c2_bar = 0 (any branch: the mu term drops).
    {
        const double ng = f.a1.value() * f.g2.value() - f.b1.value() * f.f2.value();
        const double tol_ng = tol_base * (1.0 + std::fabs(f.a1.value() * f.g2.value()) +
                                          std::fabs(f.b1.value() * f.f2.value()));
        if (zeroish(ng, tol_ng)) {
            const MuRoots r = mu_roots(f, tol_base);
            if (!r.roots.empty()) {
                const double mu = r.roots.front().mu;
                const double c2 = f.c2.value();
                const double c2_bar = c2 + 2.0 * mu * ng;
                rc.c2_iff_c2_bar.lhs = c2;
                rc.c2_iff_c2_bar.rhs = c2_bar;
                const double tol_bar = tol * (1.0 + std::fabs(mu));
                rc.c2_iff_c2_bar.state = (zeroish(c2, tol) == zeroish(c2_bar, tol_bar))
                                             ? VerdictState::holds
                                             : VerdictState::fails;
            }
        }
    }

    if (st.tag != StratumTag::lightlike) return rc;

    // Lightlike checks run in the frame normalization where a1 is the
    // vanishing invariant.
    LightlikeKind kind;
    try {
        kind = classify_lightlike(f, tol_base);
    } catch (const NotLightlike&) {
        return rc;
    }
    const InvariantField g = kind.swapped ? swap_null_roles(f) : f;
    const MuRoots rg = mu_roots(g, tol_base);
    const MuRoot* zero_root = nullptr;
    for (const auto& root : rg.roots) {
        if (!zero_root || std::fabs(root.mu) < std::fabs(zero_root->mu)) zero_root = &root;
    }
    double other_mu = 0.0;
    for (const auto& root : rg.roots)
        if (&root != zero_root) other_mu = root.mu;
    if (!zero_root || std::fabs(zero_root->mu) > 1e-6 * (1.0 + std::fabs(other_mu))) return rc;

    const double a1u = g.a1.du_value();

    // (i) degenerate lightlike point => the mu->0 sheet is lightlike (a1_bar = 0).
    if (kind.degenerate && zero_root->jets_valid) {
        const BarredInvariants B = barred_invariants(g, *zero_root);
        rc.degenerate_lightlike_focal.lhs = B.a1.value();
        rc.degenerate_lightlike_focal.rhs = 0.0;
        rc.degenerate_lightlike_focal.state =
            zeroish(B.a1.value(), tol) ? VerdictState::holds : VerdictState::fails;
    }

    if (!zero_root->jets_valid) return rc;
    const double mu_u = zero_root->jet.get(1, 0);
    const HatValues hv =
        hat_values(g.a1.value(), g.b1.value(), g.c1.value(), g.c2.value(), g.a1.du_value(),
                   g.b1.du_value(), g.e1.value(), g.f1.value(), g.g1.value(), g.f2.value(),
                   g.g2.value());
    const BarredInvariants B = barred_invariants(g, *zero_root);
    const HatValues hb =
        hat_values(B.a1.value(), B.b1.value(), B.c1.value(), B.c2.value(), B.a1.du_value(),
                   B.b1.du_value(), g.e1.value(), g.f1.value(), g.g1.value(), g.f2.value(),
                   g.g2.value());
    const double tol_H = tol_base * (1.0 + std::fabs(hv.P) / 2.0 +
                                     std::fabs(hv.L_hat * hv.N_hat) + hv.M_hat * hv.M_hat);
    const double tol_Hb = tol_base * (1.0 + std::fabs(hb.P) / 2.0 +
                                      std::fabs(hb.L_hat * hb.N_hat) + hb.M_hat * hb.M_hat);

    // (iii) H^ = 0 at a lightlike point: H^_bar = 0 <=> (mu_u - 1) mu_u a1_u = 0.
    if (zeroish(hv.H_hat, tol_H)) {
        const double rhs = (mu_u - 1.0) * mu_u * a1u;
        const double tol_rhs = tol_base * (1.0 + mu_u * mu_u) * (1.0 + std::fabs(a1u));
        rc.mean_transfer.lhs = hb.H_hat;
        rc.mean_transfer.rhs = rhs;
        rc.mean_transfer.state = (zeroish(hb.H_hat, tol_Hb) == zeroish(rhs, tol_rhs))
                                     ? VerdictState::holds
                                     : VerdictState::fails;
    }

    // (iv) K^ = 0 at a lightlike point: K^_bar = 0 <=> (1 - mu_u) mu_u a1_u f2 = 0.
    if (zeroish(hv.K_hat, tol_H)) {
        const double rhs = (1.0 - mu_u) * mu_u * a1u * g.f2.value();
        const double tol_rhs = tol_base * (1.0 + mu_u * mu_u) *
                               (1.0 + std::fabs(a1u * g.f2.value()));
        rc.gauss_transfer.lhs = hb.K_hat;
        rc.gauss_transfer.rhs = rhs;
        rc.gauss_transfer.state = (zeroish(hb.K_hat, tol_Hb) == zeroish(rhs, tol_rhs))
                                      ? VerdictState::holds
                                      : VerdictState::fails;
    }
    return rc;
}

RelationChecks relation_checks(const SurfaceDef& s, double u0, double v0, double tol_base) {
    return relation_checks(invariants_at(s, u0, v0), tol_base);
}

} // namespace lcf
