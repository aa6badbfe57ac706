#include "lcframed/lightlike.hpp"

#include <cmath>

#include "lcframed/curvature.hpp"
#include "lcframed/errors.hpp"

namespace lcf {

std::string_view to_string(LightlikeTag t) {
    switch (t) {
    case LightlikeTag::cuspidal_edge: return "cuspidal_edge";
    case LightlikeTag::swallowtail: return "swallowtail";
    case LightlikeTag::cuspidal_butterfly: return "cuspidal_butterfly";
    case LightlikeTag::cuspidal_lips: return "cuspidal_lips";
    case LightlikeTag::cuspidal_beaks: return "cuspidal_beaks";
    case LightlikeTag::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::string_view to_string(ProbeVerdict v) {
    switch (v) {
    case ProbeVerdict::converges_to_zero: return "converges_to_zero";
    case ProbeVerdict::converges_to_nonzero: return "converges_to_nonzero";
    case ProbeVerdict::diverges: return "diverges";
    case ProbeVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

NullVector null_vector(const InvariantField& f, double tol_base) {
    const PointStratum st = stratify(f, tol_base);
    if (st.tag != StratumTag::lightlike)
        throw NotLightlike("null vector requested at a point of stratum '" +
                           std::string(to_string(st.tag)) + "' (lambda~ = " +
                           std::to_string(st.lambda_tilde) + ")");
    const double a1 = f.a1.value(), b1 = f.b1.value();
    const double c1 = f.c1.value(), c2 = f.c2.value();
    NullVector nv;
    nv.eta_u = c2;
    nv.eta_v = -c1;
    const double E = c1 * c1 - 4.0 * a1 * b1, F = c1 * c2, G = c2 * c2;
    nv.residual = nv.eta_u * nv.eta_u * E + 2.0 * nv.eta_u * nv.eta_v * F +
                  nv.eta_v * nv.eta_v * G;
    const double bound = surface_tol(f, tol_base) * (1.0 + c1 * c1 + c2 * c2);
    if (std::fabs(nv.residual) > 10.0 * bound)
        throw NotLightlike("null-direction residual " + std::to_string(nv.residual) +
                           " exceeds the lightlike tolerance at this point");
    return nv;
}

NullVector null_vector(const SurfaceDef& s, double u0, double v0, double tol_base) {
    return null_vector(invariants_at(s, u0, v0), tol_base);
}

namespace {

// Raw partial slots of one invariant jet, named for readability below.
struct Slots3 {
    double x, u, v, uu, uv, vv, uuu, uuv, uvv, vvv;
    explicit Slots3(const Jet2& j)
        : x(j.get(0, 0)), u(j.get(1, 0)), v(j.get(0, 1)), uu(j.get(2, 0)), uv(j.get(1, 1)),
          vv(j.get(0, 2)), uuu(j.get(3, 0)), uuv(j.get(2, 1)), uvv(j.get(1, 2)),
          vvv(j.get(0, 3)) {}
};

} // namespace

LightlikeKind classify_lightlike(const InvariantField& f, double tol_base) {
    const PointStratum st = stratify(f, tol_base);
    if (st.tag != StratumTag::lightlike)
        throw NotLightlike("classification needs a lightlike point; stratum here is '" +
                           std::string(to_string(st.tag)) + "' (lambda~ = " +
                           std::to_string(st.lambda_tilde) + ")");

    LightlikeKind k;
    InvariantField g = f;
    if (std::fabs(f.b1.value()) < std::fabs(f.a1.value())) {
        g = swap_null_roles(f);
        k.swapped = true;
    }

    const Slots3 a1(g.a1), c1(g.c1), c2(g.c2);
    const double b1 = g.b1.value();
    k.tol = 1e-7 * (1.0 + std::fabs(b1)) *
            std::pow(1.0 + std::fabs(c1.x) + std::fabs(c2.x), 3);

    if (std::fabs(a1.x) > k.tol)
        throw NotLightlike("point is lightlike in aggregate but neither frame invariant "
                           "vanishes cleanly (min |a1|,|b1| = " +
                           std::to_string(std::fabs(a1.x)) + " > tol " + std::to_string(k.tol) +
                           ")");

    // Criterion quantities in invariant form.
    k.bracket_first = a1.v * c1.x - a1.u * c2.x;
    const double inner_u = a1.v * c1.u - a1.uu * c2.x - a1.u * c2.u + a1.uv * c1.x;
    const double inner_v = a1.vv * c1.x + a1.v * c1.v - a1.u * c2.v - a1.uv * c2.x;
    k.bracket_second = c2.x * inner_u - c1.x * inner_v;
    k.bracket_third =
        (c2.x * c2.u - c1.x * c2.v) * inner_u + (c1.x * c1.v - c2.x * c1.u) * inner_v +
        c2.x * c2.x *
            (2.0 * a1.uv * c1.u + a1.v * c1.uu - a1.uuu * c2.x - 2.0 * a1.uu * c2.u -
             a1.u * c2.uu + a1.uuv * c1.x) +
        c1.x * c1.x *
            (a1.vvv * c1.x + 2.0 * a1.vv * c1.v + a1.v * c1.vv - 2.0 * a1.uv * c2.v -
             a1.u * c2.vv - a1.uvv * c2.x) -
        2.0 * c1.x * c2.x *
            (a1.uvv * c1.x + a1.vv * c1.u + a1.uv * c1.v + a1.v * c1.uv - a1.uu * c2.v -
             a1.u * c2.uv - a1.uuv * c2.x - a1.uv * c2.u);
    k.hessian_disc = a1.uu * a1.vv - a1.uv * a1.uv;
    k.beaks_second =
        2.0 * a1.uv * c1.x * c2.x - a1.uu * c2.x * c2.x - a1.vv * c1.x * c1.x;

    // Witnesses: directional derivatives of lambda~ along eta = c2 du - c1 dv
    // (variable coefficients), and the Hessian determinant of lambda~.
    const Jet2 lam = lambda_tilde_jet(g);
    const Jet<2> d1 = g.c2.truncate<2>() * lam.du() - g.c1.truncate<2>() * lam.dv();
    const Jet<1> d2 = g.c2.truncate<1>() * d1.du() - g.c1.truncate<1>() * d1.dv();
    k.eta_lambda = d1.value();
    k.eta2_lambda = d2.value();
    k.eta3_lambda = c2.x * d2.du_value() - c1.x * d2.dv_value();
    k.hessian_det = lam.get(2, 0) * lam.get(0, 2) - lam.get(1, 1) * lam.get(1, 1);

    k.degenerate = std::fabs(a1.u) <= k.tol && std::fabs(a1.v) <= k.tol;
    if (!k.degenerate) {
        if (std::fabs(k.bracket_first) > k.tol)
            k.tag = LightlikeTag::cuspidal_edge;
        else if (std::fabs(k.bracket_second) > k.tol)
            k.tag = LightlikeTag::swallowtail;
        else if (std::fabs(k.bracket_third) > k.tol)
            k.tag = LightlikeTag::cuspidal_butterfly;
        else
            k.tag = LightlikeTag::undetermined;
    } else {
        if (k.hessian_disc > k.tol)
            k.tag = LightlikeTag::cuspidal_lips;
        else if (k.hessian_disc < -k.tol && std::fabs(k.beaks_second) > k.tol)
            k.tag = LightlikeTag::cuspidal_beaks;
        else
            k.tag = LightlikeTag::undetermined;
    }
    return k;
}

LightlikeKind classify_lightlike(const SurfaceDef& s, double u0, double v0, double tol_base) {
    return classify_lightlike(invariants_at(s, u0, v0), tol_base);
}

namespace {

struct LocusEval {
    double lam, lam_u, lam_v, grad_norm, tol;
};

LocusEval locus_eval(const SurfaceDef& s, double u, double v, double tol_base) {
    const InvariantField f = invariants_at(s, u, v);
    const Jet2 lam = lambda_tilde_jet(f);
    LocusEval e;
    e.lam = lam.value();
    e.lam_u = lam.du_value();
    e.lam_v = lam.dv_value();
    e.grad_norm = std::hypot(e.lam_u, e.lam_v);
    e.tol = surface_tol(f, tol_base);
    return e;
}

struct Corrected {
    bool ok = false;
    double u = 0, v = 0, lam = 0;
};

// 1-D bisection on lambda~ restricted to the gradient line through (u,v),
// searching within [-step, step].
Corrected correct_to_locus(const SurfaceDef& s, double u, double v, double step,
                           double tol_base) {
    const LocusEval e0 = locus_eval(s, u, v, tol_base);
    if (e0.grad_norm <= e0.tol)
        throw DegenerateLocusPoint("gradient of lambda~ vanishes near (u,v) = (" +
                                   std::to_string(u) + ", " + std::to_string(v) +
                                   "); the locus is not a regular curve there");
    const double gu = e0.lam_u / e0.grad_norm, gv = e0.lam_v / e0.grad_norm;
    const auto at = [&](double sigma) {
        return locus_eval(s, u + sigma * gu, v + sigma * gv, tol_base).lam;
    };
    Corrected c;
    double lo = 0.0, hi = 0.0, flo = e0.lam, fhi = e0.lam;
    if (std::fabs(e0.lam) <= 1e-10) {
        c.ok = true;
        c.u = u;
        c.v = v;
        c.lam = e0.lam;
        return c;
    }
    const double fp = at(step), fm = at(-step);
    if (e0.lam * fp < 0.0) {
        lo = 0.0;
        hi = step;
        flo = e0.lam;
        fhi = fp;
    } else if (fm * e0.lam < 0.0) {
        lo = -step;
        hi = 0.0;
        flo = fm;
        fhi = e0.lam;
    } else {
        return c; // no sign change within reach
    }
    double mid = 0.0, fmid = flo;
    for (int it = 0; it < 120 && (hi - lo) > 1e-16; ++it) {
        mid = 0.5 * (lo + hi);
        fmid = at(mid);
        if (std::fabs(fmid) <= 1e-10) break;
        if (flo * fmid <= 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    (void)fhi;
    c.ok = std::fabs(fmid) <= 1e-10;
    c.u = u + mid * gu;
    c.v = v + mid * gv;
    c.lam = fmid;
    return c;
}

} // namespace

LocusTrace trace_lightlike_locus(const SurfaceDef& s, double u0, double v0, double step,
                                 int max_steps, double tol_base) {
    if (!(step > 0.0) || max_steps < 1)
        throw ValidationError("locus trace needs step > 0 and max_steps >= 1");

    LocusTrace tr;
    const Corrected seed = correct_to_locus(s, u0, v0, step, tol_base);
    if (!seed.ok || std::fabs(seed.lam) > 1e-9)
        throw SeedNotNearLocus("no zero of lambda~ within " + std::to_string(step) +
                               " of the seed (" + std::to_string(u0) + ", " +
                               std::to_string(v0) + ")");
    if (!s.domain.contains(seed.u, seed.v))
        throw SeedNotNearLocus("corrected seed fell outside the parameter domain");

    tr.points.push_back({seed.u, seed.v, seed.lam});
    double pu = seed.u, pv = seed.v;
    double tan_u = 0.0, tan_v = 0.0;
    bool have_tangent = false;

    for (int k = 0; k < max_steps; ++k) {
        const LocusEval e = locus_eval(s, pu, pv, tol_base);
        if (e.grad_norm <= e.tol)
            throw DegenerateLocusPoint("gradient of lambda~ vanished mid-trace at (" +
                                       std::to_string(pu) + ", " + std::to_string(pv) + ")");
        double tu = -e.lam_v / e.grad_norm, tv = e.lam_u / e.grad_norm;
        if (have_tangent && tu * tan_u + tv * tan_v < 0.0) {
            tu = -tu;
            tv = -tv;
        }
        tan_u = tu;
        tan_v = tv;
        have_tangent = true;

        const double qu = pu + step * tu, qv = pv + step * tv;
        if (!s.domain.contains(qu, qv)) {
            tr.hit_boundary = true;
            tr.stop_reason = "boundary";
            return tr;
        }
        const Corrected c = correct_to_locus(s, qu, qv, step, tol_base);
        if (!c.ok || std::fabs(c.lam) > 1e-9) {
            tr.stop_reason = "corrector_failed";
            return tr;
        }
        if (!s.domain.contains(c.u, c.v)) {
            tr.hit_boundary = true;
            tr.stop_reason = "boundary";
            return tr;
        }
        pu = c.u;
        pv = c.v;
        tr.points.push_back({pu, pv, c.lam});
        if (k >= 3 && std::hypot(pu - seed.u, pv - seed.v) < 0.5 * step) {
            tr.closed = true;
            tr.stop_reason = "closed";
            return tr;
        }
    }
    tr.stop_reason = "max_steps";
    return tr;
}

namespace {

ProbeVerdict series_verdict(const std::vector<double>& xs) {
    if (xs.size() < 2) return ProbeVerdict::inconclusive;
    const double last = xs.back();
    if (std::fabs(last) <= 1e-6) return ProbeVerdict::converges_to_zero;
    if (std::fabs(last) > 1e6 && xs.size() >= 5) {
        bool growing = true;
        for (std::size_t i = xs.size() - 4; i < xs.size(); ++i)
            if (std::fabs(xs[i]) <= std::fabs(xs[i - 1])) growing = false;
        if (growing) return ProbeVerdict::diverges;
    }
    if (std::fabs(xs.back() - xs[xs.size() - 2]) <= 1e-6 * (1.0 + std::fabs(last)))
        return ProbeVerdict::converges_to_nonzero;
    return ProbeVerdict::inconclusive;
}

SeriesVerdict make_verdict(const std::vector<double>& xs) {
    SeriesVerdict sv;
    sv.verdict = series_verdict(xs);
    sv.last = xs.empty() ? 0.0 : xs.back();
    return sv;
}

} // namespace

ProbeReport curvature_limit_probe(const SurfaceDef& s, const ExprAst& path_u,
                                  const ExprAst& path_v, double t_target, double t_start,
                                  int samples, double ratio, double tol_base) {
    if (samples < 2) throw ValidationError("probe needs at least 2 samples");
    if (!(ratio > 0.0) || !(ratio < 1.0))
        throw ValidationError("probe ratio must lie strictly between 0 and 1");
    if (t_start == t_target)
        throw ValidationError("probe start must differ from the target parameter");

    const double ut = eval_value(path_u, t_target, 0.0);
    const double vt = eval_value(path_v, t_target, 0.0);
    const PointStratum st = stratify(s, ut, vt, tol_base);
    if (st.tag != StratumTag::lightlike)
        throw PathNotLightlikeAtTarget("path lands on stratum '" +
                                       std::string(to_string(st.tag)) + "' at t = " +
                                       std::to_string(t_target) + " (lambda~ = " +
                                       std::to_string(st.lambda_tilde) + ")");

    ProbeReport rep;
    rep.t_target = t_target;
    rep.t_start = t_start;
    rep.ratio = ratio;
    std::vector<double> lam_s, kh_s, hh_s, k_s, h_s;
    double scale = 1.0;
    for (int k = 0; k < samples; ++k, scale *= ratio) {
        const double t = t_target + (t_start - t_target) * scale;
        ProbeSample ps;
        ps.t = t;
        ps.u = eval_value(path_u, t, 0.0);
        ps.v = eval_value(path_v, t, 0.0);
        const InvariantField f = invariants_at(s, ps.u, ps.v);
        const HatValues h =
            hat_values(f.a1.value(), f.b1.value(), f.c1.value(), f.c2.value(),
                       f.a1.du_value(), f.b1.du_value(), f.e1.value(), f.f1.value(),
                       f.g1.value(), f.f2.value(), f.g2.value());
        ps.lambda_tilde = h.lambda_tilde;
        ps.K_hat = h.K_hat;
        ps.H_hat = h.H_hat;
        if (h.lambda_tilde != 0.0) {
            const double al = std::fabs(h.lambda_tilde);
            ps.K = h.K_hat / (h.lambda_tilde * h.lambda_tilde);
            ps.H = h.H_hat / (al * std::sqrt(al));
            k_s.push_back(*ps.K);
            h_s.push_back(*ps.H);
        }
        lam_s.push_back(ps.lambda_tilde);
        kh_s.push_back(ps.K_hat);
        hh_s.push_back(ps.H_hat);
        rep.samples.push_back(ps);
    }
    rep.lambda_tilde = make_verdict(lam_s);
    rep.K_hat = make_verdict(kh_s);
    rep.H_hat = make_verdict(hh_s);
    rep.K = make_verdict(k_s);
    rep.H = make_verdict(h_s);
    return rep;
}

} // namespace lcf
