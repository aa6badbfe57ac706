#include "lcframed/curvature.hpp"

#include <cmath>

#include "lcframed/errors.hpp"

namespace lcf {

HatValues hat_values(double a1, double b1, double c1, double c2, double a1u, double b1u,
                     double e1, double f1, double g1, double f2, double g2) {
    HatValues h;
    h.E_t = c1 * c1 - 4.0 * a1 * b1;
    h.F_t = c1;
    h.G_t = 1.0;
    h.lambda_tilde = -4.0 * a1 * b1;
    h.L_hat = 2.0 * a1 * (b1u - b1 * e1 + c1 * g1) - 2.0 * b1 * (a1u + a1 * e1 + c1 * f1);
    h.M_hat = 2.0 * (a1 * g1 - b1 * f1);
    h.N_hat = 2.0 * (a1 * g2 - b1 * f2);
    h.Q = h.L_hat * h.N_hat - c2 * h.M_hat * h.M_hat;
    h.P = c2 * h.L_hat * h.G_t - 2.0 * c2 * h.M_hat * h.F_t + h.N_hat * h.E_t;
    h.R = c2 * h.lambda_tilde;
    h.sign = (c2 >= 0.0) ? 1 : -1;
    h.K_hat = h.sign * h.Q;
    h.H_hat = h.sign * h.P / 2.0;
    return h;
}

namespace {

HatValues hat_values_from_field(const InvariantField& f) {
    return hat_values(f.a1.value(), f.b1.value(), f.c1.value(), f.c2.value(), f.a1.du_value(),
                      f.b1.du_value(), f.e1.value(), f.f1.value(), f.g1.value(), f.f2.value(),
                      f.g2.value());
}

} // namespace

HatJets hat_jets(const InvariantField& f) {
    const Jet<2> a1 = f.a1.truncate<2>(), b1 = f.b1.truncate<2>(), c1 = f.c1.truncate<2>(),
                 c2 = f.c2.truncate<2>(), e1 = f.e1.truncate<2>(), f1 = f.f1.truncate<2>(),
                 g1 = f.g1.truncate<2>(), f2 = f.f2.truncate<2>(), g2 = f.g2.truncate<2>();
    const Jet<2> a1u = f.a1.du(), b1u = f.b1.du();

    HatJets h;
    h.E_t = c1 * c1 - 4.0 * (a1 * b1);
    h.F_t = c1;
    h.G_t = Jet<2>::constant(1.0);
    h.lambda_tilde = -4.0 * (a1 * b1);
    h.L_hat = 2.0 * (a1 * (b1u - b1 * e1 + c1 * g1)) - 2.0 * (b1 * (a1u + a1 * e1 + c1 * f1));
    h.M_hat = 2.0 * (a1 * g1 - b1 * f1);
    h.N_hat = 2.0 * (a1 * g2 - b1 * f2);
    h.Q = h.L_hat * h.N_hat - c2 * (h.M_hat * h.M_hat);
    h.P = c2 * h.L_hat * h.G_t - 2.0 * (c2 * (h.M_hat * h.F_t)) + h.N_hat * h.E_t;
    h.R = c2 * h.lambda_tilde;
    return h;
}

CurvatureBundle bundle_from_field(const InvariantField& f, const FrameVectors& fr,
                                  double tol_base) {
    const HatValues h = hat_values_from_field(f);
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
    b.n_hat = -f.a1.value() * fr.v + f.b1.value() * fr.w;
    const double tol = surface_tol(f, tol_base);
    const double al = std::fabs(h.lambda_tilde);
    if (al > tol) {
        b.K = h.K_hat / (h.lambda_tilde * h.lambda_tilde);
        b.H = h.H_hat / (al * std::sqrt(al));
    }
    return b;
}

CurvatureBundle curvature_bundle(const SurfaceDef& s, double u, double v, double tol_base) {
    return bundle_from_field(invariants_at(s, u, v), frame_at(s, u, v), tol_base);
}

namespace {

// Principal direction attached to extended principal curvature k, as a (du,dv)
// coefficient pair.  Primary row of (II^ - k I~); falls back to the other row
// when the primary one vanishes, and to a coordinate axis at umbilic-like
// points where every direction is principal.
std::array<double, 2> principal_direction(const HatValues& h, double c2, double kappa, int which) {
    const double p0 = h.lambda_tilde * h.N_hat - c2 * kappa * h.G_t;
    const double p1 = -h.lambda_tilde * h.M_hat + kappa * h.F_t;
    const double p_scale = std::fabs(h.lambda_tilde * h.N_hat) + std::fabs(c2 * kappa * h.G_t) +
                           std::fabs(h.lambda_tilde * h.M_hat) + std::fabs(kappa * h.F_t);
    double d0 = p0, d1 = p1;
    if (std::fabs(p0) + std::fabs(p1) <= 1e-9 * (p_scale + 1e-300)) {
        const double q0 = c2 * (kappa * h.F_t - h.lambda_tilde * h.M_hat);
        const double q1 = h.lambda_tilde * h.L_hat - kappa * h.E_t;
        const double q_scale = std::fabs(c2 * kappa * h.F_t) +
                               std::fabs(c2 * h.lambda_tilde * h.M_hat) +
                               std::fabs(h.lambda_tilde * h.L_hat) + std::fabs(kappa * h.E_t);
        if (std::fabs(q0) + std::fabs(q1) <= 1e-9 * (q_scale + 1e-300)) {
            // Both defining rows vanish: umbilic-like point, any direction works.
            return which == 0 ? std::array<double, 2>{1.0, 0.0} : std::array<double, 2>{0.0, 1.0};
        }
        d0 = q0;
        d1 = q1;
    }
    const double n = std::sqrt(d0 * d0 + d1 * d1);
    return {d0 / n, d1 / n};
}

} // namespace

PrincipalData principal_from_field(const InvariantField& f, double tol_base) {
    const double tol = surface_tol(f, tol_base);
    const HatValues h = hat_values_from_field(f);
    const double c2 = f.c2.value();
    PrincipalData p;

    if (std::fabs(c2) <= tol) {
        if (std::fabs(h.H_hat) <= tol)
            throw DegeneratePrincipal(
                "principal curvature limit is indeterminate at a frame-singular point "
                "(both c2 and H^ vanish)");
        p.branch = PrincipalBranch::singular_limit;
        p.kappa_hat_1 = h.K_hat / (2.0 * h.H_hat);
        return p;
    }

    // |c2| k^2 - 2 H^ k + lambda~ K^ = 0, solved with the cancellation-free
    // pairing of the quadratic formula and Vieta's product.
    const double a = std::fabs(c2);
    const double cc = h.lambda_tilde * h.K_hat;
    double disc = h.H_hat * h.H_hat - a * cc;
    const double disc_scale = h.H_hat * h.H_hat + std::fabs(a * cc);
    if (disc < 0.0) {
        if (disc >= -1e-10 * (disc_scale + 1e-300))
            disc = 0.0;
        else
            throw DegeneratePrincipal("complex extended principal pair (discriminant " +
                                      std::to_string(disc) + " < 0)");
    }
    const double sq = std::sqrt(disc);
    double k_plus, k_minus;
    if (h.H_hat >= 0.0) {
        const double q = h.H_hat + sq;
        k_plus = q / a;
        k_minus = (q > 0.0) ? cc / q : 0.0;
    } else {
        const double q = h.H_hat - sq;
        k_minus = q / a;
        k_plus = (q < 0.0) ? cc / q : 0.0;
    }

    p.branch = PrincipalBranch::regular;
    p.kappa_hat_1 = k_plus;
    p.kappa_hat_2 = k_minus;
    p.V_hat_1 = principal_direction(h, c2, k_plus, 0);
    p.V_hat_2 = principal_direction(h, c2, k_minus, 1);
    return p;
}

PrincipalData principal(const SurfaceDef& s, double u, double v, double tol_base) {
    return principal_from_field(invariants_at(s, u, v), tol_base);
}

std::array<double, 2> weingarten_eigenvalues(const InvariantField& f, double tol_base) {
    const double tol = surface_tol(f, tol_base);
    const HatValues h = hat_values_from_field(f);
    const double c2 = f.c2.value();
    if (std::fabs(h.lambda_tilde) <= tol)
        throw LightlikePoint("Weingarten map undefined on the lightlike locus (lambda~ = " +
                             std::to_string(h.lambda_tilde) + ")");
    if (std::fabs(c2) <= tol)
        throw SingularPoint("Weingarten map needs a frame-regular point (c2 = " +
                            std::to_string(c2) + ")");

    const double rt = std::sqrt(std::fabs(h.lambda_tilde));
    const double E = h.E_t, F = c2 * h.F_t, G = c2 * c2 * h.G_t;
    const double L = h.L_hat / rt, M = c2 * h.M_hat / rt, N = c2 * h.N_hat / rt;
    const double den = E * G - F * F; // = c2^2 lambda~, nonzero after the guards above
    const double tr = (L * G - 2.0 * M * F + N * E) / den;
    const double det = (L * N - M * M) / den;
    double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) {
        if (disc >= -1e-10 * (tr * tr + 4.0 * std::fabs(det) + 1e-300))
            disc = 0.0;
        else
            throw DegeneratePrincipal("complex Weingarten eigenvalue pair (discriminant " +
                                      std::to_string(disc) + " < 0)");
    }
    const double sq = std::sqrt(disc);
    return {0.5 * (tr + sq), 0.5 * (tr - sq)};
}

std::array<double, 2> weingarten_eigenvalues(const SurfaceDef& s, double u, double v,
                                             double tol_base) {
    return weingarten_eigenvalues(invariants_at(s, u, v), tol_base);
}

} // namespace lcf
