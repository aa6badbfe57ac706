#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lcframed/config.hpp"
#include "lcframed/curvature.hpp"
#include "lcframed/errors.hpp"
#include "lcframed/framed_surface.hpp"

using lcf::CurvatureBundle;
using lcf::InvariantField;
using lcf::Jet2;
using lcf::SurfaceDef;

namespace {

SurfaceDef paper_example() { return lcf::build_surface(lcf::builtin_surface("paper-example")); }

lcf::HatValues hats_at(const SurfaceDef& s, double u, double v) {
    const InvariantField f = lcf::invariants_at(s, u, v);
    return lcf::hat_values(f.a1.value(), f.b1.value(), f.c1.value(), f.c2.value(),
                           f.a1.du_value(), f.b1.du_value(), f.e1.value(), f.f1.value(),
                           f.g1.value(), f.f2.value(), f.g2.value());
}

// Minimal constant-jet field for exercising edge branches directly.
InvariantField synthetic_field(double a1, double b1, double b1u, double c1, double c2,
                               double g2) {
    InvariantField f;
    f.a1 = Jet2::constant(a1);
    f.b1 = Jet2::constant(b1);
    f.b1.set(1, 0, b1u);
    f.c1 = Jet2::constant(c1);
    f.c2 = Jet2::constant(c2);
    f.g2 = Jet2::constant(g2);
    return f;
}

} // namespace

TEST_CASE("hatted fundamental quantities in closed form on the sphere-like fixture") {
    const auto s = paper_example();
    for (double u : {0.3, 1.0, 2.0, 2.9, 4.1, 5.5}) {
        const auto h = hats_at(s, u, 1.3);
        const double cu = std::cos(u), c2u = std::cos(2 * u), su = std::sin(u);
        CHECK(h.E_t == doctest::Approx(-c2u).epsilon(1e-12));           // c1^2 - 4 a1 b1
        CHECK(std::fabs(h.F_t) <= 1e-12);                               // c1 = 0
        CHECK(h.G_t == doctest::Approx(1.0));
        CHECK(h.lambda_tilde == doctest::Approx(-c2u).epsilon(1e-12));
        CHECK(h.L_hat == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::fabs(h.M_hat) <= 1e-12);
        CHECK(h.N_hat == doctest::Approx(-cu).epsilon(1e-12));
        CHECK(h.Q == doctest::Approx(-cu).epsilon(1e-12));
        CHECK(h.P == doctest::Approx(-2 * cu * su * su).epsilon(1e-12));
        CHECK(h.R == doctest::Approx(cu * c2u).epsilon(1e-12));
        CHECK(h.sign == (-cu >= 0 ? 1 : -1));
        // K^ = s Q = -cos u on the middle band, +cos u outside it.
        CHECK(h.K_hat == doctest::Approx(h.sign * -cu).epsilon(1e-12));
        CHECK(h.H_hat == doctest::Approx(h.sign * -cu * su * su).epsilon(1e-12));
    }
}

TEST_CASE("curvature bundle: classical curvatures and the lightlike normal") {
    const auto s = paper_example();
    const CurvatureBundle b = lcf::curvature_bundle(s, 2.0, 0.7);
    const double lam = -std::cos(4.0);
    CHECK(b.lambda_tilde == doctest::Approx(lam).epsilon(1e-12));
    CHECK(b.K_hat == doctest::Approx(-std::cos(2.0)).epsilon(1e-12));
    CHECK(b.H_hat == doctest::Approx(-std::sin(2.0) * std::sin(2.0) * std::cos(2.0))
                         .epsilon(1e-12));
    REQUIRE(b.K.has_value());
    REQUIRE(b.H.has_value());
    CHECK(*b.K == doctest::Approx(b.K_hat / (lam * lam)).epsilon(1e-12));
    CHECK(*b.H == doctest::Approx(b.H_hat / std::pow(std::fabs(lam), 1.5)).epsilon(1e-12));

    // n^ = -a1 v + b1 w is orthogonal to both tangents and has <n,n> = -lambda~.
    const auto fr = lcf::frame_at(s, 2.0, 0.7);
    CHECK(lcf::pseudo_inner(b.n_hat, b.n_hat) == doctest::Approx(-lam).epsilon(1e-11));
    CHECK(std::fabs(lcf::pseudo_inner(b.n_hat, fr.X_u)) <= 1e-11);
    CHECK(std::fabs(lcf::pseudo_inner(b.n_hat, fr.X_v)) <= 1e-11);

    // On the lightlike locus the classical pair is absent and n^ is null.
    const CurvatureBundle bl = lcf::curvature_bundle(s, M_PI / 4, 0.7);
    CHECK_FALSE(bl.K.has_value());
    CHECK_FALSE(bl.H.has_value());
    CHECK(std::fabs(lcf::pseudo_inner(bl.n_hat, bl.n_hat)) <= 1e-9);
}

TEST_CASE("extended curvatures are continuous across the frame sign flip") {
    // At u = pi/2 both c2 and the unsigned coefficients change sign together,
    // so K^ and H^ pass through continuously.
    const auto s = paper_example();
    const double eps = 1e-4;
    const CurvatureBundle lo = lcf::curvature_bundle(s, M_PI / 2 - eps, 1.0);
    const CurvatureBundle hi = lcf::curvature_bundle(s, M_PI / 2 + eps, 1.0);
    CHECK(lo.sign == -hi.sign);
    CHECK(lo.K_hat == doctest::Approx(hi.K_hat).epsilon(1e-10));
    CHECK(lo.H_hat == doctest::Approx(hi.H_hat).epsilon(1e-10));
    CHECK(lo.K_hat == doctest::Approx(std::sin(eps)).epsilon(1e-10));
}

TEST_CASE("extended principal curvatures at the equator of the sphere-like fixture") {
    const auto s = paper_example();
    const auto p = lcf::principal(s, M_PI, 2.0);
    CHECK(p.branch == lcf::PrincipalBranch::regular);
    REQUIRE(p.kappa_hat_2.has_value());
    const double k1 = p.kappa_hat_1, k2 = *p.kappa_hat_2;
    CHECK(std::max(k1, k2) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::min(k1, k2) == doctest::Approx(-1.0).epsilon(1e-10));

    // Principal directions align with the coordinate axes here.
    REQUIRE(p.V_hat_1.has_value());
    REQUIRE(p.V_hat_2.has_value());
    const auto& big = (k1 >= k2) ? *p.V_hat_1 : *p.V_hat_2;
    const auto& small = (k1 >= k2) ? *p.V_hat_2 : *p.V_hat_1;
    CHECK(std::fabs(big[1]) <= 1e-10);   // kappa^ = +1 direction ~ (1, 0)
    CHECK(std::fabs(big[0]) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::fabs(small[0]) <= 1e-10); // kappa^ = -1 direction ~ (0, 1)
    CHECK(std::fabs(small[1]) == doctest::Approx(1.0).epsilon(1e-10));

    // The defining quadratic |c2| k^2 - 2 H^ k + lambda~ K^ annihilates both.
    const auto h = hats_at(s, M_PI, 2.0);
    const InvariantField f = lcf::invariants_at(s, M_PI, 2.0);
    const double ac2 = std::fabs(f.c2.value());
    for (double k : {k1, k2})
        CHECK(std::fabs(ac2 * k * k - 2 * h.H_hat * k + h.lambda_tilde * h.K_hat) <= 1e-10);
}

TEST_CASE("principal curvatures on the singular limit branch") {
    // c2 = 0 with H^ away from zero: one surviving root K^ / (2 H^).
    const InvariantField f = synthetic_field(1.0, 1.0, 1.0, 0.0, 0.0, 1.0);
    const auto h = lcf::hat_values(1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0, 0, 0, 0, 1.0);
    CHECK(h.K_hat == doctest::Approx(4.0));
    CHECK(h.H_hat == doctest::Approx(-4.0));
    const auto p = lcf::principal_from_field(f);
    CHECK(p.branch == lcf::PrincipalBranch::singular_limit);
    CHECK(p.kappa_hat_1 == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK_FALSE(p.kappa_hat_2.has_value());
    CHECK_FALSE(p.V_hat_1.has_value());

    // Singular limit with H^ ~ 0 as well: genuinely degenerate.
    const auto s = paper_example();
    const InvariantField g = lcf::invariants_at(s, M_PI / 2, 1.0);
    CHECK_THROWS_AS((void)lcf::principal_from_field(g), lcf::DegeneratePrincipal);
}

TEST_CASE("weingarten eigenvalues cross-check the extended principal pair") {
    const auto s = paper_example();
    // u = pi: kappa^_i = {+1,-1}, lambda~ = -1, so the eigenvalue set is {-1,+1}.
    auto eig = lcf::weingarten_eigenvalues(s, M_PI, 1.3);
    std::sort(eig.begin(), eig.end());
    CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-9));

    // General point: {kappa^_i / (lambda~ |lambda~|^(1/2))} as a set.
    const double u = 2.1, v = 0.4;
    const auto p = lcf::principal(s, u, v);
    REQUIRE(p.kappa_hat_2.has_value());
    const double lam = -std::cos(2 * u);
    const double den = lam * std::sqrt(std::fabs(lam));
    double e1 = p.kappa_hat_1 / den, e2 = *p.kappa_hat_2 / den;
    if (e1 > e2) std::swap(e1, e2);
    auto w = lcf::weingarten_eigenvalues(s, u, v);
    std::sort(w.begin(), w.end());
    CHECK(w[0] == doctest::Approx(e1).epsilon(1e-9));
    CHECK(w[1] == doctest::Approx(e2).epsilon(1e-9));

    // Guards: lightlike and frame-singular points are rejected.
    CHECK_THROWS_AS((void)lcf::weingarten_eigenvalues(s, M_PI / 4, 1.0), lcf::LightlikePoint);
    CHECK_THROWS_AS((void)lcf::weingarten_eigenvalues(s, M_PI / 2, 1.0), lcf::SingularPoint);
}

TEST_CASE("degeneracy determinant of the squared-distance Hessian factors through the focal quadratic") {
    // (E~ + mu L^)(c2^2 G~ + mu c2 N^) - (c2 F~ + mu c2 M^)^2 = c2 (Q mu^2 + P mu + R),
    // so the Hessian of the squared-distance family degenerates exactly at the
    // focal radii.  Checked numerically at a generic point for both roots.
    const auto s = paper_example();
    for (double u : {1.0, 2.3, 4.0}) {
        const auto h = hats_at(s, u, 2.0);
        const double c2 = -std::cos(u);
        const double disc = h.P * h.P - 4 * h.Q * h.R;
        REQUIRE(disc >= 0.0);
        for (double mu : {(-h.P + std::sqrt(disc)) / (2 * h.Q),
                          (-h.P - std::sqrt(disc)) / (2 * h.Q)}) {
            const double det = (h.E_t + mu * h.L_hat) * (c2 * c2 * h.G_t + mu * c2 * h.N_hat) -
                               std::pow(c2 * h.F_t + mu * c2 * h.M_hat, 2);
            CHECK(std::fabs(det) <= 1e-10);
            CHECK(std::fabs(c2 * (h.Q * mu * mu + h.P * mu + h.R)) <= 1e-10);
        }
    }
}

TEST_CASE("hat jets differentiate the hat values") {
    const auto s = paper_example();
    const double u = 1.7, v = 0.9, h = 1e-5;
    const InvariantField f = lcf::invariants_at(s, u, v);
    const lcf::HatJets hj = lcf::hat_jets(f);

    CHECK(hj.lambda_tilde.value() ==
          doctest::Approx(lcf::lambda_tilde_jet(f).value()).epsilon(1e-12));
    const auto h0 = hats_at(s, u, v);
    CHECK(hj.Q.value() == doctest::Approx(h0.Q).epsilon(1e-12));
    CHECK(hj.P.value() == doctest::Approx(h0.P).epsilon(1e-12));
    CHECK(hj.R.value() == doctest::Approx(h0.R).epsilon(1e-12));

    const auto hp = hats_at(s, u + h, v), hm = hats_at(s, u - h, v);
    CHECK(hj.Q.du_value() == doctest::Approx((hp.Q - hm.Q) / (2 * h)).epsilon(1e-7));
    CHECK(hj.P.du_value() == doctest::Approx((hp.P - hm.P) / (2 * h)).epsilon(1e-7));
    CHECK(hj.R.du_value() == doctest::Approx((hp.R - hm.R) / (2 * h)).epsilon(1e-7));
    const auto vp = hats_at(s, u, v + h), vm = hats_at(s, u, v - h);
    CHECK(std::fabs(hj.Q.dv_value() - (vp.Q - vm.Q) / (2 * h)) <= 1e-7);
}
