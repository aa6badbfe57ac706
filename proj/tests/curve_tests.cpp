#include <doctest.h>

#include <cmath>
#include <vector>

#include "lcframed/errors.hpp"
#include "lcframed/framed_curve.hpp"

using lcf::CausalCharacter;
using lcf::MVec3;

namespace {

constexpr double kSigma = 0.3;

// Timelike line gamma = (t,0,0) framed by an exponentially boosted null pair
//   l+ = e^(s t) (1, sin t, cos t),   l- = e^(-s t) (1, -sin t, -cos t).
// Closed forms: kappa1 = s, kappa2 = e^(-s t)/2, kappa3 = -e^(s t)/2,
// alpha = e^(-s t)/2, beta = e^(s t)/2, n = (0, -cos t, sin t).
lcf::FramedCurve boosted_line() {
    lcf::CurveInput in;
    in.name = "boosted-line";
    in.gamma = {"u", "0", "0"};
    in.ell_plus = {"exp(0.3*u)", "exp(0.3*u)*sin(u)", "exp(0.3*u)*cos(u)"};
    in.ell_minus = {"exp(-0.3*u)", "-exp(-0.3*u)*sin(u)", "-exp(-0.3*u)*cos(u)"};
    in.t_min = -2.0;
    in.t_max = 6.0;
    return lcf::build_curve(in);
}

} // namespace

TEST_CASE("curve invariants match closed forms on the boosted line") {
    const auto c = boosted_line();
    for (double t : {-1.5, 0.0, 0.4, 1.9, 3.3, 5.7}) {
        const auto inv = lcf::curve_invariants(c, t);
        CHECK(inv.kappa1 == doctest::Approx(kSigma).epsilon(1e-12));
        CHECK(inv.kappa2 == doctest::Approx(std::exp(-kSigma * t) / 2).epsilon(1e-12));
        CHECK(inv.kappa3 == doctest::Approx(-std::exp(kSigma * t) / 2).epsilon(1e-12));
        CHECK(inv.alpha == doctest::Approx(std::exp(-kSigma * t) / 2).epsilon(1e-12));
        CHECK(inv.beta == doctest::Approx(std::exp(kSigma * t) / 2).epsilon(1e-12));
    }
}

TEST_CASE("frame sample: normal vector and velocity decomposition") {
    const auto c = boosted_line();
    for (double t : {0.3, 2.6}) {
        const auto fs = lcf::curve_frame_at(c, t);
        CHECK(lcf::sup_norm(fs.n - MVec3{0, -std::cos(t), std::sin(t)}) <= 1e-12);
        // gamma' = alpha l+ + beta l-.
        const auto inv = lcf::curve_invariants(c, t);
        const MVec3 rebuilt = inv.alpha * fs.ell_plus + inv.beta * fs.ell_minus;
        CHECK(lcf::sup_norm(fs.gamma_dot - rebuilt) <= 1e-10);
        // <gamma', gamma'> = -4 alpha beta.
        CHECK(lcf::pseudo_inner(fs.gamma_dot, fs.gamma_dot) ==
              doctest::Approx(-4 * inv.alpha * inv.beta).epsilon(1e-12));
        // Null pair residuals vanish.
        CHECK(lcf::in_delta4({fs.ell_plus, fs.ell_minus}));
    }
}

TEST_CASE("frame ODE holds against finite differences") {
    const auto c = boosted_line();
    const double h = 1e-6;
    for (double t : {0.5, 1.7, 4.2}) {
        const auto inv = lcf::curve_invariants(c, t);
        const auto f0 = lcf::curve_frame_at(c, t);
        const auto fp = lcf::curve_frame_at(c, t + h);
        const auto fm = lcf::curve_frame_at(c, t - h);
        const MVec3 dlp = (1.0 / (2 * h)) * (fp.ell_plus - fm.ell_plus);
        const MVec3 dlm = (1.0 / (2 * h)) * (fp.ell_minus - fm.ell_minus);
        const MVec3 dn = (1.0 / (2 * h)) * (fp.n - fm.n);

        CHECK(lcf::sup_norm(dlp - (inv.kappa1 * f0.ell_plus + 2 * inv.kappa3 * f0.n)) <= 1e-7);
        CHECK(lcf::sup_norm(dlm - (-inv.kappa1 * f0.ell_minus + 2 * inv.kappa2 * f0.n)) <= 1e-7);
        CHECK(lcf::sup_norm(dn - (inv.kappa2 * f0.ell_plus + inv.kappa3 * f0.ell_minus)) <= 1e-7);
    }
}

TEST_CASE("causal character from the invariants") {
    const auto c = boosted_line();
    // alpha beta = 1/4 > 0 everywhere: timelike.
    CHECK(lcf::curve_causal_character(lcf::curve_invariants(c, 1.0)) ==
          CausalCharacter::timelike);

    // Threshold behavior on synthetic invariants.
    lcf::CurveInvariants inv;
    inv.alpha = 0.5, inv.beta = -0.5;
    CHECK(lcf::curve_causal_character(inv) == CausalCharacter::spacelike);
    inv.beta = 0.0;
    CHECK(lcf::curve_causal_character(inv) == CausalCharacter::lightlike);
    inv.alpha = 0.0;
    CHECK(lcf::curve_causal_character(inv) == CausalCharacter::zero);
    inv.alpha = 1e-12, inv.beta = 1e-12; // alpha*beta below tol, magnitudes below tol
    CHECK(lcf::curve_causal_character(inv) == CausalCharacter::zero);
    inv.alpha = 1.0, inv.beta = 1e-12;
    CHECK(lcf::curve_causal_character(inv) == CausalCharacter::lightlike);
}

TEST_CASE("adapted rescale kills kappa1 and scales kappa2, kappa3 reciprocally") {
    const auto c = boosted_line();
    std::vector<double> grid;
    const int n = 161;
    const double lo = 0.0, hi = 4.0;
    for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));

    const auto samples = lcf::adapted_rescale(c, grid);
    REQUIRE(samples.size() == grid.size());

    // c(t) = exp(sigma (t - t0)) for constant kappa1 = sigma.
    for (std::size_t k = 0; k < samples.size(); k += 16) {
        const double expect = std::exp(kSigma * (samples[k].t - lo));
        CHECK(samples[k].c == doctest::Approx(expect).epsilon(1e-9));
        // l+_bar = l+ / c is the unboosted null circle frame e^(s t0)... i.e.
        // l+_bar carries <l+_bar, l-_bar> = -2 still.
        CHECK(lcf::in_delta4({samples[k].ell_plus_bar, samples[k].ell_minus_bar}, 1e-7));
    }

    // Recomputed kappa1_bar from the rescaled frame vanishes: centered
    // differences of l+_bar against l-_bar.
    const double h = grid[1] - grid[0];
    for (std::size_t k = 2; k + 2 < samples.size(); k += 10) {
        const MVec3 dlp = (1.0 / (12 * h)) *
                          (samples[k - 2].ell_plus_bar - 8.0 * samples[k - 1].ell_plus_bar +
                           8.0 * samples[k + 1].ell_plus_bar - samples[k + 2].ell_plus_bar);
        const double kappa1_bar = -0.5 * lcf::pseudo_inner(dlp, samples[k].ell_minus_bar);
        CHECK(std::fabs(kappa1_bar) <= 1e-6);

        // kappa2_bar = c kappa2 and kappa3_bar = kappa3 / c.
        const auto inv = lcf::curve_invariants(c, samples[k].t);
        const auto fs = lcf::curve_frame_at(c, samples[k].t);
        const auto fp = lcf::curve_frame_at(c, samples[k].t + 1e-6);
        const auto fm = lcf::curve_frame_at(c, samples[k].t - 1e-6);
        const MVec3 dn = (1.0 / 2e-6) * (fp.n - fm.n);
        (void)fs;
        const double kappa2_bar = -0.5 * lcf::pseudo_inner(dn, samples[k].ell_minus_bar);
        const double kappa3_bar = -0.5 * lcf::pseudo_inner(dn, samples[k].ell_plus_bar);
        CHECK(kappa2_bar == doctest::Approx(samples[k].c * inv.kappa2).epsilon(1e-6));
        CHECK(kappa3_bar == doctest::Approx(inv.kappa3 / samples[k].c).epsilon(1e-6));
    }
}

TEST_CASE("adapted rescale rejects bad grids") {
    const auto c = boosted_line();
    CHECK_THROWS_AS((void)lcf::adapted_rescale(c, {0.0, 1.0}), lcf::QuadratureError);
    CHECK_THROWS_AS((void)lcf::adapted_rescale(c, {0.0, 1.0, 0.5}), lcf::QuadratureError);
    CHECK_THROWS_AS((void)lcf::adapted_rescale(c, {0.0, 1.0, 1.0}), lcf::QuadratureError);
    CHECK_THROWS_AS((void)lcf::adapted_rescale(c, {-3.0, 0.0, 1.0}), lcf::QuadratureError);
    CHECK_THROWS_AS((void)lcf::adapted_rescale(c, {0.0, 3.0, 7.0}), lcf::QuadratureError);
}

TEST_CASE("build_curve validates the frame") {
    lcf::CurveInput bad;
    bad.name = "not-null";
    bad.gamma = {"u", "0", "0"};
    bad.ell_plus = {"1", "0.5", "0"}; // <l+,l+> = -1 + 0.25: not lightlike
    bad.ell_minus = {"1", "-0.5", "0"};
    bad.t_min = 0.0;
    bad.t_max = 1.0;
    CHECK_THROWS_AS((void)lcf::build_curve(bad), lcf::ValidationError);

    lcf::CurveInput off_span;
    off_span.name = "normal-leak";
    // Frame is fine but gamma' has a component along n = (0,-1,0)... here
    // n = -(1/2) l+ ^ l- with l+=(1,0,1), l-=(1,0,-1) gives n = (0,-1,0)
    // (up to sign); gamma = (0, u, 0) runs straight along it.
    off_span.gamma = {"0", "u", "0"};
    off_span.ell_plus = {"1", "0", "1"};
    off_span.ell_minus = {"1", "0", "-1"};
    off_span.t_min = 0.0;
    off_span.t_max = 1.0;
    CHECK_THROWS_AS((void)lcf::build_curve(off_span), lcf::ValidationError);

    // Parse failures propagate as-is.
    lcf::CurveInput syntax;
    syntax.name = "syntax";
    syntax.gamma = {"u +", "0", "0"};
    syntax.ell_plus = {"1", "sin(u)", "cos(u)"};
    syntax.ell_minus = {"1", "-sin(u)", "-cos(u)"};
    CHECK_THROWS_AS((void)lcf::build_curve(syntax), lcf::ParseError);
}

TEST_CASE("curve_invariants rejects frames off the null-pair manifold") {
    // Valid on [0, 0.05] probe grid at build time would fail; instead build a
    // frame that is valid at build probes but degrades away from them is
    // contrived -- here we simply check the runtime guard fires for a frame
    // violating the pairing everywhere, bypassing build_curve.
    lcf::FramedCurve c;
    c.name = "raw";
    c.gamma = {lcf::parse_expr("u"), lcf::parse_expr("0"), lcf::parse_expr("0")};
    c.ell_plus = {lcf::parse_expr("1"), lcf::parse_expr("0.5"), lcf::parse_expr("0")};
    c.ell_minus = {lcf::parse_expr("1"), lcf::parse_expr("-0.5"), lcf::parse_expr("0")};
    c.t_min = 0.0;
    c.t_max = 1.0;
    CHECK_THROWS_AS((void)lcf::curve_invariants(c, 0.5), lcf::FrameViolation);
}
