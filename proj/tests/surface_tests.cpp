#include <doctest.h>

#include <cmath>

#include "lcframed/config.hpp"
#include "lcframed/errors.hpp"
#include "lcframed/framed_surface.hpp"

using lcf::InvariantField;
using lcf::Jet2;
using lcf::StratumTag;
using lcf::SurfaceDef;

namespace {

SurfaceDef paper_example() { return lcf::build_surface(lcf::builtin_surface("paper-example")); }
SurfaceDef twisted_band() { return lcf::build_surface(lcf::builtin_surface("twisted-band")); }

} // namespace

TEST_CASE("builtin surfaces build and validate") {
    const auto pe = paper_example();
    CHECK(pe.name == "paper-example");
    CHECK(pe.domain.u_max == doctest::Approx(2 * M_PI));
    const auto tb = twisted_band();
    CHECK(tb.name == "twisted-band");
    CHECK_THROWS_AS((void)lcf::builtin_surface("nope"), lcf::ConfigError);
}

TEST_CASE("sphere-like fixture: all twelve invariants in closed form") {
    const auto s = paper_example();
    for (double u : {0.15, 1.1, 2.4, 3.7, 4.9, 6.0})
        for (double v : {0.0, 0.9, 2.5, 5.1}) {
            const InvariantField f = lcf::invariants_at(s, u, v);
            CHECK(f.a1.value() ==
                  doctest::Approx(-0.5 * (std::sin(u) - std::cos(u))).epsilon(1e-12));
            CHECK(f.b1.value() ==
                  doctest::Approx(0.5 * (std::sin(u) + std::cos(u))).epsilon(1e-12));
            CHECK(std::fabs(f.c1.value()) <= 1e-12);
            CHECK(std::fabs(f.a2.value()) <= 1e-12);
            CHECK(std::fabs(f.b2.value()) <= 1e-12);
            CHECK(f.c2.value() == doctest::Approx(-std::cos(u)).epsilon(1e-12));
            CHECK(std::fabs(f.e1.value()) <= 1e-12);
            CHECK(std::fabs(f.f1.value()) <= 1e-12);
            CHECK(std::fabs(f.g1.value()) <= 1e-12);
            CHECK(std::fabs(f.e2.value()) <= 1e-12);
            CHECK(f.f2.value() == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(f.g2.value() == doctest::Approx(-0.5).epsilon(1e-12));

            // Jet slots carry honest derivatives: a1_u = -(cos u + sin u)/2.
            CHECK(f.a1.du_value() ==
                  doctest::Approx(-0.5 * (std::cos(u) + std::sin(u))).epsilon(1e-12));
            CHECK(std::fabs(f.a1.dv_value()) <= 1e-12);
            CHECK(f.c2.du_value() == doctest::Approx(std::sin(u)).epsilon(1e-12));
        }
}

TEST_CASE("twisted band fixture: invariants in closed form") {
    const auto s = twisted_band();
    for (double u : {0.3, 1.2, 2.8, 4.4, 5.9})
        for (double v : {0.4, 2.0, 3.6, 5.2}) {
            const double sig = std::exp(0.2 * std::sin(u) * std::cos(v));
            const InvariantField f = lcf::invariants_at(s, u, v);
            CHECK(f.a1.value() ==
                  doctest::Approx((0.8 + std::cos(u)) / (2 * sig)).epsilon(1e-11));
            CHECK(f.b1.value() ==
                  doctest::Approx(-sig * (std::cos(u) - 0.8) / 2).epsilon(1e-11));
            CHECK(f.c1.value() ==
                  doctest::Approx(-0.5 * std::sin(u) * std::cos(u)).epsilon(1e-11));
            CHECK(std::fabs(f.a2.value()) <= 1e-11);
            CHECK(std::fabs(f.b2.value()) <= 1e-11);
            CHECK(f.c2.value() == doctest::Approx(-std::sin(u)).epsilon(1e-11));
            CHECK(f.e1.value() ==
                  doctest::Approx(0.2 * std::cos(u) * std::cos(v)).epsilon(1e-11));
            CHECK(f.f1.value() ==
                  doctest::Approx(0.25 * std::cos(u) / sig).epsilon(1e-11));
            CHECK(f.g1.value() ==
                  doctest::Approx(-0.25 * std::cos(u) * sig).epsilon(1e-11));
            CHECK(f.e2.value() ==
                  doctest::Approx(-0.2 * std::sin(u) * std::sin(v)).epsilon(1e-11));
            CHECK(f.f2.value() == doctest::Approx(0.5 / sig).epsilon(1e-11));
            CHECK(f.g2.value() == doctest::Approx(-0.5 * sig).epsilon(1e-11));

            // lambda~ = cos^2 u - 0.64 independent of v.
            const double lam = lcf::lambda_tilde_jet(f).value();
            CHECK(lam == doctest::Approx(std::cos(u) * std::cos(u) - 0.64).epsilon(1e-11));
        }
}

TEST_CASE("frame data: X_v proportional to m, frame identities hold") {
    for (const auto& s : {paper_example(), twisted_band()})
        for (double u : {0.7, 2.3, 5.1})
            for (double v : {0.2, 3.0}) {
                const auto fr = lcf::frame_at(s, u, v);
                // X_v = c2 m componentwise.
                const InvariantField f = lcf::invariants_at(s, u, v);
                const double c2 = f.c2.value();
                CHECK(lcf::sup_norm(fr.X_v - c2 * fr.m) <= 1e-10);
                CHECK(lcf::in_delta4({fr.v, fr.w}));
                const auto res = lcf::frame_identity_residuals(s, u, v);
                for (double r : res) CHECK(std::fabs(r) <= 1e-10);
            }
}

TEST_CASE("integrability residuals vanish on honest surfaces") {
    for (const auto& s : {paper_example(), twisted_band()})
        for (double u : {0.4, 1.6, 3.1, 4.8})
            for (double v : {0.8, 2.7, 5.5}) {
                const auto res = lcf::integrability_residuals(s, u, v);
                for (double r : res) CHECK(std::fabs(r) <= 1e-9);
            }
}

TEST_CASE("lambda~ jet matches -4 a1 b1 and its derivatives") {
    const auto s = paper_example();
    const InvariantField f = lcf::invariants_at(s, 1.3, 0.6);
    const Jet2 lam = lcf::lambda_tilde_jet(f);
    CHECK(lam.value() == doctest::Approx(-std::cos(2 * 1.3)).epsilon(1e-12));
    CHECK(lam.du_value() == doctest::Approx(2 * std::sin(2 * 1.3)).epsilon(1e-12));
    CHECK(std::fabs(lam.dv_value()) <= 1e-12);
    CHECK(lam.get(2, 0) == doctest::Approx(4 * std::cos(2 * 1.3)).epsilon(1e-11));
}

TEST_CASE("stratification over the sphere-like fixture") {
    const auto s = paper_example();
    CHECK(lcf::stratify(s, 0.2, 1.0).tag == StratumTag::timelike);
    CHECK(lcf::stratify(s, 1.0, 1.0).tag == StratumTag::spacelike);
    CHECK(lcf::stratify(s, M_PI / 4, 2.0).tag == StratumTag::lightlike);
    CHECK(lcf::stratify(s, 3 * M_PI / 4, 0.3).tag == StratumTag::lightlike);
    CHECK(lcf::stratify(s, M_PI / 2, 1.0).tag == StratumTag::singular_S1);
    CHECK(lcf::stratify(s, 3 * M_PI / 2, 4.0).tag == StratumTag::singular_S1);
    CHECK(lcf::stratify(s, M_PI, 1.0).tag == StratumTag::timelike);

    // Twisted band: c2 = -sin u vanishes at u = 0, pi with a1, b1 nonzero.
    const auto tb = twisted_band();
    CHECK(lcf::stratify(tb, 0.0, 1.0).tag == StratumTag::singular_S1);
    CHECK(lcf::stratify(tb, M_PI, 2.0).tag == StratumTag::singular_S1);
    CHECK(lcf::stratify(tb, std::acos(0.8), 1.0).tag == StratumTag::lightlike);
    CHECK(lcf::stratify(tb, 1.2, 1.0).tag == StratumTag::timelike);
    CHECK(lcf::stratify(tb, 0.3, 1.0).tag == StratumTag::spacelike);

    CHECK(lcf::to_string(StratumTag::singular_S1) == "singular_S1");
    CHECK(lcf::to_string(StratumTag::lightlike) == "lightlike");
}

TEST_CASE("stratification of synthetic degenerate fields") {
    InvariantField f;
    f.a1 = Jet2::constant(0.0);
    f.b1 = Jet2::constant(0.0);
    f.c2 = Jet2::constant(1.0);
    CHECK(lcf::stratify(f).tag == StratumTag::singular_S2);
    f.c2 = Jet2::constant(0.0);
    CHECK(lcf::stratify(f).tag == StratumTag::degenerate_other);
}

TEST_CASE("swapping the null frame roles maps the invariants correctly") {
    const auto s = paper_example();
    const InvariantField f = lcf::invariants_at(s, 2.2, 0.9);
    const InvariantField g = lcf::swap_null_roles(f);
    CHECK(g.a1.value() == doctest::Approx(f.b1.value()));
    CHECK(g.b1.value() == doctest::Approx(f.a1.value()));
    CHECK(g.c1.value() == doctest::Approx(-f.c1.value()));
    CHECK(g.c2.value() == doctest::Approx(-f.c2.value()));
    CHECK(g.e1.value() == doctest::Approx(-f.e1.value()));
    CHECK(g.e2.value() == doctest::Approx(-f.e2.value()));
    CHECK(g.f1.value() == doctest::Approx(-f.g1.value()));
    CHECK(g.g1.value() == doctest::Approx(-f.f1.value()));
    CHECK(g.f2.value() == doctest::Approx(-f.g2.value()));
    CHECK(g.g2.value() == doctest::Approx(-f.f2.value()));
    // Jets swap too, and lambda~ = -4 a1 b1 is invariant.
    CHECK(g.a1.du_value() == doctest::Approx(f.b1.du_value()));
    CHECK(lcf::lambda_tilde_jet(g).value() ==
          doctest::Approx(lcf::lambda_tilde_jet(f).value()).epsilon(1e-13));
    // Swapping twice is the identity.
    const InvariantField h = lcf::swap_null_roles(g);
    CHECK(h.c1.value() == doctest::Approx(f.c1.value()));
    CHECK(h.f1.value() == doctest::Approx(f.f1.value()));
}

TEST_CASE("build_surface rejects broken inputs") {
    // Frame vector off the light cone.
    lcf::SurfaceInput bad;
    bad.name = "bad-frame";
    bad.X = {"sin(u)", "cos(u)*sin(v)", "cos(u)*cos(v)"};
    bad.v = {"1", "0", "0.5"};
    bad.w = {"1", "-sin(v)", "-cos(v)"};
    bad.domain = {0, 2 * M_PI, 0, 2 * M_PI};
    CHECK_THROWS_AS((void)lcf::build_surface(bad), lcf::ValidationError);

    // Valid null pair but X_v not normal: the tangent normalization
    // <X_v, v> = <X_v, w> = 0 fails for X = (u, v, 0) under this frame.
    lcf::SurfaceInput off;
    off.name = "off-normalization";
    off.X = {"u", "v", "0"};
    off.v = {"1", "sin(v)", "cos(v)"};
    off.w = {"1", "-sin(v)", "-cos(v)"};
    off.domain = {0, 2 * M_PI, 0, 2 * M_PI};
    CHECK_THROWS_AS((void)lcf::build_surface(off), lcf::ValidationError);

    // Parse failure propagates.
    lcf::SurfaceInput syntax = lcf::builtin_surface("paper-example");
    syntax.X[0] = "sin(u";
    CHECK_THROWS_AS((void)lcf::build_surface(syntax), lcf::ParseError);
}
