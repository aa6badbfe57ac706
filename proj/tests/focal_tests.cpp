#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lcframed/config.hpp"
#include "lcframed/errors.hpp"
#include "lcframed/focal.hpp"
#include "lcframed/framed_surface.hpp"

using lcf::BranchLabel;
using lcf::InvariantField;
using lcf::MuRoots;
using lcf::SurfaceDef;
using lcf::VerdictState;

namespace {

SurfaceDef paper_example() { return lcf::build_surface(lcf::builtin_surface("paper-example")); }

const lcf::MuRoot& root_near(const MuRoots& r, double mu) {
    REQUIRE_FALSE(r.roots.empty());
    const lcf::MuRoot* best = &r.roots.front();
    for (const auto& root : r.roots)
        if (std::fabs(root.mu - mu) < std::fabs(best->mu - mu)) best = &root;
    REQUIRE(std::fabs(best->mu - mu) <= 1e-8);
    return *best;
}

} // namespace

TEST_CASE("focal radii of the sphere-like fixture are -1 and cos 2u") {
    const auto s = paper_example();
    for (double u : {0.4, 1.0, 2.0, 2.9, 4.2, 5.8}) {
        const MuRoots r = lcf::mu_roots(s, u, 1.3);
        REQUIRE(r.roots.size() == 2);
        CHECK_FALSE(r.degenerate);
        std::vector<double> mus{r.roots[0].mu, r.roots[1].mu};
        std::sort(mus.begin(), mus.end());
        std::vector<double> want{-1.0, std::cos(2 * u)};
        std::sort(want.begin(), want.end());
        CHECK(mus[0] == doctest::Approx(want[0]).epsilon(1e-10));
        CHECK(mus[1] == doctest::Approx(want[1]).epsilon(1e-10));
    }

    // On the lightlike locus R = c2 lambda~ = 0, so 0 joins the root set.
    const MuRoots rl = lcf::mu_roots(s, M_PI / 4, 2.0);
    REQUIRE(rl.roots.size() == 2);
    std::vector<double> mus{rl.roots[0].mu, rl.roots[1].mu};
    std::sort(mus.begin(), mus.end());
    CHECK(mus[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(std::fabs(mus[1]) <= 1e-9);
}

TEST_CASE("implicit jets of the focal radii") {
    const auto s = paper_example();
    const double u = 2.0;
    const MuRoots r = lcf::mu_roots(s, u, 1.0);

    const auto& sheet1 = root_near(r, -1.0);
    REQUIRE(sheet1.jets_valid);
    CHECK(std::fabs(sheet1.jet.get(1, 0)) <= 1e-9); // constant radius: mu_u = 0
    CHECK(std::fabs(sheet1.jet.get(0, 1)) <= 1e-9);

    const auto& sheet2 = root_near(r, std::cos(2 * u));
    REQUIRE(sheet2.jets_valid);
    CHECK(sheet2.jet.get(1, 0) == doctest::Approx(-2 * std::sin(2 * u)).epsilon(1e-8));
    CHECK(std::fabs(sheet2.jet.get(0, 1)) <= 1e-8);
    // Second derivative of cos 2u is -4 cos 2u.
    CHECK(sheet2.jet.get(2, 0) == doctest::Approx(-4 * std::cos(2 * u)).epsilon(1e-6));
}

TEST_CASE("double root: jets are refused, the collision is flagged") {
    const auto s = paper_example();
    // cos 2u = -1 + O(eps^2) at u = pi/2 - eps: the two radii collide.
    const MuRoots r = lcf::mu_roots(s, M_PI / 2 - 5e-6, 1.0);
    REQUIRE(r.roots.size() == 2);
    for (const auto& root : r.roots) {
        CHECK(root.near_double);
        CHECK_FALSE(root.jets_valid);
        CHECK_THROWS_AS((void)lcf::barred_invariants(lcf::invariants_at(s, M_PI / 2 - 5e-6, 1.0),
                                                     root),
                        lcf::DoubleRootNoJet);
    }

    // At u = pi/2 exactly the quadratic vanishes identically: every radius
    // degenerates the squared-distance Hessian.
    const MuRoots rd = lcf::mu_roots(s, M_PI / 2, 1.0);
    CHECK(rd.degenerate);
    CHECK(rd.roots.empty());
}

TEST_CASE("find_branch looks up roots by label") {
    const auto s = paper_example();
    const MuRoots r = lcf::mu_roots(s, M_PI / 4, 2.0);
    CHECK(lcf::find_branch(r, BranchLabel::plus) != nullptr);
    CHECK(lcf::find_branch(r, BranchLabel::minus) != nullptr);
    CHECK(lcf::find_branch(r, BranchLabel::linear) == nullptr);
    CHECK(lcf::to_string(BranchLabel::plus) == "plus");
    CHECK(lcf::to_string(BranchLabel::linear) == "linear");
}

TEST_CASE("constant-radius sheet collapses to the axis with its own invariants") {
    const auto s = paper_example();
    for (double u : {0.7, 2.0, 3.5}) {
        const double vv = 1.1;
        const MuRoots r = lcf::mu_roots(s, u, vv);
        const auto& root = root_near(r, -1.0);

        // F = X - mu n^ lands on the x1-axis at height 2 sin u.
        const auto fr = lcf::frame_at(s, u, vv);
        const InvariantField f = lcf::invariants_at(s, u, vv);
        const lcf::MVec3 n_hat =
            -f.a1.value() * fr.v + f.b1.value() * fr.w;
        const lcf::MVec3 F = fr.X - root.mu * n_hat;
        CHECK(F.x1 == doctest::Approx(2 * std::sin(u)).epsilon(1e-10));
        CHECK(std::fabs(F.x2) <= 1e-10);
        CHECK(std::fabs(F.x3) <= 1e-10);

        // Induced invariants: a1_bar = b1_bar = cos u, c1_bar = c2_bar = 0.
        const auto B = lcf::barred_invariants(f, root);
        CHECK(B.a1.value() == doctest::Approx(std::cos(u)).epsilon(1e-9));
        CHECK(B.b1.value() == doctest::Approx(std::cos(u)).epsilon(1e-9));
        CHECK(std::fabs(B.c1.value()) <= 1e-9);
        CHECK(std::fabs(B.c2.value()) <= 1e-9);
        CHECK(std::fabs(B.a2.value()) <= 1e-9);
        CHECK(std::fabs(B.b2.value()) <= 1e-9);
    }
}

TEST_CASE("swept sheet: astroid-like caustic with closed-form invariants") {
    const auto s = paper_example();
    for (double u : {0.7, 2.0, 4.1}) {
        const double vv = 2.4;
        const double su = std::sin(u), cu = std::cos(u);
        const MuRoots r = lcf::mu_roots(s, u, vv);
        const auto& root = root_near(r, std::cos(2 * u));

        const lcf::MVec3 F = lcf::focal_point(
            s, u, vv, root.label);
        CHECK(F.x1 == doctest::Approx(2 * su * su * su).epsilon(1e-9));
        CHECK(F.x2 == doctest::Approx(2 * cu * cu * cu * std::sin(vv)).epsilon(1e-9));
        CHECK(F.x3 == doctest::Approx(2 * cu * cu * cu * std::cos(vv)).epsilon(1e-9));

        const InvariantField f = lcf::invariants_at(s, u, vv);
        const auto B = lcf::barred_invariants(f, root);
        CHECK(B.a1.value() == doctest::Approx(3 * su * cu * (su - cu)).epsilon(1e-8));
        CHECK(B.b1.value() == doctest::Approx(3 * su * cu * (su + cu)).epsilon(1e-8));
        CHECK(B.c2.value() == doctest::Approx(-2 * cu * cu * cu).epsilon(1e-8));

        // The full sheet report agrees and carries a small oracle residual.
        const auto sheet = lcf::focal_invariants(s, u, vv, root.label);
        CHECK(sheet.mu == doctest::Approx(std::cos(2 * u)).epsilon(1e-9));
        CHECK(sheet.a1_bar == doctest::Approx(B.a1.value()).epsilon(1e-10));
        CHECK(sheet.c2_bar == doctest::Approx(B.c2.value()).epsilon(1e-10));
        REQUIRE(sheet.oracle_residual.has_value());
        CHECK(*sheet.oracle_residual <= 1e-5);

        // Its curvature bundle is built from the barred first-order data:
        // lambda~_bar = -4 a1_bar b1_bar.
        const auto bundle = lcf::focal_curvatures(s, u, vv, root.label);
        CHECK(bundle.lambda_tilde ==
              doctest::Approx(-4 * B.a1.value() * B.b1.value()).epsilon(1e-9));
        CHECK(bundle.sign == (B.c2.value() >= 0 ? 1 : -1));
    }
}

TEST_CASE("finite-difference oracle agrees with the closed-form sheet invariants") {
    const auto s = paper_example();
    const double u = 2.0, vv = 1.0;
    const MuRoots r = lcf::mu_roots(s, u, vv);
    const auto& root = root_near(r, std::cos(2 * u));
    const auto probe = lcf::focal_invariant_oracle(s, u, vv, root.label);
    const InvariantField f = lcf::invariants_at(s, u, vv);
    const auto B = lcf::barred_invariants(f, root);
    CHECK(probe[0] == doctest::Approx(B.a1.value()).epsilon(1e-5));
    CHECK(probe[1] == doctest::Approx(B.b1.value()).epsilon(1e-5));
    CHECK(std::fabs(probe[2] - B.c1.value()) <= 1e-5);
    CHECK(std::fabs(probe[3] - B.a2.value()) <= 1e-5);
    CHECK(std::fabs(probe[4] - B.b2.value()) <= 1e-5);
    CHECK(probe[5] == doctest::Approx(B.c2.value()).epsilon(1e-5));
}

TEST_CASE("branch continuation keeps each sheet continuous across the label flip") {
    const auto s = paper_example();
    const auto grid = lcf::continue_branches(s, 48, 8);
    REQUIRE(grid.us.size() == 48);
    REQUIRE(grid.vs.size() == 8);

    int both = 0;
    for (std::size_t i = 0; i < grid.us.size(); ++i)
        for (std::size_t j = 0; j < grid.vs.size(); ++j) {
            const auto& cell = grid.at(i, j);
            if (!cell.available[0] || !cell.available[1] || cell.branch_cut) continue;
            ++both;
            // As a set the radii are {-1, cos 2u}.
            const double c2u = std::cos(2 * grid.us[i]);
            const double d0 = std::min(std::fabs(cell.mu[0] + 1.0),
                                       std::fabs(cell.mu[0] - c2u));
            const double d1 = std::min(std::fabs(cell.mu[1] + 1.0),
                                       std::fabs(cell.mu[1] - c2u));
            CHECK(d0 <= 1e-8);
            CHECK(d1 <= 1e-8);
        }
    CHECK(both > 300);

    // Slot-wise continuity in u at a fixed v away from collisions: each slot
    // follows one smooth function even though the plus/minus labels reorder
    // at u = pi/2 and 3pi/2.
    const std::size_t j = 3;
    for (std::size_t slot : {std::size_t{0}, std::size_t{1}})
        for (std::size_t i = 0; i + 1 < grid.us.size(); ++i) {
            const auto& a = grid.at(i, j);
            const auto& b = grid.at(i + 1, j);
            if (!a.available[slot] || !b.available[slot] || a.branch_cut || b.branch_cut)
                continue;
            const double du = grid.us[i + 1] - grid.us[i];
            // |d(cos 2u)/du| <= 2, plus margin for the collision neighborhoods.
            CHECK(std::fabs(b.mu[slot] - a.mu[slot]) <= 2.5 * du + 1e-6);
        }
}

TEST_CASE("relation checks between base and focal invariants") {
    const auto s = paper_example();

    // On this fixture a1 g2 - b1 f2 = -(1/2) cos u, which only vanishes where
    // the focal quadratic is itself fully degenerate, so the c2 equivalence
    // is never decidable here.
    CHECK(lcf::relation_checks(s, M_PI, 1.0).c2_iff_c2_bar.state ==
          VerdictState::not_applicable);
    CHECK(lcf::relation_checks(s, 1.0, 1.0).c2_iff_c2_bar.state ==
          VerdictState::not_applicable);

    // Synthetic field with a1 g2 = b1 f2 and a simple linear focal branch:
    // c2_bar = c2 exactly, so the equivalence holds with both sides nonzero.
    {
        InvariantField f;
        f.a1 = lcf::Jet2::constant(1.0);
        f.b1 = lcf::Jet2::constant(1.0);
        f.b1.set(1, 0, 1.0);
        f.c2 = lcf::Jet2::constant(1.0);
        f.f2 = lcf::Jet2::constant(1.0);
        f.g2 = lcf::Jet2::constant(1.0);
        const MuRoots r = lcf::mu_roots(f);
        REQUIRE(r.roots.size() == 1);
        CHECK(r.roots[0].label == BranchLabel::linear);
        CHECK(r.roots[0].mu == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(lcf::find_branch(r, BranchLabel::linear) != nullptr);
        CHECK(lcf::find_branch(r, BranchLabel::plus) == nullptr);

        const auto rc = lcf::relation_checks(f);
        CHECK(rc.c2_iff_c2_bar.state == VerdictState::holds);
        CHECK(rc.c2_iff_c2_bar.lhs == doctest::Approx(1.0));
        CHECK(rc.c2_iff_c2_bar.rhs == doctest::Approx(1.0));
    }

    // Lightlike points of this fixture are non-degenerate folds with K^ and
    // H^ both nonzero: the remaining implications stay not-applicable.
    const auto light = lcf::relation_checks(s, M_PI / 4, 2.0);
    CHECK(light.degenerate_lightlike_focal.state == VerdictState::not_applicable);
    CHECK(light.mean_transfer.state == VerdictState::not_applicable);
    CHECK(light.gauss_transfer.state == VerdictState::not_applicable);

    CHECK(lcf::to_string(VerdictState::holds) == "holds");
    CHECK(lcf::to_string(VerdictState::not_applicable) == "not_applicable");
}
