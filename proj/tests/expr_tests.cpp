#include <doctest.h>

#include <cmath>
#include <random>

#include "lcframed/errors.hpp"
#include "lcframed/expr.hpp"

using lcf::parse_expr;

TEST_CASE("literals, variables and pi") {
    CHECK(lcf::eval_value(parse_expr("42"), 0, 0) == doctest::Approx(42.0));
    CHECK(lcf::eval_value(parse_expr("2.5e-1"), 0, 0) == doctest::Approx(0.25));
    CHECK(lcf::eval_value(parse_expr("u"), 1.5, 7.0) == doctest::Approx(1.5));
    CHECK(lcf::eval_value(parse_expr("v"), 1.5, 7.0) == doctest::Approx(7.0));
    CHECK(lcf::eval_value(parse_expr("pi"), 0, 0) == doctest::Approx(M_PI));
}

TEST_CASE("arithmetic, precedence and associativity") {
    CHECK(lcf::eval_value(parse_expr("1 + 2*3"), 0, 0) == doctest::Approx(7.0));
    CHECK(lcf::eval_value(parse_expr("(1 + 2)*3"), 0, 0) == doctest::Approx(9.0));
    CHECK(lcf::eval_value(parse_expr("2 - 3 - 4"), 0, 0) == doctest::Approx(-5.0));
    CHECK(lcf::eval_value(parse_expr("12 / 3 / 2"), 0, 0) == doctest::Approx(2.0));
    // '^' binds tighter than unary minus and is right-associative.
    CHECK(lcf::eval_value(parse_expr("-u^2"), 3.0, 0) == doctest::Approx(-9.0));
    CHECK(lcf::eval_value(parse_expr("(-u)^2"), 3.0, 0) == doctest::Approx(9.0));
    CHECK(lcf::eval_value(parse_expr("2^3^2"), 0, 0) == doctest::Approx(512.0));
    // Unary minus binds tighter than '*': -2*3 = (-2)*3.
    CHECK(lcf::eval_value(parse_expr("-2*3"), 0, 0) == doctest::Approx(-6.0));
    CHECK(lcf::eval_value(parse_expr("2*-3"), 0, 0) == doctest::Approx(-6.0));
    CHECK(lcf::eval_value(parse_expr("u^-2"), 2.0, 0) == doctest::Approx(0.25));
}

TEST_CASE("function calls match the standard library") {
    const double u = 0.83, v = 1.91;
    CHECK(lcf::eval_value(parse_expr("sin(u)*cos(v)"), u, v) ==
          doctest::Approx(std::sin(u) * std::cos(v)).epsilon(1e-15));
    CHECK(lcf::eval_value(parse_expr("exp(0.2*sin(u)*cos(v))"), u, v) ==
          doctest::Approx(std::exp(0.2 * std::sin(u) * std::cos(v))).epsilon(1e-15));
    CHECK(lcf::eval_value(parse_expr("log(u) + sqrt(v)"), u, v) ==
          doctest::Approx(std::log(u) + std::sqrt(v)).epsilon(1e-15));
    CHECK(lcf::eval_value(parse_expr("tan(u/2)"), u, v) ==
          doctest::Approx(std::tan(u / 2)).epsilon(1e-15));
}

TEST_CASE("print/parse round trip is structurally stable") {
    const char* samples[] = {
        "sin(u)*cos(v)",
        "-u^2 + 3*(v - 1)",
        "exp(0.2*sin(u)*cos(v))",
        "2^3^2",
        "1 - 2 - 3",
        "u/-v",
        "pi*u - sqrt(v + 4)",
        "tan(u)^2 / (1 + v^2)",
    };
    for (const char* s : samples) {
        const auto ast = parse_expr(s);
        const std::string printed = lcf::to_string(ast);
        const auto reparsed = parse_expr(printed);
        CHECK_MESSAGE(lcf::structurally_equal(ast, reparsed), "round trip failed for: ", s,
                      " printed as: ", printed);
        // And the printed form evaluates identically.
        CHECK(lcf::eval_value(reparsed, 0.37, 1.42) ==
              doctest::Approx(lcf::eval_value(ast, 0.37, 1.42)).epsilon(1e-15));
    }
}

TEST_CASE("structurally_equal distinguishes different trees") {
    CHECK(lcf::structurally_equal(parse_expr("u + v"), parse_expr("u+v")));
    CHECK_FALSE(lcf::structurally_equal(parse_expr("u + v"), parse_expr("v + u")));
    CHECK_FALSE(lcf::structurally_equal(parse_expr("2*u"), parse_expr("u*2")));
    CHECK_FALSE(lcf::structurally_equal(parse_expr("u"), parse_expr("u + 0")));
}

TEST_CASE("parse errors carry the byte offset") {
    CHECK_THROWS_AS((void)parse_expr(""), lcf::ParseError);
    CHECK_THROWS_AS((void)parse_expr("1 +"), lcf::ParseError);
    CHECK_THROWS_AS((void)parse_expr("(1 + 2"), lcf::ParseError);
    CHECK_THROWS_AS((void)parse_expr("sin()"), lcf::ParseError);
    CHECK_THROWS_AS((void)parse_expr("1 2"), lcf::ParseError);
    CHECK_THROWS_AS((void)parse_expr("u ^ v"), lcf::ParseError); // exponent must be an integer

    try {
        (void)parse_expr("1 + * 2");
        FAIL("expected ParseError");
    } catch (const lcf::ParseError& e) {
        CHECK(e.offset == 4);
        CHECK_FALSE(e.expected.empty());
    }
}

TEST_CASE("unknown identifiers are reported with their name") {
    CHECK_THROWS_AS((void)parse_expr("sin(x)"), lcf::UnknownIdentifier);
    try {
        (void)parse_expr("u + bogus(v)");
        FAIL("expected UnknownIdentifier");
    } catch (const lcf::UnknownIdentifier& e) {
        CHECK(e.name == "bogus");
        CHECK(e.offset == 4);
    }
}

TEST_CASE("evaluation domain guards") {
    CHECK_THROWS_AS((void)lcf::eval_value(parse_expr("log(u)"), -1.0, 0), lcf::DomainError);
    CHECK_THROWS_AS((void)lcf::eval_value(parse_expr("sqrt(u - 2)"), 1.0, 0), lcf::DomainError);
    CHECK_THROWS_AS((void)lcf::eval_value(parse_expr("1/u"), 0.0, 0), lcf::DomainError);
    CHECK_THROWS_AS((void)lcf::eval_jet(parse_expr("log(v)"), 0.5, 0.0), lcf::DomainError);
}

TEST_CASE("jet evaluation agrees with finite differences") {
    const auto ast = parse_expr("exp(0.2*sin(u)*cos(v)) * (u^2 - v) + tan(u/4)");
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(0.3, 2.8);
    const double h = 1e-5;
    for (int k = 0; k < 25; ++k) {
        const double u = d(rng), v = d(rng);
        const lcf::Jet2 j = lcf::eval_jet(ast, u, v);
        CHECK(j.value() == doctest::Approx(lcf::eval_value(ast, u, v)).epsilon(1e-14));
        const double fu = (lcf::eval_value(ast, u + h, v) - lcf::eval_value(ast, u - h, v)) /
                          (2 * h);
        const double fv = (lcf::eval_value(ast, u, v + h) - lcf::eval_value(ast, u, v - h)) /
                          (2 * h);
        // Second differences lose ~eps/h^2 to rounding, so use a larger step.
        const double h2 = 1e-4;
        const double fuu = (lcf::eval_value(ast, u + h2, v) - 2 * lcf::eval_value(ast, u, v) +
                            lcf::eval_value(ast, u - h2, v)) /
                           (h2 * h2);
        CHECK(j.du_value() == doctest::Approx(fu).epsilon(1e-8));
        CHECK(j.dv_value() == doctest::Approx(fv).epsilon(1e-8));
        CHECK(j.get(2, 0) == doctest::Approx(fuu).epsilon(1e-5));
    }
}

TEST_CASE("order-4 jets extend the order-3 jet") {
    const auto ast = parse_expr("sin(u)*cos(v) + u^3*v");
    const double u = 1.2, v = 0.7;
    const lcf::Jet2 j3 = lcf::eval_jet(ast, u, v);
    const lcf::Jet<4> j4 = lcf::eval_jet4(ast, u, v);
    for (int dg = 0; dg <= 3; ++dg)
        for (int jj = 0; jj <= dg; ++jj)
            CHECK(j4.get(dg - jj, jj) == doctest::Approx(j3.get(dg - jj, jj)).epsilon(1e-14));
    // Fourth-order slot of sin(u)cos(v): d^4/du^4 = sin(u)cos(v).
    CHECK(j4.get(4, 0) == doctest::Approx(std::sin(u) * std::cos(v)).epsilon(1e-13));
    // d^4/(du^3 dv): u^3 v contributes 6, sin(u)cos(v) contributes cos(u)sin(v).
    CHECK(j4.get(3, 1) ==
          doctest::Approx(6.0 + std::cos(u) * std::sin(v)).epsilon(1e-13));
}
