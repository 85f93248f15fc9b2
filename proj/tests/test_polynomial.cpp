#include <levicore/parse.hpp>
#include <levicore/polynomial.hpp>

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace levicore;
using testutil::Rng;

namespace {
Ring xyz() { return Ring::real({"x", "y", "z"}); }
Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }
}  // namespace

TEST_CASE("parse_polynomial canonical cases") {
    Ring r = xyz();
    Polynomial umbrella = P(r, "x^2 - y*z^2");
    Polynomial x = Polynomial::variable(r, "x");
    Polynomial y = Polynomial::variable(r, "y");
    Polynomial z = Polynomial::variable(r, "z");
    REQUIRE(umbrella == x * x - y * z * z);

    REQUIRE(P(r, "0").is_zero());
    REQUIRE(P(r, "0").terms().empty());

    REQUIRE(P(r, "(x+y)^2") == x * x + 2 * Rational(1) * x * y + y * y);
    REQUIRE(P(r, "(x+y)^2") == P(r, "x^2 + 2*x*y + y^2"));

    REQUIRE(P(r, "3/4") == Polynomial::constant(r, Rational(3, 4)));
    REQUIRE(P(r, "-x + 1") == Polynomial::constant(r, 1) - x);
}

TEST_CASE("parse errors carry positions") {
    Ring r = xyz();
    REQUIRE_THROWS_AS(P(r, "x + w"), ParseError);
    REQUIRE_THROWS_AS(P(r, "x +"), ParseError);
    REQUIRE_THROWS_AS(P(r, "x ^ y"), ParseError);
    REQUIRE_THROWS_AS(P(r, "2x"), ParseError);
    REQUIRE_THROWS_AS(P(r, "1/0"), ParseError);
    try {
        P(r, "x + w");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.position == 4);
    }
}

TEST_CASE("print-parse round trip is the identity") {
    Ring r = xyz();
    Rng rng(12345);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testutil::random_polynomial(rng, r, 6, 3);
        REQUIRE(P(r, p.str()) == p);
    }
    REQUIRE(P(r, P(r, "x^2 - y*z^2").str()) == P(r, "x^2 - y*z^2"));
}

TEST_CASE("ring arithmetic basics") {
    Ring r = xyz();
    REQUIRE(P(r, "(x+y)*(x-y)") == P(r, "x^2 - y^2"));
    Polynomial p = P(r, "x^2 + 3*y - 1/2");
    REQUIRE((p * Polynomial::zero(r)).is_zero());
    REQUIRE(p.pow(0) == Polynomial::constant(r, 1));
    REQUIRE(p.pow(3) == p * p * p);
}

TEST_CASE("ring mismatch is an error") {
    Ring r1 = xyz();
    Ring r2 = Ring::real({"a", "b"});
    Polynomial p = Polynomial::variable(r1, "x");
    Polynomial q = Polynomial::variable(r2, "a");
    REQUIRE_THROWS_AS(p + q, InputError);
    REQUIRE_THROWS_AS(p * q, InputError);
}

TEST_CASE("commutative ring axioms on random polynomials") {
    Ring r = xyz();
    Rng rng(777);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = testutil::random_polynomial(rng, r, 4, 2);
        Polynomial b = testutil::random_polynomial(rng, r, 4, 2);
        Polynomial c = testutil::random_polynomial(rng, r, 4, 2);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + Polynomial::zero(r) == a);
        REQUIRE(a * Polynomial::constant(r, 1) == a);
    }
}

TEST_CASE("differentiate") {
    Ring r = xyz();
    REQUIRE(P(r, "x^2 - y*z^2").differentiate("x") == P(r, "2*x"));
    REQUIRE(P(r, "7/3").differentiate("x").is_zero());
    REQUIRE_THROWS_AS(P(r, "x").differentiate("w"), InputError);

    Rng rng(31337);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = testutil::random_polynomial(rng, r, 4, 3);
        Polynomial q = testutil::random_polynomial(rng, r, 4, 3);
        for (int v = 0; v < 3; ++v) {
            // Leibniz rule, exactly.
            REQUIRE((p * q).differentiate(v) == p.differentiate(v) * q + q.differentiate(v) * p);
            // d commutes with addition.
            REQUIRE((p + q).differentiate(v) == p.differentiate(v) + q.differentiate(v));
        }
    }
}

TEST_CASE("bar involution") {
    Ring c = Ring::complexified({"z1", "z2"});
    Polynomial z1 = Polynomial::variable(c, "z1");
    Polynomial zb1 = Polynomial::variable(c, "zbar1");
    Polynomial z2 = Polynomial::variable(c, "z2");
    Polynomial zb2 = Polynomial::variable(c, "zbar2");

    REQUIRE((z1 * z1 * zb2).bar() == zb1 * zb1 * z2);
    REQUIRE((z1 * zb1).bar() == z1 * zb1);

    Rng rng(999);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = testutil::random_polynomial(rng, c, 5, 2);
        Polynomial q = testutil::random_polynomial(rng, c, 5, 2);
        REQUIRE(p.bar().bar() == p);
        REQUIRE((p + q).bar() == p.bar() + q.bar());
        REQUIRE((p * q).bar() == p.bar() * q.bar());
    }

    Ring r = xyz();
    REQUIRE_THROWS_AS(Polynomial::variable(r, "x").bar(), InputError);
}

TEST_CASE("evaluate") {
    Ring r = xyz();
    Polynomial umbrella = P(r, "x^2 - y*z^2");
    REQUIRE(umbrella.evaluate({1, 1, 1}) == 0);
    REQUIRE(umbrella.evaluate({1, 0, 0}) == 1);
    REQUIRE(Polynomial::zero(r).evaluate({Rational(2), Rational(-7, 3), Rational(0)}) == 0);
    REQUIRE_THROWS_AS(umbrella.evaluate({1, 1}), InputError);
}

TEST_CASE("linear substitution") {
    Ring r = xyz();
    Polynomial p = P(r, "x^2 - y*z^2");
    std::vector<std::vector<Rational>> id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    REQUIRE(p.substitute_linear(id) == p);

    std::vector<std::vector<Rational>> swap_xy = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    REQUIRE(P(r, "x^2").substitute_linear(swap_xy) == P(r, "y^2"));

    std::vector<std::vector<Rational>> shear = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    REQUIRE(P(r, "x^2").substitute_linear(shear) == P(r, "x^2 + 2*x*y + y^2"));

    std::vector<std::vector<Rational>> singular = {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    REQUIRE_THROWS_AS(p.substitute_linear(singular), InputError);
}

TEST_CASE("ring invariants") {
    REQUIRE_THROWS_AS(Ring::real({"x", "x"}), InputError);
    REQUIRE_THROWS_AS(Ring::real({""}), InputError);
    REQUIRE_THROWS_AS(Ring::with_involution({"a", "b"}, {{"a", "a"}}), InputError);
    REQUIRE_THROWS_AS(Ring::with_involution({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}), InputError);

    Ring c = Ring::complexified({"z1"});
    REQUIRE(c.arity() == 2);
    REQUIRE(c.variable(0) == "z1");
    REQUIRE(c.variable(1) == "zbar1");
    REQUIRE(c.partner(0) == 1);
    REQUIRE(c.is_holomorphic(0));
    REQUIRE(!c.is_holomorphic(1));
}

TEST_CASE("primitive normalization and content") {
    Ring r = xyz();
    Polynomial p = P(r, "4*x^2 - 2*y");
    REQUIRE(p.content() == Rational(2));
    REQUIRE(p.primitive() == P(r, "2*x^2 - y"));
    REQUIRE(P(r, "-3*x").primitive() == P(r, "x"));
    Polynomial q = P(r, "1/2*x + 1/3");
    REQUIRE(q.primitive() == P(r, "3*x + 2"));
}
