#include <levicore/forms.hpp>

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace levicore;
using testutil::Rng;

namespace {
Ring xyz() { return Ring::real({"x", "y", "z"}); }
Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }
KForm F(const Ring& r, const std::string& s) { return parse_one_form(s, r); }

KForm random_form(Rng& rng, const Ring& ring, int degree) {
    KForm f(ring, degree);
    int tries = testutil::rand_int(rng, 1, 3);
    for (int t = 0; t < tries; ++t) {
        std::vector<int> idx;
        while (static_cast<int>(idx.size()) < degree) {
            int i = testutil::rand_int(rng, 0, ring.arity() - 1);
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        KForm unit = KForm::from_polynomial(testutil::random_polynomial(rng, ring, 3, 2));
        for (int i : idx) unit = wedge(unit, KForm::covector(ring, i));
        f += unit;
    }
    return f;
}
}  // namespace

TEST_CASE("wedge antisymmetry basics") {
    Ring r = xyz();
    KForm dx = KForm::covector(r, 0), dy = KForm::covector(r, 1);
    REQUIRE(wedge(dx, dx).is_zero());
    REQUIRE(wedge(dx, dy) == -wedge(dy, dx));
}

TEST_CASE("Whitney triple wedge") {
    Ring r = xyz();
    KForm a = F(r, "x*dx - y*dz");
    KForm b = F(r, "z*dx + dy");
    KForm c = F(r, "z*dy + x*dz");
    KForm top = wedge(wedge(a, b), c);
    REQUIRE(top.degree() == 3);
    REQUIRE(top_coefficient(top) == P(r, "x^2 - y*z^2"));
}

TEST_CASE("exterior derivative") {
    Ring r = xyz();
    REQUIRE(exterior_derivative(P(r, "x^2 - y*z^2")) == F(r, "2*x*dx - z^2*dy - 2*y*z*dz"));
    REQUIRE(exterior_derivative(P(r, "5/7")).is_zero());

    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = testutil::random_polynomial(rng, r, 4, 3);
        REQUIRE(exterior_derivative(exterior_derivative(p)).is_zero());
    }
}

TEST_CASE("graded antisymmetry and associativity on random forms") {
    Ring r = xyz();
    Rng rng(1234);
    for (int i = 0; i < 40; ++i) {
        int ja = testutil::rand_int(rng, 0, 2), jb = testutil::rand_int(rng, 0, 2);
        KForm a = random_form(rng, r, ja), b = random_form(rng, r, jb);
        KForm ab = wedge(a, b), ba = wedge(b, a);
        if ((ja * jb) % 2 == 1) {
            REQUIRE(ab == -ba);
        } else {
            REQUIRE(ab == ba);
        }
        KForm c = random_form(rng, r, testutil::rand_int(rng, 0, 1));
        REQUIRE(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("Leibniz rule for d") {
    Ring r = xyz();
    Rng rng(4321);
    for (int i = 0; i < 30; ++i) {
        int ja = testutil::rand_int(rng, 0, 2);
        KForm a = random_form(rng, r, ja), b = random_form(rng, r, testutil::rand_int(rng, 0, 2));
        KForm lhs = exterior_derivative(wedge(a, b));
        KForm rhs = wedge(exterior_derivative(a), b);
        KForm second = wedge(a, exterior_derivative(b));
        if (ja % 2 == 1) second = -second;
        rhs += second;
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("del and delbar") {
    Ring c = Ring::complexified({"z1", "z2"});
    Polynomial z1zb1 = P(c, "z1*zbar1");
    REQUIRE(del(z1zb1) == F(c, "zbar1*dz1"));
    REQUIRE(delbar(z1zb1) == F(c, "z1*dzbar1"));
    REQUIRE(del(P(c, "zbar1")).is_zero());

    KForm ddb = del(delbar(z1zb1));
    REQUIRE(ddb == wedge(KForm::covector(c, 0), KForm::covector(c, 1)));

    Ring r = xyz();
    REQUIRE_THROWS_AS(del(P(r, "x")), InputError);

    Rng rng(2718);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = testutil::random_polynomial(rng, c, 4, 2);
        auto [dp, dbp] = del_delbar(p);
        REQUIRE(dp + dbp == exterior_derivative(p));
        REQUIRE(del(del(p)).is_zero());
        REQUIRE(delbar(delbar(p)).is_zero());
        REQUIRE(del(delbar(p)) == -delbar(del(p)));
    }
}

TEST_CASE("top coefficient") {
    Ring r = xyz();
    KForm vol = wedge(wedge(KForm::covector(r, 0), KForm::covector(r, 1)), KForm::covector(r, 2));
    REQUIRE(top_coefficient(vol * Rational(5)) == P(r, "5"));
    REQUIRE_THROWS_AS(top_coefficient(KForm::covector(r, 0)), InputError);

    KForm whitney = wedge(wedge(F(r, "x*dx - y*dz"), F(r, "z*dx + dy")), F(r, "z*dy + x*dz"));
    REQUIRE(top_coefficient(whitney) == P(r, "x^2 - y*z^2"));

    // Strictly pseudoconvex model in complex dimension 2.
    Ring c = Ring::complexified({"z1", "z2"});
    Polynomial rr = P(c, "(z2 + zbar2)*1/2 + z1*zbar1");
    KForm form = wedge(wedge(del(rr), delbar(rr)), del(delbar(rr)));
    REQUIRE(top_coefficient(form) == P(c, "1/4"));
}

TEST_CASE("top coefficient is multilinear in coefficients") {
    Ring r = Ring::real({"x", "y"});
    Rng rng(606);
    for (int i = 0; i < 30; ++i) {
        KForm a = random_form(rng, r, 1), a2 = random_form(rng, r, 1), b = random_form(rng, r, 1);
        Polynomial lhs = top_coefficient(wedge(a + a2, b));
        REQUIRE(lhs == top_coefficient(wedge(a, b)) + top_coefficient(wedge(a2, b)));
        Polynomial s = testutil::random_polynomial(rng, r, 2, 1);
        REQUIRE(top_coefficient(wedge(a * s, b)) == s * top_coefficient(wedge(a, b)));
    }
}

TEST_CASE("degree overflow clamps to the zero form") {
    Ring r = Ring::real({"x", "y"});
    KForm two = wedge(KForm::covector(r, 0), KForm::covector(r, 1));
    KForm over = wedge(two, KForm::covector(r, 0));
    REQUIRE(over.is_zero());
    REQUIRE(over.degree() == 3);
}

TEST_CASE("form parsing and printing round trip") {
    Ring r = xyz();
    std::vector<std::string> cases = {"x*dx - y*dz", "z*dx + dy", "(x^2 - y)*dx + dz", "0"};
    for (const auto& s : cases) {
        KForm f = F(r, s);
        REQUIRE(parse_one_form(f.str(), r) == f);
    }
    REQUIRE_THROWS_AS(F(r, "dx*dy"), ParseError);
    REQUIRE_THROWS_AS(F(r, "x + dx"), ParseError);
}

TEST_CASE("form module construction") {
    Ring r = xyz();
    FormModule m(r, {F(r, "x*dx - y*dz"), KForm::zero(r, 1), F(r, "z*dx + dy")});
    REQUIRE(m.generators.size() == 2);
    auto mat = m.coefficient_matrix();
    REQUIRE(mat.size() == 2);
    REQUIRE(mat[0][0] == P(r, "x"));
    REQUIRE(mat[0][2] == P(r, "-y"));
    REQUIRE(mat[1][1] == P(r, "1"));
    REQUIRE(FormModule::full(r).generators.size() == 3);
}
