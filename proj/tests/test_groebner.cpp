#include <levicore/groebner.hpp>
#include <levicore/parse.hpp>

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace levicore;
using testutil::Rng;

namespace {
Ring xy() { return Ring::real({"x", "y"}); }
Ring xyz() { return Ring::real({"x", "y", "z"}); }
Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }
Ideal gen(const Ring& r, std::initializer_list<std::string> ss) {
    std::vector<Polynomial> g;
    for (const auto& s : ss) g.push_back(P(r, s));
    return Ideal(r, std::move(g));
}
}  // namespace

TEST_CASE("groebner basis golden cases") {
    Ring r = xy();
    SECTION("already reduced") {
        Ideal I = gen(r, {"x"});
        REQUIRE(I.groebner_basis() == std::vector<Polynomial>{P(r, "x")});
        REQUIRE(I.groebner_basis(TermOrder::lex(r)) == std::vector<Polynomial>{P(r, "x")});
    }
    SECTION("x^2+y^2 and xy produce y^3") {
        Ideal I = gen(r, {"x^2 + y^2", "x*y"});
        auto gb = I.groebner_basis();
        bool has_y3 = std::find(gb.begin(), gb.end(), P(r, "y^3")) != gb.end();
        REQUIRE(has_y3);
        // Every original generator reduces to zero against the basis.
        for (const auto& g : I.generators()) REQUIRE(normal_form(g, I).is_zero());
    }
    SECTION("unit ideal") {
        Ideal I = gen(r, {"1"});
        REQUIRE(I.groebner_basis() == std::vector<Polynomial>{P(r, "1")});
        Ideal J = gen(r, {"x", "x + 1"});
        REQUIRE(J.groebner_basis() == std::vector<Polynomial>{P(r, "1")});
    }
}

TEST_CASE("reduced basis is unique under generator shuffles") {
    Ring r = xyz();
    std::vector<std::vector<std::string>> inputs = {
        {"x^2 + y^2", "x*y", "x^2 - y*z^2"},
        {"x*y - z", "y*z - x", "x*z - y"},
        {"x^2 - y", "y^2 - z", "z^2 - x"},
    };
    Rng rng(2024);
    for (const auto& in : inputs) {
        std::vector<Polynomial> gens;
        for (const auto& s : in) gens.push_back(P(r, s));
        auto reference = Ideal(r, gens).groebner_basis();
        for (int trial = 0; trial < 6; ++trial) {
            auto shuffled = gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            REQUIRE(Ideal(r, shuffled).groebner_basis() == reference);
        }
    }
}

TEST_CASE("normal form") {
    Ring r = xy();
    REQUIRE(normal_form(P(r, "x^2"), gen(r, {"x"})).is_zero());
    REQUIRE(normal_form(P(r, "y"), gen(r, {"x"})) == P(r, "y"));
    REQUIRE(normal_form(P(r, "x^2*y"), gen(r, {"x^2 - y"})) == P(r, "y^2"));
}

TEST_CASE("ideal membership") {
    Ring r = xyz();
    REQUIRE(ideal_membership(P(r, "x"), gen(r, {"x"})));
    REQUIRE(!ideal_membership(P(r, "1"), gen(r, {"x^2 - y*z^2"})));
    // The single 3x3 minor of the Whitney coefficient matrix.
    REQUIRE(ideal_membership(P(r, "x^2 - y*z^2"), gen(r, {"x^2 - y*z^2"})));
}

TEST_CASE("membership against the degree-truncated linear oracle") {
    Ring r = xyz();
    Rng rng(4242);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<Polynomial> gens;
        int k = testutil::rand_int(rng, 1, 3);
        for (int j = 0; j < k; ++j) gens.push_back(testutil::random_nonzero_polynomial(rng, r, 3, 2));
        Polynomial p;
        if (i % 2 == 0) {
            // Cook a member: random combination of the generators.
            p = Polynomial::zero(r);
            for (const auto& g : gens) p += testutil::random_polynomial(rng, r, 2, 1) * g;
        } else {
            p = testutil::random_polynomial(rng, r, 3, 2);
        }
        if (p.degree() > 4) continue;
        bool gb_says = ideal_membership(p, Ideal(r, gens));
        bool oracle_says = testutil::oracle_membership(p, gens, 8);
        REQUIRE(gb_says == oracle_says);
        ++checked;
    }
    REQUIRE(checked > 50);
}

TEST_CASE("radical membership") {
    Ring r = xy();
    REQUIRE(radical_membership(P(r, "x"), gen(r, {"x^2"})));
    REQUIRE(!radical_membership(P(r, "y"), gen(r, {"x^2"})));
    // V(x^2 - yx) = {x=0} u {x=y}; x does not vanish at (1,1).
    REQUIRE(!radical_membership(P(r, "x"), gen(r, {"x^2 - y*x"})));
}

TEST_CASE("radical membership positives confirmed by direct powering") {
    Ring r = xy();
    std::vector<std::pair<Ideal, Polynomial>> cases = {
        {gen(r, {"x^2"}), P(r, "x")},
        {gen(r, {"x^3*y^2"}), P(r, "x*y")},
        {gen(r, {"x^2 + 2*x*y + y^2"}), P(r, "x + y")},
        {gen(r, {"x^2 - y^2", "x*y"}), P(r, "x")},
    };
    for (const auto& [I, p] : cases) {
        REQUIRE(radical_membership(p, I));
        bool confirmed = false;
        for (int k = 1; k <= 16 && !confirmed; ++k)
            if (ideal_membership(p.pow(k), I)) confirmed = true;
        REQUIRE(confirmed);
    }
}

TEST_CASE("variety equality") {
    Ring r = xy();
    REQUIRE(variety_equal(gen(r, {"x"}), gen(r, {"x^2"})));
    REQUIRE(!variety_equal(gen(r, {"x"}), gen(r, {"y"})));
    REQUIRE(variety_equal(gen(r, {"x*y"}), gen(r, {"x^2*y", "x*y^2"})));
    // Reflexive, symmetric, transitive on a small corpus.
    std::vector<Ideal> corpus = {gen(r, {"x"}), gen(r, {"x^2"}), gen(r, {"x^3"}), gen(r, {"y"}),
                                 gen(r, {"x", "y"})};
    for (const auto& a : corpus) REQUIRE(variety_equal(a, a));
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            if (variety_equal(a, b)) REQUIRE(variety_equal(b, a));
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                if (variety_equal(a, b) && variety_equal(b, c)) REQUIRE(variety_equal(a, c));
}

TEST_CASE("elimination") {
    SECTION("invertible on the variety leaves no base relation") {
        Ring r = Ring::real({"t", "x"});
        Ideal I = gen(r, {"1 - t*x"});
        Ideal E = eliminate(I, {r.index_of("t")});
        REQUIRE(E.is_zero_ideal());
        REQUIRE(E.ring().variables() == std::vector<std::string>{"x"});
    }
    SECTION("substitution") {
        Ring r = xy();
        Ideal I = gen(r, {"x - y", "y"});
        Ideal E = eliminate(I, {r.index_of("y")});
        REQUIRE(E.ring().variables() == std::vector<std::string>{"x"});
        REQUIRE(E.groebner_basis() == std::vector<Polynomial>{Polynomial::variable(E.ring(), "x")});
    }
    SECTION("eliminating nothing") {
        Ring r = xy();
        Ideal I = gen(r, {"x*y - 1"});
        REQUIRE(ideal_equal(eliminate(I, {}), I));
    }
}

TEST_CASE("saturation") {
    Ring r = Ring::real({"x", "v"});
    SECTION("one quotient step") {
        Ideal I = gen(r, {"x*v"});
        Ideal S = saturate(I, gen(r, {"v"}));
        REQUIRE(S.groebner_basis() == std::vector<Polynomial>{P(r, "x")});
    }
    SECTION("component inside v=0 vanishes") {
        Ideal I = gen(r, {"v^2"});
        REQUIRE(saturate(I, gen(r, {"v"})).contains_unit());
    }
    SECTION("saturating by the unit ideal is the identity") {
        Ideal I = gen(r, {"x*v"});
        REQUIRE(ideal_equal(saturate(I, gen(r, {"1"})), I));
    }
    SECTION("contains the ideal and is idempotent") {
        Rng rng(555);
        for (int i = 0; i < 10; ++i) {
            std::vector<Polynomial> gens;
            for (int j = 0; j < 2; ++j) gens.push_back(testutil::random_nonzero_polynomial(rng, r, 3, 2));
            Ideal I(r, gens);
            Ideal J = gen(r, {"v"});
            Ideal S = saturate(I, J);
            for (const auto& g : I.generators()) REQUIRE(ideal_membership(g, S));
            REQUIRE(ideal_equal(saturate(S, J), S));
        }
    }
}

TEST_CASE("ideal dimension") {
    Ring r = xyz();
    REQUIRE(ideal_dimension(gen(r, {"x^2 - y*z^2"})) == 2);
    REQUIRE(ideal_dimension(gen(r, {"x", "y", "z"})) == 0);
    REQUIRE(!ideal_dimension(gen(r, {"1"})).has_value());
    REQUIRE(ideal_dimension(Ideal::zero(r)) == 3);
}

TEST_CASE("partial radical") {
    Ring r = xyz();
    SECTION("squarefree part of a principal ideal") {
        auto [R1, s1] = radical(gen(r, {"x^2"}));
        REQUIRE(s1 == RadicalStatus::exact);
        REQUIRE(R1.groebner_basis() == std::vector<Polynomial>{P(r, "x")});

        auto [R2, s2] = radical(gen(r, {"(x^2 - y*z^2)^2"}));
        REQUIRE(s2 == RadicalStatus::exact);
        REQUIRE(variety_equal(R2, gen(r, {"x^2 - y*z^2"})));
        REQUIRE(ideal_equal(R2, gen(r, {"x^2 - y*z^2"})));
    }
    SECTION("zero-dimensional Seidenberg branch") {
        Ring q = xy();
        auto [R, s] = radical(Ideal(q, {P(q, "x^2"), P(q, "y^3")}));
        REQUIRE(s == RadicalStatus::exact);
        REQUIRE(ideal_equal(R, Ideal(q, {P(q, "x"), P(q, "y")})));
    }
    SECTION("hermitian hint is rejected over complex semantics") {
        Ring c = Ring::complexified({"z1"});
        Ideal I(c, {parse_polynomial("z1*zbar1", c)});
        std::vector<Polynomial> hints = {parse_polynomial("z1", c), parse_polynomial("zbar1", c)};
        REQUIRE_THROWS_AS(radical(I, hints), HintRejected);
    }
    SECTION("valid hints are adjoined") {
        Ring q = xy();
        Ideal J(q, {P(q, "x^2*y^2"), P(q, "x^3*y")});
        auto [R, s] = radical(J, {P(q, "x*y")});
        REQUIRE(s == RadicalStatus::hinted);
        REQUIRE(ideal_membership(P(q, "x*y"), R));
    }
    SECTION("general positive-dimensional ideal falls back") {
        Ideal I = gen(r, {"x*y", "x*z"});
        auto [R, s] = radical(I);
        REQUIRE(s == RadicalStatus::fallback);
        REQUIRE(ideal_equal(R, I));
    }
    SECTION("zero ideal is already radical") {
        auto [R, s] = radical(Ideal::zero(r));
        REQUIRE(s == RadicalStatus::exact);
        REQUIRE(R.is_zero_ideal());
    }
}

TEST_CASE("budgets are distinct failures") {
    Ring r = xyz();
    Budget tiny;
    tiny.max_pairs = 1;
    Ideal I = gen(r, {"x^3*y - z", "y^3*z - x", "z^3*x - y", "x^2 + y^2 + z^2"});
    REQUIRE_THROWS_AS(I.groebner_basis(TermOrder::lex(r), tiny), BudgetExceeded);

    Budget small_deg;
    small_deg.max_degree = 2;
    Ideal J = gen(r, {"x^5 - y", "y^5 - z"});
    REQUIRE_THROWS_AS(J.groebner_basis(TermOrder::lex(r), small_deg), BudgetExceeded);
}

TEST_CASE("gcd and squarefree helpers") {
    Ring r = xy();
    Polynomial p = P(r, "x^2 - y^2");
    Polynomial q = P(r, "x + y");
    REQUIRE(poly_gcd(p * q, q) == q.primitive());
    REQUIRE(poly_gcd(p, P(r, "x - y")) == P(r, "x - y"));
    REQUIRE(squarefree_part(P(r, "x^2")) == P(r, "x"));
    REQUIRE(squarefree_part(P(r, "x^2*y^4")) == P(r, "x*y"));
    REQUIRE(squarefree_part(P(r, "(x+y)^3*(x-y)")) == P(r, "x^2 - y^2"));
}
