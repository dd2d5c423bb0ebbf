#include "doctest.h"

#include "painleve/equation.hpp"
#include "painleve/errors.hpp"

using namespace painleve;

namespace {
MultiPoly S(int e = 1) { return MultiPoly::var(Var::S, e); }
MultiPoly T(int e = 1) { return MultiPoly::var(Var::T, e); }
MultiPoly Zp(int e = 1) { return MultiPoly::var(Var::Z, e); }
}

TEST_CASE("paper-style inputs parse to canonical polynomials") {
    CurveEquation eq = parseEquation("(y')^2 = y - z^2");
    CHECK(eq.f == S(2) - T() + Zp(2));
    CHECK(!eq.autonomous);
    CHECK(eq.degS == 2);
    CHECK(eq.degT == 1);

    CurveEquation r = parseEquation("y' = y");
    CHECK(r.f == S() - T());
    CHECK(r.autonomous);

    CurveEquation w = parseEquation("(y')^2 = y^3 + z");
    CHECK(w.f == S(2) - T(3) - Zp());
}

TEST_CASE("normalization: scalar multiples and z-denominators collapse") {
    CurveEquation a = parseEquation("(y')^2 = y - z^2");
    CurveEquation b = parseEquation("3(y')^2 - 3y + 3z^2 = 0");
    CurveEquation c = parseEquation("(y')^2/z = y/z - z");
    CHECK(a.f == b.f);
    CHECK(a.f == c.f);
    // common z-polynomial factor drops
    CurveEquation d = parseEquation("z*(y')^2 - z*y = 0");
    CHECK(d.f == S(2) - T());
}

TEST_CASE("render/parse round trip is idempotent") {
    for (const char* text : {"(y')^2 = y - z^2", "y' = 1 + y^2", "(y')^2 = z*(y^3 - y)",
                             "2y'y = z + 1", "(y')^3 = y^2/z"}) {
        CurveEquation eq = parseEquation(text);
        CurveEquation re = parseEquation(eq.render());
        CHECK(re.f == eq.f);
        CurveEquation rere = parseEquation(re.render());
        CHECK(rere.f == re.f);
    }
}

TEST_CASE("syntax errors carry positions") {
    try {
        parseEquation("(y')^2 = y +");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() >= 12);
    }
    CHECK_THROWS_AS(parseEquation("y$ = 1"), SyntaxError);
    CHECK_THROWS_AS(parseEquation("y' = "), SyntaxError);
}

TEST_CASE("non-polynomial shapes rejected") {
    CHECK_THROWS_AS(parseEquation("1/y' = y"), NonPolynomialError);
    CHECK_THROWS_AS(parseEquation("y' = y^(1/2)"), NonPolynomialError);
    CHECK_THROWS_AS(parseEquation("y' = y^(-2)"), NonPolynomialError);
    CHECK_THROWS_AS(parseEquation("y' = z^(1/3)"), NonPolynomialError);
    // z-denominators are fine
    CHECK_NOTHROW(parseEquation("y' = y/z + z^(-2)"));
}

TEST_CASE("validate: linear cases proven, missing variables rejected") {
    CurveEquation eq = validateEquation(parseEquation("y' = y"));
    REQUIRE(eq.irreducibility);
    CHECK(eq.irreducibility->level == IrreducibilityLevel::Proven);

    CHECK_THROWS_AS(validateEquation(parseEquation("(y')^2 = 0")), MissingVariableError);
    CHECK_THROWS_AS(validateEquation(parseEquation("y^2 = z")), MissingVariableError);
    CHECK_THROWS_AS(validateEquation(parseEquation("y' = 0")), ConstantEquationNotice);
}

TEST_CASE("validate: reducible inputs report factors") {
    try {
        validateEquation(parseEquation("(y')^2 = y^2"));
        FAIL("expected ReducibleError");
    } catch (const ReducibleError& e) {
        REQUIRE(e.factors().size() == 2);
        CHECK(((e.factors()[0] == "y' - y" && e.factors()[1] == "y' + y") ||
               (e.factors()[0] == "y' + y" && e.factors()[1] == "y' - y")));
    }
    // repeated factor
    CHECK_THROWS_AS(validateEquation(parseEquation("(y')^2 - 2y'y + y^2 = 0")), ReducibleError);
    // a genuinely bivariate split: (S - T)(S + T^2) = S^2 + S T^2 - S T - T^3
    CHECK_THROWS_AS(
        validateEquation(parseEquation("(y')^2 + y'y^2 - y'y - y^3 = 0")),
        ReducibleError);
}

TEST_CASE("validate: nonlinear irreducible inputs get certificates") {
    CurveEquation a = validateEquation(parseEquation("(y')^2 = y^3 - y"));
    REQUIRE(a.irreducibility);
    CHECK(a.irreducibility->level == IrreducibilityLevel::Proven); // double cover test

    CurveEquation b = validateEquation(parseEquation("(y')^2 = y^3 + z"));
    REQUIRE(b.irreducibility);
    CHECK(b.irreducibility->level == IrreducibilityLevel::Proven);

    CurveEquation mono = validateEquation(parseEquation("(y')^2 = y^5"));
    REQUIRE(mono.irreducibility);
    CHECK(mono.irreducibility->level == IrreducibilityLevel::Proven);

    // S^2 + T^2: irreducible over Q, splits over Q(i) -> heuristic + warning
    CurveEquation c = validateEquation(parseEquation("(y')^2 + y^2 = 0"));
    REQUIRE(c.irreducibility);
    CHECK(c.irreducibility->level == IrreducibilityLevel::Heuristic);
    CHECK(!c.irreducibility->warnings.empty());
}

TEST_CASE("mobius transformation preserves canonical structure") {
    CurveEquation eq = parseEquation("y' = 1 + y^2");
    CurveEquation tr = mobiusTransformed(eq, Rational(1), Rational(1), Rational(1), Rational(-1));
    // y = (w+1)/(w-1): still a valid curve equation, same S-degree 1
    CHECK(tr.degS == 1);
    CHECK(tr.f.involves(Var::T));
    // identity map is a no-op
    CurveEquation id = mobiusTransformed(eq, Rational(1), Rational(0), Rational(0), Rational(1));
    CHECK(id.f == eq.f);
}
