#include "doctest.h"

#include "painleve/series.hpp"

using namespace painleve;

namespace {
Series uPow(long n, long d = 1) { return Series::monomial(Value(1), Frac(n, d)); }
}

TEST_CASE("basic arithmetic and validity tracking") {
    // (z^{1/2}) * (z^{1/2}) = z
    Series h = uPow(1, 2);
    Series prod = h * h;
    CHECK(prod.leadingTerm().first == Frac(1));
    CHECK(prod.leadingTerm().second == Value(1));
    CHECK(prod.rawTerms().size() == 1);

    // truncation propagates through products
    Series a = (Series::constant(Value(1)) + uPow(1)).truncated(Frac(3));
    Series b = uPow(2) * a;
    CHECK(b.validOrder() == Frac(5));
}

TEST_CASE("geometric series inverse") {
    // 1/(1-u) at validity 3 = 1 + u + u^2 + O(u^3)
    Series oneMinus = Series::constant(Value(1)) - uPow(1);
    Series inv = oneMinus.inverse(Frac(3));
    CHECK(inv.coeff(Frac(0)) == Value(1));
    CHECK(inv.coeff(Frac(1)) == Value(1));
    CHECK(inv.coeff(Frac(2)) == Value(1));
    CHECK(inv.validOrder() == Frac(3));
    Series check = inv * oneMinus;
    CHECK(check.coeff(Frac(0)) == Value(1));
    CHECK(check.coeff(Frac(1)).isZero());
    CHECK(check.coeff(Frac(2)).isZero());
}

TEST_CASE("fractional power square-and-compare") {
    // (z + z^2/2)^{1/2} = z^{1/2} (1 + z/4 - ...)
    Series g = uPow(1) + uPow(2) * Value(Rational(1) / Rational(2));
    Series root = g.truncated(Frac(4)).fracPow(1, 2, [](const Value& v) {
        return rationalLeadRoot(v, 2);
    });
    CHECK(root.leadingTerm().first == Frac(1, 2));
    CHECK(root.coeff(Frac(3, 2)) == Value(Rational(1) / Rational(4)));
    Series sq = root * root;
    CHECK(sq.coeff(Frac(1)) == Value(1));
    CHECK(sq.coeff(Frac(2)) == Value(Rational(1) / Rational(2)));
    CHECK(sq.coeff(Frac(3)).isZero());
}

TEST_CASE("derivatives") {
    // d/du (2 u^{3/2}) = 3 u^{1/2}
    Series s = Series::monomial(Value(2), Frac(3, 2));
    Series d = s.deriveU();
    CHECK(d.leadingTerm().first == Frac(1, 2));
    CHECK(d.leadingTerm().second == Value(3));
    Series zc = Series::monomial(Value::z() * Value::z(), Frac(2));
    Series dz = zc.deriveZ();
    CHECK(dz.coeff(Frac(2)) == Value(2) * Value::z());
}

TEST_CASE("composition and reversion") {
    Series outer = (uPow(2) + uPow(3)).truncated(Frac(6));
    Series inner = (uPow(1) + uPow(2)).truncated(Frac(6));
    Series comp = outer.compose(inner);
    // (w + w^2)^2 = w^2 + 2w^3 + w^4 ; (w+w^2)^3 = w^3 + 3w^4 + ...
    CHECK(comp.coeff(Frac(2)) == Value(1));
    CHECK(comp.coeff(Frac(3)) == Value(3));
    CHECK(comp.coeff(Frac(4)) == Value(4));

    // reversion: s = u + u^2  =>  u = s - s^2 + 2s^3 - 5s^4 ...
    Series srs = (uPow(1) + uPow(2)).truncated(Frac(5));
    Series invs = srs.reverted();
    CHECK(invs.coeff(Frac(1)) == Value(1));
    CHECK(invs.coeff(Frac(2)) == Value(-1));
    CHECK(invs.coeff(Frac(3)) == Value(2));
    CHECK(invs.coeff(Frac(4)) == Value(-5));
    Series rt = srs.compose(invs);
    CHECK(rt.coeff(Frac(1)) == Value(1));
    CHECK(rt.coeff(Frac(2)).isZero());
    CHECK(rt.coeff(Frac(3)).isZero());
}

TEST_CASE("Laurent arithmetic") {
    // (u^{-1} + 1)^2 = u^{-2} + 2u^{-1} + 1 exactly
    Series s = uPow(-1) + uPow(0);
    Series sq = s.powInt(2);
    CHECK(sq.coeff(Frac(-2)) == Value(1));
    CHECK(sq.coeff(Frac(-1)) == Value(2));
    CHECK(sq.coeff(Frac(0)) == Value(1));
    CHECK(sq.validIsInfinite());
    // inverse of u^{-2} + u^{-1} needs a horizon on the exact input
    Series t = (uPow(-2) + uPow(-1));
    Series it = t.inverse(Frac(3));
    CHECK(it.leadingTerm().first == Frac(2));
    Series prod = (it * t);
    CHECK(prod.coeff(Frac(0)) == Value(1));
    CHECK(prod.coeff(Frac(1)).isZero());
}

TEST_CASE("ram minimality normalization") {
    Series s = Series::monomial(Value(1), Frac(2, 4)); // 1/2 after Frac reduction
    CHECK(s.ram() == 2);
    Series t = Series::monomial(Value(1), Frac(4, 2)).withRam(6);
    CHECK(t.ramNormalized().ram() == 1);
}
