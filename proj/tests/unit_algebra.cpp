#include "doctest.h"

#include "painleve/multipoly.hpp"
#include "painleve/ratfunc.hpp"
#include "painleve/rational.hpp"
#include "painleve/rootfind.hpp"
#include "painleve/upoly.hpp"
#include "painleve/value.hpp"

#include <random>

using namespace painleve;

namespace {

MultiPoly S() { return MultiPoly::var(Var::S); }
MultiPoly T() { return MultiPoly::var(Var::T); }
MultiPoly Zv() { return MultiPoly::var(Var::Z); }
MultiPoly c(long n) { return MultiPoly(Rational(n)); }

/// Independent oracle: textbook Sylvester matrix + cofactor-expansion
/// determinant (exponential, fine for the small sizes used in tests).
MultiPoly cofactorDet(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return MultiPoly(Rational(1));
    if (n == 1) return m[0][0];
    MultiPoly acc;
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        if (!m[0][j].isZero()) {
            std::vector<std::vector<MultiPoly>> minor;
            for (size_t i = 1; i < n; ++i) {
                std::vector<MultiPoly> row;
                for (size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(m[i][k]);
                minor.push_back(std::move(row));
            }
            MultiPoly term = m[0][j] * cofactorDet(minor);
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

MultiPoly sylvesterOracle(const MultiPoly& f, const MultiPoly& g, Var v) {
    UPoly<MultiPoly> a = f.asPolyIn(v), b = g.asPolyIn(v);
    int m = a.degree(), n = b.degree();
    if (m == 0) return a[0].pow(n);
    if (n == 0) return b[0].pow(m);
    std::vector<std::vector<MultiPoly>> syl(m + n, std::vector<MultiPoly>(m + n));
    for (int r = 0; r < n; ++r)
        for (int col = 0; col <= m; ++col) syl[r][r + col] = a[m - col];
    for (int r = 0; r < m; ++r)
        for (int col = 0; col <= n; ++col) syl[n + r][r + col] = b[n - col];
    return cofactorDet(syl);
}

MultiPoly randomPoly(std::mt19937& rng, int maxDeg, int maxTerms) {
    std::uniform_int_distribution<int> dDeg(0, maxDeg), dCoef(-5, 5), dTerms(1, maxTerms);
    MultiPoly p;
    int terms = dTerms(rng);
    for (int i = 0; i < terms; ++i) {
        int coef = dCoef(rng);
        if (coef == 0) coef = 1;
        p = p + MultiPoly::term(Rational(coef), dDeg(rng), dDeg(rng), dDeg(rng));
    }
    return p;
}

} // namespace

TEST_CASE("rational string round trips and kth roots") {
    CHECK(ratToString(ratFromString("-4/7")) == "-4/7");
    CHECK(ratFromString("2.5") == Rational(5) / Rational(2));
    CHECK(*ratKthRoot(Rational(8), 3) == Rational(2));
    CHECK(*ratKthRoot(Rational(-27) / Rational(8), 3) == Rational(-3) / Rational(2));
    CHECK(!ratKthRoot(Rational(2), 2));
}

TEST_CASE("formal partial derivatives") {
    MultiPoly f = S() * S() - T() + Zv() * Zv();
    CHECK(f.partial(Var::S) == c(2) * S());
    MultiPoly g = S() * S() - T().pow(3) - Zv();
    CHECK(g.partial(Var::T) == c(-3) * T() * T());
    CHECK(f.partial(Var::Z) == c(2) * Zv());
}

TEST_CASE("resultants against the Sylvester determinant oracle") {
    MultiPoly f = S() * S() - T();
    MultiPoly g = c(2) * S();
    MultiPoly r = resultantPoly(f, g, Var::S);
    CHECK(r == c(-4) * T());
    CHECK(r == sylvesterOracle(f, g, Var::S));

    MultiPoly f2 = S() - T(), g2 = S() + T();
    CHECK(resultantPoly(f2, g2, Var::S) == c(2) * T());
    CHECK(resultantPoly(f2, g2, Var::S) == sylvesterOracle(f2, g2, Var::S));

    CHECK(resultantPoly(S() * S(), S(), Var::S).isZero());
}

TEST_CASE("resultant equals oracle on random inputs") {
    std::mt19937 rng(12345);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        MultiPoly f = randomPoly(rng, 2, 3), g = randomPoly(rng, 2, 3);
        if (f.degree(Var::S) < 1 || g.degree(Var::S) < 1) continue;
        CHECK(resultantPoly(f, g, Var::S) == sylvesterOracle(f, g, Var::S));
        ++checked;
    }
    CHECK(checked > 5);
}

TEST_CASE("discriminants") {
    MultiPoly q = T().pow(3) - T() + Zv();
    MultiPoly f = S() * S() - q;
    CHECK(discriminantPoly(f, Var::S) == c(4) * q);
    CHECK(discriminantPoly(T() * T() + c(1), Var::T) == c(-4));
    MultiPoly f3 = S() * S() - T().pow(3) + T();
    CHECK(discriminantPoly(f3, Var::S) == c(4) * (T().pow(3) - T()));
}

TEST_CASE("multivariate gcd") {
    MultiPoly a = S() * S() - T() * T();
    MultiPoly b = S() - T();
    CHECK(gcdPoly(a, b, Var::S) == S() - T());
    CHECK(gcdPoly(S(), T(), Var::S) == c(1));
    MultiPoly f = (S() - T()).pow(2) * (S() + c(1));
    MultiPoly g = (S() - T()) * (S() + c(2));
    CHECK(gcdPoly(f, g, Var::S) == S() - T());
}

TEST_CASE("gcd vanishing resultant equivalence on random pairs") {
    std::mt19937 rng(777);
    for (int i = 0; i < 60; ++i) {
        MultiPoly f = randomPoly(rng, 2, 2), g = randomPoly(rng, 2, 2);
        if (f.degree(Var::S) < 1 || g.degree(Var::S) < 1) continue;
        bool resZero = resultantPoly(f, g, Var::S).isZero();
        bool gcdBig = gcdPoly(f, g, Var::S).degree(Var::S) > 0;
        CHECK(resZero == gcdBig);
        MultiPoly h = randomPoly(rng, 1, 2);
        if (h.degree(Var::S) >= 1) {
            MultiPoly ff = f * h, gg = g * h;
            CHECK(resultantPoly(ff, gg, Var::S).isZero());
        }
    }
}

TEST_CASE("product rule on random pairs") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        MultiPoly f = randomPoly(rng, 3, 3), g = randomPoly(rng, 3, 3);
        for (Var v : {Var::S, Var::T, Var::Z}) {
            MultiPoly lhs = (f * g).partial(v);
            MultiPoly rhs = f * g.partial(v) + g * f.partial(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rational function field axioms") {
    RatFunc z = RatFunc::z();
    RatFunc a = (z * z + RatFunc(1)) / (z - RatFunc(2));
    RatFunc b = z / (z * z + RatFunc(3));
    CHECK((a / b) * (b / a) == RatFunc(1));
    CHECK((a * b) / b == a);
    CHECK((z * z).dz() == RatFunc(2) * z);
    RatFunc q = RatFunc(1) / z;
    CHECK(q.dz() == RatFunc(-1) / (z * z));
}

TEST_CASE("canonical rendering of polynomials") {
    MultiPoly f = S() * S() - T() + Zv() * Zv();
    CHECK(f.str() == "S^2 + z^2 - T");
    CHECK(f.str("y'", "y", "z") == "(y')^2 + z^2 - y");
    MultiPoly g = c(3) * S() * T() - c(1) * Zv();
    CHECK(g.str() == "3*S*T - z");
}

TEST_CASE("extension tower arithmetic: sqrt2 and a quadratic over it") {
    FieldCtx q = FieldCtx::rationals();
    UPoly<Value> m; // w^2 - 2
    m.at(0) = Value(-2);
    m.at(2) = Value(1);
    FieldCtx q2 = adjoinRoot(q, m, {1.41421356237, 0}, 1e-12, true);
    Value w = q2.generator();
    CHECK((w * w) == Value(2));
    Value inv = (Value(1) + w).inverse(); // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(inv == w - Value(1));
    UPoly<Value> m2; // v^2 - w, so v = 2^{1/4}
    m2.at(0) = Value(0) - w;
    m2.at(2) = Value(1);
    FieldCtx q4 = adjoinRoot(q2, m2, {1.18920711500272, 0}, 1e-12, true);
    Value v = q4.generator();
    CHECK((v * v * v * v) == Value(2));
    CHECK(((v + w) * (v - w)) == (v * v - Value(2)));
}

TEST_CASE("extension over Q(z): cube root of -z with derivation") {
    FieldCtx qz = FieldCtx::rationalFunctions();
    UPoly<Value> m; // w^3 + z
    m.at(0) = Value::z();
    m.at(3) = Value(1);
    FieldCtx ext = adjoinRoot(qz, m, std::pow(std::complex<double>(-1.0, 0), 1.0 / 3.0), 1e-12, true);
    Value w = ext.generator();
    CHECK((w * w * w) == (Value(0) - Value::z()));
    // w^3 = -z forces 3 w^2 w' = -1
    Value lhs = Value(3) * w * w * w.dz();
    CHECK(lhs == Value(-1));
}

TEST_CASE("4a^2 - a + 1 = 0 handle arithmetic") {
    FieldCtx q = FieldCtx::rationals();
    UPoly<Value> m; // monic form of 4a^2 - a + 1
    m.at(0) = Value(Rational(1) / Rational(4));
    m.at(1) = Value(Rational(-1) / Rational(4));
    m.at(2) = Value(1);
    FieldCtx ext = adjoinRoot(q, m, {0.125, 0.484122918275927}, 1e-12, true);
    Value a = ext.generator();
    CHECK((Value(4) * a * a - a + Value(1)).isZero());
}
