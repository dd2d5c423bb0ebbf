#include "doctest.h"

#include "painleve/errors.hpp"
#include "painleve/rootfind.hpp"

#include <algorithm>
#include <cmath>

using namespace painleve;

namespace {
UPoly<Value> vpoly(std::initializer_list<int> coeffsLowToHigh) {
    UPoly<Value> p;
    int i = 0;
    for (int c : coeffsLowToHigh) p.at(i++) = Value(c);
    p.trim();
    return p;
}
} // namespace

TEST_CASE("roots of T^3 - T over Q") {
    auto roots = univariateRoots(vpoly({0, -1, 0, 1}), FieldCtx::rationals());
    REQUIRE(roots.size() == 3);
    std::vector<Rational> vals;
    for (auto& h : roots) {
        REQUIRE(h.value.tryRational());
        vals.push_back(*h.value.tryRational());
        CHECK(h.certifiedIrreducible);
        CHECK(h.multiplicity == 1);
    }
    std::sort(vals.begin(), vals.end(), RationalLess{});
    CHECK(vals[0] == Rational(-1));
    CHECK(vals[1] == Rational(0));
    CHECK(vals[2] == Rational(1));
}

TEST_CASE("roots of T^2 + 1 over Q: two degree-2 handles at +-i") {
    auto roots = univariateRoots(vpoly({1, 0, 1}), FieldCtx::rationals());
    REQUIRE(roots.size() == 2);
    for (auto& h : roots) {
        CHECK(h.minpoly.degree() == 2);
        CHECK(h.certifiedIrreducible);
        CHECK(std::abs(std::abs(h.approx.imag()) - 1.0) < 1e-9);
        CHECK(std::abs(h.approx.real()) < 1e-9);
    }
    CHECK(roots[0].approx.imag() * roots[1].approx.imag() < 0);
}

TEST_CASE("T^5 - z over Q(z): a single irreducible degree-5 handle") {
    UPoly<Value> p;
    p.at(0) = Value(0) - Value::z();
    p.at(5) = Value(1);
    auto clusters = rootClusters(p, FieldCtx::rationalFunctions(), true);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].minpoly.degree() == 5);
    CHECK(clusters[0].certified);
    CHECK(clusters[0].supported);
}

TEST_CASE("multiplicity tracking") {
    UPoly<Value> p = vpoly({-1, 1}); // T - 1
    UPoly<Value> q = vpoly({2, 1});  // T + 2
    auto roots = univariateRoots(p * p * q, FieldCtx::rationals());
    REQUIRE(roots.size() == 2);
    for (auto& h : roots) {
        auto v = *h.value.tryRational();
        if (v == Rational(1)) CHECK(h.multiplicity == 2);
        if (v == Rational(-2)) CHECK(h.multiplicity == 1);
    }
}

TEST_CASE("Newton refinement stays within the isolating radius") {
    auto roots = univariateRoots(vpoly({-1, -1, 0, 1}), FieldCtx::rationals());
    REQUIRE(roots.size() == 3);
    for (auto& h : roots) {
        auto refined = newtonStep(h.minpoly, h.approx, {1.0, 0.0});
        CHECK(std::abs(refined - h.approx) < h.radius);
    }
}

TEST_CASE("rational-function roots over Q(z): T = z^2 from 4(z^2 - T)") {
    UPoly<Value> p;
    p.at(0) = Value::z() * Value::z() * Value(4);
    p.at(1) = Value(-4);
    auto roots = univariateRoots(p, FieldCtx::rationalFunctions());
    REQUIRE(roots.size() == 1);
    auto rf = roots[0].value.tryRatFunc();
    REQUIRE(rf);
    CHECK(*rf == RatFunc::z() * RatFunc::z());
}

TEST_CASE("polynomial root lifting over Q(z) on a product") {
    RatFunc z = RatFunc::z();
    RatFunc r1 = z * z, r2 = z + RatFunc(1);
    UPoly<Value> p;
    p.at(0) = Value(r1 * r2);
    p.at(1) = Value(RatFunc(0) - (r1 + r2));
    p.at(2) = Value(1);
    auto roots = univariateRoots(p, FieldCtx::rationalFunctions());
    REQUIRE(roots.size() == 2);
    std::vector<std::string> found;
    for (auto& h : roots) found.push_back(h.value.tryRatFunc()->str());
    std::sort(found.begin(), found.end());
    CHECK(found[0] == "z + 1");
    CHECK(found[1] == "z^2");
}

TEST_CASE("radical cluster T^3 + z over Q(z)") {
    UPoly<Value> p;
    p.at(0) = Value::z();
    p.at(3) = Value(1);
    auto clusters = rootClusters(p, FieldCtx::rationalFunctions(), false);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].minpoly.degree() == 3);
    CHECK(clusters[0].certified);
    CHECK(clusters[0].supported);
    auto adj = rootsAdjoined(p, FieldCtx::rationalFunctions());
    REQUIRE(adj.size() == 1);
    Value w = adj[0].root;
    CHECK((w * w * w + Value::z()).isZero());
}

TEST_CASE("non-radical cubic over Q(z) is flagged unsupported") {
    UPoly<Value> p;
    p.at(0) = Value::z();
    p.at(1) = Value::z();
    p.at(3) = Value(1);
    auto clusters = rootClusters(p, FieldCtx::rationalFunctions(), true);
    bool anyUnsupported = false;
    for (auto& c : clusters) anyUnsupported |= !c.supported;
    CHECK(anyUnsupported);
    CHECK_THROWS_AS(univariateRoots(p, FieldCtx::rationalFunctions()),
                    UnsupportedExtensionError);
}

TEST_CASE("constant quartic over Q(z) stays supported (number-field cluster)") {
    UPoly<Value> p = vpoly({1, 1, 1, 1, 1});
    auto clusters = rootClusters(p, FieldCtx::rationalFunctions(), false);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].minpoly.degree() == 4);
    CHECK(clusters[0].certified);
    CHECK(clusters[0].supported);
    CHECK(clusters[0].embeddings.size() == 4);
}

TEST_CASE("kth roots adjoined") {
    FieldCtx q = FieldCtx::rationals();
    auto [r, ctx] = kthRootAdjoined(Value(8), 3, q);
    CHECK(r == Value(2)); // exact
    auto [s, ctx2] = kthRootAdjoined(Value(2), 2, q);
    CHECK((s * s) == Value(2));
    CHECK(ctx2.top != nullptr);
    auto [t, ctx3] = kthRootAdjoined(Value::z(), 2, FieldCtx::rationalFunctions());
    CHECK((t * t) == Value::z());
}

TEST_CASE("binomial irreducibility criteria") {
    CHECK(binomialIrreducibleQ(Rational(2), 5));
    CHECK(!binomialIrreducibleQ(Rational(8), 3));  // 8 = 2^3
    CHECK(!binomialIrreducibleQ(Rational(-4), 4)); // x^4 + 4 factors
    CHECK(binomialIrreducibleQz(RatFunc::z(), 5));
    CHECK(!binomialIrreducibleQz(RatFunc::z() * RatFunc::z(), 2));
}
