#include "painleve/puiseux.hpp"

#include "painleve/errors.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>

namespace painleve {

CenterSpec CenterSpec::finite(Value v) {
    CenterSpec c;
    c.kind = Kind::Finite;
    c.value = std::move(v);
    c.embedding = c.value.approx({1.0, 0.0});
    return c;
}

CenterSpec CenterSpec::cluster(UPoly<Value> minpoly, std::complex<double> embedding) {
    CenterSpec c;
    c.kind = Kind::Cluster;
    c.minpoly = std::move(minpoly);
    c.embedding = embedding;
    return c;
}

std::string CenterSpec::str() const {
    switch (kind) {
        case Kind::Finite: return "t = " + value.str();
        case Kind::Cluster: return "t root of " + minpoly.str("T", &valueToString);
        default: return "t = infinity";
    }
}

std::string Place::str() const {
    return center.str() + " (e=" + std::to_string(ramification) +
           ", d=" + std::to_string(residueDegree) + "): t(u) = " + tSeries.str() +
           "; s(u) = " + sSeries.str();
}

namespace {

// ---------------------------------------------------------------------------
// exact bivariate polynomials for the polygon iteration
// ---------------------------------------------------------------------------

struct BiPoly {
    // (base exponent i, fiber exponent j) -> coefficient
    std::map<std::pair<int, int>, Value> t;

    void add(int i, int j, const Value& v) {
        if (v.isZero()) return;
        auto key = std::make_pair(i, j);
        auto it = t.find(key);
        if (it == t.end()) {
            t[key] = v;
        } else {
            it->second = it->second + v;
            if (it->second.isZero()) t.erase(it);
        }
    }
    bool empty() const { return t.empty(); }
    int yValuation() const {
        int v = INT_MAX;
        for (auto& [e, c] : t) v = std::min(v, e.second);
        return t.empty() ? -1 : v;
    }
    int baseValuation() const {
        int v = INT_MAX;
        for (auto& [e, c] : t) v = std::min(v, e.first);
        return t.empty() ? -1 : v;
    }
    int degY() const {
        int v = -1;
        for (auto& [e, c] : t) v = std::max(v, e.second);
        return v;
    }
    BiPoly divByY(int k) const {
        BiPoly r;
        for (auto& [e, c] : t) r.t[{e.first, e.second - k}] = c;
        return r;
    }
    BiPoly divByBase(int k) const {
        BiPoly r;
        for (auto& [e, c] : t) r.t[{e.first - k, e.second}] = c;
        return r;
    }
    UPoly<Value> fiberAt0() const {
        UPoly<Value> f;
        for (auto& [e, c] : t)
            if (e.first == 0) f.at(e.second) = f[e.second] + c;
        f.trim();
        return f;
    }
    BiPoly shiftY(const Value& s0) const {
        // g(tau, s0 + y)
        BiPoly r;
        for (auto& [e, c] : t) {
            // expand (s0 + y)^j
            std::vector<Value> s0pow{Value(1)};
            for (int k = 1; k <= e.second; ++k) s0pow.push_back(s0pow.back() * s0);
            Rational binom(1);
            for (int k = 0; k <= e.second; ++k) {
                if (k > 0) binom = binom * Rational(e.second - k + 1) / Rational(k);
                r.add(e.first, k, c * Value(binom) * s0pow[e.second - k]);
            }
        }
        return r;
    }
    BiPoly reverseY(int dS) const {
        BiPoly r;
        for (auto& [e, c] : t) r.t[{e.first, dS - e.second}] = c;
        return r;
    }
    BiPoly partialY() const {
        BiPoly r;
        for (auto& [e, c] : t) {
            if (e.second == 0) continue;
            r.add(e.first, e.second - 1, c * Value(e.second));
        }
        return r;
    }
    /// g(lambda u^{q}, u^{p} (m + v)), exact, with the minimal u-power
    /// divided out; the divided power is returned through `w`.
    BiPoly edgeTransform(const Value& lambda, const Value& m, int q, int p, long& w) const {
        BiPoly r;
        for (auto& [e, c] : t) {
            // lambda^i * u^{q i + p j} * m^{j-k} binom(j,k) v^k
            Value li = lambda.pow(e.first);
            std::vector<Value> mpow{Value(1)};
            for (int k = 1; k <= e.second; ++k) mpow.push_back(mpow.back() * m);
            Rational binom(1);
            for (int k = 0; k <= e.second; ++k) {
                if (k > 0) binom = binom * Rational(e.second - k + 1) / Rational(k);
                r.add(q * e.first + p * e.second, k, c * li * Value(binom) * mpow[e.second - k]);
            }
        }
        long minPow = LONG_MAX;
        for (auto& [e, c] : r.t) minPow = std::min(minPow, static_cast<long>(e.first));
        w = minPow == LONG_MAX ? 0 : minPow;
        return r.divByBase(static_cast<int>(w));
    }
    /// g(u, v(u)) as a series in u.
    Series evalY(const Series& v, std::optional<Frac> horizon) const {
        Series acc = Series::zero();
        int maxJ = degY();
        std::vector<Series> vpow(std::max(maxJ + 1, 1));
        vpow[0] = Series::constant(Value(1));
        for (int j = 1; j <= maxJ; ++j) {
            vpow[j] = vpow[j - 1] * v;
            if (horizon) vpow[j] = vpow[j].truncated(*horizon);
        }
        for (auto& [e, c] : t) {
            Series term = vpow[e.second] * c;
            term = term.shifted(Frac(e.first));
            acc = acc + term;
        }
        if (horizon) acc = acc.truncated(*horizon);
        return acc;
    }
};

/// Solve g(u, v(u)) = 0 for a series v with v(0) = 0 at a simple root:
/// g(0,0) = 0 and dg/dv (0,0) a unit.
Series henselSeriesSolve(const BiPoly& g, long N) {
    Series v = Series::zero();
    BiPoly gy = g.partialY();
    Frac horizon(N);
    for (long iter = 0; iter < 64; ++iter) {
        Series r = g.evalY(v, horizon);
        if (r.isEmpty()) {
            if (r.validIsInfinite()) return v; // exact solution
            if (!(r.validOrder() < horizon)) return v.truncated(horizon);
            // validity fell short: refine with more slack
            horizon = Frac(N + (N / 2 + 1) * (iter + 1));
            continue;
        }
        Series d = gy.evalY(v, horizon);
        Series delta = r / d;
        v = (v - delta).truncated(horizon);
    }
    throw TruncationTooSmallError("local solver did not converge to the requested order");
}

struct Branch {
    Value lambda;
    int e = 1;
    Series y; // valuation > 0 (or exact zero)
    FieldCtx fld;
};

/// Enumerate roots of p over ctx invoking fn(root, multiplicity, field);
/// dynamic-evaluation splits of uncertified moduli are retried here.
void forEachRootD5(const UPoly<Value>& p, const FieldCtx& ctx,
                   const std::function<void(const Value&, int, const FieldCtx&)>& fn) {
    struct Item {
        UPoly<Value> minpoly;
        int multiplicity;
        bool certified;
        std::complex<double> embedding;
        std::optional<Value> inField;
    };
    std::vector<Item> work;
    for (auto& c : rootClusters(p, ctx, false)) {
        Item it{c.minpoly, c.multiplicity, c.certified,
                c.embeddings.empty() ? std::complex<double>(0, 0) : c.embeddings[0],
                c.inFieldValue};
        work.push_back(std::move(it));
    }
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.inField) {
            fn(*it.inField, it.multiplicity, ctx);
            continue;
        }
        if (it.minpoly.degree() == 1) {
            Value root = (Value(0) - it.minpoly[0]) / it.minpoly[1];
            fn(root, it.multiplicity, ctx);
            continue;
        }
        FieldCtx ext = adjoinRoot(ctx, it.minpoly, it.embedding, 1e-12, it.certified);
        try {
            fn(ext.generator(), it.multiplicity, ext);
        } catch (ZeroDivisorSplit& zd) {
            if (zd.ext != ext.top) throw;
            UPoly<Value> factor = zd.factor.monic();
            auto [quot, rem] = it.minpoly.divrem(factor);
            if (!rem.isZero())
                throw std::logic_error("dynamic split factor does not divide the modulus");
            work.push_back({factor, it.multiplicity, false, it.embedding, std::nullopt});
            work.push_back({quot.monic(), it.multiplicity, false, it.embedding, std::nullopt});
        }
    }
}

std::vector<Branch> polygonBranches(BiPoly g, const FieldCtx& ctx, long N) {
    std::vector<Branch> out;
    if (g.empty()) throw std::logic_error("polygonBranches: zero polynomial");
    int bv = g.baseValuation();
    if (bv > 0) g = g.divByBase(bv);
    int yv = g.yValuation();
    if (yv > 0) {
        // y^yv divides: the exact branch y = 0 (cannot happen for squarefree
        // absolutely irreducible input, but handled for robustness)
        out.push_back({Value(1), 1, Series::zero(), ctx});
        g = g.divByY(yv);
    }

    // support of the polygon: j -> minimal i
    std::map<int, long> minI;
    for (auto& [e, c] : g.t) {
        auto it = minI.find(e.second);
        if (it == minI.end() || e.first < it->second) minI[e.second] = e.first;
    }
    if (minI.count(0) == 0) return out; // no y-free term: nothing further through 0
    // lower convex hull of (j, i) over ascending j
    std::vector<std::pair<long, long>> pts; // (j, i)
    for (auto& [j, i] : minI) pts.push_back({j, i});
    std::vector<std::pair<long, long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long cross = (b.first - a.first) * (p.second - a.second) -
                         (b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        auto [jA, iA] = hull[k];
        auto [jB, iB] = hull[k + 1];
        if (!(iA > iB && jB > jA) && !(iB > iA && jA > jB)) continue;
        // orient: (j_hi, i_lo) has the larger j
        long jHi = jA > jB ? jA : jB, iLo = jA > jB ? iA : iB;
        long jLo = jA > jB ? jB : jA, iHi = jA > jB ? iB : iA;
        if (iHi <= iLo) continue; // slope must be positive for a branch at 0
        long p = iHi - iLo, q = jHi - jLo;
        long gpq = std::gcd(p, q);
        p /= gpq;
        q /= gpq;
        long steps = (jHi - jLo) / q;
        // characteristic polynomial in gamma
        UPoly<Value> charP;
        for (long kk = 0; kk <= steps; ++kk) {
            auto it = g.t.find({static_cast<int>(iLo + kk * p), static_cast<int>(jHi - kk * q)});
            if (it != g.t.end()) charP.at(steps - kk) = it->second;
        }
        charP.trim();
        // Bezout: q*b - p*a = 1
        long a = 0, b = 0;
        {
            long old_r = q, r = p, old_s = 1, s = 0, old_t = 0, tt = 1;
            while (r != 0) {
                long quo = old_r / r;
                std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
                std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
                std::tie(old_t, tt) = std::make_pair(tt, old_t - quo * tt);
            }
            // old_s*q + old_t*p = gcd = 1
            b = old_s;
            a = -old_t;
        }

        forEachRootD5(charP, ctx, [&](const Value& gamma, int mult, const FieldCtx& ctx2) {
            Value lambda = gamma.pow(a);
            Value m = gamma.pow(b);
            long w = 0;
            BiPoly g2 = g.edgeTransform(lambda, m, static_cast<int>(q), static_cast<int>(p), w);
            if (mult == 1) {
                Series v = henselSeriesSolve(g2, N);
                Series y = (Series::constant(m) + v).shifted(Frac(p));
                out.push_back({lambda, static_cast<int>(q), y, ctx2});
            } else {
                for (auto& sub : polygonBranches(g2, ctx2, N)) {
                    // u = lambda2 w^{e2}: y = (lambda2 w^{e2})^p (m + v2(w))
                    Value l2p = sub.lambda.pow(p);
                    Series yw = (Series::constant(m) + sub.y) * l2p;
                    yw = yw.shifted(Frac(sub.e * p));
                    out.push_back({lambda * sub.lambda.pow(q),
                                   static_cast<int>(q * sub.e), yw, sub.fld});
                }
            }
        });
    }
    return out;
}

BiPoly curveAtFiniteCenter(const MultiPoly& f, const Value& theta) {
    BiPoly g;
    for (const auto& [e, c] : f.terms()) {
        Value coef = e.z ? Value(RatFunc(ZPoly::monomial(c, e.z))) : Value(c);
        // (theta + tau)^{e.t}
        std::vector<Value> thpow{Value(1)};
        for (int k = 1; k <= e.t; ++k) thpow.push_back(thpow.back() * theta);
        Rational binom(1);
        for (int k = 0; k <= e.t; ++k) {
            if (k > 0) binom = binom * Rational(e.t - k + 1) / Rational(k);
            g.add(k, e.s, coef * Value(binom) * thpow[e.t - k]);
        }
    }
    return g;
}

BiPoly curveAtInfinity(const MultiPoly& f) {
    int dT = f.degree(Var::T);
    BiPoly g;
    for (const auto& [e, c] : f.terms()) {
        Value coef = e.z ? Value(RatFunc(ZPoly::monomial(c, e.z))) : Value(c);
        g.add(dT - e.t, e.s, coef);
    }
    return g;
}

int relativeDegree(const FieldCtx& sub, const FieldCtx& fld) {
    return fld.absoluteDegree() / std::max(1, sub.absoluteDegree());
}

void normalizePlace(Place& pl, long N) {
    auto val = pl.sSeries.valuation();
    if (!val) return;
    bool plus = (*val == Frac(1));
    bool minus = (*val == Frac(-1));
    if (!plus && !minus) return;
    try {
        Series w = plus ? pl.sSeries : pl.sSeries.inverse(Frac(N));
        Series uOfW = w.truncated(Frac(N)).reverted();
        pl.tSeries = pl.tSeries.compose(uOfW);
        pl.sSeries = Series::monomial(Value(1), Frac(plus ? 1 : -1));
    } catch (const AnalyzerError&) {
        // keep the natural parametrization when renormalization cannot
        // reach the requested order
    }
}

} // namespace

Series seriesSubstitute(const MultiPoly& f, const Series& s, const Series& t,
                        std::optional<Rational> zShift) {
    Series zImage = zShift ? Series::constant(Value(*zShift)) +
                                 Series::monomial(Value(1), Frac(1))
                           : Series::constant(Value::z());
    return f.substituted<Series>(s, t, zImage,
                                 [](const Rational& c) { return Series::constant(Value(c)); });
}

std::vector<Place> placesAbove(const CurveEquation& eq, const CenterSpec& center,
                               long truncTerms) {
    long N = truncTerms > 0
                 ? truncTerms
                 : 2L * std::max(1, eq.degS) * std::max(1, eq.degT) + 6;
    for (int attempt = 0; attempt < 2; ++attempt) {
        try {
            FieldCtx base = eq.autonomous ? FieldCtx::rationals() : FieldCtx::rationalFunctions();
            // squarefreeness in S (places need a reduced curve)
            if (gcdPoly(eq.f, eq.f.partial(Var::S), Var::S).degree(Var::S) > 0)
                throw std::logic_error("placesAbove: curve polynomial is not squarefree");

            std::vector<Place> out;
            auto runCenter = [&](const Value& theta, const FieldCtx& ctxC,
                                 const CenterSpec& desc) {
                BiPoly g = center.kind == CenterSpec::Kind::Infinity
                               ? curveAtInfinity(eq.f)
                               : curveAtFiniteCenter(eq.f, theta);
                int dS = eq.degS;
                UPoly<Value> fib = g.fiberAt0();
                if (fib.isZero())
                    throw std::logic_error("placesAbove: fiber vanishes identically");

                auto emit = [&](const Branch& br, const Value& s0, bool sAtInfinity) {
                    Place pl;
                    pl.center = desc;
                    pl.field = br.fld;
                    pl.ramification = br.e;
                    pl.residueDegree = relativeDegree(ctxC, br.fld);
                    // t-side: exact monomial in u
                    if (center.kind == CenterSpec::Kind::Infinity) {
                        pl.tSeries = Series::monomial(br.lambda.inverse(), Frac(-br.e));
                    } else {
                        pl.tSeries = Series::constant(theta) +
                                     Series::monomial(br.lambda, Frac(br.e));
                    }
                    Series sBranch = Series::constant(s0) + br.y;
                    pl.sSeries = sAtInfinity ? sBranch.inverse(Frac(N)) : sBranch;
                    normalizePlace(pl, N);
                    out.push_back(std::move(pl));
                };

                // finite-s branches
                forEachRootD5(fib, ctxC, [&](const Value& s0, int mult, const FieldCtx& ctx2) {
                    if (mult == 1) {
                        BiPoly h = g.shiftY(s0);
                        Series v = henselSeriesSolve(h, N);
                        Branch br{Value(1), 1, v, ctx2};
                        emit(br, s0, false);
                    } else {
                        BiPoly h = g.shiftY(s0);
                        for (auto& br : polygonBranches(h, ctx2, N)) emit(br, s0, false);
                    }
                });
                // s -> infinity branches above this center
                if (fib.degree() < dS) {
                    BiPoly h = g.reverseY(dS);
                    for (auto& br : polygonBranches(h, ctxC, N)) {
                        if (!br.y.valuation()) continue; // sigma == 0 exactly: spurious
                        emit(br, Value(0), true);
                    }
                }
            };

            switch (center.kind) {
                case CenterSpec::Kind::Finite: {
                    runCenter(center.value, base, center);
                    break;
                }
                case CenterSpec::Kind::Infinity: {
                    runCenter(Value(0), base, center);
                    break;
                }
                case CenterSpec::Kind::Cluster: {
                    forEachRootD5(center.minpoly, base,
                                  [&](const Value& theta, int, const FieldCtx& ctxC) {
                                      CenterSpec desc = center;
                                      runCenter(theta, ctxC, desc);
                                  });
                    break;
                }
            }

            // residual sanity for every returned place
            for (auto& pl : out) {
                Series r = seriesSubstitute(eq.f, pl.sSeries, pl.tSeries);
                if (!r.isEmpty())
                    throw std::logic_error("placesAbove: expansion does not satisfy the curve: " +
                                           r.str());
                if (!r.validIsInfinite() && r.validOrder() < Frac(2))
                    throw TruncationTooSmallError("place residual validity too small");
            }
            return out;
        } catch (const TruncationTooSmallError&) {
            if (attempt == 1) throw;
            N *= 2;
        }
    }
    throw TruncationTooSmallError("placesAbove: truncation still undetermined after doubling");
}

std::vector<CenterSpec> poleCandidateCenters(const CurveEquation& eq,
                                             std::vector<std::string>* unsupported) {
    MultiPoly fS = eq.f.partial(Var::S);
    MultiPoly res = resultantPoly(eq.f, fS, Var::S);
    std::vector<CenterSpec> centers;
    FieldCtx base = eq.autonomous ? FieldCtx::rationals() : FieldCtx::rationalFunctions();
    if (res.isZero())
        throw std::logic_error("resultant(f, f_S) vanishes: curve is not squarefree");
    if (res.involves(Var::T)) {
        UPoly<Value> rT = res.toUnivariateValue(Var::T);
        for (auto& c : rootClusters(rT, base, true)) {
            if (!c.supported) {
                if (unsupported)
                    unsupported->push_back(c.minpoly.str("T", &valueToString));
                continue;
            }
            if (c.inFieldValue) {
                centers.push_back(CenterSpec::finite(*c.inFieldValue));
            } else {
                centers.push_back(CenterSpec::cluster(
                    c.minpoly, c.embeddings.empty() ? std::complex<double>(0, 0)
                                                    : c.embeddings[0]));
            }
        }
    }
    centers.push_back(CenterSpec::infinity());
    return centers;
}

Place reparametrized(const Place& place, const Series& phi) {
    auto val = phi.valuation();
    if (!val || !(*val == Frac(1)))
        throw std::logic_error("reparametrized: phi must have valuation 1");
    Place out = place;
    out.tSeries = place.tSeries.compose(phi);
    out.sSeries = place.sSeries.compose(phi);
    return out;
}

} // namespace painleve
