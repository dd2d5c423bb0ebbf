#include "painleve/equation.hpp"
#include "painleve/errors.hpp"
#include "painleve/rootfind.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace painleve {

namespace {

std::string factorStr(const MultiPoly& p) { return p.str("y'", "y", "z"); }

[[noreturn]] void throwReducible(std::vector<MultiPoly> factors) {
    std::vector<std::string> strs;
    std::string joined;
    for (auto& f : factors) {
        strs.push_back(factorStr(f));
        joined += "(" + strs.back() + ")";
    }
    throw ReducibleError("equation polynomial factors as " + joined, strs);
}

// -------------------------------------------------------------------------
// multi-factor linear Hensel lifting in an auxiliary variable
//
// Main variable X is represented by the outer index of a vector; each
// coefficient is a (truncated) polynomial in the auxiliary variable with
// entries in a field C (Rational for bivariate inputs, rational functions
// of T for trivariate ones).
// -------------------------------------------------------------------------

template <class C>
using AuxPoly = UPoly<C>;          // polynomial in the auxiliary variable
template <class C>
using XPoly = std::vector<UPoly<C>>; // index = X-degree

template <class C>
void chopAux(AuxPoly<C>& a, int K) {
    while (a.degree() >= K) {
        a.at(a.degree()) = C(0);
        a.trim();
    }
}

template <class C>
AuxPoly<C> auxMulTrunc(const AuxPoly<C>& a, const AuxPoly<C>& b, int K) {
    AuxPoly<C> r;
    for (int i = 0; i <= a.degree() && i < K; ++i) {
        if (coeffIsZero(a[i])) continue;
        for (int j = 0; j <= b.degree() && i + j < K; ++j)
            r.at(i + j) = r[i + j] + a[i] * b[j];
    }
    r.trim();
    return r;
}

template <class C>
XPoly<C> xMulTrunc(const XPoly<C>& a, const XPoly<C>& b, int K) {
    XPoly<C> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            AuxPoly<C> prod = auxMulTrunc<C>(a[i], b[j], K);
            r[i + j] = r[i + j] + prod;
        }
    while (r.size() > 1 && r.back().isZero()) r.pop_back();
    return r;
}

/// Lift the coprime monic base factorization of f(X, 0) to aux-precision K.
/// f must be monic in X.  Returns the lifted factors (aux-truncated).
template <class C>
std::vector<XPoly<C>> henselLift(const XPoly<C>& f, const std::vector<UPoly<C>>& base, int K) {
    size_t n = base.size();
    // Bezout data: sigma_i = (prod_{j != i} base_j)^{-1} mod base_i
    std::vector<UPoly<C>> sigma(n);
    for (size_t i = 0; i < n; ++i) {
        UPoly<C> pi = UPoly<C>::one();
        for (size_t j = 0; j < n; ++j)
            if (j != i) pi = pi * base[j];
        auto [g, u, v] = upolyExtGcd(pi % base[i], base[i]);
        if (g.degree() != 0) throw std::logic_error("henselLift: base factors not coprime");
        sigma[i] = u % base[i];
    }
    // factors as XPoly with aux-degree-0 coefficients
    std::vector<XPoly<C>> g(n);
    for (size_t i = 0; i < n; ++i) {
        g[i].resize(base[i].degree() + 1);
        for (int d = 0; d <= base[i].degree(); ++d) g[i][d] = AuxPoly<C>(base[i][d]);
    }
    for (int k = 1; k < K; ++k) {
        // residual E = f - prod g_i, need the aux^k slice
        XPoly<C> prod = g[0];
        for (size_t i = 1; i < n; ++i) prod = xMulTrunc<C>(prod, g[i], k + 1);
        UPoly<C> ek; // slice as a poly in X
        for (size_t d = 0; d < std::max(f.size(), prod.size()); ++d) {
            C fv = d < f.size() ? f[d][k] : C(0);
            C pv = d < prod.size() ? prod[d][k] : C(0);
            ek.at(d) = fv - pv;
        }
        ek.trim();
        if (ek.isZero()) continue;
        for (size_t i = 0; i < n; ++i) {
            UPoly<C> delta = (sigma[i] * ek) % base[i];
            for (int d = 0; d <= delta.degree(); ++d) {
                if (coeffIsZero(delta[d])) continue;
                g[i][d].at(k) = g[i][d][k] + delta[d];
                g[i][d].trim();
            }
        }
    }
    return g;
}

// -------------------------------------------------------------------------
// bivariate factorization over Q (variables: main X, aux Y)
// -------------------------------------------------------------------------

/// f as nested vectors: f[i][j] = coefficient of X^i Y^j.
struct Biv {
    std::vector<ZPoly> c; // index = X-degree; entry = poly in Y
    int degX() const { return static_cast<int>(c.size()) - 1; }
    int degY() const {
        int d = -1;
        for (auto& p : c) d = std::max(d, p.degree());
        return d;
    }
};

Biv toBiv(const MultiPoly& f, Var x, Var y) {
    Biv b;
    b.c.resize(f.degree(x) + 1);
    for (const auto& [e, coef] : f.terms()) {
        int ex = e.get(x), ey = e.get(y);
        b.c[ex].at(ey) = b.c[ex][ey] + coef;
    }
    for (auto& p : b.c) p.trim();
    return b;
}

MultiPoly fromBiv(const Biv& b, Var x, Var y) {
    MultiPoly out;
    for (size_t i = 0; i < b.c.size(); ++i)
        for (int j = 0; j <= b.c[i].degree(); ++j) {
            if (painleve::isZero(b.c[i][j])) continue;
            Exp3 e;
            e.set(x, static_cast<int>(i));
            e.set(y, j);
            out.setCoeff(e, b.c[i][j]);
        }
    return out;
}

/// One nontrivial split over Q of a squarefree bivariate polynomial, or
/// nullopt with `proven` set when irreducibility was certified.
std::optional<std::pair<MultiPoly, MultiPoly>> splitBivariate(const MultiPoly& f, Var x, Var y,
                                                              bool& proven) {
    proven = false;
    Biv b = toBiv(f, x, y);
    int dX = b.degX();
    if (dX < 1) return std::nullopt;
    // monicize in X:  ftilde(X) = lc^{dX-1} f(X/lc), lc in Q[Y]
    ZPoly lc = b.c[dX];
    Biv ft;
    ft.c.resize(dX + 1);
    {
        std::vector<ZPoly> lcPow{ZPoly::one()};
        for (int k = 1; k <= dX; ++k) lcPow.push_back(lcPow.back() * lc);
        for (int i = 0; i < dX; ++i) ft.c[i] = b.c[i] * lcPow[dX - 1 - i];
        ft.c[dX] = ZPoly::one();
    }
    int K = ft.degY() + 2;

    // specialization point for Y keeping things squarefree
    const Rational candidates[] = {Rational(0),  Rational(1),  Rational(-1), Rational(2),
                                   Rational(-2), Rational(3),  Rational(5),  Rational(1, 2),
                                   Rational(7),  Rational(-3), Rational(4),  Rational(11)};
    std::optional<Rational> y0;
    UPoly<Rational> spec;
    for (const Rational& cand : candidates) {
        UPoly<Rational> s;
        for (int i = 0; i <= dX; ++i) s.at(i) = ft.c[i](cand);
        s.trim();
        if (s.degree() != dX) continue;
        if (upolyGcd(s, s.derivative()).degree() == 0) {
            y0 = cand;
            spec = s;
            break;
        }
    }
    if (!y0) return std::nullopt; // could not certify either way

    auto baseFs = factorRationalPoly(spec);
    bool allCertified = true;
    for (auto& bf : baseFs) allCertified &= bf.certified;
    if (baseFs.size() == 1 && allCertified) {
        proven = true; // irreducible fiber + monic lift => irreducible over Q(Y)
        return std::nullopt;
    }
    if (!allCertified) return std::nullopt;

    // shift Y so the specialization sits at 0
    XPoly<Rational> fx(dX + 1);
    for (int i = 0; i <= dX; ++i) fx[i] = ft.c[i].shift(*y0);

    std::vector<UPoly<Rational>> base;
    for (auto& bf : baseFs) base.push_back(bf.factor.monic());

    std::vector<XPoly<Rational>> lifted;
    try {
        lifted = henselLift<Rational>(fx, base, K);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }

    // recombination: subsets of lifted factors whose product has Y-degree
    // within the bound; verify by exact division of the original f.
    size_t n = lifted.size();
    int tailBound = ft.degY();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > static_cast<int>(n) / 2 ||
            (__builtin_popcount(mask) == static_cast<int>(n - __builtin_popcount(mask)) &&
             !(mask & 1u)))
            continue; // skip complements to halve the work
        XPoly<Rational> prod;
        bool first = true;
        for (size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            prod = first ? lifted[i] : xMulTrunc<Rational>(prod, lifted[i], K);
            first = false;
        }
        bool tailsOk = true;
        for (auto& coef : prod)
            if (coef.degree() > tailBound) tailsOk = false;
        if (!tailsOk) continue;
        // build candidate in original coordinates: X -> lc*X shift Y back
        Biv cb;
        cb.c.resize(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) cb.c[i] = prod[i].shift(-*y0);
        // undo monicization: candidate(X) with X -> lc*x gives factor of f up to content
        Biv cand;
        cand.c.resize(cb.c.size());
        {
            std::vector<ZPoly> lcPow{ZPoly::one()};
            for (size_t k = 1; k < cb.c.size(); ++k) lcPow.push_back(lcPow.back() * lc);
            for (size_t i = 0; i < cb.c.size(); ++i) cand.c[i] = cb.c[i] * lcPow[i];
        }
        MultiPoly candidate = canonicalPrimitive(fromBiv(cand, x, y));
        if (candidate.totalDegree() < 1) continue;
        auto quotient = f.dividedBy(candidate);
        if (quotient) return std::make_pair(candidate, canonicalPrimitive(*quotient));
    }
    proven = true; // exhaustive recombination found nothing
    return std::nullopt;
}

/// Full factor list over Q for a squarefree bivariate polynomial.
std::vector<MultiPoly> factorBivariateFull(const MultiPoly& f, Var x, Var y, bool& provenAll) {
    bool proven = false;
    auto split = splitBivariate(f, x, y, proven);
    if (!split) {
        provenAll = provenAll && proven;
        return {f};
    }
    bool p1 = true, p2 = true;
    auto left = factorBivariateFull(split->first, x, y, p1);
    auto right = factorBivariateFull(split->second, x, y, p2);
    provenAll = provenAll && p1 && p2;
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// -------------------------------------------------------------------------
// trivariate: specialize z, factor the bivariate image, lift in z over Q(T)
// -------------------------------------------------------------------------

UPoly<RatFunc> bivToXPolyOverQT(const MultiPoly& g) {
    // g in (S, T): polynomial in S with Q[T] coefficients, as RatFunc entries
    UPoly<RatFunc> out;
    UPoly<MultiPoly> byS = g.asPolyIn(Var::S);
    for (int i = 0; i <= byS.degree(); ++i) {
        ZPoly p;
        for (const auto& [e, c] : byS[i].terms()) p.at(e.t) = c;
        p.trim();
        out.at(i) = RatFunc(p);
    }
    out.trim();
    return out;
}

std::optional<std::pair<MultiPoly, MultiPoly>> splitTrivariate(const MultiPoly& f, bool& proven) {
    proven = false;
    int dS = f.degree(Var::S);
    UPoly<MultiPoly> byS = f.asPolyIn(Var::S);
    MultiPoly lcST = byS[dS]; // in T, z
    // monicize in S over Q[T,z]
    MultiPoly ft;
    {
        std::vector<MultiPoly> lcPow{MultiPoly(Rational(1))};
        for (int k = 1; k <= dS; ++k) lcPow.push_back(lcPow.back() * lcST);
        UPoly<MultiPoly> acc;
        for (int i = 0; i < dS; ++i) acc.at(i) = byS[i] * lcPow[dS - 1 - i];
        acc.at(dS) = MultiPoly(Rational(1));
        ft = MultiPoly::fromPolyIn(Var::S, acc);
    }
    int K = ft.degree(Var::Z) + 2;

    const Rational candidates[] = {Rational(2), Rational(3), Rational(5), Rational(1, 2),
                                   Rational(-2), Rational(7), Rational(-3)};
    for (const Rational& z0 : candidates) {
        // specialize z -> z0
        MultiPoly at0;
        for (const auto& [e, c] : ft.terms()) {
            MultiPoly term = MultiPoly::term(c * ratPow(z0, e.z), e.s, e.t, 0);
            at0 = at0 + term;
        }
        if (at0.degree(Var::S) != dS) continue;
        // fiber must stay squarefree for a clean base factorization
        if (gcdPoly(at0, at0.partial(Var::S), Var::S).degree(Var::S) > 0) continue;

        bool provenBase = true;
        auto baseFactors = factorBivariateFull(at0, Var::S, Var::T, provenBase);
        if (baseFactors.size() == 1) {
            if (provenBase) {
                proven = true; // irreducible at z0 and monic in S
                return std::nullopt;
            }
            return std::nullopt;
        }
        if (!provenBase) return std::nullopt;

        // base factors as monic S-polynomials over Q(T)
        std::vector<UPoly<RatFunc>> base;
        bool monicizable = true;
        for (auto& bf : baseFactors) {
            UPoly<RatFunc> p = bivToXPolyOverQT(bf);
            if (p.degree() < 1) { monicizable = false; break; }
            base.push_back(p.monic());
        }
        if (!monicizable) continue;

        // f-tilde as X-poly with aux 'z - z0', coefficients Q(T)
        XPoly<RatFunc> fx(dS + 1);
        UPoly<MultiPoly> ftByS = ft.asPolyIn(Var::S);
        for (int i = 0; i <= dS; ++i) {
            // coefficient is a poly in T, z: reorganize as aux-poly of RatFunc
            UPoly<RatFunc> slot;
            for (const auto& [e, c] : ftByS[i].terms()) {
                ZPoly tp;
                tp.at(e.t) = c;
                slot.at(e.z) = slot[e.z] + RatFunc(tp);
            }
            slot.trim();
            // shift aux by z0: rebuild as polynomial in (z - z0)
            UPoly<RatFunc> shifted;
            for (int j = slot.degree(); j >= 0; --j) {
                // shifted = shifted * (aux + z0) + slot[j]
                UPoly<RatFunc> next;
                for (int k = 0; k <= shifted.degree(); ++k) {
                    next.at(k + 1) = next[k + 1] + shifted[k];
                    next.at(k) = next[k] + shifted[k] * RatFunc(z0);
                }
                next.at(0) = next[0] + slot[j];
                next.trim();
                shifted = next;
            }
            fx[i] = shifted;
        }

        std::vector<XPoly<RatFunc>> lifted;
        try {
            lifted = henselLift<RatFunc>(fx, base, K);
        } catch (const std::logic_error&) {
            continue;
        }

        size_t n = lifted.size();
        int tailBound = ft.degree(Var::Z);
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            XPoly<RatFunc> prod;
            bool first = true;
            for (size_t i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                prod = first ? lifted[i] : xMulTrunc<RatFunc>(prod, lifted[i], K);
                first = false;
            }
            bool tailsOk = true;
            for (auto& coef : prod)
                if (coef.degree() > tailBound) tailsOk = false;
            if (!tailsOk) continue;
            // rebuild a MultiPoly candidate: entries are RatFunc in T with
            // possible denominators; clear the common denominator.
            ZPoly den = ZPoly::one();
            for (auto& coef : prod)
                for (int j = 0; j <= coef.degree(); ++j)
                    den = den * coef[j].den() / upolyGcd(den, coef[j].den());
            MultiPoly candidate;
            bool good = true;
            for (size_t i = 0; i < prod.size() && good; ++i) {
                for (int j = 0; j <= prod[i].degree(); ++j) {
                    RatFunc v = prod[i][j] * RatFunc(den);
                    if (!v.isPolynomial()) { good = false; break; }
                    // v is a polynomial in T; shift back z: aux^j -> (z - z0)^j
                    const ZPoly& tp = v.num();
                    for (int et = 0; et <= tp.degree(); ++et) {
                        if (painleve::isZero(tp[et])) continue;
                        // (z - z0)^j expanded
                        ZPoly zp = ZPoly::one();
                        ZPoly shiftPoly(std::vector<Rational>{-z0, Rational(1)});
                        for (int rep = 0; rep < j; ++rep) zp = zp * shiftPoly;
                        for (int ez = 0; ez <= zp.degree(); ++ez) {
                            if (painleve::isZero(zp[ez])) continue;
                            Exp3 e{static_cast<int>(i), et, ez};
                            candidate.setCoeff(e, candidate.coeff(e) + tp[et] * zp[ez]);
                        }
                    }
                }
            }
            if (!good || candidate.isZero()) continue;
            candidate = canonicalPrimitive(candidate);
            if (candidate.totalDegree() < 1) continue;
            auto quotient = f.dividedBy(candidate);
            if (quotient) return std::make_pair(candidate, canonicalPrimitive(*quotient));
        }
        proven = true; // recombination exhausted at a good specialization
        return std::nullopt;
    }
    return std::nullopt;
}

// -------------------------------------------------------------------------
// structured quick checks
// -------------------------------------------------------------------------

/// Decompose p = c * H^2 with H a primitive polynomial in T, z and c
/// rational; nullopt when the squarefree part of p is non-constant.
std::optional<std::pair<Rational, MultiPoly>> squareUpToConstant(const MultiPoly& p) {
    if (p.isZero()) return std::make_pair(Rational(0), MultiPoly(Rational(1)));
    if (p.isConstant()) return std::make_pair(p.constantValue(), MultiPoly(Rational(1)));
    Var v = p.involves(Var::T) ? Var::T : Var::Z;
    MultiPoly g = gcdPoly(p, p.partial(v), v);
    if (g.isConstant()) return std::nullopt;
    auto q = p.dividedBy(g * g);
    if (!q) return std::nullopt;
    if (q->isConstant()) return std::make_pair(q->constantValue(), g);
    auto inner = squareUpToConstant(*q);
    if (!inner) return std::nullopt;
    return std::make_pair(inner->first, g * inner->second);
}

struct BinomialShape {
    Rational a, b; // z-free only when const
    MultiPoly aPoly, bPoly;
    int p, q;
};

std::optional<BinomialShape> binomialShape(const MultiPoly& f) {
    // f = A(z) S^p - B(z) T^q exactly (two (S,T)-monomial groups)
    std::map<std::pair<int, int>, MultiPoly> groups;
    for (const auto& [e, c] : f.terms()) {
        MultiPoly& g = groups[{e.s, e.t}];
        g = g + MultiPoly::term(c, 0, 0, e.z);
    }
    if (groups.size() != 2) return std::nullopt;
    auto it = groups.begin();
    auto [k1, g1] = *it++;
    auto [k2, g2] = *it;
    // want one pure-S monomial and one pure-T
    if (k1.second == 0 && k1.first > 0 && k2.first == 0 && k2.second > 0) {
        return BinomialShape{Rational(0), Rational(0), g1, -g2, k1.first, k2.second};
    }
    if (k2.second == 0 && k2.first > 0 && k1.first == 0 && k1.second > 0) {
        return BinomialShape{Rational(0), Rational(0), g2, -g1, k2.first, k1.second};
    }
    return std::nullopt;
}

} // namespace

CurveEquation validateEquation(const CurveEquation& input) {
    CurveEquation eq = input;
    const MultiPoly& f = eq.f;
    IrreducibilityInfo info;

    if (f.isZero() || f.isConstant())
        throw MissingVariableError("the equation involves neither y nor y'");
    if (f == MultiPoly::var(Var::S)) throw ConstantEquationNotice();
    if (eq.degT < 1) throw MissingVariableError("y is absent from the equation");
    if (eq.degS < 1) throw MissingVariableError("y' is absent from the equation");

    // factors that are pure powers of S or T
    {
        int vS = f.asPolyIn(Var::S).valuation();
        if (vS >= 1) {
            MultiPoly sPow = MultiPoly::var(Var::S, vS);
            throwReducible({sPow, canonicalPrimitive(*f.dividedBy(sPow))});
        }
        int vT = f.asPolyIn(Var::T).valuation();
        if (vT >= 1) {
            MultiPoly tPow = MultiPoly::var(Var::T, vT);
            throwReducible({tPow, canonicalPrimitive(*f.dividedBy(tPow))});
        }
    }

    // repeated factors
    for (Var v : {Var::S, Var::T}) {
        MultiPoly g = gcdPoly(f, f.partial(v), v);
        if (g.totalDegree() > 0) {
            auto q = f.dividedBy(g);
            throwReducible({g, q ? canonicalPrimitive(*q) : MultiPoly(Rational(1))});
        }
    }

    // degree-1 cases are absolutely irreducible once primitive
    if (eq.degS == 1 || eq.degT == 1) {
        Var lin = eq.degS == 1 ? Var::S : Var::T;
        Var other = eq.degS == 1 ? Var::T : Var::S;
        UPoly<MultiPoly> p = f.asPolyIn(lin);
        MultiPoly g = gcdPoly(p[1], p[0], other);
        if (g.totalDegree() > 0) {
            auto q = f.dividedBy(g);
            throwReducible({g, q ? canonicalPrimitive(*q) : MultiPoly(Rational(1))});
        }
        info.level = IrreducibilityLevel::Proven;
        eq.irreducibility = info;
        return eq;
    }

    // monomial binomial a S^p - b T^q
    if (auto bs = binomialShape(f)) {
        int g = std::gcd(bs->p, bs->q);
        if (g == 1) {
            info.level = IrreducibilityLevel::Proven;
            eq.irreducibility = info;
            return eq;
        }
        // a X^g - b Y^g in X = S^{p/g}, Y = T^{q/g}: look for a rational split
        if (bs->aPoly.isConstant() && bs->bPoly.isConstant()) {
            Rational a = bs->aPoly.constantValue(), b = bs->bPoly.constantValue();
            for (int d = 2; d <= g; ++d) {
                if (g % d != 0) continue;
                auto ra = ratKthRoot(a, d), rb = ratKthRoot(b, d);
                if (ra && rb) {
                    MultiPoly factor = MultiPoly::var(Var::S, bs->p / d) * *ra -
                                       MultiPoly::var(Var::T, bs->q / d) * *rb;
                    auto q = f.dividedBy(factor);
                    if (q) throwReducible({canonicalPrimitive(factor), canonicalPrimitive(*q)});
                }
            }
        }
    }

    // hyperelliptic shape A(z) S^2 + C(T,z)
    if (eq.degS == 2 && f.coeffOf(Var::S, 1).isZero() && !f.coeffOf(Var::S, 2).involves(Var::T)) {
        MultiPoly A = f.coeffOf(Var::S, 2);
        MultiPoly C = f.coeffOf(Var::S, 0);
        MultiPoly prod = -(C * A);
        if (auto dec = squareUpToConstant(prod)) {
            auto [cst, H] = *dec;
            if (auto r = ratKthRoot(cst, 2)) {
                // -CA = (r H)^2: the square root is rational and f splits
                MultiPoly sigma = H * *r;
                MultiPoly g1 = canonicalPrimitive(MultiPoly::var(Var::S) * A - sigma);
                auto q = f.dividedBy(g1);
                if (q) throwReducible({g1, canonicalPrimitive(*q)});
            }
            info.warnings.push_back(
                "not absolutely irreducible: splits over a quadratic extension of the constants");
            info.level = IrreducibilityLevel::Heuristic;
            eq.irreducibility = info;
            return eq;
        }
        // -CA has a non-constant squarefree part: the double cover is connected
        info.level = IrreducibilityLevel::Proven;
        eq.irreducibility = info;
        return eq;
    }

    // general trial factorization
    int total = f.totalDegree();
    if (total <= 6) {
        bool proven = false;
        if (eq.autonomous) {
            auto split = splitBivariate(f, Var::S, Var::T, proven);
            if (split) throwReducible({split->first, split->second});
        } else {
            auto split = splitTrivariate(f, proven);
            if (split) throwReducible({split->first, split->second});
        }
        if (proven) {
            info.level = IrreducibilityLevel::Heuristic;
            info.warnings.push_back("irreducible over the base field; absolute irreducibility not certified");
        } else {
            info.level = IrreducibilityLevel::Heuristic;
            info.warnings.push_back("trial factorization inconclusive at configured effort");
        }
        eq.irreducibility = info;
        return eq;
    }

    // high degree: specialization heuristic
    int irreducibleSpecials = 0, checked = 0;
    const Rational zs[] = {Rational(2), Rational(3), Rational(5)};
    const Rational ts[] = {Rational(2), Rational(3), Rational(5)};
    for (int k = 0; k < 3; ++k) {
        MultiPoly g;
        if (eq.autonomous) {
            // specialize T, check the S-fiber
            for (const auto& [e, c] : f.terms())
                g = g + MultiPoly::term(c * ratPow(ts[k], e.t), e.s, 0, e.z);
        } else {
            for (const auto& [e, c] : f.terms())
                g = g + MultiPoly::term(c * ratPow(zs[k], e.z), e.s, e.t, 0);
        }
        if (eq.autonomous) {
            if (g.degree(Var::S) != eq.degS) continue;
            UPoly<Value> fiber = g.toUnivariateValue(Var::S);
            try {
                auto clusters = rootClusters(fiber, FieldCtx::rationals(), true);
                ++checked;
                if (clusters.size() == 1 && clusters[0].certified &&
                    clusters[0].minpoly.degree() == eq.degS)
                    ++irreducibleSpecials;
            } catch (const AnalyzerError&) {
            }
        } else {
            if (g.degree(Var::S) != eq.degS) continue;
            bool proven = false;
            ++checked;
            auto split = splitBivariate(g, Var::S, Var::T, proven);
            if (!split && proven) ++irreducibleSpecials;
        }
    }
    if (checked > 0 && irreducibleSpecials > 0) {
        info.level = IrreducibilityLevel::Heuristic;
        info.warnings.push_back("degree exceeds the trial-factorization bound; certified by specialization only");
        eq.irreducibility = info;
        return eq;
    }
    throw IrreducibilityUnknownError(
        "irreducibility check inconclusive at configured effort for degree " +
        std::to_string(total));
}

} // namespace painleve
