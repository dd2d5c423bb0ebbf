#include "painleve/rootfind.hpp"

#include "painleve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace painleve {

// ---------------------------------------------------------------------------
// numeric root finding
// ---------------------------------------------------------------------------

std::complex<double> approxUPoly(const UPoly<Value>& p, std::complex<double> x,
                                 std::complex<double> zval) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p[i].approx(zval);
    return acc;
}

std::complex<double> newtonStep(const UPoly<Value>& p, std::complex<double> x,
                                std::complex<double> zval) {
    std::complex<double> f = approxUPoly(p, x, zval);
    std::complex<double> d = approxUPoly(p.derivative(), x, zval);
    if (std::abs(d) == 0.0) return x;
    return x - f / d;
}

std::vector<std::complex<double>> complexRoots(std::vector<std::complex<double>> coeffs) {
    using C = std::complex<double>;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    int d = static_cast<int>(coeffs.size()) - 1;
    std::vector<C> roots;
    if (d < 1) return roots;
    // strip roots at zero
    size_t v = 0;
    while (v < coeffs.size() && std::abs(coeffs[v]) == 0.0) ++v;
    for (size_t i = 0; i < v; ++i) roots.push_back(C(0.0, 0.0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + v);
    d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return roots;

    C lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    double r = 0.0; // Cauchy bound
    for (int i = 0; i < d; ++i) r = std::max(r, std::abs(coeffs[i]));
    r += 1.0;

    std::vector<C> x(d);
    for (int i = 0; i < d; ++i) {
        double ang = 2.0 * M_PI * i / d + 0.4; // detuned start angle
        x[i] = 0.5 * r * C(std::cos(ang), std::sin(ang));
    }
    auto eval = [&](C t) {
        C acc(0.0, 0.0);
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < d; ++i) {
            C num = eval(x[i]);
            C den(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (x[i] - x[j]);
            if (std::abs(den) == 0.0) den = C(1e-30, 0.0);
            C delta = num / den;
            x[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14 * (1.0 + r)) break;
    }
    // Newton polish against the original polynomial
    auto deval = [&](C t) {
        C acc(0.0, 0.0);
        for (size_t i = coeffs.size(); i-- > 1;) acc = acc * t + C(double(i), 0.0) * coeffs[i];
        return acc;
    };
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < 4; ++k) {
            C dv = deval(x[i]);
            if (std::abs(dv) < 1e-280) break;
            x[i] -= eval(x[i]) / dv;
        }
    std::sort(x.begin(), x.end(), [](C a, C b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (auto& t : x) roots.push_back(t);
    return roots;
}

namespace {

std::vector<std::complex<double>> numericCoeffs(const UPoly<Value>& p,
                                                std::complex<double> zval) {
    std::vector<std::complex<double>> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p[i].approx(zval));
    return c;
}

std::complex<double> ctxZRef(const FieldCtx& ctx) {
    return ctx.top ? ctx.top->zRef : std::complex<double>(1.0, 0.0);
}

double isolationRadius(const std::vector<std::complex<double>>& roots, size_t i) {
    double d = 1.0;
    for (size_t j = 0; j < roots.size(); ++j)
        if (j != i) d = std::min(d, std::abs(roots[i] - roots[j]));
    return std::max(d / 3.0, 1e-13);
}

} // namespace

// ---------------------------------------------------------------------------
// exact k-th roots and binomial irreducibility
// ---------------------------------------------------------------------------

std::optional<ZPoly> polyKthRoot(const ZPoly& p, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return p;
    if (p.isZero()) return ZPoly();
    int d = p.degree();
    if (d % k != 0) return std::nullopt;
    int v = p.valuation();
    if (v % k != 0) return std::nullopt;
    // q = c * x^{v/k} * (pNormalized)^{1/k} via a truncated binomial series.
    auto c0root = ratKthRoot(p[v], k);
    if (!c0root) return std::nullopt;
    int m = d / k;
    // normalized tail: p / (p_v x^v) = 1 + a_1 x + ...
    std::vector<Rational> a(m - v / k + 1, Rational(0));
    Rational inv = 1 / p[v];
    for (size_t i = 0; i < a.size(); ++i)
        a[i] = p[v + i] * inv;
    // binomial series for (1 + t)^{1/k} truncated
    std::vector<Rational> q(a.size(), Rational(0));
    q[0] = 1;
    // iterate coefficients: q satisfies q^k = 1 + t-part; solve recursively:
    // coefficient matching: (q^k)_n = a_n
    for (size_t n = 1; n < a.size(); ++n) {
        // compute (current q, with q_n unknown)^k coefficient at n:
        // contribution of q_n is k * q_0^{k-1} * q_n = k * q_n
        std::vector<Rational> qk(n + 1, Rational(0));
        qk[0] = 1;
        // multiply (q truncated to n-1) k times, all terms of degree <= n
        std::vector<Rational> acc(n + 1, Rational(0));
        acc[0] = 1;
        for (unsigned rep = 0; rep < k; ++rep) {
            std::vector<Rational> next(n + 1, Rational(0));
            for (size_t i = 0; i <= n; ++i) {
                if (painleve::isZero(acc[i])) continue;
                for (size_t j = 0; i + j <= n && j < n; ++j) {
                    if (painleve::isZero(q[j])) continue;
                    next[i + j] += acc[i] * q[j];
                }
            }
            acc = std::move(next);
        }
        q[n] = (a[n] - acc[n]) / Rational(static_cast<long>(k));
    }
    ZPoly root;
    for (size_t i = 0; i < q.size(); ++i)
        if (!painleve::isZero(q[i])) root.at(v / k + i) = q[i] * *c0root;
    root.trim();
    // verify exactly
    ZPoly pw = ZPoly::one();
    for (unsigned i = 0; i < k; ++i) pw = pw * root;
    if (!(pw == p)) return std::nullopt;
    return root;
}

std::optional<RatFunc> ratFuncKthRoot(const RatFunc& f, unsigned k) {
    if (f.isZero()) return RatFunc(0);
    auto n = polyKthRoot(f.num(), k);
    if (!n) return std::nullopt;
    auto d = polyKthRoot(f.den(), k);
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

bool binomialIrreducibleQ(const Rational& r, unsigned k) {
    if (painleve::isZero(r)) return false;
    for (unsigned p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        bool prime = true;
        for (unsigned q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        if (ratKthRoot(r, p)) return false;
    }
    if (k % 4 == 0) {
        if (ratKthRoot(r / Rational(-4), 4)) return false;
    }
    return true;
}

bool binomialIrreducibleQz(const RatFunc& r, unsigned k) {
    if (r.isZero()) return false;
    for (unsigned p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        bool prime = true;
        for (unsigned q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        if (ratFuncKthRoot(r, p)) return false;
    }
    if (k % 4 == 0) {
        if (ratFuncKthRoot(r / RatFunc(Rational(-4)), 4)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// factorization over Q
// ---------------------------------------------------------------------------

namespace {

/// Primitive integer version with positive leading coefficient.
UPoly<Rational> primitiveIntegral(const UPoly<Rational>& p) {
    Integer den(1);
    for (int i = 0; i <= p.degree(); ++i) den = lcm(den, p[i].get_den());
    Integer num(0);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational scaled = p[i] * Rational(den);
        num = gcd(num, scaled.get_num());
    }
    if (num == 0) return p;
    Rational scale = Rational(den) / Rational(num);
    UPoly<Rational> out = p * scale;
    if (sgn(out.lead()) < 0) out = out * Rational(-1);
    return out;
}

/// Irreducible factors of a squarefree primitive integral polynomial.
/// Certified complete for degree <= 10 by root recombination.
std::vector<QFactor> factorSquarefreeIntegral(UPoly<Rational> p) {
    std::vector<QFactor> out;
    if (p.degree() <= 0) return out;
    if (p.degree() == 1) {
        out.push_back({p, 1, true});
        return out;
    }
    // Monicize: roots of pTilde(W) = lead^{d-1} p(W/lead) are lead * (roots of p).
    Rational lead = p.lead();
    int d = p.degree();
    UPoly<Rational> ptilde;
    for (int i = 0; i <= d; ++i)
        ptilde.at(i) = p[i] * ratPow(lead, d - 1 - i);
    ptilde.trim();

    std::vector<std::complex<double>> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back({ratToDouble(ptilde[i]), 0.0});
    auto roots = complexRoots(coeffs);

    bool certify = d <= 10;
    double big = 0.0;
    for (auto r : roots) big = std::max(big, std::abs(r));
    if (std::pow(big + 1.0, d / 2 + 1) > 1e12) certify = false;

    // Try subsets of roots (smallest first) whose product polynomial has
    // integer coefficients; verify exactly and recurse.
    int half = d / 2;
    std::vector<int> idx;
    std::function<bool(int, int, std::vector<int>&)> search =
        [&](int start, int need, std::vector<int>& chosen) -> bool {
        if (need == 0) {
            // Product of (W - root_i) over the subset, coefficients low-to-high.
            std::vector<std::complex<double>> fac{std::complex<double>(1.0, 0.0)};
            for (int i : chosen) {
                fac.push_back({0.0, 0.0});
                for (size_t j = fac.size() - 1; j >= 1; --j)
                    fac[j] = fac[j - 1] - roots[i] * fac[j];
                fac[0] = -roots[i] * fac[0];
            }
            UPoly<Rational> cand;
            for (size_t j = 0; j < fac.size(); ++j) {
                std::complex<double> c = fac[j];
                double re = std::round(c.real());
                if (std::abs(c.imag()) > 1e-5 || std::abs(c.real() - re) > 1e-5) return false;
                if (std::abs(re) > 9e15) return false;
                cand.at(j) = Rational(static_cast<long>(re));
            }
            cand.trim();
            if (cand.degree() != static_cast<int>(chosen.size())) return false;
            auto [q, r] = ptilde.divrem(cand);
            if (!r.isZero()) return false;
            // found a factor of ptilde
            auto rest = factorSquarefreeIntegral(primitiveIntegral(q));
            auto own = factorSquarefreeIntegral(primitiveIntegral(cand));
            for (auto& f : own) out.push_back(f);
            for (auto& f : rest) out.push_back(f);
            return true;
        }
        for (int i = start; i <= d - need; ++i) {
            chosen.push_back(i);
            if (search(i + 1, need - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (certify) {
        for (int size = 1; size <= half; ++size) {
            std::vector<int> chosen;
            if (search(0, size, chosen)) {
                // Map factors of ptilde back to factors of p: W = lead*x.
                std::vector<QFactor> mapped;
                for (auto& f : out) {
                    UPoly<Rational> g;
                    for (int i = 0; i <= f.factor.degree(); ++i)
                        g.at(i) = f.factor[i] * ratPow(lead, i);
                    g.trim();
                    mapped.push_back({primitiveIntegral(g), 1, f.certified});
                }
                return mapped;
            }
        }
        out.push_back({p, 1, true}); // no subset worked: irreducible
        return out;
    }

    // Uncertified path (degree too high or coefficients too large for the
    // recombination search): only peel numeric-integer linear factors.
    for (size_t i = 0; i < roots.size(); ++i) {
        double re = std::round(roots[i].real());
        if (std::abs(roots[i].imag()) > 1e-8 || std::abs(roots[i].real() - re) > 1e-8) continue;
        UPoly<Rational> lin(std::vector<Rational>{Rational(-static_cast<long>(re)), Rational(1)});
        auto [q, r] = ptilde.divrem(lin);
        if (r.isZero()) {
            ptilde = q;
            // the matching factor of p is lead*x - re
            UPoly<Rational> facp(std::vector<Rational>{Rational(-static_cast<long>(re)), lead});
            out.push_back({primitiveIntegral(facp), 1, true});
        }
    }
    if (ptilde.degree() > 0) {
        UPoly<Rational> g;
        for (int i = 0; i <= ptilde.degree(); ++i)
            g.at(i) = ptilde[i] * ratPow(lead, i);
        g.trim();
        out.push_back({primitiveIntegral(g), 1, false});
    }
    return out;
}

} // namespace

std::vector<QFactor> factorRationalPoly(const UPoly<Rational>& p) {
    std::vector<QFactor> out;
    if (p.degree() <= 0) return out;
    auto sq = squarefreeDecomposition(p);
    for (auto& [part, mult] : sq) {
        auto fs = factorSquarefreeIntegral(primitiveIntegral(part));
        for (auto& f : fs) {
            f.multiplicity = mult;
            out.push_back(f);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// clusters over Q, Q(z) and extensions
// ---------------------------------------------------------------------------

namespace {

UPoly<Rational> toRationalPoly(const UPoly<Value>& p) {
    UPoly<Rational> out;
    for (int i = 0; i <= p.degree(); ++i) {
        auto r = p[i].tryRational();
        if (!r) throw std::logic_error("expected rational coefficients");
        out.at(i) = *r;
    }
    out.trim();
    return out;
}

UPoly<Value> toValuePoly(const UPoly<Rational>& p) {
    UPoly<Value> out;
    for (int i = 0; i <= p.degree(); ++i) out.at(i) = Value(p[i]);
    out.trim();
    return out;
}

UPoly<Value> toValuePolyRF(const UPoly<RatFunc>& p) {
    UPoly<Value> out;
    for (int i = 0; i <= p.degree(); ++i) out.at(i) = Value(p[i]);
    out.trim();
    return out;
}

UPoly<RatFunc> toRatFuncPoly(const UPoly<Value>& p) {
    UPoly<RatFunc> out;
    for (int i = 0; i <= p.degree(); ++i) {
        auto r = p[i].tryRatFunc();
        if (!r) throw std::logic_error("expected Q(z) coefficients");
        out.at(i) = *r;
    }
    out.trim();
    return out;
}

std::vector<RootCluster> clustersOverQ(const UPoly<Value>& p) {
    std::vector<RootCluster> out;
    auto fs = factorRationalPoly(toRationalPoly(p));
    for (auto& f : fs) {
        RootCluster c;
        c.minpoly = toValuePoly(f.factor.monic());
        c.multiplicity = f.multiplicity;
        c.certified = f.certified;
        c.supported = true;
        std::vector<std::complex<double>> coeffs;
        for (int i = 0; i <= f.factor.degree(); ++i)
            coeffs.push_back({ratToDouble(f.factor[i]), 0.0});
        c.embeddings = complexRoots(coeffs);
        if (f.factor.degree() == 1)
            c.inFieldValue = Value(-f.factor[0] / f.factor[1]);
        out.push_back(std::move(c));
    }
    return out;
}

/// Try to find all polynomial/rational-function roots of a monic squarefree
/// Q(z)-polynomial; returns the roots found and divides them out of q.
std::vector<RatFunc> peelRatFuncRoots(UPoly<RatFunc>& q) {
    std::vector<RatFunc> roots;
    if (q.degree() < 1) return roots;

    // Clear denominators: Qc in Q[z][T], primitive.
    ZPoly den = ZPoly::one();
    for (int i = 0; i <= q.degree(); ++i) den = den * q[i].den() / upolyGcd(den, q[i].den());
    std::vector<ZPoly> qc(q.degree() + 1);
    for (int i = 0; i <= q.degree(); ++i) {
        RatFunc scaled = q[i] * RatFunc(den);
        if (!scaled.isPolynomial()) throw std::logic_error("denominator clearing failed");
        qc[i] = scaled.num();
    }
    int d = q.degree();
    ZPoly lead = qc[d];
    // Monicize: W = lead * T, ptilde(W) = lead^{d-1} * qc(W/lead)
    std::vector<ZPoly> pt(d + 1);
    for (int i = 0; i <= d; ++i) {
        ZPoly li = ZPoly::one();
        for (int k = 0; k < d - 1 - i; ++k) li = li * lead;
        pt[i] = qc[i] * li;
    }
    int degBound = 0;
    for (int i = 0; i <= d; ++i) degBound = std::max(degBound, pt[i].degree());

    // Choose a specialization z0 keeping ptilde squarefree.
    const Rational candidates[] = {Rational(0), Rational(1), Rational(2), Rational(3),
                                   Rational(-1), Rational(5), Rational(1, 2), Rational(7),
                                   Rational(-2), Rational(11)};
    std::optional<Rational> z0;
    UPoly<Rational> spec;
    for (const Rational& cand : candidates) {
        UPoly<Rational> s;
        for (int i = 0; i <= d; ++i) s.at(i) = pt[i](cand);
        s.trim();
        if (s.degree() != d) continue;
        if (upolyGcd(s, s.derivative()).degree() == 0) {
            z0 = cand;
            spec = s;
            break;
        }
    }
    if (!z0) return roots;

    // Rational roots of the specialized monic integer polynomial.
    std::vector<Rational> rr;
    for (const auto& f : factorRationalPoly(spec))
        if (f.factor.degree() == 1 && f.certified)
            rr.push_back(-f.factor[0] / f.factor[1]);

    // Shift pt to zeta = z - z0 coordinates for power-series lifting.
    std::vector<ZPoly> ptShift(d + 1);
    for (int i = 0; i <= d; ++i) ptShift[i] = pt[i].shift(*z0);

    auto chopTo = [](ZPoly& a, int k) {
        while (a.degree() >= k) {
            a.at(a.degree()) = Rational(0);
            a.trim();
        }
    };
    auto truncMul = [](const ZPoly& a, const ZPoly& b, int k) {
        ZPoly r;
        for (int i = 0; i <= a.degree() && i < k; ++i) {
            if (painleve::isZero(a[i])) continue;
            for (int j = 0; j <= b.degree() && i + j < k; ++j)
                r.at(i + j) = r[i + j] + a[i] * b[j];
        }
        r.trim();
        return r;
    };
    auto evalAt = [&](const std::vector<ZPoly>& poly, const ZPoly& w, int k) {
        ZPoly acc;
        for (int i = d; i >= 0; --i) {
            acc = truncMul(acc, w, k) + poly[i];
            chopTo(acc, k);
        }
        return acc;
    };

    std::vector<ZPoly> dpt(d + 1);
    for (int i = 1; i <= d; ++i) dpt[i - 1] = ptShift[i] * Rational(i);
    dpt[d] = ZPoly();

    int K = degBound + 2;
    for (const Rational& rho : rr) {
        // Newton-lift w with ptShift(w, zeta) = 0, w(0) = rho.
        ZPoly w(rho);
        int prec = 1;
        bool ok = true;
        while (prec < K) {
            prec = std::min(2 * prec, K);
            ZPoly f = evalAt(ptShift, w, prec);
            ZPoly fp = evalAt(dpt, w, prec);
            // invert fp mod zeta^prec
            if (fp.isZero() || painleve::isZero(fp[0])) { ok = false; break; }
            ZPoly inv(Rational(1) / fp[0]);
            int cur = 1;
            while (cur < prec) {
                cur = std::min(2 * cur, prec);
                inv = truncMul(inv, ZPoly(Rational(2)) - truncMul(fp, inv, cur), cur);
            }
            w = w - truncMul(f, inv, prec);
            chopTo(w, prec);
        }
        if (!ok) continue;
        // Unshift and verify exactly.
        ZPoly cand = w.shift(-*z0);
        // exact check: sum pt[i] * cand^i == 0
        ZPoly acc;
        for (int i = d; i >= 0; --i) acc = acc * cand + pt[i];
        if (!acc.isZero()) continue;
        RatFunc root(cand, lead);
        roots.push_back(root);
    }
    // Divide out the roots found.
    for (const RatFunc& r : roots) {
        UPoly<RatFunc> lin;
        lin.at(0) = RatFunc(0) - r;
        lin.at(1) = RatFunc(1);
        auto [qq, rr2] = q.divrem(lin);
        if (!rr2.isZero()) throw std::logic_error("verified root fails to divide");
        q = qq;
    }
    return roots;
}

std::vector<RootCluster> clustersOverQz(const UPoly<Value>& p, bool deferUnsupported) {
    std::vector<RootCluster> out;
    auto pr = toRatFuncPoly(p);
    auto sq = squarefreeDecomposition(pr);
    for (auto& [sf, mult] : sq) {
        // Constant-coefficient factor: factor over Q (stays irreducible over Q(z)).
        bool allConst = true;
        for (int i = 0; i <= sf.degree(); ++i)
            if (!sf[i].isConstant()) allConst = false;
        if (allConst) {
            UPoly<Rational> cp;
            for (int i = 0; i <= sf.degree(); ++i) cp.at(i) = sf[i].asRational();
            cp.trim();
            for (auto& f : factorRationalPoly(cp)) {
                RootCluster c;
                c.minpoly = toValuePoly(f.factor.monic());
                c.multiplicity = mult;
                c.certified = f.certified;
                // Constant extensions (number-field generators with w' = 0)
                // sit inside the tower for free.
                c.supported = true;
                if (f.factor.degree() == 1) c.inFieldValue = Value(-f.factor[0] / f.factor[1]);
                std::vector<std::complex<double>> coeffs;
                for (int i = 0; i <= f.factor.degree(); ++i)
                    coeffs.push_back({ratToDouble(f.factor[i]), 0.0});
                c.embeddings = complexRoots(coeffs);
                out.push_back(std::move(c));
            }
            continue;
        }

        UPoly<RatFunc> work = sf.monic();
        auto inField = peelRatFuncRoots(work);
        for (const RatFunc& r : inField) {
            RootCluster c;
            UPoly<Value> mp;
            mp.at(0) = Value(RatFunc(0) - r);
            mp.at(1) = Value(1);
            c.minpoly = mp;
            c.multiplicity = mult;
            c.certified = true;
            c.supported = true;
            c.inFieldValue = Value(r);
            c.embeddings = {Value(r).approx({1.0, 0.0})};
            out.push_back(std::move(c));
        }
        if (work.degree() == 0) continue;

        RootCluster c;
        c.minpoly = toValuePolyRF(work);
        c.multiplicity = mult;
        c.embeddings = complexRoots(numericCoeffs(c.minpoly, {1.0, 0.0}));
        if (work.degree() == 2) {
            c.certified = true; // squarefree quadratic with no in-field root
            c.supported = true;
        } else {
            bool binom = true;
            for (int i = 1; i < work.degree(); ++i)
                if (!work[i].isZero()) binom = false;
            if (binom) {
                RatFunc r = RatFunc(0) - work[0];
                c.certified = binomialIrreducibleQz(r, work.degree());
                c.supported = true;
            } else {
                c.certified = false;
                c.supported = false;
            }
        }
        if (!c.supported && !deferUnsupported)
            throw UnsupportedExtensionError(
                "roots require an extension of Q(z) outside radical/quadratic towers",
                c.minpoly.str("T", &valueToString));
        out.push_back(std::move(c));
    }
    return out;
}

/// Rationalize a double that should be a small rational (continued fractions).
std::optional<Rational> rationalize(double x, double tol = 1e-9, long maxDen = 1000000) {
    double a = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 40; ++i) {
        double fl = std::floor(a);
        long ai = static_cast<long>(fl);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > maxDen) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approxv = double(p1) / double(q1);
        if (std::abs(approxv - x) < tol) {
            Rational r(p1, q1);
            r.canonicalize();
            return r;
        }
        double rem = a - fl;
        if (std::abs(rem) < 1e-15) break;
        a = 1.0 / rem;
    }
    return std::nullopt;
}

std::vector<RootCluster> clustersOverExt(const UPoly<Value>& p, const FieldCtx& ctx,
                                         bool deferUnsupported) {
    std::vector<RootCluster> out;
    auto sq = squarefreeDecomposition(p);
    std::complex<double> zref = ctxZRef(ctx);
    for (auto& [sf0, mult] : sq) {
        UPoly<Value> work = sf0;
        // Peel in-field roots: degree-1 trivially; otherwise guess roots of
        // the monomial shape q * gen^j from the numeric picture and verify.
        bool progress = true;
        while (progress && work.degree() >= 1) {
            progress = false;
            if (work.degree() == 1) {
                Value root = (Value(0) - work[0]) / work[1];
                RootCluster c;
                UPoly<Value> mp;
                mp.at(0) = Value(0) - root;
                mp.at(1) = Value(1);
                c.minpoly = mp;
                c.multiplicity = mult;
                c.certified = true;
                c.supported = true;
                c.inFieldValue = root;
                c.embeddings = {root.approx(zref)};
                out.push_back(std::move(c));
                work = UPoly<Value>(Value(1));
                break;
            }
            auto numRoots = complexRoots(numericCoeffs(work, zref));
            std::complex<double> genA = ctx.top->genApprox;
            for (auto rho : numRoots) {
                bool found = false;
                for (int j = 0; j < ctx.top->degree() && !found; ++j) {
                    std::complex<double> gj = std::pow(genA, j);
                    if (std::abs(gj) < 1e-12) continue;
                    std::complex<double> ratio = rho / gj;
                    if (std::abs(ratio.imag()) > 1e-9) continue;
                    auto q = rationalize(ratio.real());
                    if (!q) continue;
                    Value cand = Value(*q) * ctx.generator().pow(j);
                    Value at = work.evalInto<Value>(cand, [](const Value& c) { return c; });
                    if (at.isZero()) {
                        UPoly<Value> lin;
                        lin.at(0) = Value(0) - cand;
                        lin.at(1) = Value(1);
                        auto [qq, rr] = work.divrem(lin);
                        if (rr.isZero()) {
                            RootCluster c;
                            c.minpoly = lin;
                            c.multiplicity = mult;
                            c.certified = true;
                            c.supported = true;
                            c.inFieldValue = cand;
                            c.embeddings = {rho};
                            out.push_back(std::move(c));
                            work = qq;
                            progress = true;
                            found = true;
                        }
                    }
                }
                if (found) break;
            }
        }
        if (work.degree() < 1) continue;

        RootCluster c;
        c.minpoly = work.monic();
        c.multiplicity = mult;
        c.embeddings = complexRoots(numericCoeffs(c.minpoly, zref));
        c.certified = false;
        if (ctx.base == BaseKind::Q) {
            c.supported = true; // dynamic evaluation guards reducible moduli
        } else {
            c.supported = extensionAllowed(ctx, c.minpoly);
        }
        if (!c.supported && !deferUnsupported)
            throw UnsupportedExtensionError(
                "roots over " + ctx.describe() + " exceed the implemented tower",
                c.minpoly.str("T", &valueToString));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

std::vector<RootCluster> rootClusters(const UPoly<Value>& p, const FieldCtx& ctx,
                                      bool deferUnsupported) {
    if (p.isZero()) throw std::domain_error("rootClusters: zero polynomial");
    if (p.degree() < 1) return {};
    if (ctx.top) return clustersOverExt(p, ctx, deferUnsupported);
    if (ctx.base == BaseKind::Q) return clustersOverQ(p);
    return clustersOverQz(p, deferUnsupported);
}

std::vector<AdjoinedRoot> rootsAdjoined(const UPoly<Value>& p, const FieldCtx& ctx) {
    std::vector<AdjoinedRoot> out;
    for (auto& c : rootClusters(p, ctx, false)) {
        if (c.inFieldValue) {
            out.push_back({*c.inFieldValue, c.multiplicity, ctx});
            continue;
        }
        double radius = c.embeddings.empty() ? 1e-12 : isolationRadius(c.embeddings, 0);
        FieldCtx ext = adjoinRoot(ctx, c.minpoly,
                                  c.embeddings.empty() ? std::complex<double>(0, 0)
                                                       : c.embeddings[0],
                                  radius, c.certified);
        out.push_back({ext.generator(), c.multiplicity, ext});
    }
    return out;
}

std::vector<RootHandle> univariateRoots(const UPoly<Value>& p, const FieldCtx& ctx) {
    std::vector<RootHandle> out;
    for (auto& c : rootClusters(p, ctx, false)) {
        if (c.inFieldValue) {
            RootHandle h;
            h.minpoly = c.minpoly;
            h.multiplicity = c.multiplicity;
            h.value = *c.inFieldValue;
            h.field = ctx;
            h.approx = c.embeddings.empty() ? h.value.approx(ctxZRef(ctx)) : c.embeddings[0];
            h.radius = 1e-12;
            h.certifiedIrreducible = true;
            out.push_back(std::move(h));
            continue;
        }
        for (size_t i = 0; i < c.embeddings.size(); ++i) {
            RootHandle h;
            h.minpoly = c.minpoly;
            h.multiplicity = c.multiplicity;
            h.radius = isolationRadius(c.embeddings, i);
            h.approx = c.embeddings[i];
            h.field = adjoinRoot(ctx, c.minpoly, c.embeddings[i], h.radius, c.certified);
            h.value = h.field.generator();
            h.certifiedIrreducible = c.certified;
            out.push_back(std::move(h));
        }
    }
    return out;
}

std::pair<Value, FieldCtx> kthRootAdjoined(const Value& v, unsigned k, const FieldCtx& ctx,
                                           int embeddingChoice) {
    if (k == 0) throw std::domain_error("kthRootAdjoined: k = 0");
    if (k == 1) return {v, ctx};
    if (v.isNumeric()) {
        std::complex<double> root = std::pow(v.num().v, 1.0 / double(k));
        double ang = 2.0 * M_PI * (embeddingChoice % static_cast<int>(k)) / double(k);
        root *= std::complex<double>(std::cos(ang), std::sin(ang));
        return {Value::numeric(root, v.num().err), ctx};
    }
    if (auto r = v.tryRational()) {
        if (auto rt = ratKthRoot(*r, k)) {
            if (embeddingChoice % k == 0) return {Value(*rt), ctx};
            // non-principal embedding of a rational root still needs roots of unity
        }
    }
    if (auto f = v.tryRatFunc()) {
        if (auto rt = ratFuncKthRoot(*f, k)) {
            if (embeddingChoice % k == 0) return {Value(*rt), ctx};
        }
    }
    // adjoin w with w^k = v
    UPoly<Value> mp;
    mp.at(0) = Value(0) - v;
    mp.at(static_cast<int>(k)) = Value(1);
    bool certified = false;
    if (auto r = v.tryRational())
        certified = binomialIrreducibleQ(*r, k);
    else if (auto f = v.tryRatFunc())
        certified = binomialIrreducibleQz(*f, k);
    std::complex<double> zref = ctxZRef(ctx);
    std::complex<double> base = std::pow(v.approx(zref), 1.0 / double(k));
    double ang = 2.0 * M_PI * (embeddingChoice % static_cast<int>(k)) / double(k);
    base *= std::complex<double>(std::cos(ang), std::sin(ang));
    FieldCtx ext = adjoinRoot(ctx, mp, base, 1e-12, certified);
    return {ext.generator(), ext};
}

} // namespace painleve
