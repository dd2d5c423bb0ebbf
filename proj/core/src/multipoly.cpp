#include "painleve/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace painleve {

MultiPoly MultiPoly::term(Rational c, int es, int et, int ez) {
    MultiPoly p;
    if (!painleve::isZero(c)) p.terms_[Exp3{es, et, ez}] = std::move(c);
    return p;
}

void MultiPoly::setCoeff(const Exp3& e, Rational c) {
    if (painleve::isZero(c))
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.get(v));
    return terms_.empty() ? -1 : d;
}

int MultiPoly::totalDegree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (painleve::isZero(it->second)) r.terms_.erase(it);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exp3 e{ea.s + eb.s, ea.t + eb.t, ea.z + eb.z};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rational p = ca * cb;
                if (!painleve::isZero(p)) r.terms_[e] = std::move(p);
            } else {
                it->second += ca * cb;
                if (painleve::isZero(it->second)) r.terms_.erase(it);
            }
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& k) const {
    if (painleve::isZero(k)) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
    MultiPoly acc(Rational(1)), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::partial(Var v) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        int k = e.get(v);
        if (k == 0) continue;
        Exp3 e2 = e;
        e2.set(v, k - 1);
        r.terms_[e2] = c * Rational(k);
    }
    return r;
}

UPoly<MultiPoly> MultiPoly::asPolyIn(Var v) const {
    UPoly<MultiPoly> p;
    for (const auto& [e, c] : terms_) {
        int k = e.get(v);
        Exp3 e2 = e;
        e2.set(v, 0);
        MultiPoly& coeffPoly = p.at(k);
        coeffPoly.setCoeff(e2, coeffPoly.coeff(e2) + c);
    }
    p.trim();
    return p;
}

MultiPoly MultiPoly::fromPolyIn(Var v, const UPoly<MultiPoly>& p) {
    MultiPoly r;
    for (int k = 0; k <= p.degree(); ++k) {
        for (const auto& [e, c] : p[k].terms()) {
            Exp3 e2 = e;
            e2.set(v, e2.get(v) + k);
            r.setCoeff(e2, r.coeff(e2) + c);
        }
    }
    return r;
}

MultiPoly MultiPoly::coeffOf(Var v, int k) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.get(v) != k) continue;
        Exp3 e2 = e;
        e2.set(v, 0);
        r.terms_[e2] = c;
    }
    return r;
}

UPoly<UPoly<Value>> MultiPoly::toNestedValue(Var outer, Var inner) const {
    UPoly<UPoly<Value>> out;
    for (const auto& [e, c] : terms_) {
        Value coeff = e.z ? Value(RatFunc(ZPoly::monomial(c, e.z))) : Value(c);
        UPoly<Value>& slot = out.at(e.get(outer));
        int j = e.get(inner);
        slot.at(j) = slot[j] + coeff;
    }
    for (int i = 0; i <= out.degree(); ++i) out.at(i).trim();
    out.trim();
    return out;
}

UPoly<Value> MultiPoly::toUnivariateValue(Var v) const {
    UPoly<Value> out;
    for (const auto& [e, c] : terms_) {
        Exp3 rest = e;
        rest.set(v, 0);
        if (rest.s || rest.t)
            throw std::logic_error("toUnivariateValue: polynomial involves another curve variable");
        Value coeff = e.z ? Value(RatFunc(ZPoly::monomial(c, e.z))) : Value(c);
        out.at(e.get(v)) = out[e.get(v)] + coeff;
    }
    out.trim();
    return out;
}

Rational MultiPoly::content() const {
    Integer num(0), den(1);
    for (const auto& [e, c] : terms_) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    if (num == 0) return Rational(0);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

ZPoly MultiPoly::zContent() const {
    // Group terms by (S,T)-exponent into Q[z] polynomials, then gcd them.
    std::map<std::pair<int, int>, ZPoly> groups;
    for (const auto& [e, c] : terms_) groups[{e.s, e.t}].at(e.z) = c;
    ZPoly g;
    for (auto& [k, p] : groups) {
        p.trim();
        g = upolyGcd(g, p);
        if (g.degree() == 0) break;
    }
    return g;
}

std::optional<MultiPoly> MultiPoly::dividedBy(const MultiPoly& o) const {
    if (o.isZero()) return std::nullopt;
    if (isZero()) return MultiPoly();
    // Long division on leading terms in graded-lex order.
    MultiPoly rem = *this, quot;
    const auto& [le, lc] = *o.terms_.begin();
    while (!rem.isZero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        Exp3 q{re.s - le.s, re.t - le.t, re.z - le.z};
        if (q.s < 0 || q.t < 0 || q.z < 0) return std::nullopt;
        MultiPoly t = term(rc / lc, q.s, q.t, q.z);
        quot = quot + t;
        rem = rem - t * o;
        // Leading term strictly decreases in graded-lex order, so this
        // terminates; a nonzero remainder with no divisible leading term
        // exits through the negative-exponent test above.
    }
    return quot;
}

std::string MultiPoly::str(const std::string& sName, const std::string& tName,
                           const std::string& zName) const {
    if (terms_.empty()) return "0";
    auto varPow = [](const std::string& name, int e) {
        if (e == 0) return std::string();
        std::string base = name;
        if (e > 1 && name.find('\'') != std::string::npos) base = "(" + name + ")";
        if (e == 1) return base;
        return base + "^" + std::to_string(e);
    };
    std::string out;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::vector<std::string> factors;
        if (a != 1 || e.total() == 0) factors.push_back(ratToString(a));
        if (e.s) factors.push_back(varPow(sName, e.s));
        if (e.t) factors.push_back(varPow(tName, e.t));
        if (e.z) factors.push_back(varPow(zName, e.z));
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

namespace {

/// Fraction-free Gaussian elimination (Bareiss) determinant of a square
/// matrix of polynomials.  Exact divisions are guaranteed by the method.
MultiPoly bareissDet(std::vector<std::vector<MultiPoly>> m) {
    size_t n = m.size();
    if (n == 0) return MultiPoly(Rational(1));
    MultiPoly prev(Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].isZero()) {
            size_t swap = k + 1;
            while (swap < n && m[swap][k].isZero()) ++swap;
            if (swap == n) return MultiPoly();
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = num.dividedBy(prev);
                if (!q) throw std::logic_error("Bareiss: non-exact division");
                m[i][j] = *q;
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

MultiPoly resultantPoly(const MultiPoly& f, const MultiPoly& g, Var v) {
    if (f.isZero() || g.isZero())
        throw std::domain_error("resultant of a zero polynomial");
    UPoly<MultiPoly> a = f.asPolyIn(v), b = g.asPolyIn(v);
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return MultiPoly(Rational(1));
    if (m == 0) return a[0].pow(n);
    if (n == 0) return b[0].pow(m);
    size_t dim = m + n;
    std::vector<std::vector<MultiPoly>> syl(dim, std::vector<MultiPoly>(dim));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= m; ++c) syl[r][r + c] = a[m - c];
    for (int r = 0; r < m; ++r)
        for (int c = 0; c <= n; ++c) syl[n + r][r + c] = b[n - c];
    return bareissDet(std::move(syl));
}

MultiPoly discriminantPoly(const MultiPoly& f, Var v) {
    int n = f.degree(v);
    if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
    MultiPoly res = resultantPoly(f, f.partial(v), v);
    MultiPoly lead = f.asPolyIn(v)[n];
    auto q = res.dividedBy(lead);
    if (!q) throw std::logic_error("discriminant: leading coefficient does not divide");
    int sgnExp = (n * (n - 1) / 2) % 2;
    return sgnExp ? -*q : *q;
}

namespace {

MultiPoly primitivePositive(const MultiPoly& f) {
    if (f.isZero()) return f;
    Rational c = f.content();
    MultiPoly p = f * (1 / c);
    // Sign convention: the lexicographically greatest term (S > T > z,
    // ignoring total degree) carries a positive coefficient.  This keeps
    // the y'-leading part positive, e.g. (y')^2 - y^3 - z stays as is.
    const Rational* lexLead = nullptr;
    Exp3 best{-1, -1, -1};
    for (const auto& [e, coef] : p.terms()) {
        bool greater = std::tie(e.s, e.t, e.z) > std::tie(best.s, best.t, best.z);
        if (greater) {
            best = e;
            lexLead = &coef;
        }
    }
    if (lexLead && sgn(*lexLead) < 0) p = -p;
    return p;
}

/// Pseudo-remainder of a by b in variable v (coefficients multiplied up).
MultiPoly pseudoRem(const MultiPoly& a, const MultiPoly& b, Var v) {
    UPoly<MultiPoly> pa = a.asPolyIn(v), pb = b.asPolyIn(v);
    int db = pb.degree();
    MultiPoly lb = pb[db];
    UPoly<MultiPoly> r = pa;
    while (r.degree() >= db && !r.isZero()) {
        int k = r.degree() - db;
        MultiPoly lr = r[r.degree()];
        // r := lb * r - lr * x^k * b
        UPoly<MultiPoly> t;
        for (int i = 0; i <= r.degree(); ++i) t.at(i) = r[i] * lb;
        for (int i = 0; i <= db; ++i) t.at(i + k) = t[i + k] - lr * pb[i];
        t.trim();
        if (t.degree() == r.degree())
            throw std::logic_error("pseudoRem: degree did not drop");
        r = std::move(t);
    }
    return MultiPoly::fromPolyIn(v, r);
}

} // namespace

MultiPoly gcdPoly(const MultiPoly& f, const MultiPoly& g, Var v) {
    if (f.isZero()) return primitivePositive(g);
    if (g.isZero()) return primitivePositive(f);
    if (f.isConstant() || g.isConstant()) return MultiPoly(Rational(1));

    // Contents with respect to v (recursive over the remaining variables).
    auto contentIn = [&](const MultiPoly& p) -> MultiPoly {
        UPoly<MultiPoly> u = p.asPolyIn(v);
        MultiPoly c;
        Var next = (v == Var::S) ? Var::T : (v == Var::T ? Var::Z : Var::S);
        for (int i = 0; i <= u.degree(); ++i) {
            if (u[i].isZero()) continue;
            c = c.isZero() ? primitivePositive(u[i]) : gcdPoly(c, u[i], next);
            if (c.isConstant()) return MultiPoly(Rational(1));
        }
        return c;
    };

    if (f.degree(v) < 1 || g.degree(v) < 1) {
        // One of them is free of v: gcd lives in the coefficients.
        const MultiPoly& freeOne = f.degree(v) < 1 ? f : g;
        const MultiPoly& other = f.degree(v) < 1 ? g : f;
        MultiPoly c = contentIn(other);
        Var next = (v == Var::S) ? Var::T : (v == Var::T ? Var::Z : Var::S);
        if (freeOne.isConstant() || c.isConstant()) return MultiPoly(Rational(1));
        return gcdPoly(primitivePositive(freeOne), c, next);
    }

    MultiPoly cf = contentIn(f), cg = contentIn(g);
    Var next = (v == Var::S) ? Var::T : (v == Var::T ? Var::Z : Var::S);
    MultiPoly cc = (cf.isConstant() || cg.isConstant()) ? MultiPoly(Rational(1))
                                                        : gcdPoly(cf, cg, next);

    auto primPart = [&](const MultiPoly& p, const MultiPoly& c) {
        auto q = p.dividedBy(c);
        return q ? primitivePositive(*q) : primitivePositive(p);
    };
    MultiPoly a = primPart(f, cf), b = primPart(g, cg);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    while (!b.isZero()) {
        MultiPoly r = pseudoRem(a, b, v);
        a = std::move(b);
        if (r.isZero()) {
            b = MultiPoly();
        } else {
            MultiPoly cr = contentIn(r);
            auto q = r.dividedBy(cr);
            b = q ? primitivePositive(*q) : primitivePositive(r);
        }
    }
    MultiPoly result = cc * primitivePositive(a);
    result = primitivePositive(result);
    // Monic normalization when the v-leading coefficient is scalar.
    UPoly<MultiPoly> u = result.asPolyIn(v);
    if (u.degree() >= 0 && u[u.degree()].isConstant())
        result = result * (1 / u[u.degree()].constantValue());
    return result;
}

MultiPoly canonicalPrimitive(const MultiPoly& f) {
    if (f.isZero()) return f;
    MultiPoly p = f;
    ZPoly zc = p.zContent();
    if (zc.degree() > 0) {
        // Divide out the common Q[z] factor.
        MultiPoly divisor;
        for (int i = 0; i <= zc.degree(); ++i)
            if (!painleve::isZero(zc[i]))
                divisor = divisor + MultiPoly::term(zc[i], 0, 0, i);
        auto q = p.dividedBy(divisor);
        if (q) p = *q;
    }
    return primitivePositive(p);
}

} // namespace painleve
