#ifndef PAINLEVE_UPOLY_HPP
#define PAINLEVE_UPOLY_HPP

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace painleve {

template <class C>
bool coeffIsZero(const C& c) { return c == C(0); }

/// Dense univariate polynomial over a field-like coefficient type C.
/// C must be constructible from small ints and support +,-,*,/ and ==.
/// Coefficients are stored low-to-high; the representation never carries
/// trailing zeros (zero polynomial = empty vector, degree -1).
template <class C>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(C constant) {
        if (!coeffIsZero(constant)) c_.push_back(std::move(constant));
    }
    explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(C(1)); }
    static UPoly x() { return UPoly(std::vector<C>{C(0), C(1)}); }
    static UPoly monomial(C coeff, int deg) {
        std::vector<C> v(deg + 1, C(0));
        v[deg] = std::move(coeff);
        return UPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }

    const C& operator[](size_t i) const {
        static const C kZero = C(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    C& at(size_t i) {
        if (i >= c_.size()) c_.resize(i + 1, C(0));
        return c_[i];
    }
    void trim() {
        while (!c_.empty() && coeffIsZero(c_.back())) c_.pop_back();
    }
    const std::vector<C>& coeffs() const { return c_; }

    const C& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    C constantTerm() const { return c_.empty() ? C(0) : c_[0]; }

    /// Order of vanishing at 0 (degree+1 convention avoided: zero poly -> -1).
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!coeffIsZero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = C(0) - c;
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        UPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), C(0));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (*this)[i] + o[i];
        r.trim();
        return r;
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (isZero() || o.isZero()) return UPoly();
        UPoly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, C(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (coeffIsZero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }
    UPoly operator*(const C& k) const {
        UPoly r = *this;
        for (auto& c : r.c_) c = c * k;
        r.trim();
        return r;
    }
    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    /// Quotient/remainder over a field.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        assert(!d.isZero());
        UPoly q, r = *this;
        while (!r.isZero() && r.degree() >= d.degree()) {
            C f = r.lead() / d.lead();
            int k = r.degree() - d.degree();
            q.at(k) = q[k] + f;
            for (int i = 0; i <= d.degree(); ++i)
                r.at(i + k) = r[i + k] - f * d[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    UPoly operator/(const UPoly& d) const { return divrem(d).first; }
    UPoly operator%(const UPoly& d) const { return divrem(d).second; }

    UPoly derivative() const {
        UPoly r;
        for (size_t i = 1; i < c_.size(); ++i)
            r.at(i - 1) = c_[i] * C(static_cast<int>(i));
        r.trim();
        return r;
    }

    UPoly monic() const {
        if (isZero()) return *this;
        C inv = C(1) / lead();
        return *this * inv;
    }

    C operator()(const C& x) const {
        C acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Horner evaluation into another ring: liftFn maps C into R.
    template <class R, class LiftFn>
    R evalInto(const R& x, LiftFn liftFn) const {
        R acc = liftFn(C(0));
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + liftFn(c_[i]);
        return acc;
    }

    UPoly compose(const UPoly& g) const {
        UPoly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + UPoly(c_[i]);
        return acc;
    }

    /// p(x + a)
    UPoly shift(const C& a) const { return compose(UPoly(std::vector<C>{a, C(1)})); }

    /// x^deg * p(1/x)
    UPoly reversed() const {
        std::vector<C> v(c_.rbegin(), c_.rend());
        UPoly r(std::move(v));
        return r;
    }

    std::string str(const std::string& var, std::string (*fmt)(const C&)) const {
        if (isZero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (coeffIsZero(c_[i])) continue;
            std::string cs = fmt(c_[i]);
            bool composite = cs.find(' ') != std::string::npos;
            if (composite) cs = "(" + cs + ")";
            bool neg = !composite && !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (!out.empty())
                out += neg ? " - " : " + ";
            else if (neg)
                out += "-";
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<C> c_;
};

/// Monic gcd over a field.  gcd(0,0) = 0 by convention.
template <class C>
UPoly<C> upolyGcd(UPoly<C> a, UPoly<C> b) {
    while (!b.isZero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class C>
std::tuple<UPoly<C>, UPoly<C>, UPoly<C>> upolyExtGcd(const UPoly<C>& a, const UPoly<C>& b) {
    UPoly<C> r0 = a, r1 = b;
    UPoly<C> s0 = UPoly<C>::one(), s1;
    UPoly<C> t0, t1 = UPoly<C>::one();
    while (!r1.isZero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1); r1 = std::move(r);
        UPoly<C> s2 = s0 - q * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        UPoly<C> t2 = t0 - q * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.isZero()) return {r0, s0, t0};
    C inv = C(1) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Yun's squarefree decomposition (characteristic 0).
/// Returns pairs (factor_i, multiplicity i) with p = lead * prod factor_i^i,
/// each factor monic squarefree, pairwise coprime.
template <class C>
std::vector<std::pair<UPoly<C>, int>> squarefreeDecomposition(const UPoly<C>& p) {
    std::vector<std::pair<UPoly<C>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<C> a = p.monic();
    UPoly<C> g = upolyGcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    UPoly<C> w = a / g;
    UPoly<C> y = a.derivative() / g;
    int i = 1;
    while (true) {
        UPoly<C> zp = y - w.derivative();
        if (zp.isZero()) {
            if (w.degree() > 0) out.push_back({w.monic(), i});
            break;
        }
        UPoly<C> f = upolyGcd(w, zp);
        if (f.degree() > 0) out.push_back({f.monic(), i});
        w = w / f;
        y = zp / f;
        ++i;
    }
    return out;
}

/// Squarefree part: product of the distinct irreducible factors, monic.
template <class C>
UPoly<C> squarefreePart(const UPoly<C>& p) {
    if (p.degree() <= 0) return p.isZero() ? p : UPoly<C>::one();
    UPoly<C> g = upolyGcd(p, p.derivative());
    return (p / g).monic();
}

} // namespace painleve

#endif
