#ifndef PAINLEVE_MULTIPOLY_HPP
#define PAINLEVE_MULTIPOLY_HPP

#include "painleve/rational.hpp"
#include "painleve/ratfunc.hpp"
#include "painleve/upoly.hpp"
#include "painleve/value.hpp"

#include <map>
#include <string>
#include <vector>

namespace painleve {

enum class Var { S, T, Z };

struct Exp3 {
    int s = 0, t = 0, z = 0;
    int total() const { return s + t + z; }
    int get(Var v) const { return v == Var::S ? s : v == Var::T ? t : z; }
    void set(Var v, int e) { (v == Var::S ? s : v == Var::T ? t : z) = e; }
    bool operator==(const Exp3& o) const { return s == o.s && t == o.t && z == o.z; }
};

/// Graded lexicographic S > T > z, leading term first.
struct GradedLexDesc {
    bool operator()(const Exp3& a, const Exp3& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.s != b.s) return a.s > b.s;
        if (a.t != b.t) return a.t > b.t;
        return a.z > b.z;
    }
};

/// Sparse polynomial in S, T, z over Q.  Terms are kept in canonical
/// graded-lex order and zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exp3, Rational, GradedLexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(Rational c) {
        if (!painleve::isZero(c)) terms_[Exp3{}] = std::move(c);
    }
    static MultiPoly var(Var v, int exp = 1) {
        MultiPoly p;
        Exp3 e;
        e.set(v, exp);
        p.terms_[e] = Rational(1);
        return p;
    }
    static MultiPoly term(Rational c, int es, int et, int ez);

    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t termCount() const { return terms_.size(); }
    Rational coeff(const Exp3& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void setCoeff(const Exp3& e, Rational c);

    int degree(Var v) const;
    int totalDegree() const;
    bool involves(Var v) const { return degree(v) > 0; }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp3{}); }
    Rational constantValue() const { return coeff(Exp3{}); }
    const Rational& leadCoeff() const { return terms_.begin()->second; } // graded-lex leading

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& k) const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Formal partial derivative.
    MultiPoly partial(Var v) const;

    /// View as a univariate polynomial in `v` with MultiPoly coefficients.
    UPoly<MultiPoly> asPolyIn(Var v) const;
    static MultiPoly fromPolyIn(Var v, const UPoly<MultiPoly>& p);

    /// Coefficient of v^k (a MultiPoly in the remaining variables).
    MultiPoly coeffOf(Var v, int k) const;

    /// Substitute ring elements for the three variables.  R needs +,*, and
    /// construction via `lift` from Rational.
    template <class R, class LiftFn>
    R substituted(const R& sv, const R& tv, const R& zv, LiftFn lift) const {
        std::vector<R> sp{lift(Rational(1))}, tp{lift(Rational(1))}, zp{lift(Rational(1))};
        auto powOf = [](std::vector<R>& cache, const R& base, int e) -> const R& {
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
            return cache[e];
        };
        R acc = lift(Rational(0));
        for (const auto& [e, c] : terms_) {
            R term = lift(c);
            if (e.s) term = term * powOf(sp, sv, e.s);
            if (e.t) term = term * powOf(tp, tv, e.t);
            if (e.z) term = term * powOf(zp, zv, e.z);
            acc = acc + term;
        }
        return acc;
    }

    /// f with z folded into the coefficient field: a polynomial in S (or T)
    /// whose coefficients are polynomials in the remaining non-z variable
    /// over Value (Rational or RatFunc as needed).
    UPoly<UPoly<Value>> toNestedValue(Var outer, Var inner) const;

    /// Univariate in `v` over Value, for polynomials not involving the
    /// other non-z variable.
    UPoly<Value> toUnivariateValue(Var v) const;

    /// Rational content (gcd of coefficient numerators / lcm of denominators).
    Rational content() const;
    /// Content as a polynomial in z: gcd over Q[z] of the z-coefficient
    /// polynomials of the (S,T)-monomials.
    ZPoly zContent() const;

    /// Exact division; nullopt when o does not divide *this.
    std::optional<MultiPoly> dividedBy(const MultiPoly& o) const;

    std::string str(const std::string& sName = "S", const std::string& tName = "T",
                    const std::string& zName = "z") const;

private:
    TermMap terms_;
};

/// Determinant-of-Sylvester resultant in `v` (fraction-free elimination).
MultiPoly resultantPoly(const MultiPoly& f, const MultiPoly& g, Var v);

/// disc_v(f) = (-1)^{n(n-1)/2} resultant(f, df/dv) / leadCoeff_v(f).
MultiPoly discriminantPoly(const MultiPoly& f, Var v);

/// Primitive gcd in Q[S,T,z] (positive integer-primitive normalization);
/// monic in `v` when the leading coefficient is scalar.
MultiPoly gcdPoly(const MultiPoly& f, const MultiPoly& g, Var v);

/// Integer-primitive normalization with positive graded-lex leading
/// coefficient; also removes any common Q[z] content.
MultiPoly canonicalPrimitive(const MultiPoly& f);

} // namespace painleve

#endif
