#ifndef PAINLEVE_RATFUNC_HPP
#define PAINLEVE_RATFUNC_HPP

#include "painleve/rational.hpp"
#include "painleve/upoly.hpp"

#include <optional>
#include <string>

namespace painleve {

using ZPoly = UPoly<Rational>; // element of Q[z]

std::string zPolyToString(const ZPoly& p);

/// Element of Q(z).  Invariants: denominator monic and nonzero,
/// gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(ZPoly::one()) {}
    RatFunc(int n) : num_(ZPoly(Rational(n))), den_(ZPoly::one()) {}
    RatFunc(const Rational& q) : num_(ZPoly(q)), den_(ZPoly::one()) {}
    explicit RatFunc(ZPoly p) : num_(std::move(p)), den_(ZPoly::one()) {}
    RatFunc(ZPoly n, ZPoly d);

    static RatFunc z() { return RatFunc(ZPoly::x()); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_.degree() == 0; }
    bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
    Rational asRational() const; // requires isConstant()

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    /// d/dz by the quotient rule.
    RatFunc dz() const;

    /// Evaluate at z = a; nullopt when a is a pole.
    std::optional<Rational> evalAt(const Rational& a) const;

    std::string str() const;

private:
    ZPoly num_, den_;
    void normalize();
};

inline bool coeffIsZero(const RatFunc& f) { return f.isZero(); }

} // namespace painleve

#endif
