#include "painleve/ratfunc.hpp"

#include <stdexcept>

namespace painleve {

std::string zPolyToString(const ZPoly& p) {
    return p.str("z", [](const Rational& q) { return ratToString(q); });
}

RatFunc::RatFunc(ZPoly n, ZPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.isZero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.isZero()) {
        den_ = ZPoly::one();
        return;
    }
    ZPoly g = upolyGcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rational lc = den_.lead();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RatFunc::asRational() const {
    if (!isConstant()) throw std::domain_error("RatFunc: not a constant");
    if (num_.isZero()) return Rational(0);
    return num_[0] / den_[0];
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.isZero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (isZero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(1);
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -e : e;
    RatFunc acc(1);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

RatFunc RatFunc::dz() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<Rational> RatFunc::evalAt(const Rational& a) const {
    Rational d = den_(a);
    if (painleve::isZero(d)) return std::nullopt;
    return num_(a) / d;
}

std::string RatFunc::str() const {
    if (isPolynomial()) return zPolyToString(num_);
    std::string n = zPolyToString(num_);
    std::string d = zPolyToString(den_);
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+-*^ ") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

} // namespace painleve
