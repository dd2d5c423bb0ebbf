#include "painleve/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace painleve {

Frac::Frac(long num, long den) : n(num), d(den) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
}

std::string Frac::str() const {
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
}

Series Series::constant(const Value& v) {
    Series s;
    if (!v.isZero()) s.t_[0] = v;
    return s;
}

Series Series::monomial(const Value& c, Frac e) {
    Series s;
    s.ram_ = static_cast<int>(e.d);
    if (!c.isZero()) s.t_[e.n] = c;
    return s;
}

Series Series::unknownBeyond(Frac bound) {
    Series s;
    s.ram_ = static_cast<int>(bound.d);
    s.valid_ = bound.n;
    return s;
}

void Series::purge() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.isZero() || (valid_ < kInf && it->first >= valid_))
            it = t_.erase(it);
        else
            ++it;
    }
}

std::optional<Frac> Series::valuation() const {
    if (t_.empty()) return std::nullopt;
    return Frac(t_.begin()->first, ram_);
}

Frac Series::effectiveOrder() const {
    if (!t_.empty()) return Frac(t_.begin()->first, ram_);
    return validIsInfinite() ? Frac(kInf) : Frac(valid_, ram_);
}

Value Series::coeff(Frac e) const {
    if ((e.n * ram_) % e.d != 0) return Value(0);
    long key = e.n * ram_ / e.d;
    auto it = t_.find(key);
    return it == t_.end() ? Value(0) : it->second;
}

std::pair<Frac, Value> Series::leadingTerm() const {
    if (t_.empty()) throw std::logic_error("leadingTerm of a series with no known term");
    return {Frac(t_.begin()->first, ram_), t_.begin()->second};
}

Series Series::withRam(int m) const {
    if (m == ram_) return *this;
    if (m % ram_ != 0) throw std::logic_error("withRam: not a multiple");
    long k = m / ram_;
    Series r;
    r.ram_ = m;
    r.valid_ = validIsInfinite() ? kInf : valid_ * k;
    for (const auto& [e, c] : t_) r.t_[e * k] = c;
    return r;
}

std::pair<Series, Series> Series::unified(const Series& a, const Series& b) {
    int m = std::lcm(a.ram_, b.ram_);
    return {a.withRam(m), b.withRam(m)};
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

Series Series::operator+(const Series& o) const {
    auto [a, b] = unified(*this, o);
    Series r;
    r.ram_ = a.ram_;
    r.valid_ = std::min(a.valid_, b.valid_);
    r.t_ = std::move(a.t_);
    for (const auto& [e, c] : b.t_) {
        auto it = r.t_.find(e);
        if (it == r.t_.end())
            r.t_[e] = c;
        else {
            it->second = it->second + c;
        }
    }
    r.purge();
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    auto [a, b] = unified(*this, o);
    Series r;
    r.ram_ = a.ram_;
    // validity: min(va + ord_b, vb + ord_a), saturating on exact inputs
    auto satAdd = [](long x, long y) {
        if (x >= kInf || y >= kInf) return kInf;
        return x + y;
    };
    long ordA = a.t_.empty() ? a.valid_ : a.t_.begin()->first;
    long ordB = b.t_.empty() ? b.valid_ : b.t_.begin()->first;
    r.valid_ = std::min(satAdd(a.valid_, ordB), satAdd(b.valid_, ordA));
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            long e = ea + eb;
            if (r.valid_ < kInf && e >= r.valid_) continue;
            auto it = r.t_.find(e);
            if (it == r.t_.end())
                r.t_[e] = ca * cb;
            else
                it->second = it->second + ca * cb;
        }
    r.purge();
    return r;
}

Series Series::operator*(const Value& k) const {
    Series r = *this;
    if (k.isZero()) {
        r.t_.clear();
        return r;
    }
    for (auto& [e, c] : r.t_) c = c * k;
    r.purge();
    return r;
}

bool Series::sameUpToValidity(const Series& o) const {
    auto [a, b] = unified(*this, o);
    long v = std::min(a.valid_, b.valid_);
    for (const auto& [e, c] : a.t_)
        if (e < v && !(c == b.coeff(Frac(e, a.ram_)))) return false;
    for (const auto& [e, c] : b.t_)
        if (e < v && !(c == a.coeff(Frac(e, b.ram_)))) return false;
    return true;
}

Series Series::inverse(std::optional<Frac> horizonIfExact) const {
    if (t_.empty())
        throw DivisionByZeroSeriesError("inverse of a series with no known nonzero term");
    long lead = t_.begin()->first;
    if (validIsInfinite() && t_.size() > 1) {
        if (!horizonIfExact)
            throw std::logic_error("Series::inverse of an exact series needs a horizon");
        // Result valid to H requires the input known to H + 2*lead.
        Frac need = *horizonIfExact + Frac(2 * lead, ram_);
        return truncated(need).inverse();
    }
    Value c0 = t_.begin()->second;
    // this = c0 u^lead (1 + eps) with ord(eps) > 0
    Series eps;
    eps.ram_ = ram_;
    long relValid = validIsInfinite() ? kInf : valid_ - lead;
    eps.valid_ = relValid;
    Value c0inv = c0.inverse();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
        eps.t_[it->first - lead] = it->second * c0inv;
    // 1/(1+eps) by the truncated geometric series
    Series acc = Series::constant(Value(1));
    acc.valid_ = relValid;
    acc.ram_ = ram_;
    if (!eps.t_.empty()) {
        long ordEps = eps.t_.begin()->first;
        long terms = (relValid / std::max(1L, ordEps)) + 2;
        Series epsPow = eps;
        Series sum = Series::constant(Value(1));
        sum.valid_ = relValid;
        sum.ram_ = ram_;
        int sign = -1;
        for (long k = 1; k <= terms && !epsPow.t_.empty(); ++k) {
            sum = sign > 0 ? sum + epsPow : sum - epsPow;
            sign = -sign;
            epsPow = epsPow * eps;
        }
        acc = sum;
    }
    // result = acc * c0^{-1} u^{-lead}
    Series r;
    r.ram_ = ram_;
    r.valid_ = acc.validIsInfinite() ? kInf : acc.valid_ - lead;
    for (const auto& [e, c] : acc.t_) r.t_[e - lead] = c * c0inv;
    r.purge();
    return r;
}

Series Series::powInt(long e) const {
    if (e == 0) return Series::constant(Value(1));
    Series base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -e : e;
    Series acc = Series::constant(Value(1));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Series Series::fracPow(long p, long q,
                       const std::function<Value(const Value&)>& leadRoot) const {
    if (q <= 0) throw std::domain_error("fracPow: q must be positive");
    if (t_.empty())
        throw DivisionByZeroSeriesError("fracPow of a series with no known leading term");
    long lead = t_.begin()->first;
    Value c0 = t_.begin()->second;
    // this = c0 u^{lead} (1 + eps)
    Series eps;
    eps.ram_ = ram_;
    long relValid = validIsInfinite() ? kInf : valid_ - lead;
    eps.valid_ = relValid;
    Value c0inv = c0.inverse();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
        eps.t_[it->first - lead] = it->second * c0inv;
    // (1+eps)^{p/q} by the binomial series.
    Series sum = Series::constant(Value(1));
    sum.ram_ = ram_;
    sum.valid_ = relValid;
    if (!eps.t_.empty()) {
        if (relValid >= kInf)
            throw std::logic_error("Series::fracPow of an exact non-monomial needs prior truncation");
        long ordEps = eps.t_.begin()->first;
        long terms = (relValid / std::max(1L, ordEps)) + 2;
        Series epsPow = eps;
        Rational alpha = Rational(p) / Rational(q);
        Rational coef(1);
        for (long k = 1; k <= terms && !epsPow.t_.empty(); ++k) {
            coef = coef * (alpha - Rational(k - 1)) / Rational(k);
            sum = sum + epsPow * Value(coef);
            epsPow = epsPow * eps;
        }
    }
    Value rootC = leadRoot(c0);
    if (p != 1) rootC = rootC.pow(p);
    // exponent shift: (lead/ram)*(p/q) = lead*p / (ram*q) on the refined grid
    int newRam = static_cast<int>(ram_ * q);
    Series scaled = sum.withRam(newRam);
    Series r;
    r.ram_ = newRam;
    long shift = lead * p;
    r.valid_ = scaled.validIsInfinite() ? kInf : scaled.valid_ + shift;
    for (const auto& [e, c] : scaled.t_) r.t_[e + shift] = c * rootC;
    r.purge();
    return r.ramNormalized();
}

Series Series::deriveU() const {
    Series r;
    r.ram_ = ram_;
    r.valid_ = validIsInfinite() ? kInf : valid_ - ram_;
    for (const auto& [e, c] : t_) {
        if (e == 0) continue;
        Rational q(e);
        q /= ram_;
        r.t_[e - ram_] = c * Value(q);
    }
    r.purge();
    return r;
}

Series Series::deriveZ() const {
    Series r;
    r.ram_ = ram_;
    r.valid_ = valid_;
    for (const auto& [e, c] : t_) {
        Value d = c.dz();
        if (!d.isZero()) r.t_[e] = d;
    }
    return r;
}

Series Series::compose(const Series& inner) const {
    for (const auto& [e, c] : t_)
        if (e % ram_ != 0)
            throw std::logic_error("compose: outer series must have integer exponents");
    Frac vi = inner.effectiveOrder();
    if (!(Frac(0) < vi))
        throw std::logic_error("compose: inner series must have positive valuation");

    // Validity: min(Vo * vi, (kmin - 1) * vi + Vi) — outer truncation error
    // enters at u^{Vo} ~ w^{Vo*vi}; inner truncation error enters through
    // the lowest power k of the outer series as k h^{k-1} dh.
    Frac bound(Series::kInf);
    if (!validIsInfinite()) bound = std::min(bound, validOrder() * vi);
    if (!inner.validIsInfinite() && !t_.empty()) {
        Frac kmin(t_.begin()->first / ram_);
        bound = std::min(bound, (kmin - Frac(1)) * vi + inner.validOrder());
    }
    bool boundInf = !(bound < Frac(Series::kInf));

    Series acc = boundInf ? Series::zero() : Series::unknownBeyond(bound);
    if (t_.empty()) return acc;

    Series innerTr = boundInf ? inner : inner.truncated(bound);
    for (const auto& [e, c] : t_) {
        long k = e / ram_;
        Series p = innerTr.powInt(k);
        acc = acc + p * c;
    }
    return acc;
}

Series Series::reverted() const {
    auto val = valuation();
    if (!val || !(*val == Frac(1)))
        throw std::logic_error("reverted: series must have valuation exactly 1");
    if (ram_ != 1) {
        for (const auto& [e, c] : t_)
            if (e % ram_ != 0) throw std::logic_error("reverted: fractional exponents");
    }
    Series s = ramNormalized();
    long V = s.validIsInfinite() ? 64 : s.valid_; // exact input: generous horizon
    Value c1 = s.t_.begin()->second;
    Value c1inv = c1.inverse();
    // w = s(u) = c1 u + higher  =>  u = c1^{-1} (w - higher(u(w)))
    Series u = Series::monomial(c1inv, Frac(1)); // first approximation in w
    u = u.truncated(Frac(V));
    Series higher = s;
    higher.t_.erase(higher.t_.begin());
    for (long iter = 0; iter < V + 2; ++iter) {
        Series next = (Series::monomial(Value(1), Frac(1)) - higher.truncated(Frac(V)).compose(u)) * c1inv;
        next = next.truncated(Frac(V));
        if (next.sameUpToValidity(u) && next.validOrder() == u.validOrder()) {
            u = next;
            break;
        }
        u = next;
    }
    u.valid_ = s.validIsInfinite() ? V : s.valid_;
    return u;
}

Series Series::truncated(Frac newValidBound) const {
    Series r = *this;
    long nb;
    if (newValidBound.d == 1 && newValidBound.n >= kInf) return r;
    if (static_cast<long>(r.ram_) % newValidBound.d == 0) {
        nb = newValidBound.n * (r.ram_ / newValidBound.d);
    } else {
        int m = static_cast<int>(std::lcm<long>(r.ram_, newValidBound.d));
        r = r.withRam(m);
        nb = newValidBound.n * (m / newValidBound.d);
    }
    r.valid_ = std::min(r.valid_, nb);
    r.purge();
    return r;
}

Series Series::shifted(Frac e) const {
    Series r = *this;
    if (static_cast<long>(r.ram_) % e.d != 0)
        r = r.withRam(static_cast<int>(std::lcm<long>(r.ram_, e.d)));
    long off = e.n * (r.ram_ / e.d);
    Series out;
    out.ram_ = r.ram_;
    out.valid_ = r.validIsInfinite() ? kInf : r.valid_ + off;
    for (const auto& [k, c] : r.t_) out.t_[k + off] = c;
    return out;
}

Series Series::ramNormalized() const {
    long g = ram_;
    for (const auto& [e, c] : t_) g = std::gcd(g, e < 0 ? -e : e);
    if (!validIsInfinite()) {
        // validity must stay representable: keep denominators of valid_ too
        g = std::gcd(g, valid_ < 0 ? -valid_ : valid_);
    }
    if (g <= 1 || ram_ % g != 0) return *this;
    Series r;
    r.ram_ = static_cast<int>(ram_ / g);
    r.valid_ = validIsInfinite() ? kInf : valid_ / g;
    for (const auto& [e, c] : t_) r.t_[e / g] = c;
    return r;
}

std::string Series::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * (" << var << ")^(" << Frac(e, ram_).str() << ")";
    }
    if (t_.empty()) os << "0";
    if (!validIsInfinite()) os << " + O((" << var << ")^(" << validOrder().str() << "))";
    return os.str();
}

Value rationalLeadRoot(const Value& v, unsigned q) {
    if (v.isNumeric()) {
        std::complex<double> r = std::pow(v.num().v, 1.0 / static_cast<double>(q));
        return Value::numeric(r, v.num().err);
    }
    auto r = v.tryRational();
    if (r) {
        auto root = ratKthRoot(*r, q);
        if (root) return Value(*root);
    }
    throw UnsupportedExtensionError("leading coefficient has no exact " + std::to_string(q) +
                                    "-th root in the active tower", v.str());
}

} // namespace painleve
