#include "painleve/value.hpp"

#include <cmath>
#include <sstream>

namespace painleve {

namespace {

constexpr double kNumericZeroFloor = 1e-13;

int towerLevel(const ExtPtr& e) { return e ? e->level : 0; }

UPoly<Value> asPolyAt(const ExtPtr& ext, const Value& v) {
    // Representation of v as a polynomial in ext's generator.
    if (v.isAlg() && v.alg().ext == ext) return UPoly<Value>(v.alg().rep);
    return UPoly<Value>(v); // constant (lives at some sub-level)
}

Value wrapAlg(const ExtPtr& ext, UPoly<Value> rep) {
    rep.trim();
    if (rep.degree() <= 0) return rep.isZero() ? Value(0) : rep[0];
    return Value(AlgElem{ext, rep.coeffs()});
}

void reduceMod(UPoly<Value>& p, const UPoly<Value>& m) {
    // m is monic.
    while (p.degree() >= m.degree()) {
        Value f = p.lead();
        int k = p.degree() - m.degree();
        for (int i = 0; i <= m.degree(); ++i) p.at(i + k) = p[i + k] - f * m[i];
        p.trim();
    }
}

NumericC toNumeric(const Value& v) {
    if (v.isNumeric()) return v.num();
    if (v.isRational()) return {std::complex<double>(ratToDouble(v.rational()), 0.0), 0.0};
    if (v.isAlg()) {
        const ExtPtr& e = v.alg().ext;
        if (e->base == BaseKind::Qz)
            throw std::logic_error("numeric arithmetic mixed with a Q(z) tower value");
        double errAcc = 0.0;
        std::complex<double> acc(0.0, 0.0);
        for (size_t i = v.alg().rep.size(); i-- > 0;) {
            NumericC c = toNumeric(v.alg().rep[i]);
            acc = acc * e->genApprox + c.v;
            errAcc = errAcc * std::abs(e->genApprox) + std::abs(acc) * e->genRadius + c.err;
        }
        return {acc, errAcc + 1e-15 * std::abs(acc)};
    }
    throw std::logic_error("numeric arithmetic mixed with a Q(z) scalar");
}

NumericC numAdd(const NumericC& a, const NumericC& b) {
    return {a.v + b.v, a.err + b.err + 1e-16 * (std::abs(a.v) + std::abs(b.v))};
}
NumericC numMul(const NumericC& a, const NumericC& b) {
    double err = std::abs(a.v) * b.err + std::abs(b.v) * a.err + a.err * b.err;
    return {a.v * b.v, err + 1e-16 * std::abs(a.v * b.v)};
}
NumericC numInv(const NumericC& a) {
    double m = std::abs(a.v);
    if (m <= a.err || m == 0.0)
        throw DivisionByZeroSeriesError("numeric inverse of a value indistinguishable from 0");
    double err = a.err / (m * (m - a.err));
    return {1.0 / a.v, err + 1e-16 / m};
}

enum class OpKind { Add, Mul };

} // namespace

Value::Value(RatFunc f) : v_(std::move(f)) {
    // Collapse constants so plain rationals stay in the bottom variant.
    const RatFunc& rf = std::get<RatFunc>(v_);
    if (rf.isConstant()) v_ = rf.asRational();
}

Value::Value(AlgElem a) : v_(Rational(0)) {
    UPoly<Value> rep(std::move(a.rep));
    rep.trim();
    if (rep.degree() <= 0)
        v_ = rep.isZero() ? Value(0).v_ : rep[0].v_;
    else
        v_ = AlgElem{a.ext, rep.coeffs()};
}

bool Value::isZero() const {
    if (isRational()) return painleve::isZero(rational());
    if (isRatFunc()) return ratfunc().isZero();
    if (isNumeric()) {
        const auto& n = num();
        return std::abs(n.v) <= std::max(4.0 * n.err, kNumericZeroFloor);
    }
    for (const auto& c : alg().rep)
        if (!c.isZero()) return false;
    return true;
}

bool Value::isOne() const { return (*this - Value(1)).isZero(); }

Value Value::operator-() const { return Value(0) - *this; }

static Value binop(const Value& a, const Value& b, OpKind op) {
    if (a.isNumeric() || b.isNumeric()) {
        NumericC x = toNumeric(a), y = toNumeric(b);
        return Value(op == OpKind::Add ? numAdd(x, y) : numMul(x, y));
    }
    ExtPtr ea = a.ext(), eb = b.ext();
    if (ea || eb) {
        ExtPtr target;
        if (towerLevel(ea) >= towerLevel(eb)) target = ea; else target = eb;
        // Sanity: the shallower value must live inside the deeper tower.
        const ExtPtr& other = (target == ea) ? eb : ea;
        if (other && !isAncestorExt(other, target))
            throw std::logic_error("arithmetic between values of unrelated extensions");
        UPoly<Value> pa = asPolyAt(target, a), pb = asPolyAt(target, b);
        if (op == OpKind::Add) return wrapAlg(target, pa + pb);
        UPoly<Value> prod = pa * pb;
        reduceMod(prod, target->modulus);
        return wrapAlg(target, prod);
    }
    if (a.isRational() && b.isRational()) {
        return op == OpKind::Add ? Value(a.rational() + b.rational())
                                 : Value(a.rational() * b.rational());
    }
    RatFunc fa = a.isRatFunc() ? a.ratfunc() : RatFunc(a.rational());
    RatFunc fb = b.isRatFunc() ? b.ratfunc() : RatFunc(b.rational());
    return op == OpKind::Add ? Value(fa + fb) : Value(fa * fb);
}

Value Value::operator+(const Value& o) const { return binop(*this, o, OpKind::Add); }
Value Value::operator-(const Value& o) const { return binop(*this, o * Value(-1), OpKind::Add); }
Value Value::operator*(const Value& o) const { return binop(*this, o, OpKind::Mul); }
Value Value::operator/(const Value& o) const { return binop(*this, o.inverse(), OpKind::Mul); }

bool Value::operator==(const Value& o) const { return (*this - o).isZero(); }

Value Value::inverse() const {
    if (isRational()) {
        if (painleve::isZero(rational())) throw std::domain_error("inverse of zero");
        return Value(1 / rational());
    }
    if (isRatFunc()) return Value(ratfunc().inverse());
    if (isNumeric()) return Value(numInv(num()));
    const AlgElem& e = alg();
    if (isZero()) throw std::domain_error("inverse of zero extension element");
    auto [g, u, v] = upolyExtGcd(UPoly<Value>(e.rep), e.ext->modulus);
    if (g.degree() != 0) {
        if (e.ext->certifiedIrreducible)
            throw std::logic_error("zero divisor under a certified-irreducible modulus");
        throw ZeroDivisorSplit(e.ext, g);
    }
    // g is the constant 1 after normalization inside upolyExtGcd.
    UPoly<Value> inv = u;
    reduceMod(inv, e.ext->modulus);
    return wrapAlg(e.ext, inv);
}

Value Value::pow(long e) const {
    if (e == 0) return Value(1);
    Value base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -e : e;
    Value acc(1);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Value Value::dz() const {
    if (isRational() || isNumeric()) return Value(0);
    if (isRatFunc()) return Value(ratfunc().dz());
    const AlgElem& a = alg();
    if (a.ext->base == BaseKind::Q) return Value(0);
    Value out(0);
    Value gen = FieldCtx{a.ext->base, a.ext}.generator();
    Value genPow(1);
    for (size_t i = 0; i < a.rep.size(); ++i) {
        out = out + a.rep[i].dz() * genPow;
        if (i + 1 < a.rep.size())
            out = out + a.rep[i + 1] * Value(static_cast<int>(i + 1)) * genPow * a.ext->genDz();
        genPow = genPow * gen;
    }
    return out;
}

std::complex<double> Value::approx(std::complex<double> zval) const {
    if (isRational()) return {ratToDouble(rational()), 0.0};
    if (isNumeric()) return num().v;
    if (isRatFunc()) {
        const RatFunc& f = ratfunc();
        auto horner = [&](const ZPoly& p) {
            std::complex<double> acc(0.0, 0.0);
            for (size_t i = p.coeffs().size(); i-- > 0;)
                acc = acc * zval + std::complex<double>(ratToDouble(p[i]), 0.0);
            return acc;
        };
        return horner(f.num()) / horner(f.den());
    }
    const AlgElem& a = alg();
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = a.rep.size(); i-- > 0;) acc = acc * a.ext->genApprox + a.rep[i].approx(zval);
    return acc;
}

double Value::approxErr() const { return isNumeric() ? num().err : 0.0; }

std::optional<Rational> Value::tryRational() const {
    if (isRational()) return rational();
    if (isRatFunc()) return ratfunc().isConstant() ? std::optional<Rational>(ratfunc().asRational())
                                                   : std::nullopt;
    if (isAlg()) {
        const auto& rep = alg().rep;
        for (size_t i = 1; i < rep.size(); ++i)
            if (!rep[i].isZero()) return std::nullopt;
        return rep.empty() ? Rational(0) : rep[0].tryRational();
    }
    return std::nullopt;
}

std::optional<RatFunc> Value::tryRatFunc() const {
    if (isRational()) return RatFunc(rational());
    if (isRatFunc()) return ratfunc();
    if (isAlg()) {
        const auto& rep = alg().rep;
        for (size_t i = 1; i < rep.size(); ++i)
            if (!rep[i].isZero()) return std::nullopt;
        return rep.empty() ? RatFunc(0) : rep[0].tryRatFunc();
    }
    return std::nullopt;
}

std::string valueToString(const Value& v) { return v.str(); }

std::string Value::str() const {
    if (isRational()) return ratToString(rational());
    if (isRatFunc()) return ratfunc().str();
    if (isNumeric()) {
        std::ostringstream os;
        os.precision(15);
        os << "~(" << num().v.real();
        if (num().v.imag() != 0.0) os << (num().v.imag() < 0 ? "" : "+") << num().v.imag() << "i";
        os << ")";
        return os.str();
    }
    UPoly<Value> p(alg().rep);
    return p.str(alg().ext->genName, &valueToString);
}

const Value& Extension::genDz() const {
    static const Value kZero(0);
    if (base == BaseKind::Q) return kZero;
    if (!genDz_) throw std::logic_error("genDz not precomputed for a Q(z) tower");
    return *genDz_;
}

bool isAncestorExt(const ExtPtr& maybeAncestor, const ExtPtr& e) {
    for (ExtPtr p = e; p; p = p->sub)
        if (p == maybeAncestor) return true;
    return false;
}

Value FieldCtx::generator() const {
    if (!top) throw std::logic_error("base field has no generator");
    return Value(AlgElem{top, {Value(0), Value(1)}});
}

std::string FieldCtx::describe() const {
    std::string s = base == BaseKind::Q ? "Q" : "Q(z)";
    std::vector<const Extension*> chain;
    for (ExtPtr e = top; e; e = e->sub) chain.push_back(e.get());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        s += "[" + (*it)->genName + "]/(" +
             (*it)->modulus.str((*it)->genName, &valueToString) + ")";
    return s;
}

bool extensionAllowed(const FieldCtx& ctx, const UPoly<Value>& modulus) {
    if (ctx.base == BaseKind::Q) return true;
    if (modulus.degree() <= 2) return true;
    bool binomial = true;
    for (int i = 1; i < modulus.degree(); ++i)
        if (!modulus[i].isZero()) binomial = false;
    if (binomial) return true; // w^k - r(z)
    bool allConstant = true;
    for (int i = 0; i < modulus.degree(); ++i)
        if (!modulus[i].tryRational()) allConstant = false;
    return allConstant; // a number-field generator: w' = 0 extends dz
}

FieldCtx adjoinRoot(const FieldCtx& ctx, const UPoly<Value>& modulus,
                    std::complex<double> approx, double radius,
                    bool certifiedIrreducible, bool force) {
    if (modulus.degree() < 1 || !modulus.lead().isOne())
        throw std::logic_error("adjoinRoot: modulus must be monic of positive degree");
    if (!force && !extensionAllowed(ctx, modulus))
        throw UnsupportedExtensionError(
            "root requires an extension outside the implemented tower over Q(z)",
            modulus.str("w", &valueToString));
    auto ext = std::make_shared<Extension>();
    ext->modulus = modulus;
    ext->sub = ctx.top;
    ext->base = ctx.base;
    ext->level = towerLevel(ctx.top) + 1;
    ext->genName = ctx.top ? "w" + std::to_string(ext->level) : "w";
    ext->genApprox = approx;
    ext->genRadius = radius;
    ext->zRef = ctx.top ? ctx.top->zRef : std::complex<double>(1.0, 0.0);
    ext->certifiedIrreducible = certifiedIrreducible;
    FieldCtx out{ctx.base, ext};
    if (ctx.base == BaseKind::Qz) {
        // Precompute dz(generator) = -m_z(w)/m_w(w).
        Value w = out.generator();
        UPoly<Value> mz;
        for (int i = 0; i <= modulus.degree(); ++i) mz.at(i) = modulus[i].dz();
        mz.trim();
        UPoly<Value> mw = modulus.derivative();
        Value denom = mw.evalInto<Value>(w, [](const Value& c) { return c; });
        Value numer = mz.evalInto<Value>(w, [](const Value& c) { return c; });
        ext->precomputeGenDz(numer.isZero() ? Value(0) : Value(0) - numer / denom);
    }
    return out;
}

Value liftTo(const FieldCtx& ctx, const Value& v) {
    if (v.isAlg() && !isAncestorExt(v.ext(), ctx.top))
        throw std::logic_error("liftTo: value does not live inside the target tower");
    return v;
}

} // namespace painleve
