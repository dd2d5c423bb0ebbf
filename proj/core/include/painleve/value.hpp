#ifndef PAINLEVE_VALUE_HPP
#define PAINLEVE_VALUE_HPP

#include "painleve/errors.hpp"
#include "painleve/ratfunc.hpp"
#include "painleve/rational.hpp"
#include "painleve/upoly.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace painleve {

class Value;
struct Extension;
using ExtPtr = std::shared_ptr<const Extension>;

enum class BaseKind { Q, Qz };

/// Numeric coefficient used by the witness fallback path: a complex double
/// with a tracked absolute error bound.
struct NumericC {
    std::complex<double> v{0.0, 0.0};
    double err = 0.0;
};

/// Element of a simple algebraic extension: a polynomial in the generator,
/// reduced below the modulus degree.  Coefficients live at the sub-level.
struct AlgElem {
    ExtPtr ext;
    std::vector<Value> rep;
};

/// A scalar of the active coefficient field.  The field is one of
///   Q,  Q(z),  or a tower of simple extensions over either,
/// with a separate all-numeric channel for the witness fallback.
class Value {
public:
    Value() : v_(Rational(0)) {}
    Value(int n) : v_(Rational(n)) {}
    Value(Rational q) : v_(std::move(q)) {}
    Value(RatFunc f);
    Value(AlgElem a);
    Value(NumericC n) : v_(std::move(n)) {}

    static Value z() { return Value(RatFunc::z()); }
    static Value numeric(std::complex<double> c, double err = 0.0) {
        return Value(NumericC{c, err});
    }

    bool isRational() const { return std::holds_alternative<Rational>(v_); }
    bool isRatFunc() const { return std::holds_alternative<RatFunc>(v_); }
    bool isAlg() const { return std::holds_alternative<AlgElem>(v_); }
    bool isNumeric() const { return std::holds_alternative<NumericC>(v_); }

    const Rational& rational() const { return std::get<Rational>(v_); }
    const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
    const AlgElem& alg() const { return std::get<AlgElem>(v_); }
    const NumericC& num() const { return std::get<NumericC>(v_); }

    /// Innermost extension this value genuinely lives in (nullptr: none).
    ExtPtr ext() const { return isAlg() ? alg().ext : nullptr; }

    bool isZero() const;
    bool isOne() const;

    Value operator-() const;
    Value operator+(const Value& o) const;
    Value operator-(const Value& o) const;
    Value operator*(const Value& o) const;
    Value operator/(const Value& o) const;
    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }

    Value inverse() const;
    Value pow(long e) const;

    /// Derivative with respect to z (zero on Q-towers and plain rationals).
    Value dz() const;

    /// Complex evaluation; `zval` substitutes for z where needed.
    std::complex<double> approx(std::complex<double> zval) const;
    double approxErr() const; // 0 for exact values

    /// Rational content when the value is a plain rational (possibly a
    /// constant RatFunc or constant extension element); nullopt otherwise.
    std::optional<Rational> tryRational() const;
    /// Same idea one level up: extract a RatFunc when the value involves
    /// no genuine extension generator.
    std::optional<RatFunc> tryRatFunc() const;

    std::string str() const;

private:
    std::variant<Rational, RatFunc, AlgElem, NumericC> v_;
    friend Value coerceAdd(const Value&, const Value&, int);
};

inline bool coeffIsZero(const Value& v) { return v.isZero(); }

/// One step of the field tower: sub-field extended by a root of `modulus`.
struct Extension {
    UPoly<Value> modulus;   // monic, coefficients at the sub-level
    ExtPtr sub;             // nullptr when the sub-field is the base
    BaseKind base;          // bottom of this tower
    std::string genName;
    std::complex<double> genApprox{0.0, 0.0}; // embedding at z = zRef
    double genRadius = 0.0;
    std::complex<double> zRef{1.0, 0.0};      // reference point for Qz towers
    bool certifiedIrreducible = false;
    int level = 1;

    int degree() const { return modulus.degree(); }
    /// dz of the generator: -m_z(w)/m'(w), precomputed by adjoinRoot for
    /// Q(z) towers; identically zero over Q.
    const Value& genDz() const;
    void precomputeGenDz(Value v) { genDz_ = std::move(v); }

private:
    std::optional<Value> genDz_;
};

/// Active coefficient field: a base plus an optional tower on top of it.
struct FieldCtx {
    BaseKind base = BaseKind::Q;
    ExtPtr top; // nullptr: the plain base field

    static FieldCtx rationals() { return {BaseKind::Q, nullptr}; }
    static FieldCtx rationalFunctions() { return {BaseKind::Qz, nullptr}; }

    bool operator==(const FieldCtx& o) const { return base == o.base && top == o.top; }

    int absoluteDegree() const {
        int d = 1;
        for (ExtPtr e = top; e; e = e->sub) d *= e->degree();
        return d;
    }
    Value generator() const;
    std::string describe() const;
};

/// Construct the extension ctx[w]/(modulus); `approx` selects the embedding.
/// Throws UnsupportedExtensionError when the tower policy forbids it
/// (see valuePolicy below) unless `force` is set.
FieldCtx adjoinRoot(const FieldCtx& ctx, const UPoly<Value>& modulus,
                    std::complex<double> approx, double radius,
                    bool certifiedIrreducible, bool force = false);

/// Tower policy check over Q(z): each step must be a radical w^k - r(z)
/// or have degree <= 2.  Over Q any simple extension is allowed.
bool extensionAllowed(const FieldCtx& ctx, const UPoly<Value>& modulus);

/// Lift a value of a sub-field into (a constant of) the given context.
Value liftTo(const FieldCtx& ctx, const Value& v);

/// True when `maybeAncestor` appears in the sub-chain of `e` (or equals it).
bool isAncestorExt(const ExtPtr& maybeAncestor, const ExtPtr& e);

/// Thrown when an inversion meets a zero divisor in an extension whose
/// modulus was not certified irreducible; carries the discovered factor.
struct ZeroDivisorSplit : ZeroDivisorError {
    ZeroDivisorSplit(ExtPtr where, UPoly<Value> factor)
        : ZeroDivisorError("modulus splits: found factor of degree " +
                           std::to_string(factor.degree())),
          ext(std::move(where)), factor(std::move(factor)) {}
    ExtPtr ext;
    UPoly<Value> factor;
};

std::string valueToString(const Value& v);

} // namespace painleve

#endif
