#ifndef PAINLEVE_SERIES_HPP
#define PAINLEVE_SERIES_HPP

#include "painleve/errors.hpp"
#include "painleve/value.hpp"

#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace painleve {

/// Small exact fraction for series exponents and orders.
struct Frac {
    long n = 0;
    long d = 1;
    Frac() = default;
    Frac(long num) : n(num), d(1) {}
    Frac(long num, long den);
    bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
    bool operator<=(const Frac& o) const { return n * o.d <= o.n * d; }
    Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
    Frac operator-(const Frac& o) const { return Frac(n * o.d - o.n * d, d * o.d); }
    Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
    std::string str() const;
};

/// Truncated Laurent–Puiseux series: finitely many terms c_e u^e with
/// rational exponents e (denominators dividing `ram`), all below a
/// validity bound.  Exponents >= the bound are unknown, not zero.
///
/// An "exact" series has infinite validity (a polynomial-like object).
class Series {
public:
    static constexpr long kInf = 1L << 40; // validity sentinel: "exact"

    Series() : ram_(1), valid_(kInf) {}

    static Series zero() { return Series(); }
    static Series constant(const Value& v);
    static Series monomial(const Value& c, Frac e);
    /// The zero function known only for exponents < bound.
    static Series unknownBeyond(Frac bound);

    int ram() const { return ram_; }
    bool validIsInfinite() const { return valid_ >= kInf; }
    Frac validOrder() const { return validIsInfinite() ? Frac(kInf) : Frac(valid_, ram_); }
    const std::map<long, Value>& rawTerms() const { return t_; }

    bool isEmpty() const { return t_.empty(); } // no known nonzero term
    /// Lowest known exponent; nullopt when none below validity.
    std::optional<Frac> valuation() const;
    /// Valuation for error propagation: min(first term, validity).
    Frac effectiveOrder() const;
    Value coeff(Frac e) const;
    std::pair<Frac, Value> leadingTerm() const; // requires !isEmpty()

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Value& k) const;
    bool sameUpToValidity(const Series& o) const;

    /// Multiplicative inverse; the leading term must be a known nonzero
    /// coefficient (DivisionByZeroSeriesError otherwise).  Inverting an
    /// exact multi-term series has an infinite expansion, so a horizon for
    /// the result's validity must be supplied in that case.
    Series inverse(std::optional<Frac> horizonIfExact = std::nullopt) const;
    Series operator/(const Series& o) const { return *this * o.inverse(); }
    Series powInt(long e) const;

    /// (this)^(p/q).  `leadRoot` must return a q-th root of the leading
    /// coefficient; the leading exponent times p must stay divisible by q
    /// after ram adjustment (ram is extended as needed).
    Series fracPow(long p, long q, const std::function<Value(const Value&)>& leadRoot) const;

    /// d/du and coefficient-wise d/dz.
    Series deriveU() const;
    Series deriveZ() const;

    /// Substitute u -> inner(w); inner must have positive valuation and all
    /// exponents of *this* must be integers (ram 1 after normalization).
    Series compose(const Series& inner) const;

    /// Compositional inverse of a series with valuation exactly 1.
    Series reverted() const;

    Series truncated(Frac newValidBound) const;
    Series shifted(Frac e) const; // multiply by u^e

    /// Reduce ram to the gcd of exponent denominators (minimality).
    Series ramNormalized() const;
    /// Re-express with ram = m (m must be a multiple of every denominator).
    Series withRam(int m) const;

    std::string str(const std::string& var = "u") const;

private:
    int ram_;
    long valid_; // exponent numerators < valid_ are determined (kInf: exact)
    std::map<long, Value> t_;

    void purge();
    static std::pair<Series, Series> unified(const Series& a, const Series& b);
    friend Series seriesSubstituteImpl(const Series&, const Series&);
};

/// Exact k-th root helper for fracPow over plain rationals; throws
/// UnsupportedExtensionError when the coefficient has no exact root and no
/// numeric channel is active.
Value rationalLeadRoot(const Value& v, unsigned q);

} // namespace painleve

#endif
