#ifndef PAINLEVE_RATIONAL_HPP
#define PAINLEVE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace painleve {

/// Exact rational scalar.  mpq_class keeps gcd(num,den)=1 and den>0 after
/// every canonicalizing operation, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

Rational ratFromString(const std::string& text); // "3", "-4/7", "2.5"
std::string ratToString(const Rational& q);

Rational ratPow(const Rational& base, long exp); // exp may be negative (base != 0)

bool isInteger(const Rational& q);
bool isZero(const Rational& q);

/// q = a^k for integer a?  Returns the exact k-th root when q is a perfect
/// k-th power in Q (sign handled for odd k), nullopt otherwise.
std::optional<Rational> ratKthRoot(const Rational& q, unsigned k);

double ratToDouble(const Rational& q);

/// Deterministic total order usable as a map key comparator.
struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

} // namespace painleve

#endif
