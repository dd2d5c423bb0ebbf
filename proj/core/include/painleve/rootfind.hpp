#ifndef PAINLEVE_ROOTFIND_HPP
#define PAINLEVE_ROOTFIND_HPP

#include "painleve/ratfunc.hpp"
#include "painleve/upoly.hpp"
#include "painleve/value.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace painleve {

/// A root of a univariate polynomial over the active field: the minimal
/// polynomial it satisfies, a numeric isolating approximation, and (when
/// the root is not in the field) the extension context that realizes it.
struct RootHandle {
    UPoly<Value> minpoly; // monic, coefficients in the field active at the call
    int multiplicity = 1;
    Value value;          // in-field value, or the generator of `field`
    FieldCtx field;       // field containing `value`
    std::complex<double> approx{0.0, 0.0};
    double radius = 0.0;
    bool certifiedIrreducible = false;
};

/// Distinct roots of p over ctx.  Degree-1 factors give in-field handles;
/// higher factors give one handle per numeric embedding, all sharing the
/// minimal polynomial.  Throws UnsupportedExtensionError over Q(z) when a
/// factor falls outside the implemented tower.
std::vector<RootHandle> univariateRoots(const UPoly<Value>& p, const FieldCtx& ctx);

/// Gather-level view used by the curve machinery: one entry per
/// irreducible-ish factor of the squarefree part.
struct RootCluster {
    UPoly<Value> minpoly; // monic over ctx
    int multiplicity = 1;
    bool certified = false;  // minpoly certified irreducible over ctx
    bool supported = true;   // false: outside the tower policy (deferred)
    std::optional<Value> inFieldValue; // set when degree 1
    std::vector<std::complex<double>> embeddings;
};

std::vector<RootCluster> rootClusters(const UPoly<Value>& p, const FieldCtx& ctx,
                                      bool deferUnsupported);

/// Roots realized as Values (adjoining extensions when needed), for the
/// Newton-polygon iteration.
struct AdjoinedRoot {
    Value root;
    int multiplicity = 1;
    FieldCtx field;
};
std::vector<AdjoinedRoot> rootsAdjoined(const UPoly<Value>& p, const FieldCtx& ctx);

/// k-th root of v realized in ctx or a radical extension of it.
std::pair<Value, FieldCtx> kthRootAdjoined(const Value& v, unsigned k, const FieldCtx& ctx,
                                           int embeddingChoice = 0);

/// All complex roots of a squarefree double-coefficient polynomial
/// (Durand–Kerner with Newton polish), low-degree workhorse.
std::vector<std::complex<double>> complexRoots(std::vector<std::complex<double>> coeffs);

/// Numeric evaluation of a tower polynomial at a complex point.
std::complex<double> approxUPoly(const UPoly<Value>& p, std::complex<double> x,
                                 std::complex<double> zval);

/// One Newton step against the minimal polynomial (used for refinement and
/// by the isolating-radius property test).
std::complex<double> newtonStep(const UPoly<Value>& p, std::complex<double> x,
                                std::complex<double> zval);

/// Factor a rational-coefficient polynomial into irreducible factors
/// (certified for degree <= 10 via root-recombination; higher degrees may
/// return an uncertified squarefree remainder).
struct QFactor {
    UPoly<Rational> factor; // primitive, positive leading coefficient
    int multiplicity = 1;
    bool certified = false;
};
std::vector<QFactor> factorRationalPoly(const UPoly<Rational>& p);

/// Exact k-th root of a polynomial (when p = q^k), else nullopt.
std::optional<ZPoly> polyKthRoot(const ZPoly& p, unsigned k);
std::optional<RatFunc> ratFuncKthRoot(const RatFunc& f, unsigned k);

/// Is x^k - r irreducible over the fraction field Q or Q(z)?
bool binomialIrreducibleQ(const Rational& r, unsigned k);
bool binomialIrreducibleQz(const RatFunc& r, unsigned k);

} // namespace painleve

#endif
