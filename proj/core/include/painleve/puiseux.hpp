#ifndef PAINLEVE_PUISEUX_HPP
#define PAINLEVE_PUISEUX_HPP

#include "painleve/equation.hpp"
#include "painleve/rootfind.hpp"
#include "painleve/series.hpp"
#include "painleve/value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace painleve {

/// Where places are computed: a value of the base field (or of an
/// extension), a whole conjugacy class given by its minimal polynomial,
/// or the point t = infinity.
struct CenterSpec {
    enum class Kind { Finite, Cluster, Infinity } kind = Kind::Infinity;
    Value value;            // Finite: element of the base field
    UPoly<Value> minpoly;   // Cluster: monic, irreducible-ish over the base
    std::complex<double> embedding{0.0, 0.0};

    static CenterSpec finite(Value v);
    static CenterSpec cluster(UPoly<Value> minpoly, std::complex<double> embedding);
    static CenterSpec infinity() { return CenterSpec{}; }

    std::string str() const;
};

/// A branch of the curve over a center: local parameter u, ramification e,
/// truncated expansions of t and s, and the coefficient field they live in.
struct Place {
    CenterSpec center;
    int ramification = 1;  // e: u-order of (t - center), or -order at infinity
    int residueDegree = 1; // degree of the coefficient field over the center's
    FieldCtx field;
    Series tSeries;
    Series sSeries;

    std::string str() const;
};

/// All places of the curve above the given center, expansions valid to at
/// least `truncTerms` u-orders (0: the default 2 degS degT + 6).
std::vector<Place> placesAbove(const CurveEquation& eq, const CenterSpec& center,
                               long truncTerms = 0);

/// f(s(u), t(u), z) as a series in u.  When zShift is set the series are
/// understood in the variable u = z - zShift and z maps to zShift + u;
/// otherwise z stays inside the coefficients.
Series seriesSubstitute(const MultiPoly& f, const Series& s, const Series& t,
                        std::optional<Rational> zShift = std::nullopt);

/// Centers that can carry poles of the induced vector field: the roots of
/// resultant_S(f, f_S) in T plus t = infinity.  `unsupported` collects
/// factors whose roots exceed the implemented extension tower.
std::vector<CenterSpec> poleCandidateCenters(const CurveEquation& eq,
                                             std::vector<std::string>* unsupported = nullptr);

/// Replace the local parameter by u = phi(w) (phi of valuation 1) and
/// recompute the expansions; used by the parameter-independence checks.
Place reparametrized(const Place& place, const Series& phi);

} // namespace painleve

#endif
