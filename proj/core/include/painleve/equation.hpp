#ifndef PAINLEVE_EQUATION_HPP
#define PAINLEVE_EQUATION_HPP

#include "painleve/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace painleve {

enum class IrreducibilityLevel { Proven, Heuristic };

struct IrreducibilityInfo {
    IrreducibilityLevel level = IrreducibilityLevel::Heuristic;
    std::vector<std::string> warnings;
};

/// A first-order algebraic ODE f(y', y) = 0 in canonical polynomial form:
/// S stands for y', T for y.  f is integer-primitive with positive leading
/// coefficient (graded-lex) and carries no common Q[z] factor.
struct CurveEquation {
    MultiPoly f;
    bool autonomous = true;
    int degS = 0;
    int degT = 0;
    std::optional<IrreducibilityInfo> irreducibility; // set by validate

    /// Canonical equation text, e.g. "(y')^2 + z^2 - y = 0".
    std::string render() const { return f.str("y'", "y", "z") + " = 0"; }
    std::string renderST() const { return f.str(); }
};

/// Build the canonical equation from an arbitrary polynomial (no validation).
CurveEquation equationFromPoly(const MultiPoly& f);

/// Parse "<expr> = <expr>" over y, y', z, rationals, + - * / ^ and parens.
/// Throws SyntaxError (with 1-based position) or NonPolynomialError.
CurveEquation parseEquation(const std::string& text);

/// Check the structural assumptions: both y' and y present, f irreducible.
/// Returns the equation with a certificate attached, or throws
/// MissingVariableError / ReducibleError / IrreducibilityUnknownError /
/// ConstantEquationNotice (for the literal y' = 0).
CurveEquation validateEquation(const CurveEquation& eq);

/// The equation after the substitution y = (a w + b)/(c w + d), ad-bc != 0,
/// cleared of denominators and recanonicalized (w renamed back to y).
CurveEquation mobiusTransformed(const CurveEquation& eq, const Rational& a,
                                const Rational& b, const Rational& c, const Rational& d);

} // namespace painleve

#endif
