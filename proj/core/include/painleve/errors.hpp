#ifndef PAINLEVE_ERRORS_HPP
#define PAINLEVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace painleve {

/// Base class for every error the analyzer reports to callers.
/// `code()` is a stable machine-readable identifier used by the CLI.
class AnalyzerError : public std::runtime_error {
public:
    AnalyzerError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Malformed equation text; carries a 1-based line/column position.
class SyntaxError : public AnalyzerError {
public:
    SyntaxError(int line, int col, const std::string& what)
        : AnalyzerError("syntax-error",
                        "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/// y or y' appears in a denominator or under a fractional power.
class NonPolynomialError : public AnalyzerError {
public:
    explicit NonPolynomialError(const std::string& what)
        : AnalyzerError("non-polynomial", what) {}
};

class MissingVariableError : public AnalyzerError {
public:
    explicit MissingVariableError(const std::string& what)
        : AnalyzerError("missing-variable", what) {}
};

/// A nontrivial factorization of the input was found.  The rendered
/// factors travel with the error so the CLI can show them.
class ReducibleError : public AnalyzerError {
public:
    ReducibleError(const std::string& what, std::vector<std::string> factors)
        : AnalyzerError("reducible", what), factors_(std::move(factors)) {}
    const std::vector<std::string>& factors() const { return factors_; }

private:
    std::vector<std::string> factors_;
};

class IrreducibilityUnknownError : public AnalyzerError {
public:
    explicit IrreducibilityUnknownError(const std::string& what)
        : AnalyzerError("irreducibility-unknown", what) {}
};

/// A root requires an algebraic extension outside the implemented tower
/// (over Q(z): radical extensions w^k = r(z) and quadratics only).
class UnsupportedExtensionError : public AnalyzerError {
public:
    explicit UnsupportedExtensionError(const std::string& what, std::string minpoly = "")
        : AnalyzerError("unsupported-extension", what), minpoly_(std::move(minpoly)) {}
    const std::string& minpoly() const { return minpoly_; }

private:
    std::string minpoly_;
};

class TruncationTooSmallError : public AnalyzerError {
public:
    explicit TruncationTooSmallError(const std::string& what)
        : AnalyzerError("truncation-too-small", what) {}
};

class BadBasePointError : public AnalyzerError {
public:
    explicit BadBasePointError(const std::string& what)
        : AnalyzerError("bad-base-point", what) {}
};

class LeadingTermVanishesError : public AnalyzerError {
public:
    explicit LeadingTermVanishesError(const std::string& what)
        : AnalyzerError("leading-term-vanishes", what) {}
};

class DivisionByZeroSeriesError : public AnalyzerError {
public:
    explicit DivisionByZeroSeriesError(const std::string& what)
        : AnalyzerError("division-by-zero-series", what) {}
};

/// Internal signal of the dynamic-evaluation machinery: a modulus that was
/// assumed irreducible turned out to split.  Carries one nontrivial factor
/// (as degrees/coefficients are context-dependent, the thrower formats it).
class ZeroDivisorError : public AnalyzerError {
public:
    explicit ZeroDivisorError(const std::string& what)
        : AnalyzerError("zero-divisor", what) {}
};

class ConstantEquationNotice : public AnalyzerError {
public:
    ConstantEquationNotice()
        : AnalyzerError("constant-equation",
                        "the equation reads y' = 0; every constant is a solution") {}
};

} // namespace painleve

#endif
