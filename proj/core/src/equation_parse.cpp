#include "painleve/equation.hpp"
#include "painleve/errors.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace painleve {

CurveEquation equationFromPoly(const MultiPoly& f) {
    CurveEquation eq;
    eq.f = canonicalPrimitive(f);
    eq.degS = std::max(eq.f.degree(Var::S), 0);
    eq.degT = std::max(eq.f.degree(Var::T), 0);
    eq.autonomous = eq.f.degree(Var::Z) < 1;
    return eq;
}

namespace {

enum class Tok { Num, Y, YPrime, Z, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, End };

struct Token {
    Tok kind = Tok::End;
    Rational value;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skipSpace();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= s_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                break;
            }
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos_;
                while (pos_ < s_.size() &&
                       (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                    advance();
                t.kind = Tok::Num;
                try {
                    t.value = ratFromString(s_.substr(start, pos_ - start));
                } catch (const std::exception&) {
                    throw SyntaxError(t.line, t.col, "malformed number");
                }
            } else if (c == 'y') {
                advance();
                if (pos_ < s_.size() && s_[pos_] == '\'') {
                    advance();
                    t.kind = Tok::YPrime;
                } else {
                    t.kind = Tok::Y;
                }
            } else if (c == 'z') {
                advance();
                t.kind = Tok::Z;
            } else {
                advance();
                switch (c) {
                    case '+': t.kind = Tok::Plus; break;
                    case '-': t.kind = Tok::Minus; break;
                    case '*': t.kind = Tok::Star; break;
                    case '/': t.kind = Tok::Slash; break;
                    case '^': t.kind = Tok::Caret; break;
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    case '=': t.kind = Tok::Eq; break;
                    default:
                        throw SyntaxError(t.line, t.col,
                                          std::string("unexpected character '") + c + "'");
                }
            }
            out.push_back(t);
        }
        return out;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skipSpace() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
};

/// Intermediate value: a fraction of polynomials whose denominator may only
/// involve z (coefficients live in Q(z); y and y' must stay polynomial).
struct Rx {
    MultiPoly num;
    MultiPoly den;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    CurveEquation equation() {
        Rx lhs = expr();
        expect(Tok::Eq, "expected '='");
        Rx rhs = expr();
        if (t_[i_].kind != Tok::End)
            throw SyntaxError(t_[i_].line, t_[i_].col, "trailing input after equation");
        MultiPoly f = lhs.num * rhs.den - rhs.num * lhs.den;
        if (f.isZero())
            throw NonPolynomialError("the two sides cancel; not an equation in y', y");
        return equationFromPoly(f);
    }

private:
    std::vector<Token> t_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError(t_[i_].line, t_[i_].col, msg);
    }
    void expect(Tok k, const std::string& msg) {
        if (t_[i_].kind != k) fail(msg);
        ++i_;
    }
    bool startsFactor(Tok k) const {
        return k == Tok::Num || k == Tok::Y || k == Tok::YPrime || k == Tok::Z ||
               k == Tok::LParen;
    }

    Rx expr() {
        Rx acc = term();
        while (t_[i_].kind == Tok::Plus || t_[i_].kind == Tok::Minus) {
            bool neg = t_[i_].kind == Tok::Minus;
            ++i_;
            Rx rhs = term();
            acc = add(acc, rhs, neg);
        }
        return acc;
    }

    Rx term() {
        Rx acc = factor();
        while (true) {
            Tok k = t_[i_].kind;
            if (k == Tok::Star) {
                ++i_;
                acc = mul(acc, factor());
            } else if (k == Tok::Slash) {
                int line = t_[i_].line, col = t_[i_].col;
                ++i_;
                acc = div(acc, factor(), line, col);
            } else if (startsFactor(k)) {
                acc = mul(acc, factor()); // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Rx factor() {
        if (t_[i_].kind == Tok::Minus) {
            ++i_;
            Rx v = factor();
            v.num = -v.num;
            return v;
        }
        if (t_[i_].kind == Tok::Plus) {
            ++i_;
            return factor();
        }
        return power();
    }

    Rx power() {
        Rx base = atom();
        if (t_[i_].kind != Tok::Caret) return base;
        ++i_;
        auto [p, q] = exponent();
        if (q != 1) {
            if (base.num.involves(Var::S) || base.num.involves(Var::T))
                throw NonPolynomialError("y or y' under a fractional power");
            throw NonPolynomialError("fractional powers of z are outside Q(z) coefficients");
        }
        return ipow(base, p);
    }

    std::pair<long, long> exponent() {
        bool paren = false;
        if (t_[i_].kind == Tok::LParen) {
            paren = true;
            ++i_;
        }
        bool neg = false;
        if (t_[i_].kind == Tok::Minus) {
            neg = true;
            ++i_;
        }
        if (t_[i_].kind != Tok::Num || !isInteger(t_[i_].value))
            fail("expected an integer exponent");
        long p = t_[i_].value.get_num().get_si();
        ++i_;
        long q = 1;
        if (paren && t_[i_].kind == Tok::Slash) {
            ++i_;
            if (t_[i_].kind != Tok::Num || !isInteger(t_[i_].value))
                fail("expected an integer in the exponent denominator");
            q = t_[i_].value.get_num().get_si();
            if (q <= 0) fail("exponent denominator must be positive");
            ++i_;
        }
        if (paren) expect(Tok::RParen, "expected ')' closing the exponent");
        long g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        return {neg ? -p : p, q};
    }

    Rx atom() {
        Token t = t_[i_];
        switch (t.kind) {
            case Tok::Num:
                ++i_;
                return {MultiPoly(t.value), MultiPoly(Rational(1))};
            case Tok::Y:
                ++i_;
                return {MultiPoly::var(Var::T), MultiPoly(Rational(1))};
            case Tok::YPrime:
                ++i_;
                return {MultiPoly::var(Var::S), MultiPoly(Rational(1))};
            case Tok::Z:
                ++i_;
                return {MultiPoly::var(Var::Z), MultiPoly(Rational(1))};
            case Tok::LParen: {
                ++i_;
                Rx v = expr();
                expect(Tok::RParen, "expected ')'");
                return v;
            }
            default:
                fail("expected a value (y, y', z, number or parenthesis)");
        }
    }

    static Rx add(const Rx& a, const Rx& b, bool negate) {
        MultiPoly bn = negate ? -b.num : b.num;
        return {a.num * b.den + bn * a.den, a.den * b.den};
    }
    static Rx mul(const Rx& a, const Rx& b) { return {a.num * b.num, a.den * b.den}; }

    Rx div(const Rx& a, const Rx& b, int line, int col) {
        if (b.num.isZero()) throw SyntaxError(line, col, "division by zero");
        if (b.num.involves(Var::S) || b.num.involves(Var::T))
            throw NonPolynomialError("y or y' appears in a denominator");
        return {a.num * b.den, a.den * b.num};
    }

    Rx ipow(const Rx& base, long e) {
        if (e >= 0) return {base.num.pow(static_cast<int>(e)), base.den.pow(static_cast<int>(e))};
        if (base.num.involves(Var::S) || base.num.involves(Var::T))
            throw NonPolynomialError("y or y' raised to a negative power");
        if (base.num.isZero()) throw NonPolynomialError("zero raised to a negative power");
        return {base.den.pow(static_cast<int>(-e)), base.num.pow(static_cast<int>(-e))};
    }
};

} // namespace

CurveEquation parseEquation(const std::string& text) {
    Lexer lex(text);
    Parser p(lex.run());
    return p.equation();
}

CurveEquation mobiusTransformed(const CurveEquation& eq, const Rational& a, const Rational& b,
                                const Rational& c, const Rational& d) {
    Rational det = a * d - b * c;
    if (painleve::isZero(det)) throw std::domain_error("mobiusTransformed: ad - bc = 0");
    // y = (a w + b)/(c w + d),  y' = det * w' / (c w + d)^2
    MultiPoly W = MultiPoly::var(Var::T), Wp = MultiPoly::var(Var::S);
    MultiPoly numY = W * a + MultiPoly(b);
    MultiPoly denY = W * c + MultiPoly(d);
    MultiPoly numS = Wp * det;
    MultiPoly denS = denY * denY;
    int dS = eq.f.degree(Var::S), dT = eq.f.degree(Var::T);
    MultiPoly out;
    for (const auto& [e, coef] : eq.f.terms()) {
        MultiPoly term(coef);
        term = term * numS.pow(e.s) * denS.pow(dS - e.s);
        term = term * numY.pow(e.t) * denY.pow(dT - e.t);
        if (e.z) term = term * MultiPoly::var(Var::Z, e.z);
        out = out + term;
    }
    return equationFromPoly(out);
}

} // namespace painleve
