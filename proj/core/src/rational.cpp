#include "painleve/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace painleve {

Rational ratFromString(const std::string& text) {
    // Accept "a", "a/b" and decimal literals like "2.5".
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        q.canonicalize();
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac = text.size() - dot - 1;
    Integer num;
    if (num.set_str(digits.empty() ? "0" : digits, 10) != 0)
        throw std::invalid_argument("bad decimal literal: " + text);
    Integer den = 1;
    for (size_t i = 0; i < frac; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string ratToString(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational ratPow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    bool inv = exp < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    if (inv) {
        if (r == 0) throw std::domain_error("0 raised to a negative power");
        r = 1 / r;
    }
    return r;
}

bool isInteger(const Rational& q) { return q.get_den() == 1; }
bool isZero(const Rational& q) { return sgn(q) == 0; }

std::optional<Rational> ratKthRoot(const Rational& q, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return q;
    if (sgn(q) == 0) return Rational(0);
    bool neg = sgn(q) < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    Integer n = abs(q.get_num()), d = q.get_den();
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    Rational r(neg ? -rn : rn, rd);
    r.canonicalize();
    return r;
}

double ratToDouble(const Rational& q) { return q.get_d(); }

} // namespace painleve
