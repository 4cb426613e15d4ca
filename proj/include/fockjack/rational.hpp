#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fockjack/errors.hpp"

namespace fockjack {

// Arbitrary-precision rational, always reduced, denominator > 0.
// mpq_class keeps exactly this canonical form for all arithmetic.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero{};
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw DivisionByZero{};
        return rat_pow(1 / x, -e);
    }
    Rational r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// "p" or "p/q"
inline std::string rat_str(const Rational& x) {
    return x.get_str();
}

inline Rational rat_parse(const std::string& s) {
    Rational q(s);
    if (q.get_den() == 0) throw DivisionByZero{};
    q.canonicalize();
    return q;
}

// exact square root if x is the square of a rational, else false
inline bool rat_sqrt(const Rational& x, Rational& out) {
    if (sgn(x) < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}

}  // namespace fockjack
