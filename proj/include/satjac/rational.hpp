#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "satjac/errors.hpp"

namespace satjac {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw InvalidArgumentError("zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// gmpxx has no long long overloads; these bridge through long (64-bit here).
inline Integer make_integer(long long v) { return Integer(static_cast<long>(v)); }

/// Canonical "p" / "p/q" rendering (q > 0, gcd(p,q) = 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw InvalidArgumentError("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline long long to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw InvalidArgumentError("integer does not fit in 64 bits");
    return static_cast<long long>(z.get_si());
}

inline long long to_i64(const Rational& r) {
    if (!is_integral(r)) throw InvalidArgumentError("rational is not an integer: " + to_string(r));
    return to_i64(Integer(r.get_num()));
}

/// floor(r) as an Integer (exact, works for negative values).
inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// binomial(n, k); zero when k < 0 or n < k (n >= 0 assumed).
inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline long long binomial_i64(long long n, long long k) { return to_i64(binomial(n, k)); }

}  // namespace satjac
