#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * Every Rational is kept canonical: denominator > 0 and
 * gcd(|num|, den) = 1, so equality is structural.  The text form is
 * "p/q" in lowest terms, or just "p" when q = 1; it is the on-disk and
 * on-wire format everywhere in this project.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mzv/errors.hpp"

namespace mzv {

using Integer  = mpz_class;
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair.
inline Rational rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q" or "-p/q".  Rejects anything else.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("parse_rational: empty string");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw DomainError("parse_rational: malformed rational '" + text + "'");
    if (r.get_den() == 0)
        throw DomainError("parse_rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

/// "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// r^e for a (possibly negative) integer exponent.
inline Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw DomainError("pow_rational: 0 to a negative power");
    Rational out;
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), k);
    if (e < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    out.canonicalize();
    return out;
}

/// Exact factorial as an Integer.
inline Integer factorial_integer(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

} // namespace mzv
