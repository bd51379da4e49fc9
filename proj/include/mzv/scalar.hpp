#pragma once

/**
 * @file scalar.hpp
 * @brief The two scalar fields (exact and float) and the glue the
 *        templated algorithms need to stay generic over them.
 */

#include <cmath>
#include <complex>
#include <string>

#include "mzv/errors.hpp"
#include "mzv/gaussian_rational.hpp"
#include "mzv/rational.hpp"

namespace mzv {

using ComplexFloat = std::complex<double>;

inline bool is_finite(const ComplexFloat& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void ensure_finite(const ComplexFloat& z, const char* what) {
    if (!is_finite(z)) throw Error(std::string(what) + ": non-finite value produced");
}

inline ComplexFloat to_complex(const GaussianRational& z) {
    return {z.re.get_d(), z.im.get_d()};
}
inline ComplexFloat to_complex(const Rational& r) { return {r.get_d(), 0.0}; }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& r) { return r == 0; }
    static bool is_negligible(const Rational& r) { return r == 0; }
    static Rational real_part(const Rational& r) { return r; }
    static Rational magnitude_bound(const Rational& r) { return abs(r); }
};

template <>
struct ScalarTraits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_int(long v) { return GaussianRational(Rational(v)); }
    static GaussianRational from_rational(const Rational& r) { return GaussianRational(r); }
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
    /// Exact-mode pruning keeps only true zeros.
    static bool is_negligible(const GaussianRational& z) { return z.is_zero(); }
    static Rational real_part(const GaussianRational& z) { return z.re; }
    /// Rational upper bound on |z| (|re| + |im|).
    static Rational magnitude_bound(const GaussianRational& z) {
        return abs(z.re) + abs(z.im);
    }
};

template <>
struct ScalarTraits<ComplexFloat> {
    static constexpr bool exact = false;
    static ComplexFloat zero() { return {0.0, 0.0}; }
    static ComplexFloat one() { return {1.0, 0.0}; }
    static ComplexFloat from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static ComplexFloat from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
    static bool is_zero(const ComplexFloat& z) { return z.real() == 0.0 && z.imag() == 0.0; }
    static bool is_negligible(const ComplexFloat& z) { return std::abs(z) < 1e-300; }
    static double real_part(const ComplexFloat& z) { return z.real(); }
    static double magnitude_bound(const ComplexFloat& z) { return std::abs(z); }
};

inline ComplexFloat pow_scalar(const ComplexFloat& z, long e) {
    if (e == 0) return {1.0, 0.0};
    if (ScalarTraits<ComplexFloat>::is_zero(z) && e < 0)
        throw DomainError("pow_scalar: 0 to a negative power");
    ComplexFloat acc(1.0, 0.0);
    ComplexFloat base = z;
    bool neg = e < 0;
    unsigned long k = static_cast<unsigned long>(neg ? -e : e);
    while (k != 0) {
        if (k & 1UL) acc *= base;
        base *= base;
        k >>= 1UL;
    }
    return neg ? ComplexFloat(1.0, 0.0) / acc : acc;
}

} // namespace mzv
