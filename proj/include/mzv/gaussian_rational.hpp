#pragma once

/**
 * @file gaussian_rational.hpp
 * @brief The exact complex field Q(i).
 */

#include <string>
#include <utility>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// An element of Q(i), the only exact complex field the library supports.
/// Parameters outside Q(i) must go through the float path.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {} // NOLINT: implicit by design
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussianRational inverse() const {
        const Rational n = norm();
        if (n == 0) throw DomainError("GaussianRational: division by zero");
        return {re / n, -im / n};
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// z^e for a (possibly negative) integer exponent.
inline GaussianRational pow_scalar(const GaussianRational& z, long e) {
    if (e < 0) return pow_scalar(z.inverse(), -e);
    GaussianRational acc(1);
    GaussianRational base = z;
    unsigned long k = static_cast<unsigned long>(e);
    while (k != 0) {
        if (k & 1UL) acc *= base;
        base *= base;
        k >>= 1UL;
    }
    return acc;
}

/// "a+bi" with rational a, b; degenerate forms "a", "bi".
inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im = to_string(z.im) + "i";
    if (z.re == 0) return im;
    if (z.im > 0) return to_string(z.re) + "+" + im;
    return to_string(z.re) + im;
}

} // namespace mzv
