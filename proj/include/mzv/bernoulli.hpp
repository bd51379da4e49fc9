#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers and polynomials, binomial coefficients.
 *
 * B_k comes from the integer recurrence
 *     sum_{j=0}^{k} C(k+1, j) B_j = 0   (k >= 1),  B_0 = 1,
 * so no transcendental function is ever involved.
 */

#include <mutex>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

/// Exact binomial C(n, k) for any integer n and k >= 0 (falling factorial
/// over k!).  C(n, k) = 0 when 0 <= n < k.
inline Rational binomial_integer(long n, unsigned k) {
    Integer num(1);
    for (unsigned i = 0; i < k; ++i) num *= Integer(n) - static_cast<long>(i);
    return rational(num, factorial_integer(k));
}

/// Generalized binomial C(z, k) = z(z-1)...(z-k+1)/k! over any scalar field.
template <class T>
T binomial_scalar(const T& z, unsigned k) {
    T num = ScalarTraits<T>::one();
    for (unsigned i = 0; i < k; ++i)
        num *= z - ScalarTraits<T>::from_int(static_cast<long>(i));
    return num * ScalarTraits<T>::from_rational(rational(Integer(1), factorial_integer(k)));
}

namespace detail {

/// Shared table of B_0..B_max, grown on demand under a lock.
inline const Rational& bernoulli_table(unsigned k) {
    static std::vector<Rational> table = {Rational(1), rational(-1, 2)};
    static std::mutex lock;
    std::scoped_lock guard(lock);
    while (table.size() <= k) {
        const unsigned m = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += binomial_integer(static_cast<long>(m) + 1, j) * table[j];
        table.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return table[k];
}

} // namespace detail

inline Rational bernoulli_number(unsigned k) { return detail::bernoulli_table(k); }

/// Modified numbers of the Euler-Maclaurin bookkeeping: identical to B_k
/// except B~_1 = +1/2.
inline Rational bernoulli_number_modified(unsigned k) {
    if (k == 1) return rational(1, 2);
    return bernoulli_number(k);
}

/// Coefficients of B_k(x) = sum_j C(k, j) B_{k-j} x^j, ascending in degree.
inline std::vector<Rational> bernoulli_polynomial(unsigned k) {
    std::vector<Rational> coeffs(k + 1);
    for (unsigned j = 0; j <= k; ++j)
        coeffs[j] = binomial_integer(static_cast<long>(k), j) * bernoulli_number(k - j);
    return coeffs;
}

/// Horner evaluation of a univariate polynomial with Rational coefficients.
template <class T>
T evaluate_univariate(const std::vector<Rational>& coeffs, const T& x) {
    T acc = ScalarTraits<T>::zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + ScalarTraits<T>::from_rational(*it);
    return acc;
}

inline double evaluate_univariate(const std::vector<Rational>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

} // namespace mzv
