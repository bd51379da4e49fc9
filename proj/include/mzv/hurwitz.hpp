#pragma once

/**
 * @file hurwitz.hpp
 * @brief Hurwitz zeta by Euler-Maclaurin with a certified remainder bound.
 */

#include <cmath>
#include <complex>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

/// zeta(z, a) for real a > 0, z away from 1.  Direct terms up to an
/// adaptive cutoff, then the asymptotic tail; the first omitted
/// Euler-Maclaurin term (times the standard slant factor) bounds the error.
inline ComplexFloat hurwitz_zeta(ComplexFloat z, double a, double tolerance,
                                 double eps_sing = 1e-9) {
    if (!(a > 0.0)) throw DomainError("hurwitz_zeta: need Re a > 0 with real a");
    if (std::abs(z - ComplexFloat(1.0, 0.0)) < eps_sing)
        throw PoleError("hurwitz_zeta: z too close to the pole at 1", 1);

    const bool real_z = z.imag() == 0.0;
    auto power = [&](double base, ComplexFloat expo) -> ComplexFloat {
        if (real_z) return {std::pow(base, expo.real()), 0.0};
        return std::pow(ComplexFloat(base, 0.0), expo);
    };

    long M = 16;
    if (M < static_cast<long>(std::abs(z.imag()))) M = static_cast<long>(std::abs(z.imag())) + 16;
    const long M_cap = 1L << 22;

    for (; M <= M_cap; M *= 2) {
        const double q = a + static_cast<double>(M);
        // Find a J whose first omitted term certifies the tolerance.
        // Pochhammer |(z)_{2J+1}| grows, q^{-2J} decays; track the product.
        int J_ok = -1;
        double poch = std::abs(z); // |(z)_1|
        for (int J = 1; J <= 40; ++J) {
            // extend Pochhammer to |(z)_{2J+1}|
            for (int i = 2 * J - 1; i <= 2 * J; ++i) poch *= std::abs(z + ComplexFloat(i, 0.0));
            const double re_edge = z.real() + 2.0 * J + 1.0;
            if (re_edge <= 0.0) continue;
            const double b2 = std::abs(bernoulli_number(2 * static_cast<unsigned>(J) + 2).get_d()) /
                              factorial_integer(2 * static_cast<unsigned>(J) + 2).get_d();
            const double slant = std::abs(z + ComplexFloat(2.0 * J + 1.0, 0.0)) / re_edge;
            const double bound =
                b2 * poch * std::pow(q, -(z.real() + 2.0 * J + 1.0)) * slant;
            if (std::isfinite(bound) && bound <= tolerance) {
                J_ok = J;
                break;
            }
        }
        if (J_ok < 0) continue; // more direct terms, then retry

        ComplexFloat sum(0.0, 0.0);
        for (long m = 0; m < M; ++m) sum += power(a + static_cast<double>(m), -z);
        sum += power(q, ComplexFloat(1.0, 0.0) - z) / (z - ComplexFloat(1.0, 0.0));
        sum += 0.5 * power(q, -z);
        ComplexFloat poch_acc = z;
        for (int r = 1; r <= J_ok; ++r) {
            const double br = bernoulli_number(2 * static_cast<unsigned>(r)).get_d() /
                              factorial_integer(2 * static_cast<unsigned>(r)).get_d();
            sum += br * poch_acc * power(q, -z - ComplexFloat(2.0 * r - 1.0, 0.0));
            if (r < J_ok)
                for (int i = 2 * r - 1; i <= 2 * r; ++i) poch_acc *= z + ComplexFloat(i, 0.0);
        }
        ensure_finite(sum, "hurwitz_zeta");
        return sum;
    }
    throw ToleranceError("hurwitz_zeta: tolerance unattainable within iteration caps");
}

/// Exact value at a non-positive integer argument: zeta(-N, a) = -B_{N+1}(a)/(N+1).
inline Rational hurwitz_zeta_exact_neg_int(unsigned N, const Rational& a) {
    const auto poly = bernoulli_polynomial(N + 1);
    Rational value = evaluate_univariate<Rational>(poly, a);
    return -value / Rational(static_cast<long>(N) + 1);
}

} // namespace mzv
