#pragma once

/**
 * @file raabe.hpp
 * @brief The polynomial Raabe transform and its Bernoulli inverse.
 *
 * cube_average sends g to f(x) = int_{[0,1]^n} g(x + y) dy, exactly, by
 * coefficientwise antiderivatives.  bernoulli_lift substitutes Bernoulli
 * polynomials for monomials and inverts it: both maps are triangular in
 * the monomial basis with unit diagonal.
 */

#include <functional>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/gauss.hpp"
#include "mzv/polynomial.hpp"

namespace mzv {

namespace detail {

/// Coefficients (ascending) of int_0^1 (x + y)^m dy
///   = ((x+1)^{m+1} - x^{m+1}) / (m+1) = sum_{r<=m} C(m+1, r) x^r / (m+1).
inline std::vector<Rational> cube_average_univariate(int m) {
    std::vector<Rational> coeffs(static_cast<size_t>(m) + 1);
    const Rational inv(1, static_cast<unsigned long>(m) + 1);
    for (int r = 0; r <= m; ++r)
        coeffs[static_cast<size_t>(r)] =
            binomial_integer(m + 1, static_cast<unsigned>(r)) * inv;
    return coeffs;
}

/// Tensor product of univariate coefficient lists folded into a
/// multivariate polynomial, scaled by c.
template <class T>
void emit_product(MultivariatePolynomial<T>& out, const std::vector<std::vector<Rational>>& factors,
                  const T& c) {
    const int n = out.dimension();
    MultiIndex k = MultiIndex::zeros(n);
    std::function<void(int, const T&)> rec = [&](int i, const T& acc) {
        if (i == n) {
            out.add_term(k, acc);
            return;
        }
        const auto& f = factors[static_cast<size_t>(i)];
        for (int r = 0; r < static_cast<int>(f.size()); ++r) {
            if (f[static_cast<size_t>(r)] == 0) continue;
            k[i] = r;
            rec(i + 1, acc * ScalarTraits<T>::from_rational(f[static_cast<size_t>(r)]));
        }
        k[i] = 0;
    };
    rec(0, c);
}

} // namespace detail

/// f(x) = int_{[0,1]^n} g(x + y) dy on polynomials, exact.
template <class T>
MultivariatePolynomial<T> cube_average(const MultivariatePolynomial<T>& g) {
    const int n = g.dimension();
    MultivariatePolynomial<T> f(n);
    for (auto& [k, c] : g.terms()) {
        std::vector<std::vector<Rational>> factors;
        factors.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) factors.push_back(detail::cube_average_univariate(k[i]));
        detail::emit_product(f, factors, c);
    }
    return f;
}

/// f = sum a_k x^k  |->  g = sum a_k prod_i B_{k_i}(x_i), the transfer
/// with cube_average(bernoulli_lift(f)) = f.
template <class T>
MultivariatePolynomial<T> bernoulli_lift(const MultivariatePolynomial<T>& f) {
    const int n = f.dimension();
    MultivariatePolynomial<T> g(n);
    for (auto& [k, c] : f.terms()) {
        std::vector<std::vector<Rational>> factors;
        factors.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) factors.push_back(bernoulli_polynomial(static_cast<unsigned>(k[i])));
        detail::emit_product(g, factors, c);
    }
    return g;
}

struct RaabeProbeResult {
    std::vector<double> point;
    double expected;
    double integrated;
    double gap;
};

struct RaabeCheckReport {
    std::vector<RaabeProbeResult> probes;
    double max_gap = 0.0;
    double rule_disagreement = 0.0;
    bool ok = false;
};

/// Validates f(x) = int_{[0,1]^n} g(x + y) dy for a black-box sampler g
/// against an expected polynomial, by tensor Gauss quadrature at probe
/// points.  Two rule orders give a crude internal error estimate.
inline RaabeCheckReport raabe_numeric_check(
    const std::function<double(const std::vector<double>&)>& g,
    const MultivariatePolynomial<ComplexFloat>& f_expected,
    const std::vector<std::vector<double>>& probes, double tolerance) {
    const int n = f_expected.dimension();

    auto integrate = [&](const std::vector<double>& x0, int order) {
        const auto rule = gauss_legendre_unit(order);
        std::vector<double> y(static_cast<size_t>(n));
        double acc = 0.0;
        std::function<void(int, double)> rec = [&](int i, double w) {
            if (i == n) {
                std::vector<double> p(static_cast<size_t>(n));
                for (int d = 0; d < n; ++d) p[static_cast<size_t>(d)] = x0[static_cast<size_t>(d)] + y[static_cast<size_t>(d)];
                acc += w * g(p);
                return;
            }
            for (auto& node : rule) {
                y[static_cast<size_t>(i)] = node.x;
                rec(i + 1, w * node.w);
            }
        };
        rec(0, 1.0);
        return acc;
    };

    RaabeCheckReport report;
    for (auto& x0 : probes) {
        if (static_cast<int>(x0.size()) != n) throw DomainError("raabe_numeric_check: probe dimension");
        std::vector<ComplexFloat> xc(x0.size());
        for (size_t i = 0; i < x0.size(); ++i) xc[i] = ComplexFloat(x0[i], 0.0);
        const double expected = f_expected.evaluate(xc).real();
        const double coarse = integrate(x0, 16);
        const double fine = integrate(x0, 24);
        report.rule_disagreement = std::max(report.rule_disagreement, std::abs(fine - coarse));
        const double gap = std::abs(fine - expected);
        report.probes.push_back({x0, expected, fine, gap});
        report.max_gap = std::max(report.max_gap, gap);
    }
    if (report.rule_disagreement > tolerance)
        throw ToleranceError("raabe_numeric_check: quadrature did not settle below tolerance");
    report.ok = report.max_gap <= tolerance;
    return report;
}

} // namespace mzv
