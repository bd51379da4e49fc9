#pragma once

/**
 * @file quadrature.hpp
 * @brief Numerical evaluation of the auxiliary integral
 *          Y_n(s; u; gamma) = int_{(1,oo) x (0,oo)^{n-1}}
 *              prod_j (gamma_1 x_1 + ... + gamma_j x_j + u_j)^{-s_j} dx
 *        and the cube-average link between Y and the blocked series Z.
 *
 * The innermost variable appears in a single pure power, so its tail
 * integrates in closed form; the remaining dimensions run through
 * adaptive Gauss-Kronrod on mapped unit intervals.
 */

#include <cmath>
#include <functional>
#include <vector>

#include "mzv/blocked_series.hpp"
#include "mzv/errors.hpp"
#include "mzv/gauss.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

namespace detail {

// Gauss 7 / Kronrod 15 on [-1, 1] (QUADPACK constants).
inline const double gk15_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline const double gk15_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline const double gk15_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GKResult {
    ComplexFloat value;
    double error;
};

inline GKResult gk15(const std::function<ComplexFloat(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    ComplexFloat kron(0.0, 0.0), gauss(0.0, 0.0);
    for (int i = 0; i < 8; ++i) {
        const double x = gk15_nodes[i];
        ComplexFloat fv = f(c + h * x);
        if (x != 0.0) fv += f(c - h * x);
        kron += gk15_wk[i] * fv;
        if (i % 2 == 1) gauss += gk15_wg[i / 2] * fv;
    }
    kron *= h;
    gauss *= h;
    const double diff = std::abs(kron - gauss);
    // QUADPACK-style sharpened estimate
    const double err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(kron), 1e-300), 1.5));
    return {kron, std::max(err, 1e-18 * std::abs(kron))};
}

inline ComplexFloat adaptive_gk(const std::function<ComplexFloat(double)>& f, double a, double b,
                                double tol, int depth) {
    const GKResult r = gk15(f, a, b);
    if (r.error <= tol || depth <= 0) {
        if (depth <= 0 && r.error > 16.0 * tol)
            throw ToleranceError("adaptive quadrature: refinement depth exhausted");
        return r.value;
    }
    const double m = 0.5 * (a + b);
    return adaptive_gk(f, a, m, tol / 2.0, depth - 1) + adaptive_gk(f, m, b, tol / 2.0, depth - 1);
}

} // namespace detail

/// Numerical Y_n for n <= 3 via mapped adaptive quadrature with the
/// innermost tail closed analytically.
inline ComplexFloat quadrature_Y(const std::vector<ComplexFloat>& s,
                                 const std::vector<ComplexFloat>& u,
                                 const std::vector<ComplexFloat>& gamma,
                                 const ContinuationConfig& cfg) {
    const int n = static_cast<int>(s.size());
    if (n < 1 || n > 3) throw CapacityError("quadrature_Y: dimension must be 1..3");
    if (static_cast<int>(u.size()) != n || static_cast<int>(gamma.size()) != n)
        throw DomainError("quadrature_Y: dimension mismatch");
    for (auto& g : gamma)
        if (!(g.real() > 0.0)) throw DomainError("quadrature_Y: Re gamma must be positive");
    for (int j = 1; j <= n; ++j) {
        double tail = 0.0;
        for (int i = j - 1; i < n; ++i) tail += s[static_cast<size_t>(i)].real();
        if (!(tail > static_cast<double>(n + 1 - j) + cfg.domain_margin))
            throw DomainError("quadrature_Y: outside D_n (margin) at level j=" + std::to_string(j));
    }
    const double tol = cfg.tolerance;

    // Innermost factor integrates to (P_{n-1}(+x_n part dropped) + u_n)^{1-s_n}/(gamma_n (s_n-1)).
    const ComplexFloat sn = s[static_cast<size_t>(n - 1)];
    const ComplexFloat inner_scale = 1.0 / (gamma[static_cast<size_t>(n - 1)] * (sn - 1.0));

    auto integrand_closed = [&](const std::vector<double>& x) {
        // x holds x_1 .. x_{n-1}
        ComplexFloat P(0.0, 0.0);
        ComplexFloat prod(1.0, 0.0);
        for (int j = 0; j < n - 1; ++j) {
            P += gamma[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            prod *= std::pow(P + u[static_cast<size_t>(j)], -s[static_cast<size_t>(j)]);
        }
        prod *= std::pow(P + u[static_cast<size_t>(n - 1)], ComplexFloat(1.0, 0.0) - sn) * inner_scale;
        return prod;
    };

    if (n == 1) {
        // int_1^oo (gamma x + u)^{-s} dx, closed.
        return std::pow(gamma[0] + u[0], ComplexFloat(1.0, 0.0) - s[0]) * inner_scale;
    }

    if (n == 2) {
        // x_1 = 1 + t/(1-t)
        auto f = [&](double t) {
            const double om = 1.0 - t;
            const double x1 = 1.0 + t / om;
            return integrand_closed({x1}) / (om * om);
        };
        return detail::adaptive_gk(f, 0.0, 1.0, tol, 36);
    }

    // n == 3: outer x_1 in (1, oo), inner x_2 in (0, oo)
    auto f_outer = [&](double t1) {
        const double om1 = 1.0 - t1;
        const double x1 = 1.0 + t1 / om1;
        const double j1 = 1.0 / (om1 * om1);
        auto f_inner = [&](double t2) {
            const double om2 = 1.0 - t2;
            const double x2 = t2 / om2;
            return integrand_closed({x1, x2}) / (om2 * om2);
        };
        return detail::adaptive_gk(f_inner, 0.0, 1.0, tol / (8.0 * j1), 30) * j1;
    };
    return detail::adaptive_gk(f_outer, 0.0, 1.0, tol, 30);
}

struct RaabeLinkReport {
    ComplexFloat y_value;          // quadrature_Y
    ComplexFloat z_cube_integral;  // int_{[0,1]^n} Z(u(b)) db
    double gap = 0.0;
    double rule_disagreement = 0.0;
    bool ok = false;
};

/// Checks Y(s; u; gamma) = int_{[0,1]^n} Z(s; u + partial-sums(gamma b); gamma) db
/// inside the convergence domain, n <= 2, by tensor Gauss integration of
/// direct evaluations against the quadrature of Y.
inline RaabeLinkReport raabe_link_check(const std::vector<ComplexFloat>& s,
                                        const std::vector<ComplexFloat>& u,
                                        const std::vector<ComplexFloat>& gamma,
                                        const ContinuationConfig& cfg) {
    const int n = static_cast<int>(s.size());
    if (n < 1 || n > 2) throw CapacityError("raabe_link_check: dimension must be 1..2");

    auto z_at = [&](const std::vector<double>& b) {
        BlockedSeriesSpec spec;
        spec.gamma = gamma;
        spec.blocks.resize(static_cast<size_t>(n));
        ComplexFloat shift_acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            shift_acc += gamma[static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
            spec.blocks[static_cast<size_t>(j)].push_back(
                {s[static_cast<size_t>(j)], u[static_cast<size_t>(j)] + shift_acc});
        }
        return eval_in_domain(spec, cfg);
    };

    auto tensor_gauss = [&](int order) {
        const auto rule = gauss_legendre_unit(order);
        ComplexFloat acc(0.0, 0.0);
        if (n == 1) {
            for (auto& p : rule) acc += p.w * z_at({p.x});
        } else {
            for (auto& p1 : rule)
                for (auto& p2 : rule) acc += p1.w * p2.w * z_at({p1.x, p2.x});
        }
        return acc;
    };

    RaabeLinkReport report;
    const ComplexFloat coarse = tensor_gauss(16);
    const ComplexFloat fine = tensor_gauss(22);
    report.rule_disagreement = std::abs(fine - coarse);
    report.z_cube_integral = fine;
    report.y_value = quadrature_Y(s, u, gamma, cfg);
    report.gap = std::abs(report.y_value - report.z_cube_integral);
    report.ok = report.gap <= std::max(cfg.tolerance * 10.0, report.rule_disagreement * 4.0);
    return report;
}

} // namespace mzv
