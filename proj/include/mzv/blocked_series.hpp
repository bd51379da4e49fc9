#pragma once

/**
 * @file blocked_series.hpp
 * @brief The blocked multiple series
 *          Z(s; u; gamma) = sum_{m_1>=1, m_2..m_n>=0}
 *              prod_j prod_k (gamma_1 m_1 + ... + gamma_j m_j + u_{j,k})^{-s_{j,k}}
 *        and its direct evaluation inside the convergence domain.
 *
 * Truncation control rests on two facts.  Writing M_j = m_1 + ... + m_j,
 * each lattice term is bounded by const * prod_j M_j^{-sigma_j} with
 * sigma_j the real exponent sum of block j, and the chain sums
 *   sum_{a<=M_j<=M_{j+1}<=...} prod M_i^{-sigma_i}
 * telescope into one-dimensional tails governed by
 * eps_j = sigma_j + ... + sigma_n - (n-j), which the convergence domain
 * keeps above 1.  The tail beyond a simplex |m| <= R is then bounded by
 * splitting on the first partial sum that exceeds R.
 */

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

struct BlockFactor {
    ComplexFloat exponent; // s_{j,k}
    ComplexFloat shift;    // u_{j,k}
};

struct BlockedSeriesSpec {
    std::vector<std::vector<BlockFactor>> blocks;
    std::vector<ComplexFloat> gamma;

    int n() const { return static_cast<int>(blocks.size()); }

    int total_q() const {
        int q = 0;
        for (auto& b : blocks) q += static_cast<int>(b.size());
        return q;
    }

    /// Membership in W_0: Re gamma_j > 0 and Re(u_{j,k} + gamma_1) > 0.
    void validate() const {
        if (blocks.empty() || blocks.size() != gamma.size())
            throw DomainError("BlockedSeriesSpec: block/gamma shape mismatch");
        for (auto& b : blocks)
            if (b.empty()) throw DomainError("BlockedSeriesSpec: empty block");
        for (auto& g : gamma)
            if (!(g.real() > 0.0)) throw DomainError("BlockedSeriesSpec: Re gamma must be positive");
        for (auto& b : blocks)
            for (auto& f : b)
                if (!(f.shift.real() + gamma[0].real() > 0.0))
                    throw DomainError("BlockedSeriesSpec: Re(u + gamma_1) must be positive");
    }

    /// sigma_j = sum_k Re s_{j,k}.
    std::vector<double> block_sigma() const {
        std::vector<double> sigma(blocks.size());
        for (size_t j = 0; j < blocks.size(); ++j) {
            double s = 0.0;
            for (auto& f : blocks[j]) s += f.exponent.real();
            sigma[j] = s;
        }
        return sigma;
    }

    ComplexFloat block_exponent_sum(int j) const {
        ComplexFloat s(0.0, 0.0);
        for (auto& f : blocks[static_cast<size_t>(j - 1)]) s += f.exponent;
        return s;
    }

    double imag_exponent_mass() const {
        double s = 0.0;
        for (auto& b : blocks)
            for (auto& f : b) s += std::abs(f.exponent.imag());
        return s;
    }

    /// Minorization constant: |partial form| >= eps0 * (m_1 + ... + m_j),
    /// absorbing the shifts into the m_1 >= 1 slack.
    double eps0() const {
        double e = gamma[0].real();
        for (auto& g : gamma) e = std::min(e, g.real());
        for (auto& b : blocks)
            for (auto& f : b) e = std::min(e, gamma[0].real() + std::min(0.0, f.shift.real()));
        return e;
    }

    /// Majorization constant: |partial form| <= c_up * (m_1 + ... + m_j).
    double c_up() const {
        double gmax = 0.0, umax = 0.0;
        for (auto& g : gamma) gmax = std::max(gmax, std::abs(g));
        for (auto& b : blocks)
            for (auto& f : b) umax = std::max(umax, std::abs(f.shift));
        return gmax + umax + 1.0;
    }
};

struct ContinuationConfig {
    int K = 12;                       // Taylor / Euler-Maclaurin truncation order (starting value)
    long M = 16;                      // direct-sum cutoff (starting value)
    double tolerance = 1e-8;          // target absolute tolerance
    double contour_radius = 0.0;      // 0 = auto: min(1/4, delta/2)
    int contour_nodes = 16;           // P
    double eps_sing = 1e-9;           // near-pole guard on linear factors
    double domain_margin = 0.02;      // strictness margin for D_{n,q} membership
    double contour_residual_tol = 1e-6; // acceptance threshold for aliasing residual
    long max_lattice = 400000000L;    // direct-summation point cap
    int K_max = 40;
    long M_max = 512;
    int q_cap = 12;

    void validate(int n) const {
        if (K < 1) throw DomainError("config: K must be >= 1");
        if (M < 8) throw DomainError("config: M must be >= 8");
        if (!(tolerance > 0.0)) throw DomainError("config: tolerance must be positive");
        if (contour_nodes < 2 * n + 4) throw DomainError("config: contour nodes must be >= 2n+4");
        if (!(eps_sing > 0.0)) throw DomainError("config: eps_sing must be positive");
    }
};

namespace detail {

/// sum_{m >= a} m^{-p} <= a^{-p} + a^{1-p}/(p-1) for a >= 1, p > 1.
inline double tail_sum_bound(double a, double p) {
    if (!(p > 1.0)) return std::numeric_limits<double>::infinity();
    return std::pow(a, -p) + std::pow(a, 1.0 - p) / (p - 1.0);
}

/// Chain exponents eps_j = sigma_j + ... + sigma_d - (d - j), 1-based.
inline std::vector<double> chain_epsilons(const std::vector<double>& sigma) {
    const int d = static_cast<int>(sigma.size());
    std::vector<double> eps(static_cast<size_t>(d));
    double acc = 0.0;
    for (int j = d - 1; j >= 0; --j) {
        acc += sigma[static_cast<size_t>(j)];
        eps[static_cast<size_t>(j)] = acc - (d - 1 - j);
    }
    return eps;
}

/// Bound for sum over nondecreasing chains a <= M_j <= ... <= M_d of
/// prod_{i>=j} M_i^{-sigma_i}; j 1-based.
inline double chain_tail_bound(const std::vector<double>& eps, int j, double a) {
    const int d = static_cast<int>(eps.size());
    double c = 1.0;
    for (int i = j + 1; i <= d; ++i) {
        const double e = eps[static_cast<size_t>(i - 1)];
        if (!(e > 1.0)) return std::numeric_limits<double>::infinity();
        c *= 1.0 + 1.0 / (e - 1.0);
    }
    return c * tail_sum_bound(a, eps[static_cast<size_t>(j - 1)]);
}

/// Upper bound on sum_{M=1}^{R} M^{-sigma} (any sign of sigma).
inline double partial_power_sum_bound(double R, double sigma) {
    if (sigma > 1.0) return 1.0 + 1.0 / (sigma - 1.0);
    if (sigma == 1.0) return 1.0 + std::log(R);
    return 1.0 + (std::pow(R, 1.0 - sigma) - 1.0) / (1.0 - sigma);
}

/// Product over all factors of the per-factor envelope constants, times
/// the imaginary-exponent slant.
inline double envelope_constant(const BlockedSeriesSpec& spec) {
    const double e0 = spec.eps0();
    const double cu = spec.c_up();
    double c = std::exp(0.5 * M_PI * spec.imag_exponent_mass());
    for (auto& b : spec.blocks)
        for (auto& f : b) {
            const double re = f.exponent.real();
            c *= (re >= 0.0) ? std::pow(e0, -re) : std::pow(cu, -re);
        }
    return c;
}

/// Bound for the weighted lattice tail beyond the simplex |m| <= R,
/// splitting on the first partial sum above R.
inline double simplex_tail_bound(const BlockedSeriesSpec& spec, double R) {
    const auto sigma = spec.block_sigma();
    const auto eps = chain_epsilons(sigma);
    const int n = spec.n();
    const double A = envelope_constant(spec);
    double total = 0.0;
    for (int jstar = 1; jstar <= n; ++jstar) {
        double below = 1.0;
        for (int i = 1; i < jstar; ++i)
            below *= partial_power_sum_bound(R, sigma[static_cast<size_t>(i - 1)]);
        total += below * chain_tail_bound(eps, jstar, R + 1.0);
    }
    return A * total;
}

/// Number of lattice points with m_1 >= 1, m_j >= 0, |m| <= R.
inline double lattice_count(double R, int n) {
    double c = 1.0;
    for (int i = 1; i <= n; ++i) c *= (R - 1.0 + i) / i;
    return c;
}

} // namespace detail

/// Direct lattice evaluation inside D_{n,q}.  Sums the simplex |m| <= R
/// with R grown until the certified tail bound drops below tolerance.
/// When the last block is a single real factor, its inner sums are closed
/// with a midpoint comparison integral instead, which sharpens the cost
/// from tol^{-1/eps} to a few hundred terms.
inline ComplexFloat eval_in_domain(const BlockedSeriesSpec& spec, const ContinuationConfig& cfg) {
    spec.validate();
    cfg.validate(spec.n());
    const int n = spec.n();
    const auto sigma = spec.block_sigma();
    const auto eps = detail::chain_epsilons(sigma);
    for (int j = 1; j <= n; ++j)
        if (!(eps[static_cast<size_t>(j - 1)] > 1.0 + cfg.domain_margin))
            throw DomainError("eval_in_domain: outside D_{n,q} (margin) at level j=" +
                              std::to_string(j));
    const double tol = cfg.tolerance;

    bool all_real = true;
    for (auto& g : spec.gamma) all_real = all_real && g.imag() == 0.0;
    for (auto& b : spec.blocks)
        for (auto& f : b) all_real = all_real && f.exponent.imag() == 0.0 && f.shift.imag() == 0.0;
    const bool fast_inner = all_real && spec.blocks.back().size() == 1;

    // term = prod over blocks j <= level of their factors at partial sum P
    auto block_product = [&](int j, double P) -> ComplexFloat {
        ComplexFloat prod(1.0, 0.0);
        for (auto& f : spec.blocks[static_cast<size_t>(j)]) {
            const ComplexFloat base = ComplexFloat(P, 0.0) + f.shift;
            if (all_real)
                prod *= std::pow(base.real(), -f.exponent.real());
            else
                prod *= std::pow(base, -f.exponent);
        }
        return prod;
    };

    if (fast_inner) {
        const double s_in = spec.blocks.back()[0].exponent.real();
        const double u_in = spec.blocks.back()[0].shift.real();
        const double g_in = spec.gamma.back().real();

        // Outer truncation radius over dimensions 1..n-1 (empty for n = 1).
        // Inner sums are bounded by (1 + 1/(s_in - 1)) M_{n-1}^{1-s_in}, so
        // the outer chain runs with the last exponent boosted by s_in - 1.
        double R_out = 0.0;
        if (n > 1) {
            std::vector<double> sig_out(sigma.begin(), sigma.end() - 1);
            sig_out.back() += s_in - 1.0;
            const double A = detail::envelope_constant(spec) * (1.0 + 1.0 / (s_in - 1.0));
            const auto eps_out = detail::chain_epsilons(sig_out);
            R_out = 16.0;
            for (;;) {
                double bound = 0.0;
                for (int jstar = 1; jstar <= n - 1; ++jstar) {
                    double below = 1.0;
                    for (int i = 1; i < jstar; ++i)
                        below *= detail::partial_power_sum_bound(R_out, sig_out[static_cast<size_t>(i - 1)]);
                    bound += below * detail::chain_tail_bound(eps_out, jstar, R_out + 1.0);
                }
                if (A * bound <= tol / 2.0) break;
                R_out *= 2.0;
                if (detail::lattice_count(R_out, n - 1) > static_cast<double>(cfg.max_lattice))
                    throw ToleranceError("eval_in_domain: outer lattice cap exceeded");
            }
        }

        const double n_prefix = (n > 1) ? detail::lattice_count(R_out, n - 1) : 1.0;
        const double budget_per_prefix = tol / 4.0 / n_prefix;

        ComplexFloat total(0.0, 0.0);
        // Closed treatment of the final one-factor block: direct terms up
        // to M_in, then the midpoint comparison integral, whose error is
        // certified by (f'' + |f'|)/24 at the cut.
        auto inner_sum = [&](double P, double weight) -> double {
            // For n = 1 the lattice variable starts at 1, not 0.
            const double a = P + u_in + ((n == 1) ? g_in : 0.0);
            double direct = 0.0;
            long m = 0;
            long M_in = std::max<long>(cfg.M, 8);
            for (;;) {
                for (; m < M_in; ++m) direct += std::pow(a + g_in * static_cast<double>(m), -s_in);
                const double x0 = a + g_in * (static_cast<double>(M_in) - 0.5);
                const double fp = s_in * g_in * std::pow(x0, -s_in - 1.0);
                const double fpp = s_in * (s_in + 1.0) * g_in * g_in * std::pow(x0, -s_in - 2.0);
                if (weight * (fp + fpp) / 24.0 <= budget_per_prefix) break;
                if (M_in >= (1L << 24))
                    throw ToleranceError("eval_in_domain: inner cutoff cap exceeded");
                M_in *= 2;
            }
            const double x0 = a + g_in * (static_cast<double>(M_in) - 0.5);
            return direct + std::pow(x0, 1.0 - s_in) / (g_in * (s_in - 1.0));
        };

        if (n == 1) {
            total = ComplexFloat(inner_sum(0.0, 1.0), 0.0);
        } else {
            std::function<void(int, long, double, ComplexFloat)> walk =
                [&](int level, long used, double P, ComplexFloat outer_prod) {
                    if (level == n - 1) {
                        total += outer_prod * ComplexFloat(inner_sum(P, std::abs(outer_prod)), 0.0);
                        return;
                    }
                    const long lo = (level == 0) ? 1 : 0;
                    const long hi = static_cast<long>(R_out) - used;
                    for (long mj = lo; mj <= hi; ++mj) {
                        const double Pj =
                            P + spec.gamma[static_cast<size_t>(level)].real() * static_cast<double>(mj);
                        walk(level + 1, used + mj, Pj, outer_prod * block_product(level, Pj));
                    }
                };
            walk(0, 0, 0.0, ComplexFloat(1.0, 0.0));
        }
        ensure_finite(total, "eval_in_domain");
        return total;
    }

    // General path: plain simplex truncation, ascending lexicographic order.
    double R = 16.0;
    for (;;) {
        if (detail::simplex_tail_bound(spec, R) <= tol) break;
        R *= 2.0;
        if (detail::lattice_count(R, n) > static_cast<double>(cfg.max_lattice))
            throw ToleranceError("eval_in_domain: lattice cap exceeded before tail bound met");
    }

    ComplexFloat total(0.0, 0.0);
    std::function<void(int, long, ComplexFloat, ComplexFloat)> walk =
        [&](int level, long used, ComplexFloat P, ComplexFloat prod) {
            if (level == n) {
                total += prod;
                return;
            }
            const long lo = (level == 0) ? 1 : 0;
            const long hi = static_cast<long>(R) - used;
            for (long mj = lo; mj <= hi; ++mj) {
                const ComplexFloat Pj =
                    P + spec.gamma[static_cast<size_t>(level)] * static_cast<double>(mj);
                ComplexFloat prod_j = prod;
                if (all_real) {
                    prod_j *= block_product(level, Pj.real());
                } else {
                    for (auto& f : spec.blocks[static_cast<size_t>(level)])
                        prod_j *= std::pow(Pj + f.shift, -f.exponent);
                }
                walk(level + 1, used + mj, Pj, prod_j);
            }
        };
    walk(0, 0, ComplexFloat(0.0, 0.0), ComplexFloat(1.0, 0.0));
    ensure_finite(total, "eval_in_domain");
    return total;
}

} // namespace mzv
