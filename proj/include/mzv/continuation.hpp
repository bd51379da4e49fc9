#pragma once

/**
 * @file continuation.hpp
 * @brief Meromorphic continuation of blocked series by dimension
 *        reduction, and Laurent data along a direction through -N.
 *
 * reduce_once applies Euler-Maclaurin to the last lattice variable.  The
 * first M values split off as direct lower-dimensional children; the tail
 * contributes the integral family (Taylor-expanded around the centroid of
 * the block shifts, so a single-factor block is handled exactly) and the
 * derivative family with modified Bernoulli weights.  The two dropped
 * remainders are never computed, only bounded; K and M grow until the
 * bound fits the caller's budget.
 *
 * The recursion bottoms out in one-dimensional series evaluated against
 * Hurwitz zetas.  Laurent coefficients along s = -N + t theta come from
 * discrete contour sums over a circle |t| = r inside the G-function disk.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "mzv/blocked_series.hpp"
#include "mzv/closed_form.hpp"
#include "mzv/errors.hpp"
#include "mzv/hurwitz.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

struct ReductionTerm {
    ComplexFloat coefficient;
    BlockedSeriesSpec child;
};

struct Reduction {
    std::vector<ReductionTerm> terms;
    double remainder_bound = 0.0;
    int K_used = 0;
    long M_used = 0;
};

namespace detail {

inline ComplexFloat binomial_cf(const ComplexFloat& z, unsigned k) {
    ComplexFloat num(1.0, 0.0);
    for (unsigned i = 0; i < k; ++i) num *= z - ComplexFloat(static_cast<double>(i), 0.0);
    return num / factorial_integer(k).get_d();
}

/// Coefficients g_k = sum_{|alpha|=k} prod_i C(-s_i, alpha_i) w_i^{alpha_i},
/// k = 0..K, by series convolution across the factors.
inline std::vector<ComplexFloat> grouped_taylor_coefficients(
    const std::vector<ComplexFloat>& s, const std::vector<ComplexFloat>& w, int K) {
    std::vector<ComplexFloat> acc(static_cast<size_t>(K) + 1, ComplexFloat(0.0, 0.0));
    acc[0] = ComplexFloat(1.0, 0.0);
    for (size_t i = 0; i < s.size(); ++i) {
        std::vector<ComplexFloat> factor(static_cast<size_t>(K) + 1);
        ComplexFloat wp(1.0, 0.0);
        for (int a = 0; a <= K; ++a) {
            factor[static_cast<size_t>(a)] = binomial_cf(-s[i], static_cast<unsigned>(a)) * wp;
            wp *= w[i];
        }
        std::vector<ComplexFloat> next(static_cast<size_t>(K) + 1, ComplexFloat(0.0, 0.0));
        for (int a = 0; a <= K; ++a)
            for (int b = 0; a + b <= K; ++b)
                next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(b)] * factor[static_cast<size_t>(a)];
        acc = std::move(next);
    }
    return acc;
}

/// Same convolution on absolute values, returning only the degree-(K+1)
/// coefficient sum_{|alpha|=K+1} prod_i |C(-s_i, alpha_i)| r_i^{alpha_i}.
inline double grouped_abs_coefficient(const std::vector<ComplexFloat>& s,
                                      const std::vector<double>& r, int K1) {
    std::vector<double> acc(static_cast<size_t>(K1) + 1, 0.0);
    acc[0] = 1.0;
    for (size_t i = 0; i < s.size(); ++i) {
        std::vector<double> factor(static_cast<size_t>(K1) + 1);
        double rp = 1.0;
        for (int a = 0; a <= K1; ++a) {
            factor[static_cast<size_t>(a)] = std::abs(binomial_cf(-s[i], static_cast<unsigned>(a))) * rp;
            rp *= r[i];
        }
        std::vector<double> next(static_cast<size_t>(K1) + 1, 0.0);
        for (int a = 0; a <= K1; ++a)
            for (int b = 0; a + b <= K1; ++b)
                next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(b)] * factor[static_cast<size_t>(a)];
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(K1)];
}

/// sup_{x} |B_k({x})| <= 2 zeta(k) k!/(2 pi)^k, with zeta(k) <= 2 for k >= 2.
inline double periodic_bernoulli_sup(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= static_cast<double>(i) / (2.0 * M_PI);
    return 4.0 * f / (2.0 * M_PI);
}

/// Envelope constant of the outer blocks 1..n-1 only.
inline double outer_envelope(const BlockedSeriesSpec& spec) {
    const double e0 = spec.eps0();
    const double cu = spec.c_up();
    double c = 1.0;
    for (size_t j = 0; j + 1 < spec.blocks.size(); ++j)
        for (auto& f : spec.blocks[j]) {
            const double re = f.exponent.real();
            c *= (re >= 0.0) ? std::pow(e0, -re) : std::pow(cu, -re);
            c *= std::exp(0.5 * M_PI * std::abs(f.exponent.imag()));
        }
    return c;
}

/// Shared skeleton of the two reduction remainder bounds: everything that
/// depends on the x-integral and the outer lattice chain.  `rho` is the
/// certified nonnegative floor added to eps0p*(M0+x) by the inner shifts.
inline double reduction_chain_factor(const BlockedSeriesSpec& spec, double S_plus, double rho,
                                     double cup2, double pminus_max) {
    const int n = spec.n();
    const auto sigma = spec.block_sigma();
    double eps0p = spec.gamma[0].real();
    for (auto& g : spec.gamma) eps0p = std::min(eps0p, g.real());

    // Choose the (M0 + x)-decay D: integrable, and the outer chain must
    // keep every exponent above 1.
    double D = 2.2;
    for (int j = 1; j <= n - 1; ++j) {
        double tail = 0.0;
        for (int i = j; i <= n - 1; ++i) tail += sigma[static_cast<size_t>(i - 1)];
        // need tail + (D-1) - (n-1-j) > 1.2
        D = std::max(D, 2.2 + (n - 1 - j) - tail);
    }
    if (S_plus < D) return std::numeric_limits<double>::infinity();

    std::vector<double> sig_out(sigma.begin(), sigma.end() - 1);
    sig_out.back() += D - 1.0;
    const auto eps_out = chain_epsilons(sig_out);
    double chain = 1.0;
    for (double e : eps_out) {
        if (!(e > 1.0)) return std::numeric_limits<double>::infinity();
        chain *= 1.0 + 1.0 / (e - 1.0);
    }

    const double ratio_cup = std::max(1.0, cup2 / eps0p);
    return std::pow(ratio_cup, pminus_max) * std::pow(eps0p, -D) *
           std::pow(eps0p + rho, -(S_plus - D)) * chain / (D - 1.0);
}

} // namespace detail

/// Certified bound for the two remainders dropped by the order-(K, M)
/// reduction of the last variable.
inline double reduction_remainder_bound(const BlockedSeriesSpec& spec, int K, long M) {
    const int n = spec.n();
    const auto& last = spec.blocks.back();
    const int q_n = static_cast<int>(last.size());
    const ComplexFloat gn = spec.gamma.back();

    std::vector<ComplexFloat> s(static_cast<size_t>(q_n));
    std::vector<ComplexFloat> u_shift(static_cast<size_t>(q_n));
    double sigma_n = 0.0, im_mass = 0.0;
    for (int i = 0; i < q_n; ++i) {
        s[static_cast<size_t>(i)] = last[static_cast<size_t>(i)].exponent;
        u_shift[static_cast<size_t>(i)] =
            last[static_cast<size_t>(i)].shift + gn * static_cast<double>(M);
        sigma_n += last[static_cast<size_t>(i)].exponent.real();
        im_mass += std::abs(last[static_cast<size_t>(i)].exponent.imag());
    }
    ComplexFloat c(0.0, 0.0);
    for (auto& u : u_shift) c += u;
    c /= static_cast<double>(q_n);

    double rho = u_shift[0].real();
    double radius = 0.0, umax = 0.0;
    for (auto& u : u_shift) {
        rho = std::min(rho, u.real());
        radius = std::max(radius, std::abs(u - c));
        umax = std::max(umax, std::abs(u));
    }
    if (rho < 0.0) return std::numeric_limits<double>::infinity(); // M too small

    double pminus_max = 0.0;
    for (auto& si : s) pminus_max += std::max(-si.real(), 0.0);

    double gmax = 0.0;
    for (auto& g : spec.gamma) gmax = std::max(gmax, std::abs(g));

    const double S_plus = sigma_n + K + 1.0;
    const double E = detail::outer_envelope(spec) * std::exp(0.5 * M_PI * im_mass);

    // Taylor remainder around the centroid (exactly zero for one factor).
    double r1 = 0.0;
    if (radius > 0.0) {
        std::vector<double> rad(static_cast<size_t>(q_n));
        for (int i = 0; i < q_n; ++i) rad[static_cast<size_t>(i)] = std::abs(u_shift[static_cast<size_t>(i)] - c);
        const double dp = detail::grouped_abs_coefficient(s, rad, K + 1);
        const double cup2 = gmax + std::abs(c) + radius;
        r1 = E * dp * detail::reduction_chain_factor(spec, S_plus, rho, cup2, pminus_max);
    }

    // Euler-Maclaurin tail with the periodic Bernoulli envelope.
    const std::vector<double> ones(static_cast<size_t>(q_n), 1.0);
    const double dp2 = detail::grouped_abs_coefficient(s, ones, K + 1);
    const double cup2b = gmax + umax;
    const double r2 = E * detail::periodic_bernoulli_sup(K + 2) * std::pow(std::abs(gn), K + 1) *
                      dp2 * detail::reduction_chain_factor(spec, S_plus, rho, cup2b, pminus_max);
    return r1 + r2;
}

/// One Euler-Maclaurin reduction step: expresses an n-dimensional blocked
/// series as finitely many (n-1)-dimensional children plus a bounded
/// remainder.  K and M grow from the configured values until the bound
/// fits `budget`.
inline Reduction reduce_once(const BlockedSeriesSpec& spec, const ContinuationConfig& cfg,
                             double budget) {
    const int n = spec.n();
    if (n < 2) throw DomainError("reduce_once: need dimension >= 2");
    spec.validate();

    const auto& last = spec.blocks.back();
    const int q_n = static_cast<int>(last.size());
    if (spec.total_q() > cfg.q_cap)
        throw CapacityError("reduce_once: total block-size cap exceeded");

    int K = cfg.K;
    long M = cfg.M;
    double bound = reduction_remainder_bound(spec, K, M);
    while (!(bound <= budget)) {
        if (K + 4 <= cfg.K_max) {
            K += 4;
        } else if (M * 2 <= cfg.M_max) {
            K = cfg.K;
            M *= 2;
        } else {
            throw ToleranceError("reduce_once: remainder bound stuck above budget (K=" +
                                 std::to_string(K) + ", M=" + std::to_string(M) + ")");
        }
        bound = reduction_remainder_bound(spec, K, M);
    }

    const ComplexFloat gn = spec.gamma.back();
    std::vector<ComplexFloat> s(static_cast<size_t>(q_n));
    std::vector<ComplexFloat> u_shift(static_cast<size_t>(q_n));
    ComplexFloat S_n(0.0, 0.0);
    for (int i = 0; i < q_n; ++i) {
        s[static_cast<size_t>(i)] = last[static_cast<size_t>(i)].exponent;
        u_shift[static_cast<size_t>(i)] = last[static_cast<size_t>(i)].shift + gn * static_cast<double>(M);
        S_n += last[static_cast<size_t>(i)].exponent;
    }
    ComplexFloat c(0.0, 0.0);
    for (auto& u : u_shift) c += u;
    c /= static_cast<double>(q_n);

    auto base_child = [&]() {
        BlockedSeriesSpec child;
        child.blocks.assign(spec.blocks.begin(), spec.blocks.end() - 1);
        child.gamma.assign(spec.gamma.begin(), spec.gamma.end() - 1);
        return child;
    };

    Reduction red;
    red.remainder_bound = bound;
    red.K_used = K;
    red.M_used = M;

    // Direct prefix: lattice values 0..M-1 of the reduced variable.
    for (long m = 0; m < M; ++m) {
        BlockedSeriesSpec child = base_child();
        for (int i = 0; i < q_n; ++i)
            child.blocks.back().push_back(
                {last[static_cast<size_t>(i)].exponent,
                 last[static_cast<size_t>(i)].shift + gn * static_cast<double>(m)});
        red.terms.push_back({ComplexFloat(1.0, 0.0), std::move(child)});
    }

    // Integral family, Taylor-grouped by total order around the centroid.
    std::vector<ComplexFloat> w(static_cast<size_t>(q_n));
    for (int i = 0; i < q_n; ++i) w[static_cast<size_t>(i)] = u_shift[static_cast<size_t>(i)] - c;
    const auto g_coeffs = detail::grouped_taylor_coefficients(s, w, K);
    for (int k = 0; k <= K; ++k) {
        const ComplexFloat gk = g_coeffs[static_cast<size_t>(k)];
        if (std::abs(gk) == 0.0) continue;
        const ComplexFloat den = S_n + ComplexFloat(static_cast<double>(k) - 1.0, 0.0);
        if (std::abs(den) < cfg.eps_sing)
            throw PoleError("reduce_once: linear factor sum(s)+k-1 within eps_sing of zero (k=" +
                                std::to_string(k) + ")",
                            0);
        BlockedSeriesSpec child = base_child();
        child.blocks.back().push_back({den, c});
        red.terms.push_back({gk / (gn * den), std::move(child)});
    }

    // Derivative family with modified Bernoulli weights.
    std::vector<int> alpha(static_cast<size_t>(q_n), 0);
    std::function<void(int, int)> emit = [&](int pos, int total) {
        if (pos == q_n) {
            const int k = total;
            if (k >= 2 && k % 2 == 0) return; // B~_{k+1} = 0
            ComplexFloat coef =
                ScalarTraits<ComplexFloat>::from_rational(bernoulli_number_modified(static_cast<unsigned>(k) + 1)) *
                pow_scalar(gn, k) / ComplexFloat(static_cast<double>(k) + 1.0, 0.0);
            if (k % 2 != 0) coef = -coef;
            for (int i = 0; i < q_n; ++i)
                coef *= detail::binomial_cf(-s[static_cast<size_t>(i)],
                                            static_cast<unsigned>(alpha[static_cast<size_t>(i)]));
            if (std::abs(coef) == 0.0) return;
            BlockedSeriesSpec child = base_child();
            for (int i = 0; i < q_n; ++i)
                child.blocks.back().push_back(
                    {s[static_cast<size_t>(i)] + ComplexFloat(alpha[static_cast<size_t>(i)], 0.0),
                     u_shift[static_cast<size_t>(i)]});
            red.terms.push_back({coef, std::move(child)});
            return;
        }
        for (int a = 0; total + a <= K; ++a) {
            alpha[static_cast<size_t>(pos)] = a;
            emit(pos + 1, total + a);
        }
        alpha[static_cast<size_t>(pos)] = 0;
    };
    emit(0, 0);
    return red;
}

inline Reduction reduce_once(const BlockedSeriesSpec& spec, const ContinuationConfig& cfg) {
    return reduce_once(spec, cfg, cfg.tolerance / 2.0);
}

/// Certified bound for the one-dimensional series remainder beyond the
/// direct cutoff, at expansion order K.
inline double base_remainder_bound(const std::vector<BlockFactor>& factors, ComplexFloat gamma,
                                   int K, long M) {
    const int q = static_cast<int>(factors.size());
    double umax = 0.0, sigma = 0.0, im_mass = 0.0;
    for (auto& f : factors) {
        umax = std::max(umax, std::abs(f.shift));
        sigma += f.exponent.real();
        im_mass += std::abs(f.exponent.imag());
    }
    const double re_g = gamma.real();
    const double maxr = umax / (re_g * static_cast<double>(M + 1));
    if (maxr > 0.25) return std::numeric_limits<double>::infinity(); // M too small
    const double a_low = re_g * (1.0 - maxr);
    const double cup = std::abs(gamma) + umax;

    std::vector<ComplexFloat> s(static_cast<size_t>(q));
    std::vector<double> r(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
        s[static_cast<size_t>(i)] = factors[static_cast<size_t>(i)].exponent;
        r[static_cast<size_t>(i)] = std::abs(factors[static_cast<size_t>(i)].shift);
    }
    // Per-factor envelope is folded into the convolution by scaling each
    // series with the worst constant for its exponent range.
    double envelope = std::exp(0.5 * M_PI * im_mass);
    for (int i = 0; i < q; ++i) {
        const double re = s[static_cast<size_t>(i)].real();
        // exponent of factor i in the remainder is Re s_i + alpha_i >= min(Re s_i, 0)
        envelope *= (re >= 0.0) ? 1.0 : std::pow(cup, -re);
    }
    // a_low^{-(Re s_i + alpha_i)} for the nonnegative part: bound by
    // a_low^{-max(sigma,0)} * a_low^{-(K+1)} pulled out of the convolution.
    const double dp = detail::grouped_abs_coefficient(s, r, K + 1);
    const double alow_pow =
        std::pow(a_low, -std::max(sigma, 0.0)) * std::pow(a_low, -(K + 1.0));
    const double p = sigma + K + 1.0;
    if (!(p > 1.0)) return std::numeric_limits<double>::infinity();
    return envelope * dp * alow_pow * detail::tail_sum_bound(static_cast<double>(M + 1), p);
}

/// One-dimensional continuation: direct terms, then grouped Taylor
/// coefficients against Hurwitz zetas, plus a certified tail bound.
inline ComplexFloat base_case_eval(const std::vector<BlockFactor>& factors, ComplexFloat gamma,
                                   const ContinuationConfig& cfg, double tol) {
    if (factors.empty()) throw DomainError("base_case_eval: no factors");
    if (!(gamma.real() > 0.0)) throw DomainError("base_case_eval: Re gamma must be positive");
    for (auto& f : factors)
        if (!(f.shift.real() + gamma.real() > 0.0))
            throw DomainError("base_case_eval: Re(u + gamma) must be positive");

    double umax = 0.0;
    for (auto& f : factors) umax = std::max(umax, std::abs(f.shift));
    long M = std::max<long>(cfg.M, static_cast<long>(std::ceil(4.0 * umax / gamma.real())) + 1);

    int K = cfg.K;
    double bound = base_remainder_bound(factors, gamma, K, M);
    while (!(bound <= tol / 2.0)) {
        if (K + 4 <= cfg.K_max) {
            K += 4;
        } else if (M * 2 <= (1L << 22)) {
            K = cfg.K;
            M *= 2;
        } else {
            throw ToleranceError("base_case_eval: remainder bound stuck above budget");
        }
        bound = base_remainder_bound(factors, gamma, K, M);
    }

    // Direct part m = 1..M.
    ComplexFloat direct(0.0, 0.0);
    for (long m = 1; m <= M; ++m) {
        ComplexFloat term(1.0, 0.0);
        for (auto& f : factors)
            term *= std::pow(gamma * static_cast<double>(m) + f.shift, -f.exponent);
        direct += term;
    }

    // Tail: sum_{m > M} prod (gamma m + u)^(-s) via the u-expansion.
    std::vector<ComplexFloat> s(factors.size()), u(factors.size());
    ComplexFloat S(0.0, 0.0);
    for (size_t i = 0; i < factors.size(); ++i) {
        s[i] = factors[i].exponent;
        u[i] = factors[i].shift;
        S += factors[i].exponent;
    }
    const auto g_coeffs = detail::grouped_taylor_coefficients(s, u, K);

    std::vector<ComplexFloat> weights(g_coeffs.size());
    double weight_mass = 0.0;
    for (int k = 0; k <= K; ++k) {
        const ComplexFloat z = S + ComplexFloat(static_cast<double>(k), 0.0);
        if (std::abs(g_coeffs[static_cast<size_t>(k)]) == 0.0) {
            weights[static_cast<size_t>(k)] = ComplexFloat(0.0, 0.0);
            continue;
        }
        if (std::abs(z - ComplexFloat(1.0, 0.0)) < cfg.eps_sing)
            throw PoleError("base_case_eval: exponent sum within eps_sing of the pole at 1 (k=" +
                                std::to_string(k) + ")",
                            1);
        weights[static_cast<size_t>(k)] = g_coeffs[static_cast<size_t>(k)] * std::pow(gamma, -z);
        weight_mass += std::abs(weights[static_cast<size_t>(k)]);
    }

    ComplexFloat tail(0.0, 0.0);
    for (int k = 0; k <= K; ++k) {
        const ComplexFloat wk = weights[static_cast<size_t>(k)];
        if (std::abs(wk) == 0.0) continue;
        const ComplexFloat z = S + ComplexFloat(static_cast<double>(k), 0.0);
        tail += wk * hurwitz_zeta(z, static_cast<double>(M + 1), tol / 2.0 / weight_mass, cfg.eps_sing);
    }

    const ComplexFloat value = direct + tail;
    ensure_finite(value, "base_case_eval");
    return value;
}

namespace detail {

inline ComplexFloat continue_eval_impl(const BlockedSeriesSpec& spec, const ContinuationConfig& cfg,
                                       double tol) {
    if (spec.n() == 1) return base_case_eval(spec.blocks[0], spec.gamma[0], cfg, tol);
    const Reduction red = reduce_once(spec, cfg, tol / 2.0);
    double coef_mass = 0.0;
    for (auto& term : red.terms) coef_mass += std::abs(term.coefficient);
    ComplexFloat value(0.0, 0.0);
    // Error mass splits evenly over coefficient weight: sum |c_i| tol_i = tol/2.
    const double child_tol = tol / 2.0 / coef_mass;
    for (auto& term : red.terms) {
        if (std::abs(term.coefficient) == 0.0) continue;
        value += term.coefficient * continue_eval_impl(term.child, cfg, child_tol);
    }
    ensure_finite(value, "continue_eval");
    return value;
}

} // namespace detail

/// Evaluates the blocked series anywhere off the polar set, by recursive
/// reduction to dimension one.  Fails loudly when the accumulated
/// remainder bounds cannot meet cfg.tolerance.
inline ComplexFloat continue_eval(const BlockedSeriesSpec& spec, const ContinuationConfig& cfg) {
    spec.validate();
    cfg.validate(spec.n());
    return detail::continue_eval_impl(spec, cfg, cfg.tolerance);
}

/// Blocked view (all block sizes 1) of a special-value query at s = -N + t theta.
inline BlockedSeriesSpec blocked_spec_at(const SpecialValueQuery<ComplexFloat>& q, ComplexFloat t) {
    BlockedSeriesSpec spec;
    const int n = q.dimension();
    spec.blocks.resize(static_cast<size_t>(n));
    spec.gamma = q.gamma;
    for (int j = 0; j < n; ++j) {
        const ComplexFloat s = -ComplexFloat(static_cast<double>(q.N[j]), 0.0) +
                               t * q.theta[static_cast<size_t>(j)];
        spec.blocks[static_cast<size_t>(j)].push_back({s, q.b[static_cast<size_t>(j)]});
    }
    return spec;
}

struct LaurentExpansion {
    int order = 0;                       // n
    std::vector<ComplexFloat> z;         // z[k] = coefficient of t^{-k}, k = 0..n
    double residual = 0.0;               // max |z_{-(n+1)}|, |z_{-(n+2)}| (aliasing probe)
    double radius = 0.0;
    int nodes = 0;

    ComplexFloat z0() const { return z[0]; }
};

/// Disk radius of the G-function for a float direction.
inline double contour_delta(const std::vector<ComplexFloat>& theta) {
    double best = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(theta.size());
    for (int j = 1; j <= n; ++j) {
        ComplexFloat tail(0.0, 0.0);
        for (int i = j - 1; i < n; ++i) tail += theta[static_cast<size_t>(i)];
        best = std::min(best, 1.0 / (1.0 + std::abs(theta[static_cast<size_t>(j - 1)])));
        best = std::min(best, 1.0 / std::abs(tail));
    }
    return best / 2.0;
}

/// Laurent coefficients of t -> Z_n(-N + t theta; b; gamma) at t = 0 by
/// discrete contour sums on |t| = r.  The pole order is at most n, so the
/// two next coefficients report the aliasing floor.
inline LaurentExpansion laurent_along_direction(const SpecialValueQuery<ComplexFloat>& q,
                                                const ContinuationConfig& cfg) {
    q.validate();
    const int n = q.dimension();
    cfg.validate(n);

    const double delta = contour_delta(q.theta);
    const double r = (cfg.contour_radius > 0.0) ? cfg.contour_radius : std::min(0.25, delta / 2.0);
    if (!(r > 0.0 && r < std::min(0.5, delta)))
        throw DomainError("laurent_along_direction: contour radius outside (0, min(1/2, delta))");
    const int P = cfg.contour_nodes;

    std::vector<ComplexFloat> samples(static_cast<size_t>(P));
    for (int p = 0; p < P; ++p) {
        const double phase = 2.0 * M_PI * static_cast<double>(p) / static_cast<double>(P);
        const ComplexFloat t = r * ComplexFloat(std::cos(phase), std::sin(phase));
        samples[static_cast<size_t>(p)] =
            detail::continue_eval_impl(blocked_spec_at(q, t), cfg, cfg.tolerance / 2.0);
    }

    auto hat = [&](int k) {
        ComplexFloat acc(0.0, 0.0);
        for (int p = 0; p < P; ++p) {
            const double phase = 2.0 * M_PI * static_cast<double>(p) * static_cast<double>(k) /
                                 static_cast<double>(P);
            const ComplexFloat tk = std::pow(r, k) * ComplexFloat(std::cos(phase), std::sin(phase));
            acc += samples[static_cast<size_t>(p)] * tk;
        }
        return acc / static_cast<double>(P);
    };

    LaurentExpansion out;
    out.order = n;
    out.radius = r;
    out.nodes = P;
    for (int k = 0; k <= n; ++k) out.z.push_back(hat(k));
    out.residual = std::max(std::abs(hat(n + 1)), std::abs(hat(n + 2)));
    if (out.residual > cfg.contour_residual_tol)
        throw ToleranceError("laurent_along_direction: aliasing residual above tolerance");
    return out;
}

} // namespace mzv
