#pragma once

/**
 * @file closed_form.hpp
 * @brief Closed evaluation of the directional values zeta_n^theta(-N; gamma; b),
 *        the A-coefficients, and the closed form of the auxiliary integral Y_n.
 *
 * The value is the finite triple sum over contributing multi-indices
 * (grouped by I = K), the coefficient table of b, and Bernoulli factors.
 * A second, independent route goes through the Raabe transfer: expand the
 * limit polynomial psi(u), shift by the lattice coordinates, lift monomials
 * to Bernoulli polynomials and read off the value at the origin.  Exact
 * mode must make both routes agree to the last bit.
 */

#include <string>
#include <utility>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/index_combinatorics.hpp"
#include "mzv/polynomial.hpp"
#include "mzv/raabe.hpp"

namespace mzv {

template <class T>
struct SpecialValueQuery {
    MultiIndex N;
    std::vector<T> gamma;
    std::vector<T> b;
    std::vector<T> theta;
    /// Skip the Re-part hypothesis checks (analytic continuation extends
    /// validity; the report is then marked unchecked).
    bool force_domain = false;

    int dimension() const { return N.size(); }

    T theta_tail(int j) const {
        T s = ScalarTraits<T>::zero();
        for (int i = j - 1; i < static_cast<int>(theta.size()); ++i) s += theta[static_cast<size_t>(i)];
        return s;
    }

    void validate() const {
        const int n = dimension();
        if (n < 1) throw DomainError("query: empty N");
        if (static_cast<int>(gamma.size()) != n || static_cast<int>(b.size()) != n ||
            static_cast<int>(theta.size()) != n)
            throw DomainError("query: dimension mismatch across N, gamma, b, theta");
        for (int j = 1; j <= n; ++j)
            if (ScalarTraits<T>::is_zero(theta_tail(j)))
                throw DomainError("query: zero theta tail sum at j=" + std::to_string(j));
        if (force_domain) return;
        for (int j = 0; j < n; ++j) {
            if (!(ScalarTraits<T>::real_part(gamma[static_cast<size_t>(j)]) > 0))
                throw DomainError("query: Re(gamma_" + std::to_string(j + 1) + ") must be positive");
            if (!(ScalarTraits<T>::real_part(b[static_cast<size_t>(j)] + gamma[0]) > 0))
                throw DomainError("query: Re(b_" + std::to_string(j + 1) + " + gamma_1) must be positive");
        }
    }
};

template <class T>
struct EvaluationTerm {
    IndexSubset I;
    MultiIndex alpha;
    MultiIndex k;
    T value;
};

template <class T>
struct EvaluationReport {
    SpecialValueQuery<T> query;
    T value;
    std::vector<EvaluationTerm<T>> terms;
    bool domain_checked = true;
};

/// A(N, I, alpha, theta, gamma): the coefficient of u^alpha in the limit
/// polynomial of Y_n along theta.  Requires alpha in J(I, N).
template <class T>
T a_coefficient(const MultiIndex& N, const IndexSubset& I, const MultiIndex& alpha,
                const std::vector<T>& theta, const std::vector<T>& gamma) {
    const int n = N.size();
    if (alpha.size() != n || static_cast<int>(theta.size()) != n ||
        static_cast<int>(gamma.size()) != n || I.n != n)
        throw DomainError("a_coefficient: dimension mismatch");
    const IndexSubset K = compute_K(N, alpha);
    const IndexSubset L = compute_L(N, alpha);
    if (!(K == I) || L.size() != I.size())
        throw DomainError("a_coefficient: alpha is not in J(I, N)");

    auto theta_tail = [&](int j) {
        T s = ScalarTraits<T>::zero();
        for (int i = j - 1; i < n; ++i) s += theta[static_cast<size_t>(i)];
        return s;
    };

    long sign_exp = n - I.size();
    for (int j : L.members) sign_exp += alpha[j - 1] - N[j - 1];
    T value = ScalarTraits<T>::from_int((sign_exp % 2 == 0) ? 1 : -1);

    for (int j = 1; j <= n; ++j) {
        if (L.contains(j)) {
            const Rational den =
                Rational(alpha[j - 1]) * binomial_integer(alpha[j - 1] - 1, static_cast<unsigned>(N[j - 1]));
            value *= theta[static_cast<size_t>(j - 1)] * ScalarTraits<T>::from_rational(Rational(1) / den);
        } else {
            value *= ScalarTraits<T>::from_rational(
                binomial_integer(N[j - 1], static_cast<unsigned>(alpha[j - 1])));
        }
        if (!I.contains(j)) {
            // j outside K = I makes this tail difference nonzero by definition.
            const long d = (n + 1 - j) + N.tail_sum(j) - alpha.tail_sum(j);
            value *= ScalarTraits<T>::from_rational(rational(1, d));
        } else {
            const T tail = theta_tail(j);
            if (ScalarTraits<T>::is_zero(tail))
                throw DomainError("a_coefficient: zero theta tail sum at j=" + std::to_string(j));
            value = value / tail;
        }
    }

    // gamma_1^{|N|-|alpha|+n} / (gamma_1 ... gamma_n)
    value *= pow_scalar(gamma[0], N.sum() - alpha.sum() + n);
    for (int j = 0; j < n; ++j) value = value / gamma[static_cast<size_t>(j)];
    return value;
}

/// The main closed formula: the directional value as a finite sum of
/// A-coefficient times c_n(b; alpha, k), gamma powers and Bernoulli numbers.
template <class T>
EvaluationReport<T> theorem1_value(const SpecialValueQuery<T>& q) {
    q.validate();
    const int n = q.dimension();

    EvaluationReport<T> report{q, ScalarTraits<T>::zero(), {}, !q.force_domain};
    for (const auto& contrib : enumerate_contributing_alphas(q.N)) {
        const T A = a_coefficient(q.N, contrib.K, contrib.alpha, q.theta, q.gamma);
        const CoefficientTable<T> table = expand_c(contrib.alpha, q.b);
        for (const auto& [k, c] : table.expansion.terms()) {
            T term = A * c;
            for (int j = 0; j < n; ++j) {
                term *= pow_scalar(q.gamma[static_cast<size_t>(j)], k[j]);
                term *= ScalarTraits<T>::from_rational(bernoulli_number(static_cast<unsigned>(k[j])));
            }
            if (ScalarTraits<T>::is_zero(term)) continue;
            report.terms.push_back({contrib.K, contrib.alpha, k, term});
            report.value += term;
        }
    }
    return report;
}

template <class T>
struct YThetaResult {
    MultivariatePolynomial<T> psi;
    T value;
};

/// The limit polynomial psi(u) of Y_n along theta and its value at u.
template <class T>
YThetaResult<T> y_theta_value(const MultiIndex& N, const std::vector<T>& u,
                              const std::vector<T>& gamma, const std::vector<T>& theta) {
    const int n = N.size();
    if (static_cast<int>(u.size()) != n || static_cast<int>(gamma.size()) != n ||
        static_cast<int>(theta.size()) != n)
        throw DomainError("y_theta_value: dimension mismatch");
    for (int j = 0; j < n; ++j) {
        if (!(ScalarTraits<T>::real_part(gamma[static_cast<size_t>(j)]) > 0))
            throw DomainError("y_theta_value: Re(gamma) must be positive");
        if (!(ScalarTraits<T>::real_part(u[static_cast<size_t>(j)] + gamma[0]) > 0))
            throw DomainError("y_theta_value: Re(u_j + gamma_1) must be positive");
    }

    MultivariatePolynomial<T> psi(n);
    for (const auto& contrib : enumerate_contributing_alphas(N))
        psi.add_term(contrib.alpha, a_coefficient(N, contrib.K, contrib.alpha, theta, gamma));
    T value = psi.evaluate(u);
    return {std::move(psi), std::move(value)};
}

template <class T>
struct YClosedFormQuery {
    std::vector<T> s;
    std::vector<T> gamma;
};

/// Lemma-closed form of the u = 0 integral:
///   Y_n(s; gamma) = gamma_1^{-|s|+n} / ((gamma_1...gamma_n)
///                   prod_j (s_j+...+s_n + j - n - 1)).
template <class T>
T y_closed_form(const YClosedFormQuery<T>& q) {
    const int n = static_cast<int>(q.s.size());
    if (n < 1 || static_cast<int>(q.gamma.size()) != n)
        throw DomainError("y_closed_form: dimension mismatch");

    T denom = ScalarTraits<T>::one();
    for (int j = 1; j <= n; ++j) {
        T factor = ScalarTraits<T>::from_int(j - n - 1);
        for (int i = j - 1; i < n; ++i) factor += q.s[static_cast<size_t>(i)];
        if (ScalarTraits<T>::is_zero(factor))
            throw PoleError("y_closed_form: polar locus s_j+...+s_n = n+1-j at j=" + std::to_string(j), j);
        denom *= factor;
    }
    for (int j = 0; j < n; ++j) denom *= q.gamma[static_cast<size_t>(j)];

    T total_s = ScalarTraits<T>::zero();
    for (auto& sj : q.s) total_s += sj;

    T power;
    if constexpr (ScalarTraits<T>::exact) {
        // gamma_1^(n - |s|) stays in Q(i) only for integer |s|.
        if (!total_s.is_real() || total_s.re.get_den() != 1)
            throw DomainError("y_closed_form: exact mode needs integer |s|; use float mode");
        power = pow_scalar(q.gamma[0], n - total_s.re.get_num().get_si());
    } else {
        power = std::pow(q.gamma[0], ScalarTraits<T>::from_int(n) - total_s);
    }
    return power / denom;
}

/// The second route to the same value: psi(u), the lattice shift
/// u_j + gamma_1 a_1 + ... + gamma_j a_j, the Bernoulli lift, and the
/// evaluation at a = 0.
template <class T>
T theorem1_via_raabe_identity(const SpecialValueQuery<T>& q) {
    q.validate();
    const int n = q.dimension();

    MultivariatePolynomial<T> f(n);
    for (const auto& contrib : enumerate_contributing_alphas(q.N)) {
        const T A = a_coefficient(q.N, contrib.K, contrib.alpha, q.theta, q.gamma);
        CoefficientTable<T> shifted = expand_c_tilde(contrib.alpha, q.b, q.gamma);
        f += shifted.expansion * A;
    }
    const MultivariatePolynomial<T> g = bernoulli_lift(f);
    const std::vector<T> origin(static_cast<size_t>(n), ScalarTraits<T>::zero());
    return g.evaluate(origin);
}

} // namespace mzv
