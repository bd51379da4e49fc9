#pragma once

/**
 * @file index_combinatorics.hpp
 * @brief The index sets K, L and J(I, N), and the G-function whose value
 *        at the origin drives every contributing term.
 *
 * A multi-index alpha contributes to the directional limit exactly when
 * |K(N, alpha)| = |L(N, alpha)|; all such alpha live in the box
 * {0,...,|N|+n}^n, so one lexicographic scan of that box finds them all.
 */

#include <cmath>
#include <optional>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

/// K(N, alpha) = { j : (n+1-j) + sum_{i>=j} N_i = sum_{i>=j} alpha_i }.
inline IndexSubset compute_K(const MultiIndex& N, const MultiIndex& alpha) {
    if (N.size() != alpha.size()) throw DomainError("compute_K: dimension mismatch");
    const int n = N.size();
    std::vector<int> members;
    for (int j = 1; j <= n; ++j)
        if ((n + 1 - j) + N.tail_sum(j) == alpha.tail_sum(j)) members.push_back(j);
    return IndexSubset(n, std::move(members));
}

/// L(N, alpha) = { j : alpha_j >= N_j + 1 }.
inline IndexSubset compute_L(const MultiIndex& N, const MultiIndex& alpha) {
    if (N.size() != alpha.size()) throw DomainError("compute_L: dimension mismatch");
    const int n = N.size();
    std::vector<int> members;
    for (int j = 1; j <= n; ++j)
        if (alpha[j - 1] >= N[j - 1] + 1) members.push_back(j);
    return IndexSubset(n, std::move(members));
}

struct ContributingAlpha {
    MultiIndex alpha;
    IndexSubset K;
    IndexSubset L;
};

namespace detail {

inline void check_enumeration_capacity(const MultiIndex& N) {
    const int n = N.size();
    if (n < 1) throw DomainError("enumeration: empty index");
    if (n > 6) throw CapacityError("enumeration: dimension above 6");
    const double box = std::pow(static_cast<double>(N.sum() + n + 1), n);
    if (box > 1e8) throw CapacityError("enumeration: box size above 1e8");
}

} // namespace detail

/// One pass over the box {0,...,|N|+n}^n, keeping the alpha with
/// |K| = |L|.  Output is lexicographic, so downstream sums are
/// reproducible bit for bit.
inline std::vector<ContributingAlpha> enumerate_contributing_alphas(const MultiIndex& N) {
    detail::check_enumeration_capacity(N);
    const int n = N.size();
    const int cap = static_cast<int>(N.sum()) + n;

    std::vector<ContributingAlpha> out;
    MultiIndex alpha = MultiIndex::zeros(n);
    for (;;) {
        IndexSubset K = compute_K(N, alpha);
        IndexSubset L = compute_L(N, alpha);
        if (K.size() == L.size())
            out.push_back({alpha, std::move(K), std::move(L)});
        int pos = n - 1;
        while (pos >= 0 && alpha[pos] == cap) {
            alpha[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++alpha[pos];
    }
    return out;
}

/// J(I, N): the contributing alpha whose K equals I.
inline std::vector<MultiIndex> enumerate_J(const IndexSubset& I, const MultiIndex& N) {
    std::vector<MultiIndex> out;
    for (auto& c : enumerate_contributing_alphas(N))
        if (c.K == I) out.push_back(c.alpha);
    return out;
}

/// Input of the G-function limit: the direction theta must have all tail
/// sums nonzero.
template <class T>
struct GLimitInput {
    MultiIndex N;
    MultiIndex alpha;
    std::vector<T> theta;

    GLimitInput(MultiIndex N_, MultiIndex alpha_, std::vector<T> theta_)
        : N(std::move(N_)), alpha(std::move(alpha_)), theta(std::move(theta_)) {
        const int n = N.size();
        if (alpha.size() != n || static_cast<int>(theta.size()) != n)
            throw DomainError("GLimitInput: dimension mismatch");
        for (int j = 1; j <= n; ++j)
            if (ScalarTraits<T>::is_zero(theta_tail(j)))
                throw DomainError("GLimitInput: zero theta tail sum at j=" + std::to_string(j));
    }

    T theta_tail(int j) const {
        T s = ScalarTraits<T>::zero();
        for (int i = j - 1; i < static_cast<int>(theta.size()); ++i) s += theta[static_cast<size_t>(i)];
        return s;
    }
};

/// G(0) by Lemma-style closed evaluation.  Empty when |K| != |L| (the
/// hypothesis of the closed form; the limit is 0 when |L| > |K|).
template <class T>
std::optional<T> g_at_zero(const GLimitInput<T>& in) {
    const int n = in.N.size();
    const IndexSubset K = compute_K(in.N, in.alpha);
    const IndexSubset L = compute_L(in.N, in.alpha);
    if (K.size() != L.size()) return std::nullopt;
    const int q = K.size();

    T value = ScalarTraits<T>::from_int(((n - q) % 2 == 0) ? 1 : -1);
    for (int j = 1; j <= n; ++j) {
        const int Nj = in.N[j - 1];
        const int aj = in.alpha[j - 1];
        if (L.contains(j)) {
            // alpha_j >= N_j + 1, so the denominator alpha_j * C(alpha_j - 1, N_j) > 0.
            T num = in.theta[static_cast<size_t>(j - 1)];
            if ((aj - Nj) % 2 != 0) num = -num;
            const Rational den = Rational(aj) * binomial_integer(aj - 1, static_cast<unsigned>(Nj));
            value *= num * ScalarTraits<T>::from_rational(Rational(1) / den);
        } else {
            value *= ScalarTraits<T>::from_rational(binomial_integer(Nj, static_cast<unsigned>(aj)));
        }
        if (!K.contains(j)) {
            const long d = (n + 1 - j) + in.N.tail_sum(j) - in.alpha.tail_sum(j);
            // d != 0 precisely because j is outside K.
            value *= in.theta_tail(j) * ScalarTraits<T>::from_rational(rational(1, d));
        }
    }
    return value;
}

namespace detail {

/// Lower bound for the disk radius delta of the G-function, built from
/// magnitude upper bounds so it is computable in Q.
template <class T>
auto delta_lower_bound(const GLimitInput<T>& in) {
    using Mag = decltype(ScalarTraits<T>::magnitude_bound(in.theta[0]));
    Mag best(0);
    bool first = true;
    const int n = in.N.size();
    for (int j = 1; j <= n; ++j) {
        const Mag a = Mag(1) / (Mag(1) + ScalarTraits<T>::magnitude_bound(in.theta[static_cast<size_t>(j - 1)]));
        const Mag b = Mag(1) / ScalarTraits<T>::magnitude_bound(in.theta_tail(j));
        const Mag m = a < b ? a : b;
        if (first || m < best) best = m;
        first = false;
    }
    return best / Mag(2);
}

} // namespace detail

/// Direct evaluation of the G quotient at a point t != 0 inside the disk.
/// Testing aid: g_sample(t) -> g_at_zero as t -> 0.
template <class T>
T g_sample(const GLimitInput<T>& in, const T& t) {
    if (ScalarTraits<T>::is_zero(t)) throw DomainError("g_sample: t = 0");
    if (!(ScalarTraits<T>::magnitude_bound(t) < detail::delta_lower_bound(in)))
        throw DomainError("g_sample: |t| not provably below delta");

    const int n = in.N.size();
    T num = ScalarTraits<T>::one();
    for (int j = 0; j < n; ++j) {
        const T z = ScalarTraits<T>::from_int(in.N[j]) - t * in.theta[static_cast<size_t>(j)];
        num *= binomial_scalar(z, static_cast<unsigned>(in.alpha[j]));
    }
    T den = ScalarTraits<T>::one();
    for (int j = 1; j <= n; ++j) {
        const long d = in.N.tail_sum(j) + (n + 1 - j) - in.alpha.tail_sum(j);
        const T factor = t - ScalarTraits<T>::from_int(d) / in.theta_tail(j);
        if (ScalarTraits<T>::is_zero(factor))
            throw DomainError("g_sample: denominator factor vanishes at this t");
        den *= factor;
    }
    return num / den;
}

} // namespace mzv
