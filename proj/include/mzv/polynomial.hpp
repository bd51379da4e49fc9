#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over either scalar field, plus
 *        the coefficient expansions c_n and c~_n.
 *
 * Terms live in a lexicographically ordered map, so iteration order (and
 * with it every float-mode summation) is deterministic.  Multiplication
 * is plain convolution of term maps; degrees here are desk scale.
 */

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/scalar.hpp"

namespace mzv {

template <class T>
class MultivariatePolynomial {
public:
    using TermMap = std::map<MultiIndex, T>;

    explicit MultivariatePolynomial(int dim) : dim_(dim) {
        if (dim < 1) throw DomainError("MultivariatePolynomial: dimension must be >= 1");
    }

    static MultivariatePolynomial constant(int dim, const T& c) {
        MultivariatePolynomial p(dim);
        p.add_term(MultiIndex::zeros(dim), c);
        return p;
    }

    static MultivariatePolynomial monomial(int dim, const MultiIndex& k, const T& c) {
        MultivariatePolynomial p(dim);
        p.add_term(k, c);
        return p;
    }

    int dimension() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long total_degree() const {
        long d = 0;
        for (auto& [k, c] : terms_)
            if (k.sum() > d) d = k.sum();
        return d;
    }

    T coefficient(const MultiIndex& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? ScalarTraits<T>::zero() : it->second;
    }

    void add_term(const MultiIndex& k, const T& c) {
        if (k.size() != dim_) throw DomainError("polynomial term: dimension mismatch");
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) it->second += c;
        if (ScalarTraits<T>::is_negligible(it->second)) terms_.erase(it);
    }

    MultivariatePolynomial& operator+=(const MultivariatePolynomial& o) {
        require_same_dim(o);
        for (auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    MultivariatePolynomial& operator-=(const MultivariatePolynomial& o) {
        require_same_dim(o);
        for (auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    MultivariatePolynomial& operator*=(const T& s) {
        TermMap scaled;
        for (auto& [k, c] : terms_) {
            T v = c * s;
            if (!ScalarTraits<T>::is_negligible(v)) scaled.emplace(k, std::move(v));
        }
        terms_ = std::move(scaled);
        return *this;
    }

    friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) {
        a -= b;
        return a;
    }
    friend MultivariatePolynomial operator*(MultivariatePolynomial a, const T& s) {
        a *= s;
        return a;
    }

    friend MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                            const MultivariatePolynomial& b) {
        a.require_same_dim(b);
        MultivariatePolynomial out(a.dim_);
        for (auto& [ka, ca] : a.terms_) {
            for (auto& [kb, cb] : b.terms_) {
                MultiIndex k = ka;
                for (int i = 0; i < out.dim_; ++i) k[i] += kb[i];
                out.add_term(k, ca * cb);
            }
        }
        return out;
    }

    MultivariatePolynomial pow(unsigned e) const {
        MultivariatePolynomial acc = constant(dim_, ScalarTraits<T>::one());
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    T evaluate(std::span<const T> point) const {
        if (static_cast<int>(point.size()) != dim_)
            throw DomainError("polynomial evaluate: dimension mismatch");
        T acc = ScalarTraits<T>::zero();
        for (auto& [k, c] : terms_) {
            T term = c;
            for (int i = 0; i < dim_; ++i) term *= pow_scalar(point[static_cast<size_t>(i)], k[i]);
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void require_same_dim(const MultivariatePolynomial& o) const {
        if (dim_ != o.dim_) throw DomainError("polynomial op: dimension mismatch");
    }

    int dim_;
    TermMap terms_;
};

/// The table {k -> c_n(b; alpha, k)}, |k| <= |alpha|, carried together
/// with the data it expands.
template <class T>
struct CoefficientTable {
    MultiIndex alpha;
    std::vector<T> b;
    MultivariatePolynomial<T> expansion;

    T at(const MultiIndex& k) const { return expansion.coefficient(k); }
};

/// Expands prod_j (X_1 + ... + X_j + b_j)^{alpha_j}.
template <class T>
CoefficientTable<T> expand_c(const MultiIndex& alpha, const std::vector<T>& b) {
    const int n = alpha.size();
    if (static_cast<int>(b.size()) != n) throw DomainError("expand_c: dimension mismatch");
    MultivariatePolynomial<T> acc = MultivariatePolynomial<T>::constant(n, ScalarTraits<T>::one());
    for (int j = 0; j < n; ++j) {
        MultivariatePolynomial<T> factor(n);
        for (int i = 0; i <= j; ++i) {
            MultiIndex k = MultiIndex::zeros(n);
            k[i] = 1;
            factor.add_term(k, ScalarTraits<T>::one());
        }
        factor.add_term(MultiIndex::zeros(n), b[static_cast<size_t>(j)]);
        acc = acc * factor.pow(static_cast<unsigned>(alpha[j]));
    }
    return {alpha, b, std::move(acc)};
}

/// Expands prod_j (gamma_1 X_1 + ... + gamma_j X_j + u_j)^{alpha_j};
/// the gamma-scaled twin of expand_c:
///   c~_n(u; alpha, k) = c_n(u; alpha, k) gamma_1^{k_1} ... gamma_n^{k_n}.
template <class T>
CoefficientTable<T> expand_c_tilde(const MultiIndex& alpha, const std::vector<T>& u,
                                   const std::vector<T>& gamma) {
    const int n = alpha.size();
    if (static_cast<int>(u.size()) != n || static_cast<int>(gamma.size()) != n)
        throw DomainError("expand_c_tilde: dimension mismatch");
    MultivariatePolynomial<T> acc = MultivariatePolynomial<T>::constant(n, ScalarTraits<T>::one());
    for (int j = 0; j < n; ++j) {
        MultivariatePolynomial<T> factor(n);
        for (int i = 0; i <= j; ++i) {
            MultiIndex k = MultiIndex::zeros(n);
            k[i] = 1;
            factor.add_term(k, gamma[static_cast<size_t>(i)]);
        }
        factor.add_term(MultiIndex::zeros(n), u[static_cast<size_t>(j)]);
        acc = acc * factor.pow(static_cast<unsigned>(alpha[j]));
    }
    return {alpha, u, std::move(acc)};
}

} // namespace mzv
