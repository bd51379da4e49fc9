#pragma once

/// Gauss-Legendre nodes/weights, generated once per order by Newton
/// iteration on P_n.  Deterministic.

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

namespace mzv {

struct QuadratureNode {
    double x;
    double w;
};

/// Nodes and weights on [-1, 1].
inline const std::vector<QuadratureNode>& gauss_legendre(int order) {
    static std::map<int, std::vector<QuadratureNode>> cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    std::vector<QuadratureNode> nodes(static_cast<size_t>(order));
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(x).
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<size_t>(i)] = {x, w};
        nodes[static_cast<size_t>(order - 1 - i)] = {-x, w};
    }
    return cache.emplace(order, std::move(nodes)).first->second;
}

/// Same rule mapped to [0, 1].
inline std::vector<QuadratureNode> gauss_legendre_unit(int order) {
    std::vector<QuadratureNode> out = gauss_legendre(order);
    for (auto& n : out) {
        n.x = 0.5 * (n.x + 1.0);
        n.w *= 0.5;
    }
    return out;
}

} // namespace mzv
