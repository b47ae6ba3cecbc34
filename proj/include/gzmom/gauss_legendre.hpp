#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gzmom/real.hpp"

namespace gzmom {

/// Gauss-Legendre rule on [-1, 1]: nodes ascending, matching weights.
struct GlRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

namespace detail {

// Newton refinement of the cosine initial guesses; each step roughly doubles
// the correct digits, so a fixed iteration budget reaches working precision.
inline GlRule compute_gl_rule(unsigned n) {
    if (n < 1) throw std::invalid_argument("gl_rule: order < 1");
    GlRule rule;
    rule.nodes.assign(n, Real(0));
    rule.weights.assign(n, Real(0));
    const Real one(1);
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        Real x(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
        Real dp(0);
        for (int iter = 0; iter < 64; ++iter) {
            // Legendre P_n(x) and P_n'(x) by the three-term recurrence.
            Real p0(1), p1 = x;
            for (unsigned j = 2; j <= n; ++j) {
                Real p2 = ((2 * static_cast<int>(j) - 1) * x * p1 -
                           (static_cast<int>(j) - 1) * p0) /
                          static_cast<int>(j);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<int>(n) * (x * p1 - p0) / (x * x - one);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < Real("1e-60")) break;
        }
        // One more derivative evaluation at the converged node.
        Real p0(1), p1 = x;
        for (unsigned j = 2; j <= n; ++j) {
            Real p2 = ((2 * static_cast<int>(j) - 1) * x * p1 -
                       (static_cast<int>(j) - 1) * p0) /
                      static_cast<int>(j);
            p0 = p1;
            p1 = p2;
        }
        dp = static_cast<int>(n) * (x * p1 - p0) / (x * x - one);
        Real w = 2 / ((one - x * x) * dp * dp);
        rule.nodes[i] = -x;  // guesses start from the +1 end; store ascending
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace detail

/// Cached rule for the given node count; safe to call concurrently.
inline const GlRule& gl_rule(unsigned n) {
    static std::map<unsigned, GlRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::compute_gl_rule(n)).first;
    return it->second;
}

}  // namespace gzmom
