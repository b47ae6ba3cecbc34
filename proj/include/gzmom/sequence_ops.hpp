#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gzmom/combinatorics.hpp"
#include "gzmom/rational.hpp"

// The two sequence transforms behind the derivative computation of the
// symmetric exponential integral: E mirrors differentiating a function
// composed with an exponential, L mirrors the Leibniz product rule.
// Both are templated on the scalar so the same code runs over exact
// rationals and over symbolic constant combinations.

namespace gzmom {

/// E(u)_n = sum_{k=0}^{n} S(n,k) (-1)^k k! u_k for n = 0..N.
template <class S>
std::vector<S> seq_E(const std::vector<S>& u, std::size_t N) {
    if (u.size() < N + 1)
        throw std::invalid_argument("seq_E: sequence shorter than N+1");
    std::vector<S> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        S acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            Int c = stirling2(static_cast<unsigned>(n), static_cast<long>(k)) *
                    factorial(k);
            if (c == 0) continue;
            if (k % 2 == 1) c = -c;
            acc += u[k] * Rat(c);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// L(u)_N = sum_{n=0}^{N} C(N,n) 2^n u_n.
template <class S>
S seq_L(const std::vector<S>& u, std::size_t N) {
    if (u.size() < N + 1)
        throw std::invalid_argument("seq_L: sequence shorter than N+1");
    S acc{};
    for (std::size_t n = 0; n <= N; ++n) {
        Int c = binomial(N, static_cast<long>(n)) << n;
        acc += u[n] * Rat(c);
    }
    return acc;
}

}  // namespace gzmom
