#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "gzmom/rational.hpp"

// Exact integer/rational combinatorics: Bernoulli numbers, Stirling numbers
// of both kinds, harmonic numbers, and the derived coefficient families used
// by the closed forms. Tables grow lazily under a lock and are never mutated
// afterwards, so values read out are stable for the lifetime of the process.

namespace gzmom {

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

namespace detail {

// Triangular memo table shared by both Stirling kinds.
// second kind: S(n+1,k) = S(n,k-1) + k*S(n,k)
// first kind (signed): s(n+1,k) = s(n,k-1) - n*s(n,k)
class StirlingTable {
public:
    explicit StirlingTable(bool second_kind) : second_kind_(second_kind) {
        rows_.push_back({Int(1)});  // row 0: S(0,0) = 1
    }

    Int get(unsigned n, long k) {
        if (k < 0 || k > static_cast<long>(n)) return 0;
        std::lock_guard<std::mutex> lock(mu_);
        ensure(n);
        return rows_[n][static_cast<std::size_t>(k)];
    }

private:
    void ensure(unsigned n) {
        while (rows_.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows_.size()) - 1;
            const auto& prev = rows_[m];
            std::vector<Int> row(m + 2);
            row[0] = 0;
            for (unsigned k = 1; k <= m + 1; ++k) {
                Int from_prev = (k <= m) ? prev[k] : Int(0);
                if (second_kind_)
                    row[k] = prev[k - 1] + Int(static_cast<long>(k)) * from_prev;
                else
                    row[k] = prev[k - 1] - Int(static_cast<long>(m)) * from_prev;
            }
            rows_.push_back(std::move(row));
        }
    }

    bool second_kind_;
    std::vector<std::vector<Int>> rows_;
    std::mutex mu_;
};

inline StirlingTable& stirling2_table() {
    static StirlingTable t(true);
    return t;
}

inline StirlingTable& stirling1_table() {
    static StirlingTable t(false);
    return t;
}

}  // namespace detail

/// Stirling number of the second kind S(n,k); 0 outside 0 <= k <= n.
inline Int stirling2(unsigned n, long k) { return detail::stirling2_table().get(n, k); }

/// Signed Stirling number of the first kind s(n,k); 0 outside 0 <= k <= n.
inline Int stirling1(unsigned n, long k) { return detail::stirling1_table().get(n, k); }

/// Bernoulli number B_n with the convention B_1 = -1/2, from the defining
/// recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1) solved for B_n.
inline Rat bernoulli(unsigned n) {
    static std::vector<Rat> memo{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (memo.size() <= n) {
        const unsigned m = static_cast<unsigned>(memo.size());
        Rat acc;
        for (unsigned k = 0; k < m; ++k)
            acc += Rat(binomial(m + 1, static_cast<long>(k))) * memo[k];
        memo.push_back(-acc / Rat(static_cast<long>(m) + 1));
    }
    return memo[n];
}

/// B_N(1/2). Computed via the explicit polynomial sum and checked against
/// the closed form (2^{1-N} - 1) B_N; the two routes must agree exactly.
inline Rat bernoulli_poly_half(unsigned N) {
    Rat sum;
    for (unsigned n = 0; n <= N; ++n)
        sum += Rat(binomial(N, static_cast<long>(n))) * bernoulli(n) *
               pow2_rat(static_cast<long>(n) - static_cast<long>(N));
    Rat closed = (pow2_rat(1 - static_cast<long>(N)) - Rat(1)) * bernoulli(N);
    if (sum != closed)
        throw std::logic_error("bernoulli_poly_half: route disagreement");
    return sum;
}

/// Harmonic number H_k, with the convention H_{-1} = H_0 = 0.
inline Rat harmonic(long k) {
    if (k < -1) throw std::invalid_argument("harmonic: k < -1");
    if (k <= 0) return Rat(0);
    static std::vector<Rat> memo{Rat(0)};  // memo[j] = H_j
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(memo.size()) <= k) {
        const long j = static_cast<long>(memo.size());
        memo.push_back(memo.back() + Rat(1L, j));
    }
    return memo[static_cast<std::size_t>(k)];
}

/// K_{k,j} = (1/k) C(k,j) B_{k-j} + [j == k-1], for 1 <= k, 0 <= j <= k.
inline Rat kcoef(unsigned k, unsigned j) {
    if (k < 1) throw std::invalid_argument("kcoef: k < 1");
    if (j > k) throw std::invalid_argument("kcoef: j > k");
    Rat r = Rat(binomial(k, static_cast<long>(j))) * bernoulli(k - j) /
            Rat(static_cast<long>(k));
    if (j + 1 == k) r += Rat(1);
    return r;
}

/// alpha_{k,p} = (-1)^p S(k,p) p!; zero outside 1 <= p <= k.
inline Int alpha_coef(unsigned k, unsigned p) {
    if (p < 1 || p > k) return 0;
    Int r = stirling2(k, static_cast<long>(p)) * factorial(p);
    return (p % 2 == 0) ? r : -r;
}

}  // namespace gzmom
