#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gzmom/combinatorics.hpp"
#include "gzmom/complex_real.hpp"
#include "gzmom/real.hpp"

namespace gzmom {

/// |Gamma(1/2 + it)|^2 = 2 pi / (e^{pi t} + e^{-pi t}), evaluated as
/// 2 pi e^{-pi|t|} / (1 + e^{-2 pi|t|}) so large |t| cannot overflow.
inline Real gamma_abs_sq_half(const Real& t) {
    Real e = exp(-real_pi() * abs(t));
    return 2 * real_pi() * e / (1 + e * e);
}

/// Euler-Maclaurin parameters for zeta(1/2 + it).
struct ZetaParams {
    unsigned min_terms = 20;       // floor of the main-sum length
    double terms_per_t = 1.3;      // main-sum length scales like 1.3 |t|
    unsigned corrections = 8;      // Bernoulli correction terms
    double max_abs_t = 1e4;        // supported evaluation range
};

namespace detail {

// One-time filled constant tables. After the call_once init they are
// read-only, so concurrent quadrature workers can index them freely.

inline const std::vector<Real>& log_int_table() {
    static std::vector<Real> table = [] {
        std::vector<Real> t(16384);
        for (std::size_t n = 1; n < t.size(); ++n)
            t[n] = log(Real(static_cast<unsigned long>(n)));
        return t;
    }();
    return table;
}

inline const std::vector<Real>& bernoulli_real_table() {
    static std::vector<Real> table = [] {
        std::vector<Real> t(192);
        for (std::size_t n = 0; n < t.size(); ++n)
            t[n] = to_real(bernoulli(static_cast<unsigned>(n)));
        return t;
    }();
    return table;
}

// zeta(s) by Euler-Maclaurin with M main-sum terms and K Bernoulli
// corrections:
//   sum_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2
//   + sum_{k=1}^{K} B_{2k}/(2k)! (s)(s+1)...(s+2k-2) M^{-s-2k+1}.
inline Cplx zeta_euler_maclaurin(const Cplx& s, unsigned M, unsigned K) {
    const std::vector<Real>& logs = log_int_table();
    Cplx sum(0);
    for (unsigned long n = 1; n < M; ++n) {
        Real ln = (n < logs.size()) ? logs[n] : log(Real(n));
        Real mag = exp(-s.re * ln);
        sum += Cplx(mag * cos(s.im * ln), -mag * sin(s.im * ln));
    }
    Real lnM = log(Real(M));
    Real magM = exp(-s.re * lnM);
    Cplx M_pow_neg_s(magM * cos(s.im * lnM), -magM * sin(s.im * lnM));  // M^{-s}
    Cplx Ms = M_pow_neg_s * Cplx(Real(M));                              // M^{1-s}
    sum += Ms / (s - Cplx(Real(1)));
    sum += M_pow_neg_s / Cplx(Real(2));
    const std::vector<Real>& bern = bernoulli_real_table();
    Cplx rising = s;                          // (s)(s+1)...(s+2k-2)
    Cplx m_fac = M_pow_neg_s / Cplx(Real(M));  // M^{-s-(2k-1)}
    const Real invM2 = Real(1) / (Real(M) * Real(M));
    for (unsigned k = 1; k <= K; ++k) {
        if (k > 1) {
            rising *= (s + Cplx(Real(2 * k - 3))) * (s + Cplx(Real(2 * k - 2)));
            m_fac *= Cplx(invM2);
        }
        Real coef = bern[2 * k] / to_real(factorial(2 * k));
        sum += rising * m_fac * Cplx(coef);
    }
    return sum;
}

}  // namespace detail

/// zeta(1/2 + it). Main-sum length max(min_terms, ceil(terms_per_t * |t|));
/// absolute error well below 1e-12 across the supported range |t| <= 1e4.
inline Cplx zeta_half_line(const Real& t, const ZetaParams& zp = {}) {
    if (abs(t) > Real(zp.max_abs_t))
        throw std::domain_error("zeta_half_line: |t| outside supported range");
    if (t < 0) return conj(zeta_half_line(-t, zp));
    double td = static_cast<double>(t);
    unsigned M = std::max<unsigned>(zp.min_terms,
                                    static_cast<unsigned>(std::ceil(zp.terms_per_t * td)));
    return detail::zeta_euler_maclaurin(Cplx(Real(0.5), t), M, zp.corrections);
}

/// Independent oracle: zeta through the alternating eta series accelerated
/// with Borwein's polynomial weights,
///   zeta(s) = -1/(d_n (1-2^{1-s})) sum_{k<n} (-1)^k (d_k - d_n) (k+1)^{-s}.
/// The weight differences are formed exactly before rounding. Reliable for
/// |Im s| up to ~60 at the default term count.
inline Cplx zeta_eta_series(const Cplx& s, unsigned terms = 160) {
    struct Weights {
        std::vector<Real> diff;  // d_k - d_n, exact then rounded
        Real dn;
    };
    static std::map<unsigned, Weights> cache;
    static std::mutex mu;
    const Weights* w;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(terms);
        if (it == cache.end()) {
            const unsigned n = terms;
            std::vector<Rat> d(n + 1);
            Rat acc;
            for (unsigned i = 0; i <= n; ++i) {
                acc += Rat(factorial(n + i - 1) * (Int(1) << (2 * i)),
                           factorial(n - i) * factorial(2 * i));
                d[i] = Rat(static_cast<long>(n)) * acc;
            }
            Weights ws;
            ws.diff.reserve(n);
            for (unsigned k = 0; k < n; ++k) ws.diff.push_back(to_real(d[k] - d[n]));
            ws.dn = to_real(d[n]);
            it = cache.emplace(terms, std::move(ws)).first;
        }
        w = &it->second;
    }
    Cplx sum(0);
    for (unsigned k = 0; k < terms; ++k) {
        Cplx term = pow_real_base(Real(k + 1), -s) * Cplx(w->diff[k]);
        sum += (k % 2 == 0) ? term : -term;
    }
    Cplx denom = Cplx(w->dn) * (Cplx(Real(1)) - pow_real_base(Real(2), Cplx(Real(1)) - s));
    return -(sum / denom);
}

/// Principal-branch log Gamma: Stirling series with exact Bernoulli
/// coefficients after shifting the argument to Re >= 32; relative error far
/// below the 1e-12 contract. Poles (nonpositive integers) are rejected.
inline Cplx complex_log_gamma(Cplx z) {
    if (z.im == 0 && z.re <= 0 && floor(z.re) == z.re)
        throw std::domain_error("complex_log_gamma: pole at nonpositive integer");
    const std::vector<Real>& bern = detail::bernoulli_real_table();
    Cplx shift(0);
    while (z.re < 32) {
        shift += log(z);
        z += Cplx(Real(1));
    }
    Cplx lz = log(z);
    Cplx res = (z - Cplx(Real(0.5))) * lz - z + Cplx(real_log_2pi() / 2);
    Cplx inv = Cplx(Real(1)) / z;
    Cplx inv2 = inv * inv;
    Cplx zpow = inv;  // z^{-(2n-1)}
    for (unsigned nn = 1; nn <= 24; ++nn) {
        Real coef = bern[2 * nn] /
                    Real(static_cast<long>(2 * nn) * (2 * static_cast<long>(nn) - 1));
        res += zpow * Cplx(coef);
        zpow *= inv2;
    }
    return res - shift;
}

/// Xi(t) = xi(1/2 + it) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s); the
/// imaginary part must vanish and is asserted below 1e-10 before being
/// dropped.
inline Real xi_big(const Real& t, const ZetaParams& zp = {}) {
    Cplx s(Real(0.5), t);
    Cplx v = s * (s - Cplx(Real(1)));
    v /= Cplx(Real(2));
    v *= pow_real_base(real_pi(), -(s / Cplx(Real(2))));
    v *= exp(complex_log_gamma(s / Cplx(Real(2))));
    v *= zeta_half_line(t, zp);
    if (abs(v.im) > Real("1e-10"))
        throw std::logic_error("xi_big: imaginary part exceeds tolerance");
    return v.re;
}

}  // namespace gzmom
