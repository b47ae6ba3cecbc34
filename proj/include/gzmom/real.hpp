#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <ios>
#include <stdexcept>
#include <string>

#include "gzmom/combinatorics.hpp"
#include "gzmom/rational.hpp"

namespace gzmom {

/// Decimal digits carried by every floating computation in the project.
inline constexpr unsigned kWorkDigits = 50;

/// Largest number of significant digits callers may request from numeric
/// evaluation; kept below kWorkDigits to leave guard digits.
inline constexpr unsigned kMaxEvalDigits = 45;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkDigits>,
    boost::multiprecision::et_off>;

inline Real to_real(const Rat& q) { return Real(q.mpq().get_mpq_t()); }
inline Real to_real(const Int& z) { return Real(z.get_mpz_t()); }

inline const Real& real_pi() {
    static const Real v = boost::math::constants::pi<Real>();
    return v;
}

inline const Real& real_euler_gamma() {
    static const Real v = boost::math::constants::euler<Real>();
    return v;
}

inline const Real& real_log_2pi() {
    static const Real v = log(2 * real_pi());
    return v;
}

namespace detail {

// Alternating-series zeta for a real integer argument (Borwein's method):
//   zeta(s) = -1 / (d_n (1 - 2^{1-s})) * sum_{k=0}^{n-1} (-1)^k (d_k - d_n) / (k+1)^s
// with d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!). The error decays
// like (3+sqrt(8))^{-n}; n = 96 is far below working precision.
inline Real zeta_borwein_int(unsigned s) {
    const unsigned n = 96;
    std::vector<Rat> d(n + 1);
    Rat acc;
    for (unsigned i = 0; i <= n; ++i) {
        acc += Rat(factorial(n + i - 1) * (Int(1) << (2 * i)),
                   factorial(n - i) * factorial(2 * i));
        d[i] = Rat(static_cast<long>(n)) * acc;
    }
    Real sum = 0;
    for (unsigned k = 0; k < n; ++k) {
        Real term_k = to_real(d[k] - d[n]) / pow(Real(k + 1), static_cast<int>(s));
        sum += (k % 2 == 0) ? term_k : -term_k;
    }
    Real denom = to_real(d[n]) * (Real(1) - pow(Real(2), 1 - static_cast<int>(s)));
    return -sum / denom;
}

}  // namespace detail

/// zeta(j) for integer j >= 2: even arguments through the exact pi-power
/// reduction 2 (2m)! zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m}, odd arguments
/// through the alternating series.
inline Real zeta_int_real(unsigned j) {
    if (j < 2) throw std::invalid_argument("zeta_int_real: j < 2");
    if (j % 2 == 0) {
        const unsigned m = j / 2;
        Rat coef = bernoulli(j) * pow2_rat(j) / Rat(2 * factorial(j));
        if (m % 2 == 0) coef = -coef;  // (-1)^{m+1}
        return to_real(coef) * pow(real_pi(), static_cast<int>(j));
    }
    return detail::zeta_borwein_int(j);
}

/// Render with the requested number of significant digits.
inline std::string format_real(const Real& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

}  // namespace gzmom
