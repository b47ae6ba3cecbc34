#pragma once

#include <stdexcept>
#include <vector>

#include "gzmom/combinatorics.hpp"
#include "gzmom/rational.hpp"
#include "gzmom/real.hpp"
#include "gzmom/sequence_ops.hpp"
#include "gzmom/sym_value.hpp"

// Closed forms for the weighted moments of |Gamma zeta|^2 on the critical
// line and for the derivatives at 1 of the exponential auto-correlation
// function A, plus the independent sequence-operator route to the same
// quantities. Everything here is exact; numbers appear only in
// moment_value(), which scales a symbolic evaluation.

namespace gzmom {

/// T_{N,j} = (j-1)! sum_{n=2}^{N} C(N,n) 2^n [(-1)^n S(n+1,j) + (-1)^j S(n,j-1)].
/// Zero for N < 2 or j > N by the empty-sum convention; j must be >= 2.
inline Int tcoef(unsigned N, unsigned j) {
    if (j < 2) throw std::invalid_argument("tcoef: j < 2");
    Int sum = 0;
    for (unsigned n = 2; n <= N; ++n) {
        Int a = stirling2(n + 1, static_cast<long>(j));
        if (n % 2 == 1) a = -a;
        Int b = stirling2(n, static_cast<long>(j) - 1);
        if (j % 2 == 1) b = -b;
        sum += (binomial(N, static_cast<long>(n)) << n) * (a + b);
    }
    return factorial(j - 1) * sum;
}

/// Normalized moment m_N = (-4)^N / (2 pi) * M_{2N}, as an exact symbolic value.
struct NormalizedMoment {
    unsigned N = 0;
    SymVal value;
};

/// Derivative A^{(k)}(1) as an exact symbolic value.
struct DerivAtOne {
    unsigned k = 0;
    SymVal value;
};

namespace detail {

// beta_k = sum_{j=2}^{k} C(k,j-1) zeta(j) B_j / j; odd j >= 3 drop out since
// B_j = 0 there, so the result carries even zeta symbols only.
inline SymVal beta_term(unsigned k) {
    SymVal v;
    for (unsigned j = 2; j <= k; ++j) {
        Rat c = Rat(binomial(k, static_cast<long>(j) - 1)) * bernoulli(j) /
                Rat(static_cast<long>(j));
        if (!c.is_zero()) v.add_term(ConstSymbol::Zeta(static_cast<int>(j)), c);
    }
    return v;
}

}  // namespace detail

/// m_N = log(2pi) - gamma - 4N + (4^N/2 - 1) B_{2N}
///       + sum_{j=2}^{2N} T_{2N,j} zeta(j) B_j / j.
inline NormalizedMoment moment_closed(unsigned N) {
    SymVal v;
    v.add_term(ConstSymbol::Log2Pi(), Rat(1));
    v.add_term(ConstSymbol::EulerGamma(), Rat(-1));
    Rat unit = Rat(-4L * static_cast<long>(N));
    unit += (pow2_rat(2L * static_cast<long>(N) - 1) - Rat(1)) * bernoulli(2 * N);
    v.add_term(ConstSymbol::Unit(), unit);
    for (unsigned j = 2; j <= 2 * N; ++j) {
        Rat c = Rat(tcoef(2 * N, j)) * bernoulli(j) / Rat(static_cast<long>(j));
        if (!c.is_zero()) v.add_term(ConstSymbol::Zeta(static_cast<int>(j)), c);
    }
    assert_no_odd_zeta(v);
    return {N, v};
}

/// The physical moment M_{2N} = 2 pi (-1)^N 4^{-N} m_N, numerically.
inline Real moment_value(unsigned N, unsigned digits = 30) {
    Real m = eval_numeric(moment_closed(N).value, digits);
    Real scale = 2 * real_pi() / pow(Real(4), static_cast<int>(N));
    return (N % 2 == 0) ? scale * m : -scale * m;
}

/// A^{(k)}(1) = (-1)^k k! ( (1+delta_{k,0}) C - 1/(2(k+1)) - H_{k-1}/2
///              + sum_{j=2}^{k} C(k,j-1) zeta(j) B_j / j ).
inline DerivAtOne a_deriv_closed(unsigned k) {
    SymVal v = constant_C() * Rat(k == 0 ? 2 : 1);
    v.add_term(ConstSymbol::Unit(), Rat(-1L, 2L * (static_cast<long>(k) + 1)));
    v += SymVal(-harmonic(static_cast<long>(k) - 1) / Rat(2));
    v += detail::beta_term(k);
    Rat scale = Rat(factorial(k));
    if (k % 2 == 1) scale = -scale;
    v *= scale;
    assert_no_odd_zeta(v);
    return {k, v};
}

/// Taylor coefficients psi_k of the period function at 1:
/// psi_k = (-1)^k/(k+1) + 2 sum_{j=1}^{k-1} (-1)^{k-j} C(k,j) zeta(j+1) B_{j+1}/(j+1);
/// the empty sum covers psi_0 = 1 and psi_1 = -1/2.
inline SymVal psi_coeff(unsigned k) {
    SymVal v;
    Rat lead = Rat(1L, static_cast<long>(k) + 1);
    if (k % 2 == 1) lead = -lead;
    v.add_term(ConstSymbol::Unit(), lead);
    for (unsigned j = 1; j + 1 <= k; ++j) {
        Rat c = Rat(2) * Rat(binomial(k, static_cast<long>(j))) * bernoulli(j + 1) /
                Rat(static_cast<long>(j) + 1);
        if ((k - j) % 2 == 1) c = -c;
        if (!c.is_zero()) v.add_term(ConstSymbol::Zeta(static_cast<int>(j) + 1), c);
    }
    assert_no_odd_zeta(v);
    return v;
}

/// R^{(k)}(1) = (-1)^k k! (C - H_{k-1}/2) for k >= 1, and R(1) = 2C.
inline SymVal r_deriv_at_1(unsigned k) {
    if (k == 0) return constant_C() * Rat(2);
    SymVal v = constant_C();
    v += SymVal(-harmonic(static_cast<long>(k) - 1) / Rat(2));
    Rat scale = Rat(factorial(k));
    if (k % 2 == 1) scale = -scale;
    return v * scale;
}

/// Cross-check route: A^{(k)}(1) = -(k!/2) psi_k + R^{(k)}(1).
inline SymVal psi_route_a_deriv(unsigned k) {
    SymVal v = psi_coeff(k) * (Rat(factorial(k)) / Rat(-2));
    v += r_deriv_at_1(k);
    return v;
}

/// G^{(N)}(0) through the sequence operators: (L o E)(c - (iota+eta)/2 + beta)_N
/// with c_k = (1+delta_{k,0}) C, iota_k = 1/(k+1), eta_k = H_{k-1}.
/// Deliberately independent of tcoef(): the term sequence is assembled
/// entrywise and pushed through seq_E / seq_L over symbolic scalars.
inline SymVal g_deriv_at_0(unsigned N) {
    std::vector<SymVal> u;
    u.reserve(N + 1);
    for (unsigned k = 0; k <= N; ++k) {
        SymVal e = constant_C() * Rat(k == 0 ? 2 : 1);
        e.add_term(ConstSymbol::Unit(), Rat(-1L, 2L * (static_cast<long>(k) + 1)));
        e += SymVal(-harmonic(static_cast<long>(k) - 1) / Rat(2));
        e += detail::beta_term(k);
        u.push_back(std::move(e));
    }
    return seq_L(seq_E(u, N), N);
}

}  // namespace gzmom
