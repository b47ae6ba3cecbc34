#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "gzmom/complex_real.hpp"
#include "gzmom/moments.hpp"
#include "gzmom/quad_engine.hpp"
#include "gzmom/real.hpp"
#include "gzmom/sym_value.hpp"
#include "gzmom/zeta.hpp"

// High-precision numerical verification of the closed forms: quadrature of
// the weighted |Gamma zeta|^2 moments, the auto-correlation integral A and
// its derivatives at 1, Ramanujan's cosine-transform identity, and the
// cotangent-sum reciprocity formula.

namespace gzmom {

struct QuadConfig {
    double cutoff = 120.0;        // moment integration truncation T
    unsigned panel_order = 32;    // Gauss-Legendre nodes per panel
    unsigned panel_count = 0;     // uniform panels on [1,T]; 0 = default grading
    unsigned zeta_terms = 20;     // Euler-Maclaurin main-sum floor
    unsigned zeta_corrections = 8;
    double tol = 1e-8;            // relative tolerance for moment reports
    unsigned threads = 0;         // 0 = all hardware threads

    ZetaParams zeta_params() const {
        return ZetaParams{zeta_terms, 1.3, zeta_corrections, 1e4};
    }

    void validate() const {
        if (tol <= 0) throw std::invalid_argument("QuadConfig: tol <= 0");
        if (panel_order < 8) throw std::invalid_argument("QuadConfig: panel_order < 8");
        if (cutoff <= 0) throw std::invalid_argument("QuadConfig: cutoff <= 0");
    }
};

/// One evaluation point of the weighted measure on the critical line.
struct CriticalPoint {
    Real t;
    Cplx zeta_value;
    Real abs_sq_weight;  // |Gamma(1/2+it)|^2
};

inline CriticalPoint critical_point(const Real& t, const QuadConfig& cfg = {}) {
    return {t, zeta_half_line(t, cfg.zeta_params()), gamma_abs_sq_half(t)};
}

namespace detail {

inline const std::vector<Real>& factorial_real_table() {
    static std::vector<Real> table = [] {
        std::vector<Real> t(192);
        for (std::size_t n = 0; n < t.size(); ++n)
            t[n] = to_real(factorial(static_cast<unsigned long>(n)));
        return t;
    }();
    return table;
}

// Deterministic panel decomposition for the moment integrand on [0, T]:
// a fixed geometric stack on [0,1] (the density is smooth there, the stack
// keeps per-panel convergence uniform near the zeta pole at t = -i/2),
// then width 1/2 up to t = 50 where |zeta|^2 oscillates fastest relative to
// the weight, then width 1 out to the cutoff.
inline std::vector<Panel> moment_panels(const QuadConfig& cfg) {
    std::vector<Panel> panels;
    Real prev(0);
    for (int e = 6; e >= 0; --e) {
        Real b = Real(1) / to_real(Int(1) << e);
        panels.push_back({prev, b});
        prev = b;
    }
    const Real T(cfg.cutoff);
    if (T <= 1) return panels;  // cutoff below 1 is never useful; keep the stack
    if (cfg.panel_count != 0) {
        Real width = (T - 1) / static_cast<int>(cfg.panel_count);
        auto rest = uniform_panels(Real(1), T, width);
        panels.insert(panels.end(), rest.begin(), rest.end());
        return panels;
    }
    Real mid = T < 50 ? T : Real(50);
    auto fine = uniform_panels(Real(1), mid, Real(0.5));
    panels.insert(panels.end(), fine.begin(), fine.end());
    if (T > 50) {
        auto coarse = uniform_panels(Real(50), T, Real(1));
        panels.insert(panels.end(), coarse.begin(), coarse.end());
    }
    return panels;
}

}  // namespace detail

/// Upper bound for the discarded tail 2 int_T^inf t^{2N} |Gamma zeta|^2 dt,
/// using |zeta(1/2+it)| <= c0 + c1 t with the conservative desk-scale
/// envelope c0 = 2.5, c1 = 0.7 and |Gamma|^2 <= 2 pi e^{-pi t}:
///   tail <= 4 pi int_T^inf t^{2N} (c0 + c1 t)^2 e^{-pi t} dt,
/// evaluated through the exact incomplete integral
///   int_T^inf t^m e^{-pi t} dt = e^{-pi T} sum_i m!/(m-i)! T^{m-i} / pi^{i+1}.
inline Real moment_tail_bound(unsigned N, const QuadConfig& cfg = {}) {
    const Real T(cfg.cutoff);
    const Real c0("2.5"), c1("0.7");
    auto incomplete = [&](unsigned m) {
        Real sum(0);
        Real prefix(1);  // m!/(m-i)! T^{m-i}
        Real tpow = pow(T, static_cast<int>(m));
        for (unsigned i = 0; i <= m; ++i) {
            sum += prefix * tpow / pow(real_pi(), static_cast<int>(i) + 1);
            if (i < m) {
                prefix *= static_cast<int>(m - i);
                tpow /= T;
            }
        }
        return exp(-real_pi() * T) * sum;
    };
    Real b = c0 * c0 * incomplete(2 * N) + 2 * c0 * c1 * incomplete(2 * N + 1) +
             c1 * c1 * incomplete(2 * N + 2);
    return 4 * real_pi() * b;
}

/// Moments 2 int_0^T t^{2N} |zeta Gamma(1/2+it)|^2 dt for several N at once;
/// the zeta factor is evaluated once per node and shared across all N, so
/// the batch is bit-identical to per-N calls while paying for zeta once.
inline std::vector<Real> moment_quadrature_batch(const std::vector<unsigned>& Ns,
                                                 const QuadConfig& cfg = {}) {
    cfg.validate();
    for (unsigned N : Ns) {
        if (N > 8) throw std::invalid_argument("moment_quadrature: N > 8 unsupported");
        if (moment_tail_bound(N, cfg) > Real(cfg.tol) / 10)
            throw std::invalid_argument("moment_quadrature: tail bound exceeds tol/10");
    }
    const ZetaParams zp = cfg.zeta_params();
    detail::log_int_table();  // force one-time table fills before threading
    detail::bernoulli_real_table();
    gl_rule(cfg.panel_order);
    auto panels = detail::moment_panels(cfg);
    auto vals = integrate_panels(
        panels, cfg.panel_order, cfg.threads, Ns.size(),
        [&](const Real& t, std::span<Real> out) {
            Real base = norm_sq(zeta_half_line(t, zp)) * gamma_abs_sq_half(t);
            for (std::size_t c = 0; c < Ns.size(); ++c)
                out[c] = pow(t, 2 * static_cast<int>(Ns[c])) * base;
        });
    for (auto& v : vals) v *= 2;  // even integrand, both half-lines
    return vals;
}

inline Real moment_quadrature(unsigned N, const QuadConfig& cfg = {}) {
    return moment_quadrature_batch({N}, cfg)[0];
}

// ---------------------------------------------------------------------------
// Derivatives of h(x) = 1/(e^x - 1) and the auto-correlation integrals.

/// Laurent-Bernoulli branch, from termwise differentiation of
///   h(x) = 1/x - 1/2 + sum_{m>=1} B_{2m} x^{2m-1} / (2m)!   (|x| < 2 pi).
/// Used for small x where the closed form cancels catastrophically.
inline Real h_deriv_series(unsigned k, const Real& x) {
    const auto& bern = detail::bernoulli_real_table();
    const auto& fact = detail::factorial_real_table();
    Real acc = to_real(factorial(k)) / pow(x, static_cast<int>(k) + 1);
    if (k % 2 == 1) acc = -acc;
    if (k == 0) acc -= Real(0.5);
    Real xpow = pow(x, static_cast<int>(2 * ((k + 2) / 2) - 1 - k));
    for (unsigned m = (k + 2) / 2; 2 * m < bern.size(); ++m) {
        // falling factorial (2m-1)(2m-2)...(2m-k)
        Real ff = fact[2 * m - 1] / fact[2 * m - 1 - k];
        Real term = bern[2 * m] * ff * xpow / fact[2 * m];
        acc += term;
        if (abs(term) < Real("1e-60") && m > (k + 2) / 2 + 4) break;
        xpow *= x * x;
    }
    return acc;
}

/// Closed form h^{(k)}(x) = sum_{p=1}^{k} alpha_{k,p} e^{px}/(e^x-1)^{p+1};
/// h itself for k = 0.
inline Real h_deriv_closed_form(unsigned k, const Real& x) {
    Real em1 = expm1(x);
    if (k == 0) return 1 / em1;
    Real E = exp(x);
    Real epow = E;          // e^{px}
    Real dpow = em1 * em1;  // (e^x-1)^{p+1}
    Real acc(0);
    for (unsigned p = 1; p <= k; ++p) {
        acc += to_real(alpha_coef(k, p)) * epow / dpow;
        epow *= E;
        dpow *= em1;
    }
    return acc;
}

/// k-th derivative of 1/(e^x - 1) for x > 0.
inline Real h_deriv(unsigned k, const Real& x) {
    if (x <= 0) throw std::invalid_argument("h_deriv: x <= 0");
    return x < 1 ? h_deriv_series(k, x) : h_deriv_closed_form(k, x);
}

namespace detail {

// phi(y) = 1/y - 1/(e^y - 1); the two poles cancel, the series branch keeps
// the cancellation symbolic for small y.
inline Real phi_factor(const Real& y) {
    if (y >= 1) return 1 / y - 1 / expm1(y);
    const auto& bern = bernoulli_real_table();
    const auto& fact = factorial_real_table();
    Real acc(0.5);
    Real ypow = y;
    const Real y2 = y * y;
    for (unsigned m = 1; 2 * m < bern.size(); ++m) {
        Real term = bern[2 * m] * ypow / fact[2 * m];
        acc -= term;
        if (abs(term) < Real("1e-60") && m > 4) break;
        ypow *= y2;
    }
    return acc;
}

// (-1)^k k!/x - x^k h^{(k)}(x), the bounded first factor of the derivative
// integrand; series form for x < 1 so the 1/x singularities cancel exactly.
inline Real deriv_factor(unsigned k, const Real& x) {
    if (k == 0) return phi_factor(x);
    if (x >= 1) {
        Real lead = to_real(factorial(k)) / x;
        if (k % 2 == 1) lead = -lead;
        return lead - pow(x, static_cast<int>(k)) * h_deriv_closed_form(k, x);
    }
    const auto& bern = bernoulli_real_table();
    const auto& fact = factorial_real_table();
    Real acc(0);
    unsigned m0 = (k + 2) / 2;  // smallest m with 2m-1 >= k
    Real xpow = pow(x, static_cast<int>(2 * m0 - 1));
    for (unsigned m = m0; 2 * m < bern.size(); ++m) {
        Real ff = fact[2 * m - 1] / fact[2 * m - 1 - k];
        Real term = bern[2 * m] * ff * xpow / fact[2 * m];
        acc -= term;
        if (abs(term) < Real("1e-60") && m > m0 + 4) break;
        xpow *= x * x;
    }
    return acc;
}

}  // namespace detail

/// A(v) = int_0^inf (1/(xv) - 1/(e^{xv}-1)) (1/x - 1/(e^x-1)) dx for v > 0.
/// Truncated at X with the slowly decaying 1/(v x^2) part of the tail added
/// back analytically; the remaining tail is exponentially small.
inline Real a_numeric(const Real& v, const QuadConfig& cfg = {}) {
    if (v <= 0) throw std::invalid_argument("a_numeric: v <= 0");
    cfg.validate();
    Real X = Real(48);
    if (v < 1 && 32 / v > X) X = 32 / v;
    double vd = static_cast<double>(v);
    Real width(std::min(4.0, 4.7 / std::max(vd, 1.0)));
    auto panels = uniform_panels(Real(0), X, width);
    Real integral = integrate_panels_scalar(
        panels, cfg.panel_order, cfg.threads,
        [&](const Real& x) { return detail::phi_factor(v * x) * detail::phi_factor(x); });
    return integral + 1 / (v * X);
}

/// A^{(k)}(1) = int_0^inf ((-1)^k k!/x - x^k h^{(k)}(x)) (1/x - 1/(e^x-1)) dx,
/// k <= 8. Same analytic tail treatment as a_numeric, with the truncation
/// pushed out so the x^k growth has died off.
inline Real a_deriv_numeric(unsigned k, const QuadConfig& cfg = {}) {
    if (k > 8) throw std::invalid_argument("a_deriv_numeric: k > 8 unsupported");
    cfg.validate();
    const Real X(48 + 8 * static_cast<int>(k));
    auto panels = uniform_panels(Real(0), X, Real(4));
    Real integral = integrate_panels_scalar(
        panels, cfg.panel_order, cfg.threads,
        [&](const Real& x) { return detail::deriv_factor(k, x) * detail::phi_factor(x); });
    Real tail = to_real(factorial(k)) / X;
    if (k % 2 == 1) tail = -tail;
    return integral + tail;
}

/// G(v) = e^v A(e^{2v}).
inline Real g_numeric(const Real& v, const QuadConfig& cfg = {}) {
    return exp(v) * a_numeric(exp(2 * v), cfg);
}

/// Residual of Ramanujan's 1915 identity
///   int_0^inf |Gamma((-1+it)/4)|^2 Xi(t/2)^2 cos(vt)/(1+t^2) dt = pi^{3/2} G(v)
/// for |v| <= 1. The Gamma kernel carries it/4: with the Xi(t/2), cos(vt),
/// 1/(1+t^2) scaling this is the form the Mellin-Plancherel route produces
/// (substitute zeta = Xi / (gamma factors) in the moment representation of G
/// and apply the duplication formula). Both sides are computed independently;
/// v is folded to |v| (both sides are even), so the residual is exactly even.
inline Real ramanujan_identity_residual(const Real& v, const QuadConfig& cfg = {}) {
    Real va = abs(v);
    if (va > 1) throw std::domain_error("ramanujan_identity_residual: |v| > 1");
    cfg.validate();
    const ZetaParams zp = cfg.zeta_params();
    auto panels = uniform_panels(Real(0), Real(48), Real(0.5));
    Real lhs = integrate_panels_scalar(
        panels, cfg.panel_order, cfg.threads, [&](const Real& t) {
            Cplx lg = complex_log_gamma(Cplx(Real(-0.25), t / 4));
            Real gam2 = exp(2 * lg.re);
            Real xv = xi_big(t / 2, zp);
            return gam2 * xv * xv * cos(va * t) / (1 + t * t);
        });
    Real rhs = real_pi() * sqrt(real_pi()) * g_numeric(va, cfg);
    return abs(lhs - rhs);
}

/// Cotangent sum c(h/k) = -sum_{a=1}^{k-1} (a/k) cot(pi a h / k) for
/// coprime h, k >= 1. The product a*h is reduced mod k before the cotangent
/// so the angle stays in (0, pi) at full precision.
inline Real cotangent_sum(unsigned long h, unsigned long k) {
    if (h < 1 || k < 1) throw std::invalid_argument("cotangent_sum: h, k >= 1 required");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("cotangent_sum: gcd(h,k) != 1");
    Real acc(0);
    for (unsigned long a = 1; a < k; ++a) {
        unsigned long r = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(a) * h) % k);
        Real ang = real_pi() * static_cast<long>(r) / static_cast<long>(k);
        acc += Real(static_cast<long>(a)) * cos(ang) / (Real(static_cast<long>(k)) * sin(ang));
    }
    return -acc;
}

/// Residual of the rewritten reciprocity formula at x = h/k:
///   x c(x) + c(1/x) - 1/(pi k) = (1/pi)(2x A(x) - 2(1+x) C + (x-1) log x).
inline Real reciprocity_residual(unsigned long h, unsigned long k,
                                 const QuadConfig& cfg = {}) {
    if (std::gcd(h, k) != 1) throw std::invalid_argument("reciprocity_residual: gcd != 1");
    Real x = Real(static_cast<long>(h)) / static_cast<long>(k);
    Real lhs = x * cotangent_sum(h, k) + cotangent_sum(k, h) -
               1 / (real_pi() * static_cast<long>(k));
    Real C = (real_log_2pi() - real_euler_gamma()) / 2;
    Real rhs = (2 * x * a_numeric(x, cfg) - 2 * (1 + x) * C + (x - 1) * log(x)) / real_pi();
    return abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Reports pairing closed forms with quadrature.

struct MomentReport {
    unsigned N = 0;
    SymVal symbolic;        // normalized moment m_N
    Real closed_decimal;    // M_{2N} from the closed form
    Real quadrature_decimal;
    Real abs_err;
    Real rel_err;
    bool pass = false;
};

inline std::vector<MomentReport> verify_moments(unsigned max_n, const QuadConfig& cfg = {}) {
    std::vector<unsigned> Ns(max_n + 1);
    for (unsigned i = 0; i <= max_n; ++i) Ns[i] = i;
    auto quads = moment_quadrature_batch(Ns, cfg);
    std::vector<MomentReport> out;
    for (unsigned N = 0; N <= max_n; ++N) {
        MomentReport r;
        r.N = N;
        r.symbolic = moment_closed(N).value;
        r.closed_decimal = moment_value(N);
        r.quadrature_decimal = quads[N];
        r.abs_err = abs(r.closed_decimal - r.quadrature_decimal);
        r.rel_err = r.abs_err / abs(r.closed_decimal);
        r.pass = r.rel_err <= Real(cfg.tol);
        out.push_back(std::move(r));
    }
    return out;
}

inline MomentReport verify_moment(unsigned N, const QuadConfig& cfg = {}) {
    MomentReport r;
    r.N = N;
    r.symbolic = moment_closed(N).value;
    r.closed_decimal = moment_value(N);
    r.quadrature_decimal = moment_quadrature(N, cfg);
    r.abs_err = abs(r.closed_decimal - r.quadrature_decimal);
    r.rel_err = r.abs_err / abs(r.closed_decimal);
    r.pass = r.rel_err <= Real(cfg.tol);
    return r;
}

}  // namespace gzmom
