#include <gtest/gtest.h>

#include "gzmom/numquad.hpp"

using namespace gzmom;

namespace {

// Cheap but still accurate configuration for determinism checks.
QuadConfig cheap_cfg() {
    QuadConfig cfg;
    cfg.cutoff = 40;
    cfg.panel_order = 16;
    cfg.tol = 1e-6;
    return cfg;
}

}  // namespace

TEST(HDeriv, PointValues) {
    Real l2 = log(Real(2));
    EXPECT_LE(abs(h_deriv(0, l2) - Real(1)), Real("1e-40"));   // 1/(2-1)
    EXPECT_LE(abs(h_deriv(1, l2) - Real(-2)), Real("1e-40"));  // -e^x/(e^x-1)^2
    EXPECT_THROW(h_deriv(2, Real(0)), std::invalid_argument);
    EXPECT_THROW(h_deriv(2, Real(-1)), std::invalid_argument);
}

TEST(HDeriv, BranchAgreementOnOverlap) {
    for (unsigned k = 0; k <= 6; ++k)
        for (double xd : {0.5, 0.7, 0.9, 1.0, 1.2, 1.5}) {
            Real x(xd);
            Real a = h_deriv_series(k, x);
            Real b = h_deriv_closed_form(k, x);
            EXPECT_LE(abs(a - b), Real("1e-12") * (1 + abs(a))) << "k=" << k << " x=" << xd;
        }
}

TEST(PhiFactor, SeriesMatchesDirect) {
    for (double yd : {0.25, 0.5, 0.99, 1.0, 1.5, 4.0}) {
        Real y(yd);
        Real direct = 1 / y - 1 / expm1(y);
        EXPECT_LE(abs(detail::phi_factor(y) - direct), Real("1e-30")) << yd;
    }
    // Bounded limit value 1/2 at 0+.
    EXPECT_LE(abs(detail::phi_factor(Real("1e-20")) - Real(0.5)), Real("1e-19"));
}

TEST(ANumeric, ValueAtOne) {
    QuadConfig cfg;
    Real a1 = a_numeric(Real(1), cfg);
    EXPECT_LE(abs(a1 - Real("0.7606614")), Real("5e-8"));  // 2C - 1/2
    Real closed = eval_numeric(a_deriv_closed(0).value, 40);
    EXPECT_LE(abs(a1 - closed), Real("1e-12"));
    EXPECT_THROW(a_numeric(Real(0), cfg), std::invalid_argument);
    EXPECT_THROW(a_numeric(Real(-2), cfg), std::invalid_argument);
}

TEST(ADerivNumeric, MatchesClosedForms) {
    QuadConfig cfg;
    for (unsigned k = 0; k <= 3; ++k) {
        Real quad = a_deriv_numeric(k, cfg);
        Real closed = eval_numeric(a_deriv_closed(k).value, 40);
        EXPECT_LE(abs(quad - closed), Real("1e-10")) << "k=" << k;
    }
    EXPECT_THROW(a_deriv_numeric(9, cfg), std::invalid_argument);
}

TEST(GNumeric, SymmetryAndMonotonicity) {
    QuadConfig cfg;
    EXPECT_EQ(g_numeric(Real(0), cfg), a_numeric(Real(1), cfg));
    Real g01 = g_numeric(Real("0.1"), cfg);
    Real g01m = g_numeric(Real("-0.1"), cfg);
    EXPECT_LE(abs(g01 - g01m), Real("1e-8"));
    EXPECT_LE(g01, g_numeric(Real(0), cfg));  // cosine-transform bound G(v) <= G(0)
}

TEST(CotangentSum, KnownValues) {
    EXPECT_LE(abs(cotangent_sum(1, 2)), Real("1e-40"));
    EXPECT_LE(abs(cotangent_sum(1, 3) - 1 / (3 * sqrt(Real(3)))), Real("1e-40"));
    EXPECT_EQ(cotangent_sum(1, 1), Real(0));
    EXPECT_THROW(cotangent_sum(2, 4), std::invalid_argument);
    EXPECT_THROW(cotangent_sum(0, 3), std::invalid_argument);
}

TEST(Reciprocity, ExactCancellationAtOne) {
    QuadConfig cfg;
    // x = 1: both sides reduce to -1/pi through 2A(1) - 4C = -1.
    EXPECT_LE(reciprocity_residual(1, 1, cfg), Real("1e-12"));
    EXPECT_LE(reciprocity_residual(1, 2, cfg), Real("1e-12"));
    EXPECT_THROW(reciprocity_residual(2, 4, cfg), std::invalid_argument);
}

TEST(MomentTailBound, BehavesAsEnvelope) {
    QuadConfig cfg;
    Real b0 = moment_tail_bound(0, cfg);
    Real b6 = moment_tail_bound(6, cfg);
    EXPECT_GT(b6, b0);              // grows with the polynomial power
    EXPECT_LE(b6, Real("1e-100"));  // and is negligible at T = 120
    QuadConfig small = cfg;
    small.cutoff = 5;
    EXPECT_GT(moment_tail_bound(6, small), Real(cfg.tol) / 10);
}

TEST(MomentQuadrature, MatchesClosedFormN0) {
    QuadConfig cfg;
    Real q = moment_quadrature(0, cfg);
    Real closed = moment_value(0);
    EXPECT_LE(abs(q - closed) / closed, Real("1e-8"));
}

TEST(MomentQuadrature, DeterministicAcrossThreadCounts) {
    QuadConfig one = cheap_cfg();
    one.threads = 1;
    QuadConfig four = cheap_cfg();
    four.threads = 4;
    Real a = moment_quadrature(1, one);
    Real b = moment_quadrature(1, four);
    EXPECT_EQ(a, b);  // bit-identical
}

TEST(MomentQuadrature, BatchMatchesSingle) {
    QuadConfig cfg = cheap_cfg();
    auto batch = moment_quadrature_batch({0, 1, 2}, cfg);
    EXPECT_EQ(batch[1], moment_quadrature(1, cfg));
    EXPECT_EQ(batch[2], moment_quadrature(2, cfg));
}

TEST(MomentQuadrature, ExplicitPanelCount) {
    // 78 uniform panels on [1, 40] is exactly the default 0.5 grading there,
    // so the override must reproduce the default bit for bit.
    QuadConfig a = cheap_cfg();
    QuadConfig b = cheap_cfg();
    b.panel_count = 78;
    EXPECT_EQ(moment_quadrature(0, a), moment_quadrature(0, b));
    // A different decomposition still agrees to quadrature accuracy.
    QuadConfig c = cheap_cfg();
    c.panel_count = 101;
    Real qa = moment_quadrature(0, a);
    Real qc = moment_quadrature(0, c);
    EXPECT_LE(abs(qa - qc) / qa, Real("1e-12"));
}

TEST(MomentQuadrature, Preconditions) {
    QuadConfig cfg;
    EXPECT_THROW(moment_quadrature(9, cfg), std::invalid_argument);
    QuadConfig bad = cfg;
    bad.tol = 0;
    EXPECT_THROW(moment_quadrature(0, bad), std::invalid_argument);
    bad = cfg;
    bad.panel_order = 4;
    EXPECT_THROW(moment_quadrature(0, bad), std::invalid_argument);
    bad = cfg;
    bad.cutoff = 5;  // tail bound no longer below tol/10
    EXPECT_THROW(moment_quadrature(6, bad), std::invalid_argument);
}

TEST(CriticalPoint, WeightInvariant) {
    QuadConfig cfg;
    for (double td : {0.0, 1.5, 20.0}) {
        CriticalPoint cp = critical_point(Real(td), cfg);
        EXPECT_GT(cp.abs_sq_weight, Real(0));
        EXPECT_LE(cp.abs_sq_weight, real_pi());
        EXPECT_EQ(cp.abs_sq_weight, gamma_abs_sq_half(Real(td)));
    }
}

TEST(Integrand, EvenInT) {
    QuadConfig cfg;
    for (double td : {0.75, 8.0, 25.0}) {
        CriticalPoint plus = critical_point(Real(td), cfg);
        CriticalPoint minus = critical_point(Real(-td), cfg);
        EXPECT_EQ(minus.zeta_value, conj(plus.zeta_value));
        EXPECT_EQ(norm_sq(minus.zeta_value) * minus.abs_sq_weight,
                  norm_sq(plus.zeta_value) * plus.abs_sq_weight);
    }
}

TEST(VerifyMoment, ReportFields) {
    QuadConfig cfg = cheap_cfg();
    MomentReport r = verify_moment(0, cfg);
    EXPECT_EQ(r.N, 0u);
    EXPECT_EQ(r.symbolic, moment_closed(0).value);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.pass, r.rel_err <= Real(cfg.tol));
    EXPECT_LE(r.abs_err, Real("1e-6"));
}

TEST(Ramanujan, ResidualSmallAndExactlyEven) {
    QuadConfig cfg = cheap_cfg();
    Real plus = ramanujan_identity_residual(Real("0.25"), cfg);
    Real minus = ramanujan_identity_residual(Real("-0.25"), cfg);
    EXPECT_LE(plus, Real("1e-6"));
    EXPECT_EQ(plus, minus);
    EXPECT_THROW(ramanujan_identity_residual(Real(2), cfg), std::domain_error);
}
