#include <gtest/gtest.h>

#include <vector>

#include "gzmom/combinatorics.hpp"

using namespace gzmom;

namespace {

// Independent Bernoulli oracle: the Akiyama-Tanigawa triangle produces the
// B_1 = +1/2 convention, so flip the sign at n = 1.
Rat bernoulli_akiyama_tanigawa(unsigned n) {
    std::vector<Rat> row;
    for (unsigned m = 0; m <= n; ++m) row.emplace_back(1L, static_cast<long>(m) + 1);
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned m = 0; m + j <= n; ++m)
            row[m] = Rat(static_cast<long>(m) + 1) * (row[m] - row[m + 1]);
    return n == 1 ? -row[0] : row[0];
}

// Independent second-kind oracle: S(n,k) = (1/k!) sum_i (-1)^i C(k,i) (k-i)^n.
Int stirling2_oracle(unsigned n, unsigned k) {
    Int acc = 0;
    for (unsigned i = 0; i <= k; ++i) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), k - i, n);
        t *= binomial(k, static_cast<long>(i));
        acc += (i % 2 == 0) ? t : -t;
    }
    return acc / factorial(k);
}

// Independent first-kind oracle: expand (x)_n = x(x-1)...(x-n+1) by
// convolving the linear factors; s(n,k) is the x^k coefficient.
std::vector<Int> falling_factorial_coeffs(unsigned n) {
    std::vector<Int> c{1};  // polynomial 1
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Int> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];                             // * x
            next[i] -= Int(static_cast<long>(m)) * c[i];     // * (-m)
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

TEST(Bernoulli, KnownValues) {
    EXPECT_EQ(bernoulli(0), Rat(1));
    EXPECT_EQ(bernoulli(1), Rat(-1, 2));
    EXPECT_EQ(bernoulli(2), Rat(1, 6));
    EXPECT_EQ(bernoulli(3), Rat(0));
    EXPECT_EQ(bernoulli(4), Rat(-1, 30));
    EXPECT_EQ(bernoulli(5), Rat(0));
    EXPECT_EQ(bernoulli(6), Rat(1, 42));
}

TEST(Bernoulli, AgainstAkiyamaTanigawaOracle) {
    for (unsigned n = 0; n <= 40; ++n)
        EXPECT_EQ(bernoulli(n), bernoulli_akiyama_tanigawa(n)) << "n=" << n;
    EXPECT_EQ(bernoulli(12), Rat(-691, 2730));
}

TEST(Bernoulli, PolyHalf) {
    EXPECT_EQ(bernoulli_poly_half(0), Rat(1));
    EXPECT_EQ(bernoulli_poly_half(1), Rat(0));
    EXPECT_EQ(bernoulli_poly_half(2), Rat(-1, 12));
    // The two independent routes must agree; re-derive the closed form here.
    for (unsigned N = 0; N <= 25; ++N)
        EXPECT_EQ(bernoulli_poly_half(N),
                  (pow2_rat(1 - static_cast<long>(N)) - Rat(1)) * bernoulli(N))
            << "N=" << N;
}

TEST(Stirling, MatrixExampleValues) {
    EXPECT_EQ(stirling2(4, 2), Int(7));
    EXPECT_EQ(stirling2(5, 3), Int(25));
    EXPECT_EQ(stirling1(4, 2), Int(11));
    EXPECT_EQ(stirling1(4, 1), Int(-6));
    EXPECT_EQ(stirling1(5, 2), Int(-50));
    for (unsigned n = 0; n <= 30; ++n) {
        EXPECT_EQ(stirling2(n, static_cast<long>(n)), Int(1));
        EXPECT_EQ(stirling1(n, static_cast<long>(n)), Int(1));
    }
}

TEST(Stirling, OutOfRangeIsZero) {
    EXPECT_EQ(stirling2(3, 4), Int(0));
    EXPECT_EQ(stirling2(3, -1), Int(0));
    EXPECT_EQ(stirling1(0, 1), Int(0));
    EXPECT_EQ(stirling1(5, 6), Int(0));
}

TEST(Stirling, SecondKindOracle) {
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned k = 1; k <= n; ++k)
            EXPECT_EQ(stirling2(n, static_cast<long>(k)), stirling2_oracle(n, k))
                << "n=" << n << " k=" << k;
}

TEST(Stirling, FirstKindOracle) {
    for (unsigned n = 0; n <= 30; ++n) {
        auto coeffs = falling_factorial_coeffs(n);
        for (unsigned k = 0; k <= n; ++k)
            EXPECT_EQ(stirling1(n, static_cast<long>(k)), coeffs[k])
                << "n=" << n << " k=" << k;
    }
}

TEST(Stirling, RecurrencesHold) {
    for (unsigned n = 0; n < 30; ++n)
        for (long k = 0; k <= static_cast<long>(n) + 1; ++k) {
            EXPECT_EQ(stirling2(n + 1, k),
                      stirling2(n, k - 1) + Int(k) * stirling2(n, k));
            EXPECT_EQ(stirling1(n + 1, k),
                      stirling1(n, k - 1) - Int(static_cast<long>(n)) * stirling1(n, k));
        }
}

TEST(Stirling, InverseMatrixProduct) {
    const unsigned N = 30;
    for (unsigned i = 0; i <= N; ++i)
        for (unsigned j = 0; j <= N; ++j) {
            Int acc = 0;
            for (unsigned p = 0; p <= N; ++p)
                acc += stirling2(i, static_cast<long>(p)) * stirling1(p, static_cast<long>(j));
            EXPECT_EQ(acc, Int(i == j ? 1 : 0)) << "i=" << i << " j=" << j;
        }
}

TEST(Harmonic, ConventionAndValues) {
    EXPECT_EQ(harmonic(-1), Rat(0));
    EXPECT_EQ(harmonic(0), Rat(0));
    EXPECT_EQ(harmonic(1), Rat(1));
    EXPECT_EQ(harmonic(4), Rat(25, 12));
    EXPECT_THROW(harmonic(-2), std::invalid_argument);
}

TEST(KCoef, EdgeValues) {
    for (unsigned k = 1; k <= 10; ++k) {
        EXPECT_EQ(kcoef(k + 1, k), Rat(1, 2));
        EXPECT_EQ(kcoef(k + 1, k + 1), Rat(1L, static_cast<long>(k) + 1));
    }
    EXPECT_EQ(kcoef(4, 1), Rat(0));
    EXPECT_THROW(kcoef(3, 4), std::invalid_argument);
    EXPECT_THROW(kcoef(0, 0), std::invalid_argument);
}

TEST(KCoef, GkpIdentity) {
    // sum_{p=j}^{k} S(k,p) s(p,j) / p = K_{k,j}
    for (unsigned k = 1; k <= 30; ++k)
        for (unsigned j = 1; j <= k; ++j) {
            Rat acc;
            for (unsigned p = j; p <= k; ++p)
                acc += Rat(stirling2(k, static_cast<long>(p)) *
                           stirling1(p, static_cast<long>(j)),
                           Int(static_cast<long>(p)));
            EXPECT_EQ(acc, kcoef(k, j)) << "k=" << k << " j=" << j;
        }
}

TEST(AlphaCoef, ValuesAndRecurrence) {
    EXPECT_EQ(alpha_coef(1, 1), Int(-1));
    EXPECT_EQ(alpha_coef(4, 2), Int(14));
    EXPECT_EQ(alpha_coef(3, 3), Int(-6));
    EXPECT_EQ(alpha_coef(4, 0), Int(0));
    EXPECT_EQ(alpha_coef(4, 5), Int(0));
    // alpha_{k,p-1} - alpha_{k,p} = -alpha_{k+1,p} / p
    for (unsigned k = 1; k <= 20; ++k)
        for (unsigned p = 1; p <= k; ++p)
            EXPECT_EQ(Rat(alpha_coef(k, p - 1)) - Rat(alpha_coef(k, p)),
                      -Rat(alpha_coef(k + 1, p), Int(static_cast<long>(p))))
                << "k=" << k << " p=" << p;
}

TEST(Rat, BasicInvariants) {
    EXPECT_EQ(Rat(4, 6), Rat(2, 3));
    EXPECT_EQ(Rat(1, -2), Rat(-1, 2));
    EXPECT_EQ(Rat(1, -2).den(), Int(2));
    EXPECT_THROW(Rat(1, 0), std::invalid_argument);
    EXPECT_THROW(Rat(1) / Rat(0), std::invalid_argument);
    EXPECT_EQ(Rat::parse("-23/6"), Rat(-23, 6));
    EXPECT_EQ(Rat::parse("7"), Rat(7));
    EXPECT_EQ(Rat(-23, 6).fraction_str(), "-23/6");
    EXPECT_EQ(Rat(5).fraction_str(), "5/1");
    EXPECT_EQ(pow2_rat(-3), Rat(1, 8));
    EXPECT_EQ(pow2_rat(4), Rat(16));
}
