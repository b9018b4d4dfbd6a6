#include "koshlab/series.hpp"

#include <cmath>
#include <gtest/gtest.h>
#include <numeric>
#include <random>

#include "reference_values.hpp"

using namespace koshlab;

namespace {

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

const SigmaCache& cache() {
    static SigmaCache c(200000);
    return c;
}

}  // namespace

TEST(Sigma, SmallValues) {
    EXPECT_EQ(cache().sigma({0.0, 0.0}, 6).real(), 4.0);   // divisors 1,2,3,6
    EXPECT_EQ(cache().sigma({1.0, 0.0}, 6).real(), 12.0);  // 1+2+3+6
    EXPECT_LT(std::abs(cache().sigma({-1.0, 0.0}, 4) - Complex{1.75, 0.0}), 1e-15);
    EXPECT_EQ(cache().sigma({2.0, 0.0}, 1).real(), 1.0);
}

TEST(Sigma, CacheMissAndBadInput) {
    EXPECT_THROW(cache().sigma({0.0, 0.0}, 300000), CacheMissError);
    EXPECT_THROW(cache().sigma({0.0, 0.0}, 0), DomainError);
}

TEST(Sigma, UnitPrimePowerFallback) {
    // s chosen so 2^s = 1: each divisor power of 2 contributes 1
    const Complex s{0.0, 2.0 * M_PI / std::log(2.0)};
    EXPECT_LT(std::abs(cache().sigma(s, 8) - Complex{4.0, 0.0}), 1e-9);
}

TEST(Sigma, MultiplicativityOnCoprimePairs) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> pick(2, 10000);
    const std::vector<Complex> svals = {{0.0, 0.0}, {1.0, 0.0}, {-0.5, 0.0}, {0.3, 1.1}, {-1.2, -0.7}};
    int tested = 0;
    while (tested < 300) {
        const std::int64_t m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1 || m * n > cache().limit()) continue;
        ++tested;
        for (const Complex& s : svals) {
            const Complex lhs = cache().sigma(s, m * n);
            const Complex rhs = cache().sigma(s, m) * cache().sigma(s, n);
            EXPECT_LT(rel_err(lhs, rhs), 1e-12) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Sigma, DivisorPairingSymmetry) {
    // sigma_s(n) = n^s sigma_{-s}(n)
    const std::vector<Complex> svals = {{0.7, 0.0}, {1.5, 0.4}, {-0.8, 1.2}};
    for (std::int64_t n : {2, 12, 360, 9973, 100000}) {
        for (const Complex& s : svals) {
            const Complex lhs = cache().sigma(s, n);
            const Complex rhs =
                cpow_principal(Complex(static_cast<double>(n), 0.0), s) * cache().sigma(-s, n);
            EXPECT_LT(rel_err(lhs, rhs), 1e-12) << "n=" << n;
        }
    }
}

TEST(SumExponential, GeometricSeries) {
    const SeriesResult r = sum_exponential(
        [](std::int64_t n) { return Complex{std::pow(2.0, -static_cast<double>(n)), 0.0}; },
        std::log(2.0), 1e-12);
    EXPECT_EQ(r.verdict, SeriesVerdict::converged);
    EXPECT_LT(std::abs(r.value - Complex{1.0, 0.0}), 1e-11);
    EXPECT_LT(std::abs(r.value - Complex{1.0, 0.0}), r.abs_err);
}

TEST(SumExponential, AllZeroTerms) {
    const SeriesResult r =
        sum_exponential([](std::int64_t) { return Complex{0.0, 0.0}; }, 1.0, 1e-10);
    EXPECT_EQ(r.verdict, SeriesVerdict::converged);
    EXPECT_EQ(r.value, (Complex{0.0, 0.0}));
}

TEST(SumExponential, SqrtRateEnvelope) {
    // terms ~ exp(-3 sqrt n): genuinely sqrt-exponential decay
    const SeriesResult r = sum_exponential(
        [](std::int64_t n) {
            return Complex{std::exp(-3.0 * std::sqrt(static_cast<double>(n))), 0.0};
        },
        3.0, 1e-12);
    EXPECT_EQ(r.verdict, SeriesVerdict::converged);
    double brute = 0.0;
    for (std::int64_t n = 1; n <= 5000; ++n)
        brute += std::exp(-3.0 * std::sqrt(static_cast<double>(n)));
    EXPECT_LT(std::abs(r.value.real() - brute), 1e-10);
}

TEST(SumAlgebraic, BaselSeries) {
    const SeriesResult r = sum_algebraic(
        [](std::int64_t n) {
            const double nd = static_cast<double>(n);
            return Complex{1.0 / (nd * nd), 0.0};
        },
        2.0, 1e-7, 10000);
    EXPECT_EQ(r.verdict, SeriesVerdict::converged);
    EXPECT_LT(std::abs(r.value.real() - M_PI * M_PI / 6.0), r.abs_err);
}

TEST(SumAlgebraic, ZetaThreeHalves) {
    const SeriesResult r = sum_algebraic(
        [](std::int64_t n) {
            return Complex{std::pow(static_cast<double>(n), -1.5), 0.0};
        },
        1.5, 1e-6, 10000);
    EXPECT_LT(std::abs(r.value - ref::zeta_32), r.abs_err);
}

TEST(SumAlgebraic, NonSummableExponentInconclusive) {
    const SeriesResult r = sum_algebraic(
        [](std::int64_t n) { return Complex{1.0 / static_cast<double>(n), 0.0}; }, 1.0, 1e-6,
        10000);
    EXPECT_EQ(r.verdict, SeriesVerdict::inconclusive);
}

TEST(DetectDivergence, Canonical) {
    EXPECT_EQ(detect_divergence(
                  [](std::int64_t n) { return Complex{1.0 / static_cast<double>(n), 0.0}; }, 32),
              SeriesVerdict::diverged);
    EXPECT_EQ(detect_divergence(
                  [](std::int64_t n) {
                      return Complex{std::pow(2.0, -static_cast<double>(n)), 0.0};
                  },
                  32),
              SeriesVerdict::converged);
    EXPECT_EQ(detect_divergence(
                  [](std::int64_t n) {
                      return Complex{std::pow(static_cast<double>(n), -0.5), 0.0};
                  },
                  64),
              SeriesVerdict::diverged);
    EXPECT_EQ(detect_divergence(
                  [](std::int64_t n) {
                      const double nd = static_cast<double>(n);
                      return Complex{1.0 / (nd * nd), 0.0};
                  },
                  32),
              SeriesVerdict::converged);
    EXPECT_THROW(detect_divergence([](std::int64_t) { return Complex{0.0, 0.0}; }, 8),
                 DomainError);
}

TEST(DirichletSigmaSeries, ClosedForm) {
    EXPECT_LT(rel_err(dirichlet_sigma_series({0.0, 0.0}, {2.0, 0.0}),
                      {std::pow(M_PI, 4) / 36.0, 0.0}),
              1e-12);
    // s=1, w=3 -> zeta(3) zeta(2), cross-checked against a direct partial sum
    const Complex closed = dirichlet_sigma_series({1.0, 0.0}, {3.0, 0.0});
    Complex direct{0.0, 0.0};
    for (std::int64_t n = 1; n <= 100000; ++n)
        direct += cache().sigma({1.0, 0.0}, n) / std::pow(static_cast<double>(n), 3.0);
    EXPECT_LT(std::abs(closed - direct), 2e-9);
    EXPECT_THROW(dirichlet_sigma_series({0.0, 0.0}, {1.0, 0.0}), DomainError);
}

TEST(DirichletSigmaSeries, PartialPlusAlgebraicTailMatches) {
    // closed form equals direct partial sum + fitted algebraic tail within
    // the combined error estimate at several (s, w) points
    struct Pt {
        Complex s, w;
    };
    for (const Pt& p : {Pt{{0.0, 0.0}, {2.0, 0.0}}, Pt{{0.5, 0.0}, {2.5, 0.0}},
                        Pt{{1.0, 0.0}, {3.5, 0.0}}, Pt{{-0.5, 0.0}, {1.8, 0.0}},
                        Pt{{0.25, 0.0}, {2.25, 0.0}}}) {
        const Complex closed = dirichlet_sigma_series(p.s, p.w);
        const SeriesResult tail = sum_algebraic(
            [&](std::int64_t n) {
                return cache().sigma(p.s, n) *
                       cpow_principal(Complex(static_cast<double>(n), 0.0), -p.w);
            },
            (p.w - p.s).real(), 1e-7, 20000);
        EXPECT_LT(std::abs(closed - tail.value), tail.abs_err + 1e-10)
            << "w=" << p.w.real();
    }
}
