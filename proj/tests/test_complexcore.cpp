#include "koshlab/complexcore.hpp"

#include <cmath>
#include <gtest/gtest.h>
#include <random>

#include "reference_values.hpp"

using namespace koshlab;

namespace {

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST(CsqrtPrincipal, KnownValues) {
    EXPECT_EQ(csqrt_principal({4.0, 0.0}), (Complex{2.0, 0.0}));
    EXPECT_EQ(csqrt_principal({-1.0, 0.0}), (Complex{0.0, 1.0}));
    // solve w^2 = 3+4i by hand, pick Re >= 0: w = 2+i
    EXPECT_LT(std::abs(csqrt_principal({3.0, 4.0}) - Complex(2.0, 1.0)), 1e-15);
}

TEST(CsqrtPrincipal, SquareRoundTripOnGrid) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 10000; ++i) {
        const Complex z{dist(rng), dist(rng)};
        const Complex w = csqrt_principal(z);
        EXPECT_GE(w.real(), 0.0);
        if (w.real() == 0.0) EXPECT_GE(w.imag(), 0.0);
        EXPECT_LT(std::abs(w * w - z), 4e-15 * std::abs(z) + 1e-300);
    }
}

TEST(CpowPrincipal, KnownValues) {
    EXPECT_EQ(cpow_principal({1.0, 0.0}, {2.7, -3.1}), (Complex{1.0, 0.0}));
    EXPECT_LT(std::abs(cpow_principal({-1.0, 0.0}, {0.5, 0.0}) - csqrt_principal({-1.0, 0.0})),
              1e-15);
    EXPECT_LT(std::abs(cpow_principal({2.0, 0.0}, {3.0, 0.0}) - Complex(8.0, 0.0)), 1e-14);
}

TEST(CpowPrincipal, ZeroBase) {
    EXPECT_EQ(cpow_principal({0.0, 0.0}, {2.0, 0.0}), (Complex{0.0, 0.0}));
    EXPECT_THROW(cpow_principal({0.0, 0.0}, {-1.0, 0.0}), DomainError);
    EXPECT_THROW(cpow_principal({0.0, 0.0}, {0.0, 2.0}), DomainError);
}

TEST(Gamma, ClassicalValues) {
    EXPECT_LT(rel_err(gamma({0.5, 0.0}), {std::sqrt(M_PI), 0.0}), 1e-14);
    EXPECT_LT(rel_err(gamma({5.0, 0.0}), {24.0, 0.0}), 1e-13);
    EXPECT_LT(rel_err(gamma({0.5, 1.0}), ref::gamma_half_plus_i), 1e-13);
    EXPECT_LT(rel_err(gamma({-3.2, 1.7}), ref::gamma_c_m3_2), 1e-12);
}

TEST(Gamma, PoleErrorCarriesInteger) {
    try {
        gamma({-3.0, 0.0});
        FAIL() << "expected PoleError";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.pole_at, -3);
    }
    EXPECT_THROW(gamma({0.0, 0.0}), PoleError);
}

TEST(Gamma, RecurrenceOnGrid) {
    // Gamma(z+1) = z Gamma(z), |z| <= 30, away from poles
    for (double re = -29.0; re <= 29.0; re += 2.3) {
        for (double im : {0.0, 0.37, 2.2, 7.9}) {
            const Complex z{re + 0.211, im};
            if (std::abs(z) > 30.0) continue;
            const Complex lhs = gamma(z + 1.0);
            const Complex rhs = z * gamma(z);
            EXPECT_LT(rel_err(lhs, rhs), 1e-12) << "z = " << re << "+" << im << "i";
        }
    }
}

TEST(Gamma, ReflectionOnGrid) {
    for (double re : {-4.3, -1.7, 0.31, 0.77, 3.6}) {
        for (double im : {0.0, 0.5, 3.1}) {
            const Complex z{re, im};
            const Complex prod = gamma(z) * gamma(1.0 - z) * std::sin(M_PI * z);
            EXPECT_LT(rel_err(prod, {M_PI, 0.0}), 1e-11) << "z = " << re << "+" << im << "i";
        }
    }
    // cosine variant: Gamma(1/2+t) Gamma(1/2-t) = pi / cos(pi t)
    for (double t : {0.1, 0.26, 0.4, -0.33}) {
        const Complex prod = gamma({0.5 + t, 0.0}) * gamma({0.5 - t, 0.0});
        EXPECT_LT(rel_err(prod, {M_PI / std::cos(M_PI * t), 0.0}), 1e-11);
    }
}

TEST(Digamma, KnownValues) {
    EXPECT_LT(std::abs(digamma({1.0, 0.0}) - Complex(-kEulerGamma, 0.0)), 1e-14);
    EXPECT_LT(std::abs(digamma({2.0, 0.0}) - Complex(1.0 - kEulerGamma, 0.0)), 1e-14);
    EXPECT_LT(rel_err(digamma({0.5, 0.0}), ref::digamma_half), 1e-13);
    EXPECT_LT(rel_err(digamma({2.5, -1.25}), ref::digamma_c), 1e-13);
    EXPECT_THROW(digamma({-2.0, 0.0}), PoleError);
}

TEST(Digamma, Recurrence) {
    for (double re : {-3.3, 0.4, 2.2, 11.0}) {
        const Complex z{re, 0.83};
        EXPECT_LT(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z), 1e-13);
    }
}

TEST(Zeta, ClassicalValues) {
    EXPECT_LT(std::abs(zeta({0.0, 0.0}) - Complex(-0.5, 0.0)), 1e-12);
    EXPECT_LT(rel_err(zeta({2.0, 0.0}), {M_PI * M_PI / 6.0, 0.0}), 1e-12);
    EXPECT_LT(rel_err(zeta({0.5, 0.0}), ref::zeta_half), 1e-11);
    EXPECT_LT(rel_err(zeta({3.0, 0.0}), ref::zeta_3), 1e-12);
    EXPECT_LT(rel_err(zeta({2.0, 3.0}), ref::zeta_c_2_3), 1e-12);
    EXPECT_LT(rel_err(zeta({0.25, 0.0}), ref::zeta_quarter), 1e-11);
    EXPECT_THROW(zeta({1.0, 0.0}), PoleError);
}

TEST(Zeta, FunctionalEquationSelfConsistency) {
    // zeta(-s) computed directly vs the asymmetric functional-equation form
    for (double s = 0.1; s <= 5.0; s += 0.35) {
        for (double im : {0.0, 0.8}) {
            const Complex sc{s, im};
            const Complex direct = zeta(-sc);
            const Complex via_fe = -cpow_principal({2.0, 0.0}, -sc) *
                                   cpow_principal({M_PI, 0.0}, -sc - 1.0) * gamma(1.0 + sc) *
                                   zeta(1.0 + sc) * std::sin(0.5 * M_PI * sc);
            EXPECT_LT(std::abs(direct - via_fe), 1e-10 * std::max(1.0, std::abs(via_fe)))
                << "s = " << s << "+" << im << "i";
        }
    }
}

TEST(Hyp2f1, KnownValues) {
    EXPECT_EQ(hyp2f1({0.3, 0.1}, {1.2, 0.0}, {0.9, 0.0}, {0.0, 0.0}).value,
              (Complex{1.0, 0.0}));
    // terminating series: closed value 7/4
    EXPECT_LT(std::abs(hyp2f1({-1.5, 0.0}, {-1.0, 0.0}, {0.5, 0.0}, {0.25, 0.0}).value -
                       Complex(1.75, 0.0)),
              1e-15);
    // b = 0 terminates at the constant term
    EXPECT_EQ(hyp2f1({0.7, 0.0}, {0.0, 0.0}, {1.7, 0.0}, {0.4, 0.2}).value,
              (Complex{1.0, 0.0}));
    EXPECT_LT(rel_err(hyp2f1({0.5, 0.0}, {1.25, 0.0}, {2.75, 0.0}, {0.3, 0.2}).value,
                      ref::hyp2f1_a),
              1e-13);
    // argument-shrinking transformation exercised at z = -4
    EXPECT_LT(rel_err(hyp2f1({0.5, 0.0}, {1.25, 0.0}, {2.75, 0.0}, {-4.0, 0.0}).value,
                      ref::hyp2f1_pfaff_pt),
              1e-12);
}

TEST(Hyp2f1, Errors) {
    EXPECT_THROW(hyp2f1({0.5, 0.0}, {1.5, 0.0}, {-2.0, 0.0}, {0.3, 0.0}), DomainError);
    EXPECT_THROW(hyp2f1({0.5, 0.0}, {1.5, 0.0}, {2.0, 0.0}, {1.2, 0.4}),
                 UnsupportedRegionError);
}

TEST(Hyp2f1, PfaffInvariance) {
    // 2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a,b;c;z/(z-1)) for |z| <= 0.5
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pd(-2.0, 2.0), zd(-0.5, 0.5);
    for (int i = 0; i < 200; ++i) {
        const Complex a{pd(rng), 0.3 * pd(rng)};
        const Complex b{pd(rng), 0.3 * pd(rng)};
        const Complex c{pd(rng) + 2.5, 0.3 * pd(rng)};
        const Complex z{zd(rng), zd(rng)};
        if (std::abs(z) > 0.5) continue;
        const Complex lhs = hyp2f1(a, b, c, z).value;
        const Complex rhs =
            cpow_principal(1.0 - z, -b) * hyp2f1(c - a, b, c, z / (z - 1.0)).value;
        EXPECT_LT(rel_err(lhs, rhs), 1e-10);
    }
}

TEST(Hyp2f1, GeneralizedBinomialTheorem) {
    // 2F1(a, b; b; z) = (1-z)^{-a}
    for (double a : {0.4, 1.7, -0.8}) {
        for (double z : {-0.6, -0.2, 0.15, 0.55}) {
            const Complex lhs = hyp2f1({a, 0.0}, {1.3, 0.0}, {1.3, 0.0}, {z, 0.0}).value;
            const Complex rhs = cpow_principal({1.0 - z, 0.0}, {-a, 0.0});
            EXPECT_LT(rel_err(lhs, rhs), 1e-11);
        }
    }
}

TEST(Hyp2f1, QuadraticTransformation) {
    // 2F1(a,b;2b;x) = ((1+s)/2)^{-2a} 2F1(a, a-b+1/2; b+1/2; ((1-s)/(1+s))^2),
    // s = sqrt(1-x)
    for (double a : {0.35, 1.2}) {
        for (double b : {0.6, 1.4}) {
            for (double x : {0.12, 0.35, 0.62}) {
                const Complex lhs = hyp2f1({a, 0.0}, {b, 0.0}, {2.0 * b, 0.0}, {x, 0.0}).value;
                const double s = std::sqrt(1.0 - x);
                const double q = (1.0 - s) / (1.0 + s);
                const Complex rhs =
                    std::pow(0.5 * (1.0 + s), -2.0 * a) *
                    hyp2f1({a, 0.0}, {a - b + 0.5, 0.0}, {b + 0.5, 0.0}, {q * q, 0.0}).value;
                EXPECT_LT(rel_err(lhs, rhs), 1e-11);
            }
        }
    }
}
