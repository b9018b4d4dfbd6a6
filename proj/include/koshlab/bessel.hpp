#pragma once

#include <cstdint>

#include "koshlab/complexcore.hpp"

namespace koshlab {

// Bessel order with the integer/near-integer classification used to pick
// evaluation routes. Orders within 1e-9 of an integer are treated as integer;
// within (1e-9, 1e-6] the integer-order series plus a first-order correction
// in the order is used (documented accuracy ~1e-8 there).
struct BesselOrder {
    Complex s;
    BesselOrder(Complex v) : s(v) {}            // NOLINT(runtime/explicit)
    BesselOrder(double v) : s(v, 0.0) {}        // NOLINT(runtime/explicit)
    BesselOrder(int v) : s(v, 0.0) {}           // NOLINT(runtime/explicit)

    bool integer_order() const;
    bool near_integer() const;
    std::int64_t rounded() const;
};

// Decay envelope bound |kernel(x)| <= bound * x^{-1/2} for x >= valid_from.
struct KernelEnvelope {
    enum class Regime { small_argument, transition, asymptotic };
    Regime regime = Regime::asymptotic;
    double bound = 0.0;
    double valid_from = 1.0;

    double at(double x) const;
};

// Bessel functions of complex order and complex argument, |arg z| < pi.
EvalResult bessel_j(BesselOrder s, Complex z);
EvalResult bessel_y(BesselOrder s, Complex z);
EvalResult bessel_i(BesselOrder s, Complex z);
EvalResult bessel_k(BesselOrder s, Complex z);

// M_s(x) = (2/pi) K_s(x) - Y_s(x) for x > 0.
EvalResult m_kernel(BesselOrder s, double x);

// F_s(x) = M_s(x) cos(pi s/2) - J_s(x) sin(pi s/2) for x > 0.
EvalResult koshliakov_kernel(BesselOrder s, double x);

// Numerically fitted envelope for |F_s|, inflated by a factor 2.
KernelEnvelope kernel_envelope(BesselOrder s, double from);

namespace detail {
// Individual evaluation regimes, exposed for the regime-continuity tests.
EvalResult bessel_j_series(Complex s, Complex z);
EvalResult bessel_j_asymptotic(Complex s, Complex z);
EvalResult bessel_y_small(BesselOrder s, Complex z);
EvalResult bessel_y_asymptotic(Complex s, Complex z);
EvalResult bessel_i_series(Complex s, Complex z);
EvalResult bessel_i_asymptotic(Complex s, Complex z);
EvalResult bessel_k_small(BesselOrder s, Complex z);
EvalResult bessel_k_asymptotic(Complex s, Complex z);
}  // namespace detail

}  // namespace koshlab
