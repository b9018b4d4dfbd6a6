#pragma once

#include <complex>
#include <cstdint>

#include "koshlab/errors.hpp"

namespace koshlab {

using Complex = std::complex<double>;

// Result of a numerical evaluation: value, an absolute error estimate, and a
// count of elementary function evaluations spent.
struct EvalResult {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
    std::int64_t evals = 1;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// e^{i pi/4} and its conjugate.
inline const Complex kEps{0.70710678118654752440084436210484904, 0.70710678118654752440084436210484904};
inline const Complex kEpsBar{0.70710678118654752440084436210484904, -0.70710678118654752440084436210484904};

// Principal argument normalized so the cut sits on the negative real axis and
// arg(z) in (-pi, pi]; real-negative inputs land on +pi.
double principal_arg(Complex z);

// Principal log: log|z| + i*principal_arg(z).
Complex principal_log(Complex z);

// Principal square root, Re >= 0 and Im >= 0 on the imaginary axis.
Complex csqrt_principal(Complex z);

// exp(p * Log z) with the principal log. z = 0 is allowed only for Re(p) > 0.
Complex cpow_principal(Complex z, Complex p);

// Gamma function via a fixed rational approximation in the right half-plane
// plus reflection; relative error <= ~2e-13 for |z| <= 50 away from poles.
Complex gamma(Complex z);

// 1/Gamma, entire: returns exactly 0 at nonpositive integers.
Complex rgamma(Complex z);

// Logarithmic derivative of Gamma; psi(1) = -euler_gamma.
Complex digamma(Complex z);

// Riemann zeta: Euler-Maclaurin for Re(s) >= 1/2, functional equation below.
Complex zeta(Complex s);

// Gauss hypergeometric 2F1 for |z| < 1 (argument-shrinking transformation
// applied when useful); terminating series summed exactly.
EvalResult hyp2f1(Complex a, Complex b, Complex c, Complex z);

namespace detail {
// True if z is within tol of a nonpositive integer (returns it through n).
bool near_nonpositive_integer(Complex z, std::int64_t& n, double tol = 1e-13);
// Pochhammer (x)_k as a complex product.
Complex pochhammer(Complex x, int k);
}  // namespace detail

}  // namespace koshlab
