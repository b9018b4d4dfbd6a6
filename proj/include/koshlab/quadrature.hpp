#pragma once

#include <functional>
#include <optional>

#include "koshlab/complexcore.hpp"

namespace koshlab {

// Integrand over (0, inf) with decay/oscillation hints used by the
// semi-infinite driver to pick a truncation point or a lobe partition.
struct Integrand {
    enum class Decay { exponential, algebraic };

    std::function<Complex(double)> eval;
    Decay decay = Decay::exponential;
    // exponential: |f(t)| <~ C e^{-rate t};  algebraic: |f(t)| <~ C t^{-rate}
    double decay_rate = 1.0;
    // estimated zero spacing of the oscillatory kernel, if any
    std::optional<double> oscillation_period;
    // phase offset of the first kernel zero (defaults to period/4)
    std::optional<double> first_zero;
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
    double tail_bound = 0.0;
    std::int64_t subintervals = 0;
    std::int64_t evals = 0;
};

// Adaptive 15-point Gauss-Kronrod bisection on [a, b]; integrable endpoint
// behavior t^sigma (sigma > -1) at a is handled by an initial graded mesh.
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol);

// Semi-infinite integral. Exponential decay: truncate where the analytic tail
// bound drops below tol/4. Oscillatory algebraic decay: integrate kernel lobes
// and accelerate the alternating lobe series by iterated Euler transformation.
QuadResult integrate_semi_infinite(const Integrand& f, double tol);

}  // namespace koshlab
