#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "koshlab/complexcore.hpp"

namespace koshlab {

// Smallest-prime-factor sieve; sigma_s(n) for complex s via the
// multiplicative formula over the factorization of n.
class SigmaCache {
  public:
    explicit SigmaCache(std::int64_t limit = 1000000);

    std::int64_t limit() const { return limit_; }
    Complex sigma(Complex s, std::int64_t n) const;

  private:
    std::int64_t limit_;
    std::vector<std::int32_t> spf_;
};

Complex sigma(Complex s, std::int64_t n, const SigmaCache& cache);

enum class SeriesVerdict { converged, diverged, inconclusive };

struct SeriesResult {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
    std::int64_t terms_used = 0;
    SeriesVerdict verdict = SeriesVerdict::inconclusive;
};

// Sums terms bounded by C e^{-rate sqrt(n)}; stops once |term| stays below
// tol * max(1, |partial|) for 5 consecutive n (n >= 8), with an envelope
// integral bounding the dropped tail.
SeriesResult sum_exponential(const std::function<Complex(std::int64_t)>& term, double rate,
                             double tol);

// Sums n_direct terms of an eventually ~C n^{-p} series, fits (C, p) on the
// last decade by log-log regression and adds the integral tail estimate.
// Escalates n_direct by 10x (up to 1e6) while the tail uncertainty exceeds tol.
SeriesResult sum_algebraic(const std::function<Complex(std::int64_t)>& term,
                           double exponent_hint, double tol, std::int64_t n_direct);

// Ratio/trend/decay-fit divergence detector; window >= 16.
SeriesVerdict detect_divergence(const std::function<Complex(std::int64_t)>& term, int window,
                                std::int64_t max_terms = 100000);

// sum sigma_s(n) n^{-w} = zeta(w) zeta(w-s) for Re(w) > 1, Re(w-s) > 1.
Complex dirichlet_sigma_series(Complex s, Complex w);

namespace detail {
// Log-log least-squares fit |term(n)| ~ C n^{-p} over [lo, hi]; returns the
// fitted exponent p and, through C_out/resid_out, the scale and fit residual.
double fit_decay_exponent(const std::function<Complex(std::int64_t)>& term, std::int64_t lo,
                          std::int64_t hi, double* C_out = nullptr,
                          double* resid_out = nullptr);
}  // namespace detail

}  // namespace koshlab
