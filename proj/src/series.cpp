#include "koshlab/series.hpp"

#include <algorithm>
#include <cmath>

namespace koshlab {

SigmaCache::SigmaCache(std::int64_t limit) : limit_(limit) {
    if (limit < 2) throw DomainError("SigmaCache: limit must be at least 2");
    spf_.assign(static_cast<size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) spf_[i] = static_cast<std::int32_t>(i);
    for (std::int64_t p = 2; p * p <= limit; ++p) {
        if (spf_[p] != p) continue;
        for (std::int64_t m = p * p; m <= limit; m += p) {
            if (spf_[m] == m) spf_[m] = static_cast<std::int32_t>(p);
        }
    }
}

Complex SigmaCache::sigma(Complex s, std::int64_t n) const {
    if (n < 1) throw DomainError("sigma: n must be >= 1");
    if (n > limit_) throw CacheMissError("sigma: n exceeds the sieve limit");
    Complex result{1.0, 0.0};
    while (n > 1) {
        const std::int64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        const Complex ps = cpow_principal(Complex(static_cast<double>(p), 0.0), s);
        if (std::abs(ps - Complex{1.0, 0.0}) < 1e-12) {
            // p^s ~ 1: sum the geometric block directly
            Complex block{1.0, 0.0}, pw{1.0, 0.0};
            for (int j = 1; j <= e; ++j) {
                pw *= ps;
                block += pw;
            }
            result *= block;
        } else {
            Complex pse = ps;
            for (int j = 1; j < e + 1; ++j) pse *= ps;  // ps^{e+1}
            result *= (pse - 1.0) / (ps - 1.0);
        }
    }
    return result;
}

Complex sigma(Complex s, std::int64_t n, const SigmaCache& cache) { return cache.sigma(s, n); }

SeriesResult sum_exponential(const std::function<Complex(std::int64_t)>& term, double rate,
                             double tol) {
    if (!(rate > 0.0)) throw DomainError("sum_exponential: rate must be positive");
    if (!(tol > 0.0)) throw DomainError("sum_exponential: tol must be positive");
    Complex sum{0.0, 0.0};
    int streak = 0;
    double envelope_scale = 0.0;
    constexpr std::int64_t kCap = 1000000;
    for (std::int64_t n = 1; n <= kCap; ++n) {
        const Complex t = term(n);
        sum += t;
        const double mag = std::abs(t);
        envelope_scale = std::max(envelope_scale, mag * std::exp(rate * std::sqrt(static_cast<double>(n))));
        if (mag < tol * std::max(1.0, std::abs(sum)) && n >= 8) {
            if (++streak == 5) {
                // tail <= int_n^inf C e^{-r sqrt(x)} dx = 2C (1 + r sqrt(n)) e^{-r sqrt(n)} / r^2
                const double rs = rate * std::sqrt(static_cast<double>(n));
                const double tail = 2.0 * envelope_scale * (1.0 + rs) * std::exp(-rs) / (rate * rate);
                return {sum, tail + std::abs(sum) * 1e-15 * std::sqrt(static_cast<double>(n)), n,
                        SeriesVerdict::converged};
            }
        } else {
            streak = 0;
        }
    }
    return {sum, std::abs(sum), kCap, SeriesVerdict::inconclusive};
}

namespace detail {

double fit_decay_exponent(const std::function<Complex(std::int64_t)>& term, std::int64_t lo,
                          std::int64_t hi, double* C_out, double* resid_out) {
    // log-log least squares on up to 512 sample points in [lo, hi]
    const std::int64_t span = hi - lo + 1;
    const std::int64_t stride = std::max<std::int64_t>(1, span / 512);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::int64_t m = 0;
    for (std::int64_t n = lo; n <= hi; n += stride) {
        const double mag = std::abs(term(n));
        if (mag <= 0.0) continue;
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(mag);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 8) {
        if (C_out) *C_out = 0.0;
        if (resid_out) *resid_out = HUGE_VAL;
        return 0.0;
    }
    const double md = static_cast<double>(m);
    const double denom = md * sxx - sx * sx;
    const double slope = (md * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / md;
    if (C_out) *C_out = std::exp(intercept);
    if (resid_out) {
        double ss = 0.0;
        std::int64_t k = 0;
        for (std::int64_t n = lo; n <= hi; n += stride) {
            const double mag = std::abs(term(n));
            if (mag <= 0.0) continue;
            const double d = std::log(mag) - (intercept + slope * std::log(static_cast<double>(n)));
            ss += d * d;
            ++k;
        }
        *resid_out = std::sqrt(ss / static_cast<double>(k));
    }
    return -slope;
}

}  // namespace detail

SeriesResult sum_algebraic(const std::function<Complex(std::int64_t)>& term,
                           double exponent_hint, double tol, std::int64_t n_direct) {
    if (!(tol > 0.0)) throw DomainError("sum_algebraic: tol must be positive");
    if (n_direct < 128) n_direct = 128;

    Complex sum{0.0, 0.0};
    std::int64_t summed = 0;
    constexpr std::int64_t kCap = 1000000;
    double tail = 0.0, tail_unc = 0.0, p = 0.0;

    std::int64_t target = std::min(n_direct, kCap);
    while (true) {
        for (std::int64_t n = summed + 1; n <= target; ++n) sum += term(n);
        summed = target;

        // fit over the last quarter of the direct terms (at least 32 points)
        std::int64_t lo = std::max<std::int64_t>(summed - summed / 4, 32);
        if (lo >= summed) lo = std::max<std::int64_t>(1, summed / 2);
        double C = 0.0, resid = 0.0;
        p = detail::fit_decay_exponent(term, lo, summed, &C, &resid);
        if (resid == HUGE_VAL && exponent_hint > 1.05) p = exponent_hint;  // fit starved
        if (!(p > 1.05)) {
            if (summed < kCap) {
                target = std::min(summed * 10, kCap);
                continue;
            }
            return {sum, std::abs(sum), summed, SeriesVerdict::inconclusive};
        }
        tail = C * std::pow(static_cast<double>(summed), 1.0 - p) / (p - 1.0);
        tail_unc = tail * std::max(0.5, std::min(4.0, resid));
        if (tail_unc <= tol || summed >= kCap) break;
        target = std::min(summed * 10, kCap);
    }

    SeriesResult out;
    out.value = sum + tail;
    out.abs_err = tail_unc + std::abs(sum) * 1e-15 * std::log2(static_cast<double>(summed) + 2.0);
    out.terms_used = summed;
    out.verdict = (tail_unc <= tol) ? SeriesVerdict::converged : SeriesVerdict::inconclusive;
    return out;
}

SeriesVerdict detect_divergence(const std::function<Complex(std::int64_t)>& term, int window,
                                std::int64_t max_terms) {
    if (window < 16) throw DomainError("detect_divergence: window must be >= 16");

    std::int64_t zeros = 0;
    std::int64_t n = 1;
    std::int64_t block_end = std::max<std::int64_t>(4 * window, 64);
    int diverged_blocks = 0;
    int converged_blocks = 0;

    while (n <= max_terms) {
        // advance to the end of the current block, tracking the last `window` terms
        std::vector<double> tailmag;
        tailmag.reserve(window);
        for (; n <= block_end && n <= max_terms; ++n) {
            const double mag = std::abs(term(n));
            if (mag == 0.0) ++zeros;
            if (block_end - n < window) tailmag.push_back(mag);
        }
        if (zeros >= block_end - 1) return SeriesVerdict::converged;  // identically ~0

        // geometric-mean ratio over the last window
        double ratio_gm = 0.0;
        int rc = 0;
        for (size_t i = 1; i < tailmag.size(); ++i) {
            if (tailmag[i] > 0 && tailmag[i - 1] > 0) {
                ratio_gm += std::log(tailmag[i] / tailmag[i - 1]);
                ++rc;
            }
        }
        ratio_gm = rc ? std::exp(ratio_gm / rc) : 0.0;

        // trend: mean of the second half vs the first half of the window
        double first_half = 0.0, second_half = 0.0;
        const size_t half = tailmag.size() / 2;
        for (size_t i = 0; i < tailmag.size(); ++i)
            (i < half ? first_half : second_half) += tailmag[i];
        const bool non_decreasing = second_half * half >= first_half * (tailmag.size() - half);

        // decay-exponent fit over the last decade
        const std::int64_t hi = std::min(n - 1, max_terms);
        const std::int64_t lo = std::max<std::int64_t>(hi / 4, 16);
        const double p = detail::fit_decay_exponent(term, lo, hi);

        const bool ratio_near_one = ratio_gm > 1.0 - 1.0 / window;
        if (ratio_near_one && (non_decreasing || p <= 1.05)) {
            if (++diverged_blocks >= 2) return SeriesVerdict::diverged;
        } else {
            diverged_blocks = 0;
        }
        if (!ratio_near_one || p > 1.15) {
            if (++converged_blocks >= 2 && (ratio_gm < 1.0 - 1.0 / window || p > 1.15))
                return SeriesVerdict::converged;
        } else {
            converged_blocks = 0;
        }
        block_end = std::min(block_end * 2, max_terms);
        if (n > block_end) break;
    }
    return SeriesVerdict::inconclusive;
}

Complex dirichlet_sigma_series(Complex s, Complex w) {
    if (!(w.real() > 1.0) || !((w - s).real() > 1.0))
        throw DomainError("dirichlet_sigma_series: requires Re(w) > 1 and Re(w - s) > 1");
    return zeta(w) * zeta(w - s);
}

}  // namespace koshlab
