#include "koshlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

namespace koshlab {

namespace {

// QUADPACK dqk15 nodes/weights on [-1, 1] (7-point Gauss embedded).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    Complex value{0.0, 0.0};
    double err = 0.0;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b,
                 std::int64_t& evals) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    Complex kron{0.0, 0.0}, gauss{0.0, 0.0};
    double kron_abs = 0.0;
    for (int i = 0; i < 7; ++i) {
        const Complex fp = f(c + h * kXgk[i]);
        const Complex fm = f(c - h * kXgk[i]);
        kron += kWgk[i] * (fp + fm);
        kron_abs += kWgk[i] * (std::abs(fp) + std::abs(fm));
        if (i % 2 == 1) gauss += kWg[i / 2] * (fp + fm);
    }
    const Complex f0 = f(c);
    kron += kWgk[7] * f0;
    kron_abs += kWgk[7] * std::abs(f0);
    gauss += kWg[3] * f0;
    evals += 15;

    PanelResult out;
    out.value = kron * h;
    const double diff = std::abs(kron - gauss) * std::abs(h);
    // sharpened estimate for smooth panels, floored by roundoff on |f|
    const double sharpened = diff > 0.0 ? std::min(diff, std::pow(200.0 * diff, 1.5)) : 0.0;
    out.err = std::max(sharpened, kron_abs * std::abs(h) * 5e-16);
    return out;
}

struct Interval {
    double a, b;
    Complex value;
    double err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol) {
    if (!(a >= 0.0) || !(b > a) || !std::isfinite(b))
        throw DomainError("integrate_finite: requires 0 <= a < b < inf");
    if (!(tol > 0.0)) throw DomainError("integrate_finite: tol must be positive");

    QuadResult out;
    std::priority_queue<Interval> heap;
    Complex total{0.0, 0.0};
    double total_err = 0.0;

    auto push_panel = [&](double lo, double hi) {
        const PanelResult p = gk15(f.eval, lo, hi, out.evals);
        heap.push({lo, hi, p.value, p.err});
        total += p.value;
        total_err += p.err;
        ++out.subintervals;
    };

    // graded initial mesh toward a (handles integrable endpoint behavior);
    // panel widths shrink by 4x down to a scale set by the tolerance
    const double span = b - a;
    int grades = static_cast<int>(std::ceil(std::log(1e4 / (tol * tol)) / std::log(4.0)));
    grades = std::clamp(grades, 8, 40);
    double lo = a;
    std::vector<double> cuts;
    for (int g = grades; g >= 1; --g) cuts.push_back(a + span * std::pow(4.0, -g));
    cuts.push_back(b);
    for (double hi : cuts) {
        if (hi > lo) push_panel(lo, hi);
        lo = hi;
    }

    constexpr std::int64_t kMaxIntervals = 1 << 16;
    while (total_err > tol && !heap.empty()) {
        if (out.subintervals + 1 > kMaxIntervals) {
            throw ConvergenceError("integrate_finite: subdivision cap exceeded", total,
                                   total_err);
        }
        const Interval worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.err;
        --out.subintervals;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at roundoff width; keep its contribution as-is
            heap.push(worst);
            total += worst.value;
            total_err += worst.err;
            ++out.subintervals;
            break;
        }
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
    }

    // deterministic final summation in interval order
    std::vector<Interval> parts;
    parts.reserve(heap.size());
    while (!heap.empty()) {
        parts.push_back(heap.top());
        heap.pop();
    }
    std::sort(parts.begin(), parts.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });
    Complex value{0.0, 0.0};
    double err = 0.0;
    for (const Interval& p : parts) {
        value += p.value;
        err += p.err;
    }
    out.value = value;
    out.abs_err = err;
    out.tail_bound = 0.0;
    return out;
}

namespace {

// Iterated Euler transformation of the alternating lobe series sum_k L_k.
// Returns the accelerated sum; diff_out reports the last stabilization step.
Complex euler_accelerate(const std::vector<Complex>& lobes, double tol, double& diff_out,
                         bool& converged) {
    // partial sums
    std::vector<Complex> row(lobes.size());
    Complex acc{0.0, 0.0};
    for (size_t i = 0; i < lobes.size(); ++i) {
        acc += lobes[i];
        row[i] = acc;
    }
    Complex best = row.back();
    double best_diff = HUGE_VAL;
    constexpr int kMaxDepth = 24;
    Complex prev_est = best;
    converged = false;
    for (int depth = 0; depth < kMaxDepth && row.size() >= 2; ++depth) {
        for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
        const Complex est = row.front();
        const double diff = std::abs(est - prev_est);
        if (diff < best_diff) {
            best_diff = diff;
            best = est;
        }
        if (diff < tol / 8.0) {
            diff_out = diff;
            converged = true;
            return est;
        }
        prev_est = est;
    }
    diff_out = best_diff;
    converged = best_diff < tol;
    return best;
}

}  // namespace

QuadResult integrate_semi_infinite(const Integrand& f, double tol) {
    if (!(tol > 0.0)) throw DomainError("integrate_semi_infinite: tol must be positive");

    if (f.decay == Integrand::Decay::exponential) {
        const double rate = f.decay_rate;
        if (!(rate > 0.0))
            throw DomainError("integrate_semi_infinite: exponential decay needs rate > 0");
        // scale C from probes of |f| e^{+rate t}
        double scale = 0.0;
        std::int64_t probe_evals = 0;
        for (double t : {0.5 / rate, 1.0 / rate, 2.0 / rate, 4.0 / rate, 8.0 / rate}) {
            scale = std::max(scale, std::abs(f.eval(t)) * std::exp(rate * t));
            ++probe_evals;
        }
        scale = std::max(scale, 1e-30) * 4.0;
        double T = std::log(4.0 * scale / (rate * tol)) / rate;
        T = std::min(std::max(T, 4.0 / rate), 1e4);
        const double tail = scale * std::exp(-rate * T) / rate;
        QuadResult r = integrate_finite(f, 0.0, T, 0.5 * tol);
        r.evals += probe_evals;
        r.tail_bound = tail;
        r.abs_err += tail;
        return r;
    }

    // oscillatory-algebraic: lobe partition at kernel zero spacing
    if (!f.oscillation_period)
        throw DomainError("integrate_semi_infinite: algebraic decay needs a period hint");
    const double period = *f.oscillation_period;
    const double p = f.decay_rate;  // algebraic decay exponent
    if (!(period > 0.0) || !(p > 1.0))
        throw DomainError("integrate_semi_infinite: need period > 0 and exponent > 1");

    double first = f.first_zero.value_or(0.25 * period);
    while (first < period / M_PI) first += period;  // start at or beyond ~1/rho

    QuadResult out;
    {
        QuadResult head = integrate_finite(f, 0.0, first, 0.25 * tol);
        out.value = head.value;
        out.abs_err = head.abs_err;
        out.subintervals = head.subintervals;
        out.evals = head.evals;
    }

    constexpr int kMaxLobes = 192;
    std::vector<Complex> lobes;
    lobes.reserve(kMaxLobes);
    double lo = first;
    double accel_diff = 0.0;
    bool accel_ok = false;
    Complex lobe_sum{0.0, 0.0};
    double panel_err = 0.0;
    int sign_flips = 0;
    for (int k = 0; k < kMaxLobes; ++k) {
        const double hi = lo + period;
        const QuadResult lr = integrate_finite(f, lo, hi, tol / 64.0);
        out.subintervals += lr.subintervals;
        out.evals += lr.evals;
        panel_err += lr.abs_err;
        lobes.push_back(lr.value);
        if (lobes.size() >= 2 &&
            lobes[lobes.size() - 1].real() * lobes[lobes.size() - 2].real() < 0.0)
            ++sign_flips;
        lo = hi;
        if (lobes.size() >= 8) {
            lobe_sum = euler_accelerate(lobes, tol, accel_diff, accel_ok);
            if (accel_ok) break;
        }
        if (k == 63 && sign_flips < 32) {
            throw ConvergenceError(
                "integrate_semi_infinite: lobe sequence not alternating-decaying",
                out.value + std::accumulate(lobes.begin(), lobes.end(), Complex{0.0, 0.0}),
                tol);
        }
    }
    if (!accel_ok && !lobes.empty())
        lobe_sum = euler_accelerate(lobes, tol, accel_diff, accel_ok);
    if (!accel_ok) {
        throw ConvergenceError("integrate_semi_infinite: lobe acceleration stalled",
                               out.value + lobe_sum, accel_diff);
    }

    // tail_bound: residual of the accelerated remainder estimate, capped by the
    // raw alternating-series bound and the envelope x algebraic-weight integral
    const double last_lobe = std::abs(lobes.back());
    const double T = lo;
    double env_scale = 0.0;
    for (double t : {T + 0.1 * period, T + 0.5 * period, T + 0.9 * period})
        env_scale = std::max(env_scale, std::abs(f.eval(t)) * std::pow(t, p));
    out.evals += 3;
    const double env_tail = env_scale * std::pow(T, 1.0 - p) / (p - 1.0);
    const double raw_remainder = std::min(last_lobe, env_tail);
    out.tail_bound = std::min(8.0 * accel_diff + 1e-18, raw_remainder + accel_diff);
    out.value += lobe_sum;
    out.abs_err += panel_err + out.tail_bound;
    return out;
}

}  // namespace koshlab
