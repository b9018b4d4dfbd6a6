#include "koshlab/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <memory>
#include <mutex>

namespace koshlab {

Complex ParamPoint::at(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw DomainError("missing parameter: " + name);
    return it->second;
}

Complex ParamPoint::get(const std::string& name, Complex fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
}

bool ParamPoint::has(const std::string& name) const { return values.count(name) != 0; }

namespace {
std::mutex g_cache_mutex;
std::unique_ptr<SigmaCache> g_cache;
}  // namespace

const SigmaCache& shared_sigma_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (!g_cache) g_cache = std::make_unique<SigmaCache>(1000000);
    return *g_cache;
}

void set_sigma_limit(std::int64_t limit) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache = std::make_unique<SigmaCache>(limit);
}

Complex build_A(Complex s, Complex lambda, Complex z, Complex w, Complex t) {
    if (std::abs(principal_arg(z)) >= 0.25 * M_PI || std::abs(principal_arg(w)) >= 0.25 * M_PI)
        throw DomainError("build_A: requires |arg z| < pi/4 and |arg w| < pi/4");
    const Complex it{-t.imag(), t.real()};  // i*t
    const Complex zz = z * z + it;
    const Complex ww = w * w + it;
    const Complex u = csqrt_principal(zz);
    const Complex v = csqrt_principal(ww);
    const Complex uv = u * v;
    const Complex ratio = (zz - ww) / (zz + ww + 2.0 * uv);
    if (ratio == Complex{0.0, 0.0}) {
        if (lambda.real() > 0.0) return {0.0, 0.0};
        throw DomainError("build_A: zero ratio requires Re(lambda) > 0");
    }
    const Complex f = hyp2f1(lambda - s, -s, lambda + 1.0, ratio * ratio).value;
    return cpow_principal(ratio, lambda) / uv * cpow_principal((u + v) / uv, 2.0 * s) * f;
}

Complex h_fun(Complex s, Complex lambda, Complex alpha, Complex beta) {
    if (std::abs(s + lambda) <= 1e-12)
        return cpow_principal(alpha - beta, lambda) /
               cpow_principal(Complex{2.0, 0.0}, 4.0 * lambda + 1.0);
    if ((s + lambda).real() > 0.0) return {0.0, 0.0};
    throw DomainError("h_fun: requires Re(s + lambda) > 0 or s = -lambda");
}

namespace detail {

double zeta_deriv_real(double w) {
    constexpr double h = 1e-7;
    return zeta(Complex(w, h)).imag() / h;
}

// sum_{n>N} sigma_s(n) n^{-u}. For small Re(u) the closed form minus the
// partial sum is accurate; once the two nearly cancel, their difference is
// rounding noise, so the tail is instead summed directly (it then converges
// within a few multiples of N).
Complex sigma_tail_moment(Complex s, Complex u, std::int64_t N) {
    const SigmaCache& cache = shared_sigma_cache();
    Complex partial{0.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n)
        partial += cache.sigma(s, n) * cpow_principal(Complex(static_cast<double>(n), 0.0), -u);
    const Complex zz = dirichlet_sigma_series(s, u);
    const Complex diff = zz - partial;
    if (std::abs(diff) > 1e-9 * std::abs(zz)) return diff;
    Complex acc{0.0, 0.0};
    int tiny = 0;
    const std::int64_t cap = std::min<std::int64_t>(cache.limit(), N + 400000);
    for (std::int64_t n = N + 1; n <= cap; ++n) {
        const Complex t =
            cache.sigma(s, n) * cpow_principal(Complex(static_cast<double>(n), 0.0), -u);
        acc += t;
        if (std::abs(t) < 1e-17 * (std::abs(acc) + 1e-300)) {
            if (++tiny == 2) break;
        } else {
            tiny = 0;
        }
    }
    return acc;
}

// sum_{n>N} d(n) log(n) n^{-u} with the same dual-regime strategy;
// the closed form is -2 zeta(u) zeta'(u).
double d_log_tail_moment(double u, std::int64_t N) {
    const SigmaCache& cache = shared_sigma_cache();
    double partial = 0.0;
    for (std::int64_t n = 1; n <= N; ++n)
        partial += cache.sigma({0.0, 0.0}, n).real() * std::log(static_cast<double>(n)) *
                   std::pow(static_cast<double>(n), -u);
    const double zu = zeta(Complex(u, 0.0)).real();
    const double closed = -2.0 * zu * zeta_deriv_real(u);
    const double diff = closed - partial;
    if (std::abs(diff) > 1e-7 * std::max(std::abs(closed), std::abs(partial))) return diff;
    double acc = 0.0;
    int tiny = 0;
    const std::int64_t cap = std::min<std::int64_t>(cache.limit(), N + 400000);
    for (std::int64_t n = N + 1; n <= cap; ++n) {
        const double t = cache.sigma({0.0, 0.0}, n).real() * std::log(static_cast<double>(n)) *
                         std::pow(static_cast<double>(n), -u);
        acc += t;
        if (t < 1e-17 * (std::abs(acc) + 1e-300)) {
            if (++tiny == 2) break;
        } else {
            tiny = 0;
        }
    }
    return acc;
}

Complex paired_power_sum(Complex s, Complex w, Complex b, bool corrected) {
    const SigmaCache& cache = shared_sigma_cache();
    const std::int64_t N = std::max<std::int64_t>(400, 4 * static_cast<std::int64_t>(std::abs(b)) + 4);
    const Complex corr = corrected ? -2.0 * std::cos(0.5 * M_PI * w) : Complex{0.0, 0.0};

    std::vector<Complex> sig(static_cast<size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) sig[n] = cache.sigma(s, n);

    Complex total{0.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n) {
        const Complex in{0.0, static_cast<double>(n)};
        Complex t = cpow_principal(b + in, -w) + cpow_principal(b - in, -w);
        if (corrected) t += corr * cpow_principal(Complex(static_cast<double>(n), 0.0), -w);
        total += sig[n] * t;
    }

    // exact Dirichlet tails of the binomial expansion
    //   (b+in)^-w + (b-in)^-w = 2 sum_k (w)_k/k! b^k cos(pi(k-w)/2) n^{-w-k}
    Complex poch{1.0, 0.0};  // (w)_k / k!
    Complex bk{1.0, 0.0};
    int tiny_streak = 0;
    for (int k = 0; k <= 120; ++k) {
        if (k > 0) {
            poch *= (w + static_cast<double>(k - 1)) / static_cast<double>(k);
            bk *= b;
        }
        if (k == 0 && corrected) continue;  // cancelled by the correction term
        const Complex coef = 2.0 * poch * bk * std::cos(0.5 * M_PI * (static_cast<double>(k) - w));
        const Complex tail_term = coef * sigma_tail_moment(s, w + static_cast<double>(k), N);
        total += tail_term;
        if (std::abs(tail_term) < 1e-18 * (std::abs(total) + 1e-30)) {
            if (++tiny_streak == 2) break;
        } else {
            tiny_streak = 0;
        }
    }
    return total;
}

Complex even_rational_sum(Complex t, Complex b) {
    const SigmaCache& cache = shared_sigma_cache();
    const std::int64_t N = std::max<std::int64_t>(400, 4 * static_cast<std::int64_t>(std::abs(b)) + 4);
    std::vector<Complex> sig(static_cast<size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) sig[n] = cache.sigma(t, n);

    const Complex b2 = b * b;
    Complex total{0.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n)
        total += sig[n] / (static_cast<double>(n) * static_cast<double>(n) + b2);

    Complex b2j{1.0, 0.0};
    for (int j = 0; j <= 80; ++j) {
        const double u = static_cast<double>(2 * j + 2);
        const Complex coef = (j % 2 == 0 ? 1.0 : -1.0) * b2j;
        const Complex tail_term = coef * sigma_tail_moment(t, Complex(u, 0.0), N);
        total += tail_term;
        b2j *= b2;
        if (std::abs(tail_term) < 1e-18 * (std::abs(total) + 1e-30)) break;
    }
    return total;
}

double vorram_log_sum(double a) {
    const SigmaCache& cache = shared_sigma_cache();
    const std::int64_t N = std::max<std::int64_t>(1000, 8 * static_cast<std::int64_t>(a) + 8);
    std::vector<double> dn(static_cast<size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) dn[n] = cache.sigma(Complex{0.0, 0.0}, n).real();

    const bool integral_a = std::abs(a - std::round(a)) < 1e-12;
    double total = 0.0;
    for (std::int64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        if (integral_a && std::llround(a) == n) {
            total += dn[n] / (2.0 * a * a);  // removable singularity at n = a
        } else {
            total += dn[n] * std::log(a / nd) / (a * a - nd * nd);
        }
    }

    // tail_{n>N}: sum_j a^{2j} [ L_{2j+2} - log(a) D_{2j+2} ] with
    // D_w = zeta(w)^2 - partial, L_w = -2 zeta(w) zeta'(w) - partial
    double a2j = 1.0;
    for (int j = 0; j <= 60; ++j) {
        const double u = static_cast<double>(2 * j + 2);
        const double D = sigma_tail_moment({0.0, 0.0}, Complex(u, 0.0), N).real();
        const double L = d_log_tail_moment(u, N);
        const double tail_term = a2j * (L - std::log(a) * D);
        total += tail_term;
        a2j *= a * a;
        if (std::abs(tail_term) < 1e-18 * (std::abs(total) + 1e-30)) break;
    }
    return total;
}

Complex two_sqrt_sum(Complex alpha, Complex beta) {
    const SigmaCache& cache = shared_sigma_cache();
    const double big = std::max(std::abs(alpha), std::abs(beta));
    const std::int64_t N = std::max<std::int64_t>(600, 6 * static_cast<std::int64_t>(big) + 6);
    std::vector<double> dn(static_cast<size_t>(N) + 1);
    for (std::int64_t n = 1; n <= N; ++n) dn[n] = cache.sigma(Complex{0.0, 0.0}, n).real();

    Complex total{0.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n) {
        const Complex in{0.0, static_cast<double>(n)};
        total += dn[n] * (1.0 / (csqrt_principal(alpha + in) * csqrt_principal(beta + in)) +
                          1.0 / (csqrt_principal(alpha - in) * csqrt_principal(beta - in)));
    }

    // product of two binomial series: c_k = sum_{i+j=k} C(-1/2,i) a^i C(-1/2,j) b^j
    constexpr int K = 96;
    std::vector<Complex> ca(K + 1), cb(K + 1), ck(K + 1);
    ca[0] = cb[0] = Complex{1.0, 0.0};
    for (int k = 1; k <= K; ++k) {
        const double factor = (-0.5 - (k - 1)) / static_cast<double>(k);
        ca[k] = ca[k - 1] * factor * alpha;
        cb[k] = cb[k - 1] * factor * beta;
    }
    for (int k = 0; k <= K; ++k) {
        Complex c{0.0, 0.0};
        for (int i = 0; i <= k; ++i) c += ca[i] * cb[k - i];
        ck[k] = c;
    }
    // pair sum of (in)^{-1-k} branches: 2 cos(pi(1+k)/2) n^{-1-k}; odd k only
    for (int k = 1; k <= K; k += 2) {
        const double cosf = ((k + 1) / 2 % 2 == 0) ? 1.0 : -1.0;  // cos(pi(1+k)/2)
        const Complex tail_term =
            2.0 * cosf * ck[k] *
            sigma_tail_moment({0.0, 0.0}, Complex(static_cast<double>(1 + k), 0.0), N);
        total += tail_term;
        if (std::abs(tail_term) < 1e-18 * (std::abs(total) + 1e-30)) break;
    }
    return total;
}

Complex a_leading_coefficient(Complex s, Complex lam, Complex alpha, Complex beta) {
    return cpow_principal(Complex{2.0, 0.0}, 2.0 * s - 2.0 * lam + 1.0) *
           cpow_principal(alpha - beta, lam) * std::sin(0.5 * M_PI * (lam + s));
}

Complex a_bracket_sum(Complex s, Complex lam, Complex alpha, Complex beta) {
    const SigmaCache& cache = shared_sigma_cache();
    const Complex sa = csqrt_principal(alpha);
    const Complex sb = csqrt_principal(beta);
    const Complex c0 = a_leading_coefficient(s, lam, alpha, beta);
    const Complex theta = lam + s + 1.0;

    auto bracket = [&](double t) -> Complex {
        Complex val = build_A(s, lam, sa, sb, Complex(t, 0.0)) +
                      build_A(s, lam, sa, sb, Complex(-t, 0.0));
        if (std::abs(c0) > 1e-300)
            val += c0 * cpow_principal(Complex(t, 0.0), -theta);
        return val;
    };

    constexpr std::int64_t N = 4000;
    Complex total{0.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n)
        total += cache.sigma(s, n) * bracket(static_cast<double>(n));

    // smooth-remainder ladder: B(t) ~ sum_j c_j t^{-(theta+j)}, j = 1..3,
    // coefficients solved from nodes far beyond N, tails via zeta products
    constexpr int J = 3;
    double nodes[J];
    for (int j = 0; j < J; ++j) nodes[j] = static_cast<double>(N) * 8.0 * std::pow(2.0, j);
    Complex M[J][J], y[J];
    for (int r = 0; r < J; ++r) {
        for (int c = 0; c < J; ++c)
            M[r][c] = cpow_principal(Complex(nodes[r], 0.0), -(theta + static_cast<double>(c + 1)));
        y[r] = bracket(nodes[r]);
    }
    // gaussian elimination, 3x3
    for (int col = 0; col < J; ++col) {
        int pivot = col;
        for (int r = col + 1; r < J; ++r)
            if (std::abs(M[r][col]) > std::abs(M[pivot][col])) pivot = r;
        std::swap(M[col], M[pivot]);
        std::swap(y[col], y[pivot]);
        for (int r = col + 1; r < J; ++r) {
            const Complex f = M[r][col] / M[col][col];
            for (int c = col; c < J; ++c) M[r][c] -= f * M[col][c];
            y[r] -= f * y[col];
        }
    }
    Complex coef[J];
    for (int r = J - 1; r >= 0; --r) {
        Complex acc = y[r];
        for (int c = r + 1; c < J; ++c) acc -= M[r][c] * coef[c];
        coef[r] = acc / M[r][r];
    }
    for (int j = 1; j <= J; ++j)
        total += coef[j - 1] * sigma_tail_moment(s, theta + static_cast<double>(j), N);
    return total;
}

}  // namespace detail

namespace {

EvalResult run_side(const std::function<EvalResult(const ParamPoint&, double)>& side,
                    const ParamPoint& p, double tol) {
    return side(p, tol);
}

}  // namespace

VerificationReport verify(const std::string& id, const ParamPoint& point, double tol) {
    const IdentityEntry* entry = find_identity(id);
    if (!entry) throw DomainError("unknown identity id: " + id);

    // merge user-supplied values over the first default point
    ParamPoint p = entry->default_points.empty() ? ParamPoint{} : entry->default_points.front();
    for (const auto& kv : point.values) p.values[kv.first] = kv.second;

    VerificationReport rep;
    rep.id = id;
    rep.point = p;
    rep.tol = tol;

    for (const auto& cond : entry->conditions) {
        if (!cond.check(p)) {
            rep.pass = false;
            rep.verdict = "error";
            rep.failure_reason = "domain violation: " + cond.description;
            return rep;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (entry->divergence_demo) {
            const SeriesVerdict v = entry->divergence_check(p);
            rep.lhs = run_side(entry->lhs, p, tol);
            rep.rhs = run_side(entry->rhs, p, tol);
            rep.pass = (v == SeriesVerdict::diverged);
            rep.verdict = (v == SeriesVerdict::diverged)  ? "diverged"
                          : (v == SeriesVerdict::converged) ? "not-diverged"
                                                            : "inconclusive";
        } else {
            rep.lhs = run_side(entry->lhs, p, tol);
            rep.rhs = run_side(entry->rhs, p, tol);
            rep.abs_diff = std::abs(rep.lhs.value - rep.rhs.value);
            const double scale = std::max(std::abs(rep.lhs.value), std::abs(rep.rhs.value));
            rep.rel_diff = scale > 0.0 ? rep.abs_diff / scale : 0.0;
            rep.pass = rep.abs_diff <= tol * std::max(1.0, scale);
            rep.verdict = rep.pass ? "pass" : "fail";
        }
    } catch (const Error& e) {
        rep.pass = false;
        rep.verdict = "error";
        rep.failure_reason = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::vector<VerificationReport> sweep(const std::string& id,
                                      const std::vector<ParamPoint>& grid, double tol,
                                      int parallelism) {
    if (!find_identity(id)) throw DomainError("unknown identity id: " + id);
    std::vector<VerificationReport> out(grid.size());
    if (parallelism <= 1 || grid.size() <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) out[i] = verify(id, grid[i], tol);
        return out;
    }
    // fixed-size batches keep emission order deterministic
    const size_t width = static_cast<size_t>(parallelism);
    for (size_t base = 0; base < grid.size(); base += width) {
        const size_t hi = std::min(grid.size(), base + width);
        std::vector<std::future<VerificationReport>> futs;
        futs.reserve(hi - base);
        for (size_t i = base; i < hi; ++i) {
            futs.push_back(std::async(std::launch::async,
                                      [&, i] { return verify(id, grid[i], tol); }));
        }
        for (size_t i = base; i < hi; ++i) out[i] = futs[i - base].get();
    }
    return out;
}

}  // namespace koshlab
