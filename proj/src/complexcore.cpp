#include "koshlab/complexcore.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace koshlab {

namespace {

// Lanczos approximation, g = 7, 9 terms (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosC = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Bernoulli numbers B_2..B_26.
constexpr std::array<double, 13> kBernoulli2k = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

Complex gamma_positive_half_plane(Complex z) {
    // valid for Re(z) >= 0.5
    z -= 1.0;
    Complex acc = kLanczosC[0];
    for (int i = 1; i < 9; ++i) acc += kLanczosC[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::exp((z + 0.5) * std::log(t) - t) * acc;
}

}  // namespace

namespace detail {

bool near_nonpositive_integer(Complex z, std::int64_t& n, double tol) {
    const double r = std::round(z.real());
    if (r > 0.5) return false;
    if (std::abs(z.real() - r) > tol || std::abs(z.imag()) > tol) return false;
    n = static_cast<std::int64_t>(r);
    return true;
}

Complex pochhammer(Complex x, int k) {
    Complex p = 1.0;
    for (int j = 0; j < k; ++j) p *= x + static_cast<double>(j);
    return p;
}

}  // namespace detail

double principal_arg(Complex z) {
    double im = z.imag();
    if (im == 0.0) im = 0.0;  // squash -0.0 so the cut lands on +pi
    return std::atan2(im, z.real());
}

Complex principal_log(Complex z) {
    return {std::log(std::abs(z)), principal_arg(z)};
}

Complex csqrt_principal(Complex z) {
    if (z.imag() == 0.0 && z.real() < 0.0) return {0.0, std::sqrt(-z.real())};
    Complex w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
    return w;
}

Complex cpow_principal(Complex z, Complex p) {
    if (z == Complex{0.0, 0.0}) {
        if (p.real() > 0.0) return {0.0, 0.0};
        if (p == Complex{0.0, 0.0}) return {1.0, 0.0};
        throw DomainError("cpow_principal: 0^p undefined for Re(p) <= 0");
    }
    if (p.imag() == 0.0 && p.real() == std::round(p.real()) && std::abs(p.real()) <= 8) {
        // small integer powers exactly, keeps real inputs exactly real
        int n = static_cast<int>(p.real());
        Complex r{1.0, 0.0};
        Complex base = n > 0 ? z : 1.0 / z;
        for (int k = std::abs(n); k > 0; --k) r *= base;
        return r;
    }
    return std::exp(p * principal_log(z));
}

Complex gamma(Complex z) {
    std::int64_t n;
    if (detail::near_nonpositive_integer(z, n))
        throw PoleError("gamma: pole at nonpositive integer", n);
    if (z.real() >= 0.5) return gamma_positive_half_plane(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const Complex s = std::sin(M_PI * z);
    return M_PI / (s * gamma_positive_half_plane(1.0 - z));
}

Complex rgamma(Complex z) {
    std::int64_t n;
    if (detail::near_nonpositive_integer(z, n)) return {0.0, 0.0};
    if (z.real() >= 0.5) return 1.0 / gamma_positive_half_plane(z);
    return std::sin(M_PI * z) * gamma_positive_half_plane(1.0 - z) / M_PI;
}

Complex digamma(Complex z) {
    std::int64_t n;
    if (detail::near_nonpositive_integer(z, n))
        throw PoleError("digamma: pole at nonpositive integer", n);
    Complex acc = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        acc -= M_PI * std::cos(M_PI * z) / std::sin(M_PI * z);
        z = 1.0 - z;
    }
    while (z.real() < 8.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const Complex inv = 1.0 / z, inv2 = inv * inv;
    Complex series = std::log(z) - 0.5 * inv;
    Complex zpow = inv2;
    for (int k = 1; k <= 7; ++k) {
        series -= kBernoulli2k[k - 1] / (2.0 * k) * zpow;
        zpow *= inv2;
    }
    return acc + series;
}

Complex zeta(Complex s) {
    if (std::abs(s - Complex{1.0, 0.0}) < 1e-13)
        throw PoleError("zeta: pole at s = 1", 1);
    if (s.real() < 0.5 && std::abs(s) > 0.25) {
        // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s);
        // near s = 0 the sin zero collides with the zeta(1) pole, so the
        // direct summation below (valid there) is used instead
        return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(M_PI)) *
               std::sin(0.5 * M_PI * s) * gamma(1.0 - s) * zeta(1.0 - s);
    }
    constexpr int N = 40;
    constexpr int K = 12;
    Complex sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double logN = std::log(static_cast<double>(N));
    const Complex NmS = std::exp(-s * logN);  // N^{-s}
    sum += NmS * static_cast<double>(N) / (s - 1.0) + 0.5 * NmS;
    // correction terms B_{2k}/(2k)! * (s)_{2k-1} * N^{1-s-2k}
    Complex poch = s;              // (s)_{2k-1}
    double fact = 2.0;             // (2k)!
    double npow = 1.0 / N;         // N^{1-2k}
    for (int k = 1; k <= K; ++k) {
        sum += kBernoulli2k[k - 1] / fact * poch * (NmS * npow);
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        npow /= static_cast<double>(N) * static_cast<double>(N);
    }
    return sum;
}

EvalResult hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    std::int64_t cn;
    const bool c_bad = detail::near_nonpositive_integer(c, cn, 1e-12);

    // terminating series: a or b a nonpositive integer
    std::int64_t an, bn;
    std::int64_t terms = -1;
    if (detail::near_nonpositive_integer(a, an, 1e-12)) terms = -an;
    if (detail::near_nonpositive_integer(b, bn, 1e-12)) {
        if (terms < 0 || -bn < terms) terms = -bn;
    }
    if (terms >= 0) {
        if (c_bad && cn > -terms)
            throw DomainError("hyp2f1: c nonpositive integer inside terminating range");
        Complex term{1.0, 0.0}, sum{1.0, 0.0};
        for (std::int64_t n = 0; n < terms; ++n) {
            const double nd = static_cast<double>(n);
            term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
            sum += term;
        }
        return {sum, std::abs(sum) * 1e-15 * std::sqrt(static_cast<double>(terms + 1)), terms + 1};
    }
    if (c_bad) throw DomainError("hyp2f1: c is a nonpositive integer");

    // shrink the argument with the z -> z/(z-1) transformation when it helps
    if (std::abs(z) > 0.7) {
        const Complex zp = z / (z - 1.0);
        if (std::abs(zp) < std::abs(z)) {
            if (std::abs(zp) >= 1.0)
                throw UnsupportedRegionError("hyp2f1: |z| >= 1 after transformation");
            EvalResult inner = hyp2f1(c - a, b, c, zp);
            const Complex pref = cpow_principal(1.0 - z, -b);
            inner.value *= pref;
            inner.abs_err = inner.abs_err * std::abs(pref) + std::abs(inner.value) * 1e-15;
            inner.evals += 1;
            return inner;
        }
        if (std::abs(z) >= 1.0)
            throw UnsupportedRegionError("hyp2f1: argument outside the unit disk");
    }

    Complex term{1.0, 0.0}, sum{1.0, 0.0};
    double max_term = 1.0;
    int small_streak = 0;
    constexpr std::int64_t kCap = 100000;
    for (std::int64_t n = 0; n < kCap; ++n) {
        const double nd = static_cast<double>(n);
        term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++small_streak == 3) {
                const double q = std::abs(z);
                const double tail = std::abs(term) * q / std::max(1e-300, 1.0 - q);
                return {sum, tail + max_term * 1e-16 * std::sqrt(nd + 2.0), n + 2};
            }
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge within term cap", sum,
                           std::abs(term));
}

}  // namespace koshlab
