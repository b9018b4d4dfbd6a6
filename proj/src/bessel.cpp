#include "koshlab/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace koshlab {

namespace {

constexpr double kSeriesAsymptoticSwitch = 20.0;
// K combination/asymptotic seam: asymptotic once |z| (1 + cos arg z) >= 18.4,
// balancing 1e-16 e^{2 Re z} cancellation against the e^{-2|z|} series floor.
constexpr double kKSeam = 18.4;
constexpr int kMaxSeriesTerms = 400;

double harmonic_increment(int k) { return 1.0 / static_cast<double>(k); }

// Watson coefficient (s,k): (s,0)=1, (s,k+1) = (s,k) (4s^2-(2k+1)^2)/(4(k+1)).
// The Hankel/K asymptotic series use (s,k)/(2z)^k.
class WatsonCoefficients {
  public:
    explicit WatsonCoefficients(Complex s) : four_s2_(4.0 * s * s) {}
    Complex next() {
        const Complex cur = value_;
        const double odd = 2.0 * static_cast<double>(k_) + 1.0;
        value_ *= (four_s2_ - odd * odd) / (4.0 * (static_cast<double>(k_) + 1.0));
        ++k_;
        return cur;
    }

  private:
    Complex four_s2_;
    Complex value_{1.0, 0.0};
    int k_ = 0;
};

struct AsymptoticSums {
    Complex even{0.0, 0.0};   // sum (-1)^k (s,2k)/(2z)^{2k}
    Complex odd{0.0, 0.0};    // sum (-1)^k (s,2k+1)/(2z)^{2k+1}
    Complex plain{0.0, 0.0};  // sum (s,k)/(2z)^k
    Complex alt{0.0, 0.0};    // sum (-1)^k (s,k)/(2z)^k
    double truncation = 0.0;  // |first omitted term|
    int terms = 0;
};

// Sums the Watson series to its smallest term (optimal truncation).
AsymptoticSums watson_sums(Complex s, Complex z) {
    AsymptoticSums out;
    WatsonCoefficients coef(s);
    const Complex inv2z = 1.0 / (2.0 * z);
    Complex pw{1.0, 0.0};
    double prev_mag = HUGE_VAL;
    constexpr int kCap = 120;
    for (int k = 0; k < kCap; ++k) {
        const Complex term = coef.next() * pw;
        const double mag = std::abs(term);
        if (mag > prev_mag || mag < 1e-20) {
            out.truncation = mag;
            out.terms = k;
            return out;
        }
        out.plain += term;
        out.alt += (k % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            out.even += (k % 4 == 0) ? term : -term;
        else
            out.odd += (k % 4 == 1) ? term : -term;
        prev_mag = mag;
        pw *= inv2z;
    }
    out.truncation = prev_mag;
    out.terms = kCap;
    return out;
}

// Ascending series for J (signs alternating) or I (all positive).
EvalResult ascending_series(Complex s, Complex z, bool alternating) {
    if (std::abs(s.imag()) <= 1e-9) {
        const double r = std::round(s.real());
        if (r < 0.0 && std::abs(s.real() - r) <= 1e-9) {
            // J_{-m} = (-1)^m J_m, I_{-m} = I_m
            EvalResult res = ascending_series(Complex(-r, 0.0), z, alternating);
            if (alternating && llround(-r) % 2 != 0) res.value = -res.value;
            return res;
        }
    }
    const Complex q = 0.25 * z * z;
    Complex term = cpow_principal(0.5 * z, s) * rgamma(s + 1.0);
    Complex sum = term;
    double max_mag = std::abs(term);
    int terms = 1;
    for (std::int64_t m = 0; m < kMaxSeriesTerms; ++m) {
        const double md = static_cast<double>(m);
        term *= q / ((md + 1.0) * (s + md + 1.0));
        if (alternating) term = -term;
        sum += term;
        double mag = std::abs(term);
        max_mag = std::max(max_mag, mag);
        ++terms;
        if (mag < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    const double err = max_mag * 1e-16 * std::sqrt(static_cast<double>(terms)) +
                       std::abs(term);
    return {sum, err, terms};
}

Complex half_integer_phase(Complex s) { return std::exp(Complex(0.0, M_PI) * s); }

}  // namespace

bool BesselOrder::integer_order() const {
    return std::abs(s.real() - std::round(s.real())) <= 1e-9 && std::abs(s.imag()) <= 1e-9;
}

bool BesselOrder::near_integer() const {
    return !integer_order() && std::abs(s.imag()) <= 1e-6 &&
           std::abs(s.real() - std::round(s.real())) <= 1e-6;
}

std::int64_t BesselOrder::rounded() const { return llround(s.real()); }

double KernelEnvelope::at(double x) const {
    return bound * std::pow(std::max(x, valid_from), -0.5);
}

namespace detail {

EvalResult bessel_j_series(Complex s, Complex z) { return ascending_series(s, z, true); }
EvalResult bessel_i_series(Complex s, Complex z) { return ascending_series(s, z, false); }

EvalResult bessel_j_asymptotic(Complex s, Complex z) {
    const AsymptoticSums w = watson_sums(s, z);
    const Complex phase = z - 0.5 * M_PI * s - 0.25 * M_PI;
    const Complex pre = csqrt_principal(2.0 / (M_PI * z));
    const Complex cw = std::cos(phase), sw = std::sin(phase);
    const Complex value = pre * (cw * w.even - sw * w.odd);
    const double scale = std::abs(pre) * (std::abs(cw) + std::abs(sw));
    return {value, 2.0 * w.truncation * scale + std::abs(value) * 1e-15, w.terms};
}

EvalResult bessel_y_asymptotic(Complex s, Complex z) {
    const AsymptoticSums w = watson_sums(s, z);
    const Complex phase = z - 0.5 * M_PI * s - 0.25 * M_PI;
    const Complex pre = csqrt_principal(2.0 / (M_PI * z));
    const Complex cw = std::cos(phase), sw = std::sin(phase);
    const Complex value = pre * (sw * w.even + cw * w.odd);
    const double scale = std::abs(pre) * (std::abs(cw) + std::abs(sw));
    return {value, 2.0 * w.truncation * scale + std::abs(value) * 1e-15, w.terms};
}

EvalResult bessel_k_asymptotic(Complex s, Complex z) {
    const AsymptoticSums w = watson_sums(s, z);
    const Complex pre = csqrt_principal(0.5 * M_PI / z) * std::exp(-z);
    const Complex value = pre * w.plain;
    return {value, 2.0 * w.truncation * std::abs(pre) + std::abs(value) * 1e-15, w.terms};
}

EvalResult bessel_i_asymptotic(Complex s, Complex z) {
    const AsymptoticSums w = watson_sums(s, z);
    const Complex pre = 1.0 / csqrt_principal(2.0 * M_PI * z);
    // second exponential carries e^{+-(s+1/2) pi i}; upper sign for Im z >= 0
    const Complex rot = std::exp(Complex(0.0, z.imag() >= 0.0 ? M_PI : -M_PI) * (s + 0.5));
    const Complex value = pre * (std::exp(z) * w.alt + rot * std::exp(-z) * w.plain);
    const double scale = std::abs(pre) * (std::abs(std::exp(z)) + std::abs(std::exp(-z)));
    return {value, 2.0 * w.truncation * scale + std::abs(value) * 1e-15, w.terms};
}

// Integer-order Y via the logarithmic series.
EvalResult y_integer_series(std::int64_t m_signed, Complex z) {
    const std::int64_t m = std::abs(m_signed);
    const double md = static_cast<double>(m);
    const EvalResult jm = bessel_j_series(Complex(md, 0.0), z);
    const Complex lg = principal_log(0.5 * z);
    const Complex q = 0.25 * z * z;

    Complex finite{0.0, 0.0};
    if (m > 0) {
        double fact_ratio = 1.0;  // (m-1)!/0!
        for (std::int64_t k = 1; k < m; ++k) fact_ratio *= static_cast<double>(k);
        Complex qpow{1.0, 0.0};
        double kfact = 1.0;
        for (std::int64_t k = 0; k < m; ++k) {
            finite += fact_ratio / kfact * qpow;
            qpow *= q;
            kfact *= static_cast<double>(k + 1);
            fact_ratio /= std::max(1.0, static_cast<double>(m - 1 - k));
        }
        finite *= cpow_principal(0.5 * z, Complex(-md, 0.0)) / M_PI;
    }

    // sum_k (psi(k+1)+psi(m+k+1)) (-q)^k / (k! (m+k)!)
    double psi_k = -kEulerGamma;
    double psi_mk = -kEulerGamma;
    for (std::int64_t j = 1; j <= m; ++j) psi_mk += harmonic_increment(static_cast<int>(j));
    double kfact = 1.0, mkfact = 1.0;
    for (std::int64_t j = 1; j <= m; ++j) mkfact *= static_cast<double>(j);
    Complex qpow{1.0, 0.0};
    Complex tail{0.0, 0.0};
    double max_mag = 0.0;
    int terms = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const Complex term = (psi_k + psi_mk) / (kfact * mkfact) * qpow;
        tail += term;
        max_mag = std::max(max_mag, std::abs(term));
        ++terms;
        if (std::abs(term) < 1e-18 * (std::abs(tail) + 1e-300) && k > 2) break;
        qpow *= -q;
        psi_k += harmonic_increment(k + 1);
        psi_mk += harmonic_increment(static_cast<int>(m) + k + 1);
        kfact *= static_cast<double>(k + 1);
        mkfact *= static_cast<double>(m + k + 1);
    }
    tail *= cpow_principal(0.5 * z, Complex(md, 0.0)) / M_PI;

    Complex value = 2.0 / M_PI * lg * jm.value - finite - tail;
    double err = 2.0 / M_PI * std::abs(lg) * jm.abs_err +
                 max_mag * std::abs(cpow_principal(0.5 * z, Complex(md, 0.0))) * 1e-15 *
                     std::sqrt(static_cast<double>(terms));
    if (m_signed < 0 && m % 2 != 0) value = -value;
    return {value, err, jm.evals + terms};
}

// Integer-order K via the logarithmic series.
EvalResult k_integer_series(std::int64_t m_signed, Complex z) {
    const std::int64_t m = std::abs(m_signed);
    const double md = static_cast<double>(m);
    const EvalResult im = bessel_i_series(Complex(md, 0.0), z);
    const Complex lg = principal_log(0.5 * z);
    const Complex q = 0.25 * z * z;

    Complex finite{0.0, 0.0};
    if (m > 0) {
        double fact_ratio = 1.0;
        for (std::int64_t k = 1; k < m; ++k) fact_ratio *= static_cast<double>(k);
        Complex qpow{1.0, 0.0};
        double kfact = 1.0;
        for (std::int64_t k = 0; k < m; ++k) {
            finite += fact_ratio / kfact * qpow;
            qpow *= -q;
            kfact *= static_cast<double>(k + 1);
            fact_ratio /= std::max(1.0, static_cast<double>(m - 1 - k));
        }
        finite *= 0.5 * cpow_principal(0.5 * z, Complex(-md, 0.0));
    }

    double psi_k = -kEulerGamma;
    double psi_mk = -kEulerGamma;
    for (std::int64_t j = 1; j <= m; ++j) psi_mk += harmonic_increment(static_cast<int>(j));
    double kfact = 1.0, mkfact = 1.0;
    for (std::int64_t j = 1; j <= m; ++j) mkfact *= static_cast<double>(j);
    Complex qpow{1.0, 0.0};
    Complex tail{0.0, 0.0};
    double max_mag = 0.0;
    int terms = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const Complex term = (psi_k + psi_mk) / (kfact * mkfact) * qpow;
        tail += term;
        max_mag = std::max(max_mag, std::abs(term));
        ++terms;
        if (std::abs(term) < 1e-18 * (std::abs(tail) + 1e-300) && k > 2) break;
        qpow *= q;
        psi_k += harmonic_increment(k + 1);
        psi_mk += harmonic_increment(static_cast<int>(m) + k + 1);
        kfact *= static_cast<double>(k + 1);
        mkfact *= static_cast<double>(m + k + 1);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    tail *= sign * 0.5 * cpow_principal(0.5 * z, Complex(md, 0.0));

    const Complex value = finite - sign * lg * im.value + tail;
    const double err = std::abs(lg) * im.abs_err +
                       max_mag * std::abs(cpow_principal(0.5 * z, Complex(md, 0.0))) *
                           1e-15 * std::sqrt(static_cast<double>(terms));
    return {value, err, im.evals + terms};
}

EvalResult bessel_y_small(BesselOrder s, Complex z) {
    if (s.integer_order()) return y_integer_series(s.rounded(), z);
    if (s.near_integer()) {
        const std::int64_t m = s.rounded();
        if (m < 0) {
            // reflect to a positive near-integer order:
            // Y_s = Y_{-s} sec(pi s) - J_s tan(pi s)
            const Complex sp = s.s;
            const EvalResult ym = bessel_y_small(BesselOrder(-sp), z);
            const EvalResult js = bessel_j_series(sp, z);
            const Complex sec = 1.0 / std::cos(M_PI * sp);
            const Complex tn = std::tan(M_PI * sp);
            return {ym.value * sec - js.value * tn,
                    ym.abs_err * std::abs(sec) + js.abs_err * std::abs(tn) + 1e-8 * std::abs(ym.value),
                    ym.evals + js.evals};
        }
        const double delta = s.s.real() - static_cast<double>(m);
        const EvalResult ym = y_integer_series(m, z);
        // dY/dv at v=m: -(pi/2) J_m + (m!/2)(z/2)^{-m} sum_{k<m} (z/2)^k Y_k /(k!(m-k))
        Complex deriv = -0.5 * M_PI * bessel_j_series(Complex(static_cast<double>(m), 0.0), z).value;
        if (m > 0) {
            Complex acc{0.0, 0.0};
            double kf = 1.0, mf = 1.0;
            for (std::int64_t j = 1; j <= m; ++j) mf *= static_cast<double>(j);
            Complex zp{1.0, 0.0};
            for (std::int64_t k = 0; k < m; ++k) {
                acc += zp * y_integer_series(k, z).value / (kf * static_cast<double>(m - k));
                zp *= 0.5 * z;
                kf *= static_cast<double>(k + 1);
            }
            deriv += 0.5 * mf * cpow_principal(0.5 * z, Complex(-static_cast<double>(m), 0.0)) * acc;
        }
        const Complex value = ym.value + delta * deriv;
        // second-order remainder in the order perturbation
        return {value, ym.abs_err + 20.0 * delta * delta * (std::abs(value) + 1.0), ym.evals};
    }
    const Complex sp = s.s;
    const EvalResult jp = bessel_j_series(sp, z);
    const EvalResult jn = bessel_j_series(-sp, z);
    const Complex sn = std::sin(M_PI * sp);
    const Complex value = (jp.value * std::cos(M_PI * sp) - jn.value) / sn;
    const double err = (jp.abs_err + jn.abs_err + (std::abs(jp.value) + std::abs(jn.value)) * 1e-16) /
                       std::abs(sn);
    return {value, err, jp.evals + jn.evals};
}

EvalResult bessel_k_small(BesselOrder s, Complex z) {
    // K is even in the order
    const Complex sp = (s.s.real() < 0.0) ? -s.s : s.s;
    const BesselOrder sb(sp);
    if (sb.integer_order()) return k_integer_series(std::abs(sb.rounded()), z);
    if (sb.near_integer()) {
        const std::int64_t m = sb.rounded();
        const double delta = sp.real() - static_cast<double>(m);
        const EvalResult km = k_integer_series(m, z);
        Complex deriv{0.0, 0.0};
        if (m > 0) {
            Complex acc{0.0, 0.0};
            double kf = 1.0, mf = 1.0;
            for (std::int64_t j = 1; j <= m; ++j) mf *= static_cast<double>(j);
            Complex zp{1.0, 0.0};
            for (std::int64_t k = 0; k < m; ++k) {
                acc += zp * k_integer_series(k, z).value / (kf * static_cast<double>(m - k));
                zp *= 0.5 * z;
                kf *= static_cast<double>(k + 1);
            }
            deriv = 0.5 * mf * cpow_principal(0.5 * z, Complex(-static_cast<double>(m), 0.0)) * acc;
        }
        const Complex value = km.value + delta * deriv;
        return {value, km.abs_err + 20.0 * delta * delta * (std::abs(value) + 1.0), km.evals};
    }
    const EvalResult in = bessel_i_series(-sp, z);
    const EvalResult ip = bessel_i_series(sp, z);
    const Complex sn = std::sin(M_PI * sp);
    const Complex value = 0.5 * M_PI * (in.value - ip.value) / sn;
    const double err = 0.5 * M_PI *
                       (in.abs_err + ip.abs_err + (std::abs(in.value) + std::abs(ip.value)) * 1e-16) /
                       std::abs(sn);
    return {value, err, in.evals + ip.evals};
}

}  // namespace detail

EvalResult bessel_j(BesselOrder s, Complex z) {
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("bessel_j: argument on the cut arg z = pi");
    if (z == Complex{0.0, 0.0}) {
        if (s.integer_order())
            return {s.rounded() == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}, 0.0, 1};
        if (s.s.real() > 0.0) return {{0.0, 0.0}, 0.0, 1};
        throw DomainError("bessel_j: z = 0 requires Re(order) >= 0");
    }
    if (std::abs(z) <= kSeriesAsymptoticSwitch) {
        if (s.integer_order()) {
            const std::int64_t m = s.rounded();
            EvalResult r = detail::bessel_j_series(Complex(static_cast<double>(std::abs(m)), 0.0), z);
            if (m < 0 && m % 2 != 0) r.value = -r.value;
            return r;
        }
        return detail::bessel_j_series(s.s, z);
    }
    return detail::bessel_j_asymptotic(s.s, z);
}

EvalResult bessel_y(BesselOrder s, Complex z) {
    if (z == Complex{0.0, 0.0}) throw PoleError("bessel_y: pole at z = 0", 0);
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("bessel_y: argument on the cut arg z = pi");
    if (std::abs(z) <= kSeriesAsymptoticSwitch) return detail::bessel_y_small(s, z);
    return detail::bessel_y_asymptotic(s.s, z);
}

EvalResult bessel_i(BesselOrder s, Complex z) {
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("bessel_i: argument on the cut arg z = pi");
    if (z == Complex{0.0, 0.0}) {
        if (s.integer_order())
            return {s.rounded() == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0}, 0.0, 1};
        if (s.s.real() > 0.0) return {{0.0, 0.0}, 0.0, 1};
        throw DomainError("bessel_i: z = 0 requires Re(order) >= 0");
    }
    if (std::abs(z) <= kSeriesAsymptoticSwitch) {
        if (s.integer_order())
            return detail::bessel_i_series(Complex(static_cast<double>(std::abs(s.rounded())), 0.0), z);
        return detail::bessel_i_series(s.s, z);
    }
    return detail::bessel_i_asymptotic(s.s, z);
}

EvalResult bessel_k(BesselOrder s, Complex z) {
    if (z == Complex{0.0, 0.0}) throw PoleError("bessel_k: pole at z = 0", 0);
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("bessel_k: argument on the cut arg z = pi");
    const double za = std::abs(z);
    const bool asymptotic = za * (1.0 + std::cos(principal_arg(z))) >= kKSeam || za > 30.0;
    if (asymptotic) return detail::bessel_k_asymptotic(s.s, z);
    return detail::bessel_k_small(s, z);
}

EvalResult m_kernel(BesselOrder s, double x) {
    if (!(x > 0.0)) throw DomainError("m_kernel: requires x > 0");
    const EvalResult k = bessel_k(s, Complex(x, 0.0));
    const EvalResult y = bessel_y(s, Complex(x, 0.0));
    return {2.0 / M_PI * k.value - y.value, 2.0 / M_PI * k.abs_err + y.abs_err,
            k.evals + y.evals};
}

EvalResult koshliakov_kernel(BesselOrder s, double x) {
    if (!(x > 0.0)) throw DomainError("koshliakov_kernel: requires x > 0");
    const Complex c = std::cos(0.5 * M_PI * s.s);
    const Complex sn = std::sin(0.5 * M_PI * s.s);
    const EvalResult m = m_kernel(s, x);
    if (sn == Complex{0.0, 0.0}) return {m.value * c, m.abs_err * std::abs(c), m.evals};
    const EvalResult j = bessel_j(s, Complex(x, 0.0));
    return {m.value * c - j.value * sn, m.abs_err * std::abs(c) + j.abs_err * std::abs(sn),
            m.evals + j.evals};
}

KernelEnvelope kernel_envelope(BesselOrder s, double from) {
    if (!(from > 0.0)) throw DomainError("kernel_envelope: requires from > 0");
    const double lo = std::max(from, 1.0);
    const double hi = std::max(1000.0, 10.0 * lo);
    double worst = 0.0;
    constexpr int kSamples = 1000;
    for (int i = 0; i <= kSamples; ++i) {
        const double x = lo * std::pow(hi / lo, static_cast<double>(i) / kSamples);
        worst = std::max(worst, std::abs(koshliakov_kernel(s, x).value) * std::sqrt(x));
    }
    KernelEnvelope env;
    env.regime = KernelEnvelope::Regime::asymptotic;
    env.bound = 2.0 * worst;
    env.valid_from = lo;
    return env;
}

}  // namespace koshlab
