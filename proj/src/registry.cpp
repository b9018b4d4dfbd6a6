#include <cmath>

#include "registry_common.hpp"

namespace koshlab {
namespace registry_detail {

using detail::a_bracket_sum;
using detail::a_leading_coefficient;
using detail::even_rational_sum;
using detail::paired_power_sum;
using detail::two_sqrt_sum;
using detail::vorram_log_sum;

void append_core_entries(std::vector<IdentityEntry>& reg) {

    // ---- J0 Laplace-type transform with exp(-a sqrt(t^2+xi^2)) weight ----
    {
        IdentityEntry e;
        e.id = "sommerfeld";
        e.description =
            "int_0^inf t J0(rho t) exp(-a sqrt(t^2+xi^2))/sqrt(t^2+xi^2) dt = "
            "exp(-xi sqrt(a^2+rho^2))/sqrt(a^2+rho^2)";
        e.param_names = {"a", "rho", "xi"};
        e.conditions = {real_positive("rho"),
                        cond("Re(a) > |Im(rho)|",
                             [](const ParamPoint& p) {
                                 return p.at("a").real() > std::abs(p.at("rho").imag());
                             }),
                        cond("Re(xi) > 0",
                             [](const ParamPoint& p) { return p.at("xi").real() > 0.0; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex a = p.at("a"), xi = p.at("xi");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex root = csqrt_principal(t * t + xi * xi);
                return t * bessel_j(0.0, Complex(rho * t, 0.0)).value * std::exp(-a * root) / root;
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = a.real();
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex a = p.at("a"), rho = p.at("rho"), xi = p.at("xi");
            const Complex root = csqrt_principal(a * a + rho * rho);
            return EvalResult{std::exp(-xi * root) / root, 1e-15, 1};
        };
        e.default_points = {pt({{"a", 2.0}, {"rho", 1.0}, {"xi", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- J x K integral with algebraic weight ----
    {
        IdentityEntry e;
        e.id = "watson-jk";
        e.description =
            "int_0^inf t^{s+1} J_s(rho t) K_nu(a sqrt(t^2+xi^2)) (t^2+xi^2)^{-nu/2} dt in "
            "closed K-Bessel form";
        e.param_names = {"a", "rho", "xi", "s", "nu"};
        e.conditions = {real_positive("rho"),
                        cond("Re(a) > |Im(rho)|",
                             [](const ParamPoint& p) {
                                 return p.at("a").real() > std::abs(p.at("rho").imag());
                             }),
                        cond("Re(s) > -1",
                             [](const ParamPoint& p) { return p.at("s").real() > -1.0; }),
                        cond("Re(xi) > 0",
                             [](const ParamPoint& p) { return p.at("xi").real() > 0.0; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex a = p.at("a"), xi = p.at("xi"), s = p.at("s"), nu = p.at("nu");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex arg = t * t + xi * xi;
                const Complex root = csqrt_principal(arg);
                return cpow_principal(Complex(t, 0.0), s + 1.0) *
                       bessel_j(s, Complex(rho * t, 0.0)).value *
                       bessel_k(nu, a * root).value * cpow_principal(arg, -0.5 * nu);
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = a.real();
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex a = p.at("a"), rho = p.at("rho"), xi = p.at("xi"), s = p.at("s"),
                          nu = p.at("nu");
            const Complex root = csqrt_principal(a * a + rho * rho);
            const Complex val = cpow_principal(rho, s) * cpow_principal(a, -nu) *
                                cpow_principal(root / xi, nu - s - 1.0) *
                                bessel_k(nu - s - 1.0, xi * root).value;
            return EvalResult{val, std::abs(val) * 1e-13, 4};
        };
        e.default_points = {pt({{"a", 2.0}, {"rho", 1.0}, {"xi", 1.0}, {"s", 0.5}, {"nu", 0.25}})};
        reg.push_back(std::move(e));
    }

    // ---- Fock-type J0 integral evaluating to I K ----
    {
        IdentityEntry e;
        e.id = "fock-bursian";
        e.description =
            "int_0^inf t J0(rho t) r(t)^nu / (sqrt(t^2+z^2) sqrt(t^2+w^2)) dt = "
            "I_nu(rho(z-w)/2) K_nu(rho(z+w)/2)";
        e.param_names = {"rho", "z", "w", "nu"};
        e.conditions = {real_positive("rho"),
                        cond("Re(z) > Re(w) >= 0",
                             [](const ParamPoint& p) {
                                 return p.at("z").real() > p.at("w").real() &&
                                        p.at("w").real() >= 0.0;
                             }),
                        cond("Re(nu) > -3/4",
                             [](const ParamPoint& p) { return p.at("nu").real() > -0.75; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex z = p.at("z"), w = p.at("w"), nu = p.at("nu");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex zz = t * t + z * z, ww = t * t + w * w;
                const Complex u = csqrt_principal(zz), v = csqrt_principal(ww);
                const Complex r = (zz - ww) / (zz + ww + 2.0 * u * v);
                return t * bessel_j(0.0, Complex(rho * t, 0.0)).value *
                       cpow_principal(r, nu) / (u * v);
            };
            f.decay = Integrand::Decay::algebraic;
            f.decay_rate = 2.0 * nu.real() + 1.5;
            f.oscillation_period = M_PI / rho;
            f.first_zero = 0.75 * M_PI / rho;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex z = p.at("z"), w = p.at("w"), nu = p.at("nu"), rho = p.at("rho");
            const Complex val = bessel_i(nu, 0.5 * rho * (z - w)).value *
                                bessel_k(nu, 0.5 * rho * (z + w)).value;
            return EvalResult{val, std::abs(val) * 1e-13, 2};
        };
        e.default_points = {pt({{"rho", 1.0}, {"z", 2.0}, {"w", 1.0}, {"nu", 0.5}})};
        reg.push_back(std::move(e));
    }

    // ---- generalized Fock-type integral with 2F1 factor ----
    {
        IdentityEntry e;
        e.id = "koshliakov-fock";
        e.description =
            "generalized J_s Fock-type integral with hypergeometric weight equal to "
            "Gamma(nu+1)/Gamma(nu+s+1) (2 rho)^s I_nu(rho(z-w)/2) K_nu(rho(z+w)/2)";
        e.param_names = {"rho", "z", "w", "s", "nu"};
        e.conditions = {real_positive("rho"),
                        cond("Re(s) > -1",
                             [](const ParamPoint& p) { return p.at("s").real() > -1.0; }),
                        cond("Re(s + 2 nu + 3/2) > 0",
                             [](const ParamPoint& p) {
                                 return (p.at("s") + 2.0 * p.at("nu")).real() + 1.5 > 0.0;
                             }),
                        cond("Re(z) > Re(w) >= 0", [](const ParamPoint& p) {
                            return p.at("z").real() > p.at("w").real() && p.at("w").real() >= 0.0;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex z = p.at("z"), w = p.at("w"), s = p.at("s"), nu = p.at("nu");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex zz = t * t + z * z, ww = t * t + w * w;
                const Complex u = csqrt_principal(zz), v = csqrt_principal(ww);
                const Complex r = (zz - ww) / (zz + ww + 2.0 * u * v);
                return cpow_principal(Complex(t, 0.0), s + 1.0) *
                       bessel_j(s, Complex(rho * t, 0.0)).value * cpow_principal(r, nu) /
                       (u * v) * cpow_principal(1.0 / u + 1.0 / v, 2.0 * s) *
                       hyp2f1(nu - s, -s, nu + 1.0, r * r).value;
            };
            f.decay = Integrand::Decay::algebraic;
            f.decay_rate = s.real() + 2.0 * nu.real() + 1.5;
            f.oscillation_period = M_PI / rho;
            f.first_zero = (0.75 + 0.5 * s.real()) * M_PI / rho;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex z = p.at("z"), w = p.at("w"), s = p.at("s"), nu = p.at("nu"),
                          rho = p.at("rho");
            const Complex val = gamma(nu + 1.0) / gamma(nu + s + 1.0) *
                                cpow_principal(2.0 * rho, s) *
                                bessel_i(nu, 0.5 * rho * (z - w)).value *
                                bessel_k(nu, 0.5 * rho * (z + w)).value;
            return EvalResult{val, std::abs(val) * 1e-13, 4};
        };
        e.default_points = {pt({{"rho", 1.0}, {"z", 2.0}, {"w", 1.0}, {"s", 0.5}, {"nu", 0.5}})};
        reg.push_back(std::move(e));
    }

    // ---- Sonine-type algebraic J integral ----
    {
        IdentityEntry e;
        e.id = "sonine";
        e.description =
            "int_0^inf x^{nu+1} J_nu(rho x) (x^2+w^2)^{-2nu-1} dx = "
            "(rho/(2 sqrt w))^{2nu} K_nu(rho w)/Gamma(2nu+1)";
        e.param_names = {"rho", "w", "nu"};
        e.conditions = {real_positive("rho"),
                        cond("Re(w) > 0",
                             [](const ParamPoint& p) { return p.at("w").real() > 0.0; }),
                        cond("Re(nu) > -1/2",
                             [](const ParamPoint& p) { return p.at("nu").real() > -0.5; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex w = p.at("w"), nu = p.at("nu");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double x) {
                return cpow_principal(Complex(x, 0.0), nu + 1.0) *
                       bessel_j(nu, Complex(rho * x, 0.0)).value *
                       cpow_principal(x * x + w * w, -(2.0 * nu + 1.0));
            };
            f.decay = Integrand::Decay::algebraic;
            f.decay_rate = 3.0 * nu.real() + 1.5;
            f.oscillation_period = M_PI / rho;
            f.first_zero = (0.75 + 0.5 * nu.real()) * M_PI / rho;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex w = p.at("w"), nu = p.at("nu"), rho = p.at("rho");
            const Complex val = cpow_principal(0.5 * rho / csqrt_principal(w), 2.0 * nu) *
                                bessel_k(nu, rho * w).value / gamma(2.0 * nu + 1.0);
            return EvalResult{val, std::abs(val) * 1e-13, 3};
        };
        e.default_points = {pt({{"rho", 1.0}, {"w", 1.0}, {"nu", 0.25}})};
        reg.push_back(std::move(e));
    }

    // ---- M_s-kernel K-pair integral ----
    {
        IdentityEntry e;
        e.id = "koshliakov-mkernel";
        e.description =
            "int_0^inf t^{s+1} M_s(rho t) { K_nu(b sqrt(xi^2+it^2)) (xi^2+it^2)^{-nu/2} + "
            "conj-path } dt in rotated K-Bessel closed form";
        e.param_names = {"rho", "b", "xi", "s", "nu"};
        e.conditions = {real_positive("rho"), real_positive("b"), real_positive("xi"),
                        cond("Re(s) > -1",
                             [](const ParamPoint& p) { return p.at("s").real() > -1.0; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex s = p.at("s"), nu = p.at("nu");
            const double rho = p.at("rho").real(), b = p.at("b").real(), xi = p.at("xi").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex zp{xi * xi, t * t}, zm{xi * xi, -t * t};
                const Complex kp = bessel_k(nu, b * csqrt_principal(zp)).value *
                                   cpow_principal(zp, -0.5 * nu);
                const Complex km = bessel_k(nu, b * csqrt_principal(zm)).value *
                                   cpow_principal(zm, -0.5 * nu);
                return cpow_principal(Complex(t, 0.0), s + 1.0) *
                       m_kernel(s, rho * t).value * (kp + km);
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = b * M_SQRT1_2;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex s = p.at("s"), nu = p.at("nu");
            const double rho = p.at("rho").real(), b = p.at("b").real(), xi = p.at("xi").real();
            const Complex ord = 1.0 + s - nu;
            const Complex zp{rho * rho, b * b}, zm{rho * rho, -b * b};
            const Complex rot = std::exp(Complex(0.0, -0.25 * M_PI) * (nu + s - 1.0));
            const Complex val =
                cpow_principal(Complex(xi, 0.0), ord) * cpow_principal(Complex(rho, 0.0), s) *
                std::pow(b, -nu.real()) *
                (rot * bessel_k(ord, xi * kEpsBar * csqrt_principal(zp)).value *
                     cpow_principal(zp, -0.5 * ord) +
                 bessel_k(ord, xi * kEps * csqrt_principal(zm)).value *
                     cpow_principal(zm, -0.5 * ord) / rot);
            return EvalResult{val, std::abs(val) * 1e-12, 6};
        };
        e.default_points = {
            pt({{"rho", 1.0}, {"b", 1.0}, {"xi", 1.0}, {"s", 0.25}, {"nu", 0.5}})};
        reg.push_back(std::move(e));
    }

    // ---- divisor K0-pair transformation ----
    {
        IdentityEntry e;
        e.id = "koshvor";
        e.description =
            "2 sum d(n) (K0(4 pi e sqrt(n b)) + K0(4 pi e~ sqrt(n b))) = "
            "-euler - log(b)/2 - 1/(4 pi b) + (b/pi) sum d(n)/(b^2+n^2)";
        e.param_names = {"beta"};
        e.conditions = {cond("Re(beta) > 0",
                             [](const ParamPoint& p) { return p.at("beta").real() > 0.0; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta");
            auto term = [b](std::int64_t n) { return k_pair_term(0.0, 0.0, b, n); };
            return to_eval(sum_exponential(term, pair_rate(b), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta");
            const Complex val = -kEulerGamma - 0.5 * principal_log(b) -
                                1.0 / (4.0 * M_PI * b) +
                                b / M_PI * even_rational_sum({0.0, 0.0}, b);
            return EvalResult{val, std::abs(val) * 1e-12 + 1e-15, 400};
        };
        e.default_points = {pt({{"beta", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- divisor K0 series with logarithmic dual sum ----
    {
        IdentityEntry e;
        e.id = "vorram";
        e.description =
            "2 sum d(n) K0(4 pi sqrt(a n)) = (a/pi^2) sum d(n) log(a/n)/(a^2-n^2) "
            "- euler/2 - (1/4 + 1/(4 pi^2 a)) log a - log(2 pi)/(2 pi^2 a)";
        e.param_names = {"a"};
        e.conditions = {real_positive("a")};
        e.lhs = [](const ParamPoint& p, double tol) {
            const double a = p.at("a").real();
            auto term = [a](std::int64_t n) {
                return 2.0 * shared_sigma_cache().sigma({0.0, 0.0}, n).real() *
                       bessel_k(0.0, Complex(4.0 * M_PI * std::sqrt(a * n), 0.0)).value;
            };
            return to_eval(sum_exponential(term, 4.0 * M_PI * std::sqrt(a), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const double a = p.at("a").real();
            const double val = a / (M_PI * M_PI) * vorram_log_sum(a) - 0.5 * kEulerGamma -
                               (0.25 + 1.0 / (4.0 * M_PI * M_PI * a)) * std::log(a) -
                               std::log(2.0 * M_PI) / (2.0 * M_PI * M_PI * a);
            return EvalResult{{val, 0.0}, std::abs(val) * 1e-11 + 1e-14, 1000};
        };
        e.default_points = {pt({{"a", 1.5}})};
        reg.push_back(std::move(e));
    }

    // ---- truncated-correction K series (free truncation index k) ----
    {
        IdentityEntry e;
        e.id = "cohen";
        e.description =
            "8 pi a^{lam/2} sum sigma_{-lam}(n) n^{lam/2} K_lam(4 pi sqrt(n a)) against its "
            "zeta/rational dual with truncation index k";
        e.param_names = {"a", "lambda", "k"};
        e.conditions = {real_positive("a"),
                        cond("lambda not an integer",
                             [](const ParamPoint& p) {
                                 const Complex l = p.at("lambda");
                                 return std::abs(l.imag()) > 1e-12 ||
                                        std::abs(l.real() - std::round(l.real())) > 1e-9;
                             }),
                        cond("k integer in [1, 8]", [](const ParamPoint& p) {
                            const Complex k = p.at("k");
                            return is_real(k) && k.real() == std::round(k.real()) &&
                                   k.real() >= 1.0 && k.real() <= 8.0;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const double a = p.at("a").real();
            const Complex lam = p.at("lambda");
            auto term = [a, lam](std::int64_t n) {
                const double nd = static_cast<double>(n);
                return shared_sigma_cache().sigma(-lam, n) *
                       cpow_principal(Complex(nd, 0.0), 0.5 * lam) *
                       bessel_k(lam, Complex(4.0 * M_PI * std::sqrt(a * nd), 0.0)).value;
            };
            SeriesResult r = sum_exponential(term, 4.0 * M_PI * std::sqrt(a), inner_tol(tol));
            const Complex pref = 8.0 * M_PI * cpow_principal(Complex(a, 0.0), 0.5 * lam);
            return EvalResult{pref * r.value, std::abs(pref) * r.abs_err, r.terms_used};
        };
        e.rhs = [](const ParamPoint& p, double) {
            const double a = p.at("a").real();
            const Complex lam = p.at("lambda");
            const int k = static_cast<int>(p.at("k").real());
            const Complex sinl = std::sin(0.5 * M_PI * lam);
            const Complex cosl = std::cos(0.5 * M_PI * lam);
            const Complex Acoef = cpow_principal(Complex(a, 0.0), lam - 1.0) / sinl -
                                  cpow_principal(Complex(2.0 * M_PI, 0.0), 1.0 - lam) * gamma(lam);
            const Complex Bcoef = 2.0 / a * cpow_principal(Complex(2.0 * M_PI, 0.0), -lam - 1.0) *
                                      gamma(lam + 1.0) -
                                  M_PI * cpow_principal(Complex(a, 0.0), lam) / cosl;
            Complex zsum{0.0, 0.0};
            for (int j = 1; j <= k; ++j)
                zsum += zeta(Complex(2.0 * j, 0.0)) * zeta(2.0 * j - lam) *
                        std::pow(a, 2.0 * j - 1.0);
            // sum sigma_{-lam}(n) (n^{lam-2k} - a^{lam-2k})/(n^2-a^2), exact tails
            const SigmaCache& cache = shared_sigma_cache();
            const std::int64_t N = std::max<std::int64_t>(1000, 8 * static_cast<std::int64_t>(a));
            const Complex a_pow = cpow_principal(Complex(a, 0.0), lam - 2.0 * k);
            Complex S{0.0, 0.0};
            for (std::int64_t n = 1; n <= N; ++n) {
                const double nd = static_cast<double>(n);
                S += cache.sigma(-lam, n) *
                     (cpow_principal(Complex(nd, 0.0), lam - 2.0 * k) - a_pow) /
                     (nd * nd - a * a);
            }
            double a2j = 1.0;
            for (int j = 0; j <= 60; ++j) {
                const Complex u1 = 2.0 * k + 2.0 * j + 2.0 - lam;
                const double u2 = 2.0 * j + 2.0;
                const Complex tail =
                    a2j * (detail::sigma_tail_moment(-lam, u1, N) -
                           a_pow * detail::sigma_tail_moment(-lam, Complex(u2, 0.0), N));
                S += tail;
                a2j *= a * a;
                if (std::abs(tail) < 1e-18 * (std::abs(S) + 1e-30)) break;
            }
            const Complex val = Acoef * zeta(lam) + Bcoef * zeta(lam + 1.0) +
                                2.0 / sinl * (zsum + std::pow(a, 2.0 * k + 1.0) * S);
            return EvalResult{val, std::abs(val) * 1e-10 + 1e-12, N};
        };
        e.default_points = {pt({{"a", 1.5}, {"lambda", 0.25}, {"k", 1.0}})};
        reg.push_back(std::move(e));
    }

}

}  // namespace registry_detail

const std::vector<IdentityEntry>& registry() {
    static const std::vector<IdentityEntry> reg = [] {
        std::vector<IdentityEntry> r;
        registry_detail::append_core_entries(r);
        registry_detail::append_series_entries(r);
        registry_detail::append_auxiliary_entries(r);
        return r;
    }();
    return reg;
}

const IdentityEntry* find_identity(const std::string& id) {
    for (const auto& e : registry()) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

}  // namespace koshlab
