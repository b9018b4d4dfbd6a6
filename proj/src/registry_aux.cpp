#include "registry_common.hpp"

namespace koshlab {
namespace registry_detail {

void append_auxiliary_entries(std::vector<IdentityEntry>& reg) {
    // ---- F_s-kernel Fock-type integral ----
    {
        IdentityEntry e;
        e.id = "thm-fock-analogue";
        e.description =
            "int_0^inf t^{s+1} F_s(rho t) (A(t^2) + A(-t^2)) dt = "
            "Gamma(lam+1)/Gamma(s+lam+1) (2 rho)^s rotated IK pair";
        e.param_names = {"rho", "z", "w", "s", "lambda"};
        e.conditions = {real_positive("rho"), arg_under_quarter_pi("z"),
                        arg_under_quarter_pi("w"),
                        cond("Re(z) > Re(w)",
                             [](const ParamPoint& p) {
                                 return p.at("z").real() > p.at("w").real();
                             }),
                        cond("Re(s) > -1",
                             [](const ParamPoint& p) { return p.at("s").real() > -1.0; }),
                        cond("Re(lambda) > -1/2",
                             [](const ParamPoint& p) { return p.at("lambda").real() > -0.5; }),
                        cond("Re(s + lambda) > -1", [](const ParamPoint& p) {
                            return (p.at("s") + p.at("lambda")).real() > -1.0;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex z = p.at("z"), w = p.at("w"), s = p.at("s"), lam = p.at("lambda");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex t2{t * t, 0.0};
                return cpow_principal(Complex(t, 0.0), s + 1.0) *
                       koshliakov_kernel(s, rho * t).value *
                       (build_A(s, lam, z, w, t2) + build_A(s, lam, z, w, -t2));
            };
            f.decay = Integrand::Decay::algebraic;
            f.decay_rate = s.real() + 2.0 * lam.real() + 1.5;
            f.oscillation_period = M_PI / rho;
            f.first_zero = 0.25 * M_PI / rho;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex z = p.at("z"), w = p.at("w"), s = p.at("s"), lam = p.at("lambda"),
                          rho = p.at("rho");
            const Complex val = gamma(lam + 1.0) / gamma(s + lam + 1.0) *
                                cpow_principal(2.0 * rho, s) *
                                ik_pair(lam, 0.5 * rho * (z - w), 0.5 * rho * (z + w));
            return EvalResult{val, std::abs(val) * 1e-12, 6};
        };
        e.default_points = {
            pt({{"rho", 1.0}, {"z", 2.0}, {"w", 1.0}, {"s", 0.5}, {"lambda", 0.5}})};
        reg.push_back(std::move(e));
    }

    // ---- Sonine analogue with the F_lam kernel ----
    {
        IdentityEntry e;
        e.id = "sonine-analogue";
        e.description =
            "int_0^inf t^{lam+1} F_lam(rho t) ((w^2+it^2)^-(2lam+1) + (w^2-it^2)^-(2lam+1)) "
            "dt = (rho/(2 sqrt w))^{2 lam} rotated K pair / Gamma(2 lam + 1)";
        e.param_names = {"rho", "w", "lambda"};
        e.conditions = {real_positive("rho"), arg_under_quarter_pi("w"),
                        cond("Re(lambda) > -1/2", [](const ParamPoint& p) {
                            return p.at("lambda").real() > -0.5;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex w = p.at("w"), lam = p.at("lambda");
            const double rho = p.at("rho").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex zp = w * w + Complex{0.0, t * t};
                const Complex zm = w * w - Complex{0.0, t * t};
                return cpow_principal(Complex(t, 0.0), lam + 1.0) *
                       koshliakov_kernel(lam, rho * t).value *
                       (cpow_principal(zp, -(2.0 * lam + 1.0)) +
                        cpow_principal(zm, -(2.0 * lam + 1.0)));
            };
            f.decay = Integrand::Decay::algebraic;
            f.decay_rate = 3.0 * lam.real() + 1.5;
            f.oscillation_period = M_PI / rho;
            f.first_zero = 0.25 * M_PI / rho;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex w = p.at("w"), lam = p.at("lambda"), rho = p.at("rho");
            const Complex rot = std::exp(Complex(0.0, 0.25 * M_PI) * lam);
            const Complex val = cpow_principal(0.5 * rho / csqrt_principal(w), 2.0 * lam) /
                                gamma(2.0 * lam + 1.0) *
                                (rot * bessel_k(lam, kEps * rho * w).value +
                                 bessel_k(lam, kEpsBar * rho * w).value / rot);
            return EvalResult{val, std::abs(val) * 1e-12, 3};
        };
        e.default_points = {pt({{"rho", 1.0}, {"w", 1.0}, {"lambda", 0.25}})};
        reg.push_back(std::move(e));
    }

    // ---- J x K-pair integral with rotated arguments ----
    {
        IdentityEntry e;
        e.id = "kpair-integral";
        e.description =
            "int_0^inf t^{s+1} J_s(rho t) { K_nu(y sqrt(w^2+it^2))(w^2+it^2)^{-nu/2} + "
            "conj-path } dt in rotated K closed form";
        e.param_names = {"y", "rho", "w", "s", "nu"};
        e.conditions = {real_positive("y"), real_positive("rho"), real_positive("w"),
                        cond("Re(s) > -1",
                             [](const ParamPoint& p) { return p.at("s").real() > -1.0; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex s = p.at("s"), nu = p.at("nu");
            const double rho = p.at("rho").real(), y = p.at("y").real(), w = p.at("w").real();
            Integrand f;
            f.eval = [=](double t) {
                const Complex zp{w * w, t * t}, zm{w * w, -t * t};
                return cpow_principal(Complex(t, 0.0), s + 1.0) *
                       bessel_j(s, Complex(rho * t, 0.0)).value *
                       (bessel_k(nu, y * csqrt_principal(zp)).value *
                            cpow_principal(zp, -0.5 * nu) +
                        bessel_k(nu, y * csqrt_principal(zm)).value *
                            cpow_principal(zm, -0.5 * nu));
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = y * M_SQRT1_2;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex s = p.at("s"), nu = p.at("nu");
            const double rho = p.at("rho").real(), y = p.at("y").real(), w = p.at("w").real();
            const Complex ord = 1.0 + s - nu;
            const Complex zp{rho * rho, y * y}, zm{rho * rho, -y * y};
            const Complex val =
                std::pow(w, 1.0) * cpow_principal(Complex(w, 0.0), s - nu) *
                cpow_principal(Complex(rho, 0.0), s) * std::pow(y, -nu.real()) *
                (cpow_principal(kEpsBar, nu + s + 1.0) *
                     bessel_k(ord, w * kEpsBar * csqrt_principal(zp)).value *
                     cpow_principal(zp, -0.5 * ord) +
                 cpow_principal(kEps, nu + s + 1.0) *
                     bessel_k(ord, w * kEps * csqrt_principal(zm)).value *
                     cpow_principal(zm, -0.5 * ord));
            return EvalResult{val, std::abs(val) * 1e-12, 6};
        };
        e.default_points = {
            pt({{"y", 1.0}, {"rho", 1.0}, {"w", 1.0}, {"s", 0.25}, {"nu", 0.5}})};
        reg.push_back(std::move(e));
    }

    // ---- J against exp(-a sqrt(x^2+b^2)) evaluating to a half-order IK product ----
    {
        IdentityEntry e;
        e.id = "jexp-integral";
        e.description =
            "int_0^inf J_nu(g x) exp(-a sqrt(x^2+b^2))/sqrt(x^2+b^2) dx = "
            "I_{nu/2}((b/2)(sqrt(a^2+g^2)-a)) K_{nu/2}((b/2)(sqrt(a^2+g^2)+a))";
        e.param_names = {"alpha", "beta", "gamma", "nu"};
        e.conditions = {re_positive("alpha"), re_positive("beta"), real_positive("gamma"),
                        cond("Re(nu) > -1",
                             [](const ParamPoint& p) { return p.at("nu").real() > -1.0; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex a = p.at("alpha"), b = p.at("beta"), nu = p.at("nu");
            const double g = p.at("gamma").real();
            Integrand f;
            f.eval = [=](double x) {
                const Complex root = csqrt_principal(x * x + b * b);
                return bessel_j(nu, Complex(g * x, 0.0)).value * std::exp(-a * root) / root;
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = a.real();
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex a = p.at("alpha"), b = p.at("beta"), g = p.at("gamma"),
                          nu = p.at("nu");
            const Complex root = csqrt_principal(a * a + g * g);
            const Complex val = bessel_i(0.5 * nu, 0.5 * b * (root - a)).value *
                                bessel_k(0.5 * nu, 0.5 * b * (root + a)).value;
            return EvalResult{val, std::abs(val) * 1e-13, 3};
        };
        e.default_points = {
            pt({{"alpha", 1.0}, {"beta", 1.0}, {"gamma", 1.0}, {"nu", 0.5}})};
        reg.push_back(std::move(e));
    }

    // ---- Laplace transform of t^mu I_lam(t) ----
    {
        IdentityEntry e;
        e.id = "ilaplace";
        e.description =
            "int_0^inf t^mu I_lam(t) exp(-(2y+a+b) t/(a-b)) dt in algebraic-2F1 closed form";
        e.param_names = {"mu", "lambda", "alpha", "beta", "y"};
        e.conditions = {cond("Re(mu + lambda + 1) > 0",
                             [](const ParamPoint& p) {
                                 return (p.at("mu") + p.at("lambda")).real() + 1.0 > 0.0;
                             }),
                        cond("alpha, beta, y real with alpha > beta > 0 and y >= 0",
                             [](const ParamPoint& p) {
                                 const Complex a = p.at("alpha"), b = p.at("beta"),
                                               y = p.at("y");
                                 return is_real(a) && is_real(b) && is_real(y) &&
                                        a.real() > b.real() && b.real() > 0.0 &&
                                        y.real() >= 0.0;
                             }),
                        cond("(2y + alpha + beta)/(alpha - beta) > 1 (integrand decays)",
                             [](const ParamPoint& p) {
                                 const double a = p.at("alpha").real(),
                                              b = p.at("beta").real(),
                                              y = p.at("y").real();
                                 return (2.0 * y + a + b) / (a - b) > 1.0;
                             })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex mu = p.at("mu"), lam = p.at("lambda");
            const double a = p.at("alpha").real(), b = p.at("beta").real(),
                         y = p.at("y").real();
            const double c = (2.0 * y + a + b) / (a - b);
            Integrand f;
            f.eval = [=](double t) {
                return cpow_principal(Complex(t, 0.0), mu) * bessel_i(lam, Complex(t, 0.0)).value *
                       std::exp(-c * t);
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = c - 1.0;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex mu = p.at("mu"), lam = p.at("lambda");
            const double a = p.at("alpha").real(), b = p.at("beta").real(),
                         y = p.at("y").real();
            const Complex sa{std::sqrt(y + a), 0.0}, sb{std::sqrt(y + b), 0.0};
            const Complex r = (sa - sb) / (sa + sb);
            const Complex val =
                cpow_principal(Complex{2.0, 0.0}, -3.0 * mu - 1.0) / (sa * sb) *
                cpow_principal(Complex(a - b, 0.0), lam + mu + 1.0) * gamma(lam + mu + 1.0) /
                (cpow_principal(sa + sb, 2.0 * lam) * gamma(lam + 1.0)) *
                cpow_principal(1.0 / sa + 1.0 / sb, 2.0 * mu) *
                hyp2f1(lam - mu, -mu, lam + 1.0, r * r).value;
            return EvalResult{val, std::abs(val) * 1e-12, 4};
        };
        e.default_points = {
            pt({{"mu", 0.5}, {"lambda", 0.5}, {"alpha", 4.0}, {"beta", 1.0}, {"y", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- I K moment integral ----
    {
        IdentityEntry e;
        e.id = "ik-moment";
        e.description =
            "int_0^inf y^{a-1} I_nu(b y) K_nu(c y) dy = 2^{a-2} c^{-a-nu} b^nu "
            "Gamma(a/2) Gamma(nu+a/2)/Gamma(nu+1) 2F1(nu+a/2, a/2; nu+1; b^2/c^2)";
        e.param_names = {"a", "nu", "b", "c"};
        e.conditions = {cond("|Re(b)| < Re(c)",
                             [](const ParamPoint& p) {
                                 return std::abs(p.at("b").real()) < p.at("c").real();
                             }),
                        cond("Re(a + nu) > |Re(nu)|",
                             [](const ParamPoint& p) {
                                 return (p.at("a") + p.at("nu")).real() >
                                        std::abs(p.at("nu").real());
                             }),
                        cond("b, c real and positive", [](const ParamPoint& p) {
                            return is_real(p.at("b")) && is_real(p.at("c")) &&
                                   p.at("b").real() > 0.0 && p.at("c").real() > 0.0;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex a = p.at("a"), nu = p.at("nu");
            const double b = p.at("b").real(), c = p.at("c").real();
            Integrand f;
            f.eval = [=](double y) {
                return cpow_principal(Complex(y, 0.0), a - 1.0) *
                       bessel_i(nu, Complex(b * y, 0.0)).value *
                       bessel_k(nu, Complex(c * y, 0.0)).value;
            };
            f.decay = Integrand::Decay::exponential;
            f.decay_rate = c - b;
            return to_eval(integrate_semi_infinite(f, inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex a = p.at("a"), nu = p.at("nu"), b = p.at("b"), c = p.at("c");
            const Complex val = cpow_principal(Complex{2.0, 0.0}, a - 2.0) *
                                cpow_principal(c, -a - nu) * cpow_principal(b, nu) *
                                gamma(0.5 * a) * gamma(nu + 0.5 * a) / gamma(nu + 1.0) *
                                hyp2f1(nu + 0.5 * a, 0.5 * a, nu + 1.0, b * b / (c * c)).value;
            return EvalResult{val, std::abs(val) * 1e-12, 4};
        };
        e.default_points = {pt({{"a", 1.5}, {"nu", 0.5}, {"b", 0.5}, {"c", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- divergent antisymmetric power series (detector demo) ----
    {
        IdentityEntry e;
        e.id = "ramanujan-p336-divergent";
        e.description =
            "sum sigma_s(n)/(2i) ((b-in)^{-s-1/2} - (b+in)^{-s-1/2}) diverges; the entry "
            "verifies the detector raises the diverged verdict";
        e.param_names = {"beta", "s"};
        e.conditions = {re_positive("beta"),
                        cond("s real in (-1/2, 1/2)", [](const ParamPoint& p) {
                            const Complex s = p.at("s");
                            return is_real(s) && s.real() > -0.5 && s.real() < 0.5;
                        })};
        e.divergence_demo = true;
        e.divergence_check = [](const ParamPoint& p) {
            const Complex b = p.at("beta"), s = p.at("s");
            auto term = [b, s](std::int64_t n) {
                const Complex in{0.0, static_cast<double>(n)};
                return shared_sigma_cache().sigma(s, n) / Complex{0.0, 2.0} *
                       (cpow_principal(b - in, -s - 0.5) - cpow_principal(b + in, -s - 0.5));
            };
            return detect_divergence(term, 64, 100000);
        };
        e.lhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta"), s = p.at("s");
            Complex partial{0.0, 0.0};
            for (std::int64_t n = 1; n <= 2000; ++n) {
                const Complex in{0.0, static_cast<double>(n)};
                partial += shared_sigma_cache().sigma(s, n) / Complex{0.0, 2.0} *
                           (cpow_principal(b - in, -s - 0.5) - cpow_principal(b + in, -s - 0.5));
            }
            return EvalResult{partial, std::abs(partial), 2000};
        };
        e.rhs = [](const ParamPoint& p, double tol) {
            // the convergent side of the transcribed identity, for context
            const Complex b = p.at("beta"), s = p.at("s");
            auto term = [b, s](std::int64_t n) {
                const Complex arg = 2.0 * M_PI * csqrt_principal(2.0 * static_cast<double>(n) * b);
                return shared_sigma_cache().sigma(s, n) / std::sqrt(static_cast<double>(n)) *
                       std::exp(-arg) * std::sin(0.25 * M_PI + arg);
            };
            const SeriesResult sum =
                sum_exponential(term, 2.0 * M_PI * std::sqrt(2.0) *
                                          csqrt_principal(b).real(),
                                inner_tol(tol));
            const Complex val =
                cpow_principal(2.0 * M_PI, s) *
                (zeta(1.0 - s) / (2.0 * csqrt_principal(M_PI * b)) -
                 2.0 * M_PI * csqrt_principal(M_PI * b) * zeta(-s) *
                     std::tan(0.5 * M_PI * s) +
                 std::sqrt(M_PI) * sum.value);
            return EvalResult{val, sum.abs_err * 10.0 + std::abs(val) * 1e-12, sum.terms_used};
        };
        e.default_points = {pt({{"beta", 1.0}, {"s", 0.25}})};
        reg.push_back(std::move(e));
    }
}

}  // namespace registry_detail
}  // namespace koshlab
