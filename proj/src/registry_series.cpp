#include "registry_common.hpp"

namespace koshlab {
namespace registry_detail {

using detail::a_bracket_sum;
using detail::a_leading_coefficient;
using detail::even_rational_sum;
using detail::paired_power_sum;
using detail::two_sqrt_sum;

namespace {

// shared closed-form block of the sigma K-pair transformations:
// -Gamma(lam) zeta(lam) (2 pi sqrt b)^-lam + b^{lam/2-1} zeta(lam)/(2 pi),
// with the removable lam = 1 singularity evaluated in closed form
Complex dixmol_singular_pair(Complex lam, Complex b) {
    if (std::abs(lam - Complex{1.0, 0.0}) < 1e-8) {
        return (kEulerGamma + principal_log(2.0 * M_PI * b)) /
               (2.0 * M_PI * csqrt_principal(b));
    }
    return -gamma(lam) * zeta(lam) *
               cpow_principal(2.0 * M_PI * csqrt_principal(b), -lam) +
           cpow_principal(b, 0.5 * lam - 1.0) * zeta(lam) / (2.0 * M_PI);
}

// koshvor's right-hand side; also the lam -> 0 limit of the K-pair duals
Complex koshvor_rhs_value(Complex b) {
    return -kEulerGamma - 0.5 * principal_log(b) - 1.0 / (4.0 * M_PI * b) +
           b / M_PI * even_rational_sum({0.0, 0.0}, b);
}

// decay rate (in sqrt n) of exp(-2 pi sqrt(2 n b)) envelope terms
double cos_series_rate(Complex b) {
    const Complex sb = csqrt_principal(b);
    return 2.0 * M_PI * std::sqrt(2.0) * (sb.real() - std::abs(sb.imag()));
}

Complex exp_cos_term(Complex s, Complex b, std::int64_t n) {
    const Complex arg = 2.0 * M_PI * csqrt_principal(2.0 * static_cast<double>(n) * b);
    return shared_sigma_cache().sigma(s, n) * std::exp(-arg) * std::cos(arg);
}

Complex exp_sin_term(Complex s, Complex b, std::int64_t n) {
    const Complex arg = 2.0 * M_PI * csqrt_principal(2.0 * static_cast<double>(n) * b);
    return shared_sigma_cache().sigma(s, n) / std::sqrt(static_cast<double>(n)) *
           std::exp(-arg) * std::sin(0.25 * M_PI - arg);
}

}  // namespace

void append_series_entries(std::vector<IdentityEntry>& reg) {
    // ---- sigma_{-lam} K-pair transformation ----
    {
        IdentityEntry e;
        e.id = "dixmol";
        e.description =
            "2 sum sigma_{-lam}(n) n^{lam/2} (e^{i pi lam/4} K_lam(4 pi e sqrt(n b)) + "
            "conj-path) against its zeta/rational dual";
        e.param_names = {"beta", "lambda"};
        e.conditions = {re_positive("beta"),
                        cond("Re(lambda) > -1", [](const ParamPoint& p) {
                            return p.at("lambda").real() > -1.0;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta"), lam = p.at("lambda");
            auto term = [b, lam](std::int64_t n) { return k_pair_term(-lam, lam, b, n); };
            return to_eval(sum_exponential(term, pair_rate(b), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta"), lam = p.at("lambda");
            Complex val;
            if (std::abs(lam) < 1e-8) {
                val = koshvor_rhs_value(b);
            } else {
                val = dixmol_singular_pair(lam, b) -
                      0.5 * cpow_principal(b, 0.5 * lam) * zeta(lam + 1.0) +
                      cpow_principal(b, 0.5 * lam + 1.0) / M_PI * even_rational_sum(-lam, b);
            }
            return EvalResult{val, std::abs(val) * 1e-11 + 1e-15, 400};
        };
        e.default_points = {pt({{"beta", 1.0}, {"lambda", -0.5}}),
                            pt({{"beta", 1.0}, {"lambda", 0.0}}),
                            pt({{"beta", 1.0}, {"lambda", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- exp-cos sigma series against shifted power dual ----
    {
        IdentityEntry e;
        e.id = "dixmolgen";
        e.description =
            "sum sigma_s(n) exp(-2 pi sqrt(2 n b)) cos(2 pi sqrt(2 n b)) = -zeta(-s)/2 + "
            "Gamma(s+3/2) zeta(-s)/(2 sqrt(pi) (2 pi b)^{s+1}) + power-pair dual";
        e.param_names = {"beta", "s"};
        e.conditions = {re_positive("beta"),
                        cond("Re(s) > -1/2",
                             [](const ParamPoint& p) { return p.at("s").real() > -0.5; })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta"), s = p.at("s");
            auto term = [b, s](std::int64_t n) { return exp_cos_term(s, b, n); };
            return to_eval(sum_exponential(term, cos_series_rate(b), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta"), s = p.at("s");
            const Complex g = gamma(s + 1.5);
            const Complex val =
                -0.5 * zeta(-s) +
                g * zeta(-s) / (2.0 * std::sqrt(M_PI) * cpow_principal(2.0 * M_PI * b, s + 1.0)) +
                csqrt_principal(b) * g /
                    (cpow_principal(Complex{2.0, 0.0}, s + 2.0) *
                     cpow_principal(Complex{M_PI, 0.0}, s + 1.5)) *
                    paired_power_sum(s, s + 1.5, b, false);
            return EvalResult{val, std::abs(val) * 1e-11 + 1e-15, 400};
        };
        e.default_points = {pt({{"beta", 1.0}, {"s", 0.0}}), pt({{"beta", 1.0}, {"s", 0.5}}),
                            pt({{"beta", 1.0}, {"s", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- divisor exp-cos series (s = 0 special case) ----
    {
        IdentityEntry e;
        e.id = "hardy-analogue";
        e.description =
            "sum d(n) exp(-2 pi sqrt(2 n b)) cos(2 pi sqrt(2 n b)) = 1/4 - 1/(16 pi b) + "
            "(sqrt b/(8 pi)) sum d(n) ((b+in)^-3/2 + (b-in)^-3/2)";
        e.param_names = {"beta"};
        e.conditions = {re_positive("beta")};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta");
            auto term = [b](std::int64_t n) { return exp_cos_term({0.0, 0.0}, b, n); };
            return to_eval(sum_exponential(term, cos_series_rate(b), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta");
            const Complex val = 0.25 - 1.0 / (16.0 * M_PI * b) +
                                csqrt_principal(b) / (8.0 * M_PI) *
                                    paired_power_sum({0.0, 0.0}, {1.5, 0.0}, b, false);
            return EvalResult{val, std::abs(val) * 1e-11 + 1e-15, 400};
        };
        e.default_points = {pt({{"beta", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- sigma_{-1} I1 K1 pair series with elementary dual ----
    {
        IdentityEntry e;
        e.id = "exotic";
        e.description =
            "sum sigma_{-1}(n) I1 K1 rotated pair = -pi^3 (alpha-beta)/48 + logarithmic "
            "closed terms + (1/2) sum sigma_{-1}(n) sqrt-ratio pair";
        e.param_names = {"alpha", "beta"};
        e.conditions = {arg_under_half_pi("alpha"), arg_under_half_pi("beta"),
                        cond("Re(sqrt alpha) > Re(sqrt beta) > 0", [](const ParamPoint& p) {
                            const Complex sa = csqrt_principal(p.at("alpha"));
                            const Complex sb = csqrt_principal(p.at("beta"));
                            return sa.real() > sb.real() && sb.real() > 0.0;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            auto term = [sa, sb](std::int64_t n) {
                const double rt = std::sqrt(static_cast<double>(n));
                return shared_sigma_cache().sigma({-1.0, 0.0}, n) *
                       ik_pair({1.0, 0.0}, 2.0 * M_PI * rt * (sa - sb),
                               2.0 * M_PI * rt * (sa + sb));
            };
            return to_eval(sum_exponential(term, pair_rate(be), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            const Complex r = (sa - sb) / (sa + sb);
            const Complex closed =
                -std::pow(M_PI, 3) * (al - be) / 48.0 +
                0.5 * r *
                    (kEulerGamma + principal_log(2.0 * M_PI * csqrt_principal(al * be)) - 1.0 -
                     principal_log(4.0 * csqrt_principal(al * be) / ((sa + sb) * (sa + sb))) /
                         (r * r));
            const Complex val = closed + 2.0 * a_bracket_sum({-1.0, 0.0}, {1.0, 0.0}, al, be);
            return EvalResult{val, std::abs(val) * 1e-10 + 1e-14, 4000};
        };
        e.default_points = {pt({{"alpha", 4.0}, {"beta", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- the main sigma_s IK-pair series transformation ----
    {
        IdentityEntry e;
        e.id = "thm-series-transform";
        e.description =
            "sum sigma_s(n) IK rotated pair = h-term + zeta closed terms + "
            "Gamma-weighted sum of the algebraic bracket";
        e.param_names = {"alpha", "beta", "s", "lambda"};
        e.conditions = {arg_under_half_pi("alpha"), arg_under_half_pi("beta"),
                        cond("Re(sqrt alpha) > Re(sqrt beta)",
                             [](const ParamPoint& p) {
                                 return csqrt_principal(p.at("alpha")).real() >
                                        csqrt_principal(p.at("beta")).real();
                             }),
                        cond("Re(lambda) > 0",
                             [](const ParamPoint& p) { return p.at("lambda").real() > 0.0; }),
                        cond("Re(s + lambda) > 0 or s = -lambda",
                             [](const ParamPoint& p) {
                                 const Complex sl = p.at("s") + p.at("lambda");
                                 return sl.real() > 0.0 || std::abs(sl) <= 1e-12;
                             }),
                        cond("|s + 1| >= 0.05 (documented exclusion zone)",
                             [](const ParamPoint& p) {
                                 return std::abs(p.at("s") + Complex{1.0, 0.0}) >= 0.05;
                             })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex s = p.at("s"), lam = p.at("lambda");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            auto term = [=](std::int64_t n) {
                const double rt = std::sqrt(static_cast<double>(n));
                return shared_sigma_cache().sigma(s, n) *
                       ik_pair(lam, 2.0 * M_PI * rt * (sa - sb), 2.0 * M_PI * rt * (sa + sb));
            };
            return to_eval(sum_exponential(term, pair_rate(be), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex s = p.at("s"), lam = p.at("lambda");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            const Complex r = (sa - sb) / (sa + sb);
            const Complex gratio = gamma(lam + s + 1.0) / gamma(lam + 1.0);
            const Complex pref =
                gratio / (cpow_principal(Complex{2.0, 0.0}, 3.0 * s + 2.0) *
                          cpow_principal(Complex{M_PI, 0.0}, s + 1.0));

            Complex val{0.0, 0.0};
            const Complex h = h_fun(s, lam, al, be);
            if (h != Complex{0.0, 0.0}) {
                val -= gratio * zeta(1.0 - s) /
                       (2.0 * cpow_principal(8.0 * M_PI, s)) * h;
            }
            val -= zeta(-s) / (2.0 * lam) * cpow_principal(r, lam);
            val += zeta(-s) * pref / csqrt_principal(al * be) * cpow_principal(r, lam) *
                   cpow_principal(1.0 / sa + 1.0 / sb, 2.0 * s) *
                   hyp2f1(lam - s, -s, lam + 1.0, r * r).value;

            Complex series = a_bracket_sum(s, lam, al, be);
            const Complex c0 = a_leading_coefficient(s, lam, al, be);
            if (std::abs(c0) > 1e-300)
                series -= c0 * dirichlet_sigma_series(s, lam + s + 1.0);
            val += pref * series;
            return EvalResult{val, std::abs(val) * 1e-10 + 1e-14, 4000};
        };
        e.default_points = {pt({{"alpha", 4.0}, {"beta", 1.0}, {"s", 1.0}, {"lambda", 1.0}}),
                            pt({{"alpha", 4.0}, {"beta", 1.0}, {"s", -0.5}, {"lambda", 0.5}}),
                            pt({{"alpha", 4.0}, {"beta", 1.0}, {"s", 0.5}, {"lambda", 0.25}})};
        reg.push_back(std::move(e));
    }

    // ---- analytic continuation of the transformation to Re(lambda) > -1 ----
    {
        IdentityEntry e;
        e.id = "thm-analytic-cont";
        e.description =
            "sigma_s IK-pair series with the bracket corrected by its leading power, valid "
            "down to Re(lambda) > -1";
        e.param_names = {"alpha", "beta", "s", "lambda"};
        e.conditions = {arg_under_half_pi("alpha"), arg_under_half_pi("beta"),
                        cond("Re(sqrt alpha) > Re(sqrt beta)",
                             [](const ParamPoint& p) {
                                 return csqrt_principal(p.at("alpha")).real() >
                                        csqrt_principal(p.at("beta")).real();
                             }),
                        cond("Re(lambda) > -1",
                             [](const ParamPoint& p) { return p.at("lambda").real() > -1.0; }),
                        cond("|lambda| >= 1e-6 (removable pole handled by the "
                             "lambda-zero entry)",
                             [](const ParamPoint& p) {
                                 return std::abs(p.at("lambda")) >= 1e-6;
                             }),
                        cond("Re(s + lambda) > 0 or s = -lambda",
                             [](const ParamPoint& p) {
                                 const Complex sl = p.at("s") + p.at("lambda");
                                 return sl.real() > 0.0 || std::abs(sl) <= 1e-12;
                             }),
                        cond("|s + 1| >= 0.05 (documented exclusion zone)",
                             [](const ParamPoint& p) {
                                 return std::abs(p.at("s") + Complex{1.0, 0.0}) >= 0.05;
                             })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex s = p.at("s"), lam = p.at("lambda");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            auto term = [=](std::int64_t n) {
                const double rt = std::sqrt(static_cast<double>(n));
                return shared_sigma_cache().sigma(s, n) *
                       ik_pair(lam, 2.0 * M_PI * rt * (sa - sb), 2.0 * M_PI * rt * (sa + sb));
            };
            return to_eval(sum_exponential(term, pair_rate(be), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex s = p.at("s"), lam = p.at("lambda");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            const Complex r = (sa - sb) / (sa + sb);
            const Complex gratio = gamma(lam + s + 1.0) / gamma(lam + 1.0);
            const Complex pref =
                gratio / (cpow_principal(Complex{2.0, 0.0}, 3.0 * s + 2.0) *
                          cpow_principal(Complex{M_PI, 0.0}, s + 1.0));
            Complex val = -zeta(-s) / (2.0 * lam) * cpow_principal(r, lam);
            val += zeta(-s) * pref / csqrt_principal(al * be) * cpow_principal(r, lam) *
                   cpow_principal(1.0 / sa + 1.0 / sb, 2.0 * s) *
                   hyp2f1(lam - s, -s, lam + 1.0, r * r).value;
            val += cpow_principal(Complex{M_PI, 0.0}, lam) * cpow_principal(al - be, lam) *
                   zeta(lam + 1.0) * zeta(-s - lam) /
                   (cpow_principal(Complex{2.0, 0.0}, lam + 1.0) * gamma(lam + 1.0));
            val += pref * a_bracket_sum(s, lam, al, be);
            return EvalResult{val, std::abs(val) * 1e-10 + 1e-14, 4000};
        };
        e.default_points = {
            pt({{"alpha", 4.0}, {"beta", 1.0}, {"s", 1.0}, {"lambda", -0.25}})};
        reg.push_back(std::move(e));
    }

    // ---- corrected shifted-power transformation ----
    {
        IdentityEntry e;
        e.id = "ramanujan-corrected";
        e.description =
            "Gamma(s+1/2) { zeta(-s)/(2 b^{s+1/2}) + (1/2) corrected (b+-in)^-s-1/2 sum } = "
            "(2 pi)^s { -2 pi sqrt(pi b) zeta(-s) - sqrt(pi/2) zeta(1/2) zeta(1/2-s) + "
            "sqrt(pi) exp-sin sum }";
        e.param_names = {"beta", "s"};
        e.conditions = {re_positive("beta"),
                        cond("Re(s) > -1/2",
                             [](const ParamPoint& p) { return p.at("s").real() > -0.5; })};
        e.lhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta"), s = p.at("s");
            const Complex val =
                gamma(s + 0.5) * (zeta(-s) / (2.0 * cpow_principal(b, s + 0.5)) +
                                  0.5 * paired_power_sum(s, s + 0.5, b, true));
            return EvalResult{val, std::abs(val) * 1e-11 + 1e-15, 400};
        };
        e.rhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta"), s = p.at("s");
            auto term = [b, s](std::int64_t n) { return exp_sin_term(s, b, n); };
            const SeriesResult sum = sum_exponential(term, cos_series_rate(b), inner_tol(tol));
            const Complex val =
                cpow_principal(2.0 * M_PI, s) *
                (-2.0 * M_PI * csqrt_principal(M_PI * b) * zeta(-s) -
                 std::sqrt(0.5 * M_PI) * zeta({0.5, 0.0}) * zeta(0.5 - s) +
                 std::sqrt(M_PI) * sum.value);
            return EvalResult{val, std::abs(val) * 1e-11 + sum.abs_err * 10.0, sum.terms_used};
        };
        e.default_points = {pt({{"beta", 1.0}, {"s", 0.0}}), pt({{"beta", 1.0}, {"s", 0.5}}),
                            pt({{"beta", 1.0}, {"s", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- divisor exp-sin series pinning zeta(1/2)^2 ----
    {
        IdentityEntry e;
        e.id = "zeta-half-squared";
        e.description =
            "sum d(n)/sqrt(n) exp(-2 pi sqrt(2 n b)) sin(pi/4 - 2 pi sqrt(2 n b)) = "
            "zeta(1/2)^2/sqrt(2) - pi sqrt(b) - 1/(4 sqrt b) + corrected sqrt-power sum";
        e.param_names = {"beta"};
        e.conditions = {re_positive("beta")};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta");
            auto term = [b](std::int64_t n) { return exp_sin_term({0.0, 0.0}, b, n); };
            return to_eval(sum_exponential(term, cos_series_rate(b), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta");
            const Complex zh = zeta({0.5, 0.0});
            const Complex val = zh * zh / std::sqrt(2.0) - M_PI * csqrt_principal(b) -
                                0.25 / csqrt_principal(b) +
                                0.5 * paired_power_sum({0.0, 0.0}, {0.5, 0.0}, b, true);
            return EvalResult{val, std::abs(val) * 1e-11 + 1e-15, 400};
        };
        e.default_points = {pt({{"beta", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- divisor I0 K0 pair series ----
    {
        IdentityEntry e;
        e.id = "lambda-zero";
        e.description =
            "sum d(n) I0 K0 rotated pair = -euler/2 + log(2/(sqrt a + sqrt b))/2 - "
            "1/(8 pi sqrt(ab)) + (1/(4 pi)) sum d(n) inverse-sqrt pair";
        e.param_names = {"alpha", "beta"};
        e.conditions = {arg_under_half_pi("alpha"), arg_under_half_pi("beta"),
                        cond("Re(sqrt alpha) > Re(sqrt beta)", [](const ParamPoint& p) {
                            return csqrt_principal(p.at("alpha")).real() >
                                   csqrt_principal(p.at("beta")).real();
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            auto term = [sa, sb](std::int64_t n) {
                const double rt = std::sqrt(static_cast<double>(n));
                return shared_sigma_cache().sigma({0.0, 0.0}, n) *
                       ik_pair({0.0, 0.0}, 2.0 * M_PI * rt * (sa - sb),
                               2.0 * M_PI * rt * (sa + sb));
            };
            return to_eval(sum_exponential(term, pair_rate(be), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex al = p.at("alpha"), be = p.at("beta");
            const Complex sa = csqrt_principal(al), sb = csqrt_principal(be);
            const Complex val = -0.5 * kEulerGamma + 0.5 * principal_log(2.0 / (sa + sb)) -
                                1.0 / (8.0 * M_PI * csqrt_principal(al * be)) +
                                two_sqrt_sum(al, be) / (4.0 * M_PI);
            return EvalResult{val, std::abs(val) * 1e-10 + 1e-14, 600};
        };
        e.default_points = {pt({{"alpha", 4.0}, {"beta", 1.0}})};
        reg.push_back(std::move(e));
    }

    // ---- sigma_{+lam} K-pair transformation ----
    {
        IdentityEntry e;
        e.id = "sigma-plus-lambda";
        e.description =
            "2 sum sigma_lam(n) n^{lam/2} K-pair = zeta closed terms + corrected "
            "(b+-in)^-2lam-1 dual";
        e.param_names = {"beta", "lambda"};
        e.conditions = {re_positive("beta"),
                        cond("Re(lambda) > 0 or lambda = 0", [](const ParamPoint& p) {
                            const Complex l = p.at("lambda");
                            return l.real() > 0.0 || std::abs(l) <= 1e-12;
                        })};
        e.lhs = [](const ParamPoint& p, double tol) {
            const Complex b = p.at("beta"), lam = p.at("lambda");
            auto term = [b, lam](std::int64_t n) { return k_pair_term(lam, lam, b, n); };
            return to_eval(sum_exponential(term, pair_rate(b), inner_tol(tol)));
        };
        e.rhs = [](const ParamPoint& p, double) {
            const Complex b = p.at("beta"), lam = p.at("lambda");
            Complex val;
            if (std::abs(lam) < 1e-8) {
                val = koshvor_rhs_value(b);
            } else {
                val = -gamma(lam) * zeta(-lam) *
                          cpow_principal(2.0 * M_PI * csqrt_principal(b), -lam) +
                      gamma(2.0 * lam + 1.0) * zeta(-lam) /
                          (cpow_principal(2.0 * M_PI, 2.0 * lam + 1.0) *
                           cpow_principal(b, 1.5 * lam + 1.0)) +
                      cpow_principal(b, 0.5 * lam) * zeta(lam + 1.0) * zeta(-2.0 * lam) +
                      cpow_principal(b, 0.5 * lam) * gamma(2.0 * lam + 1.0) /
                          cpow_principal(2.0 * M_PI, 2.0 * lam + 1.0) *
                          paired_power_sum(lam, 2.0 * lam + 1.0, b, true);
            }
            return EvalResult{val, std::abs(val) * 1e-11 + 1e-15, 400};
        };
        e.default_points = {pt({{"beta", 1.0}, {"lambda", 0.5}}),
                            pt({{"beta", 1.0}, {"lambda", 1.0}})};
        reg.push_back(std::move(e));
    }
}

}  // namespace registry_detail
}  // namespace koshlab
