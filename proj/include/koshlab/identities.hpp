#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "koshlab/complexcore.hpp"
#include "koshlab/series.hpp"

namespace koshlab {

// Named complex parameter values for one identity evaluation.
struct ParamPoint {
    std::map<std::string, Complex> values;

    Complex at(const std::string& name) const;
    Complex get(const std::string& name, Complex fallback) const;
    bool has(const std::string& name) const;
};

struct DomainCondition {
    std::string description;
    std::function<bool(const ParamPoint&)> check;
};

struct VerificationReport {
    std::string id;
    ParamPoint point;
    EvalResult lhs{};
    EvalResult rhs{};
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string verdict;  // "pass" | "fail" | "diverged" | "not-diverged" | "error"
    std::string failure_reason;
    double wall_ms = 0.0;
};

// A registered identity: independent left/right evaluators over a declared
// parameter domain, plus default verification points.
struct IdentityEntry {
    std::string id;
    std::string description;
    std::vector<std::string> param_names;
    std::vector<DomainCondition> conditions;
    std::function<EvalResult(const ParamPoint&, double)> lhs;
    std::function<EvalResult(const ParamPoint&, double)> rhs;
    std::vector<ParamPoint> default_points;
    bool divergence_demo = false;
    std::function<SeriesVerdict(const ParamPoint&)> divergence_check;
};

const std::vector<IdentityEntry>& registry();
const IdentityEntry* find_identity(const std::string& id);

// Process-wide divisor sieve shared by the identity evaluators.
const SigmaCache& shared_sigma_cache();
void set_sigma_limit(std::int64_t limit);

// Algebraic prefactor of the Fock-type integrand family:
//   A(s, lambda, z, w, t) = r^lambda / (uv) * ((u+v)/(uv))^(2s)
//                           * 2F1(lambda - s, -s; lambda + 1; r^2),
// with u = sqrt(z^2 + i t), v = sqrt(w^2 + i t) and
// r = (u - v)/(u + v) computed cancellation-free as (z^2-w^2)/((u+v)^2).
Complex build_A(Complex s, Complex lambda, Complex z, Complex w, Complex t);

// Piecewise constant of the series transformation:
// 0 when Re(s + lambda) > 0; (alpha-beta)^lambda / 2^(4 lambda + 1) at s = -lambda.
Complex h_fun(Complex s, Complex lambda, Complex alpha, Complex beta);

VerificationReport verify(const std::string& id, const ParamPoint& point, double tol);
std::vector<VerificationReport> sweep(const std::string& id,
                                      const std::vector<ParamPoint>& grid, double tol,
                                      int parallelism = 1);

namespace detail {
// sum_n sigma_s(n) [ (b+in)^-w + (b-in)^-w (+ corr n^-w) ] with exact
// Dirichlet tails; `corrected` cancels the leading binomial term.
Complex paired_power_sum(Complex s, Complex w, Complex b, bool corrected);
// sum_n sigma_t(n) / (n^2 + b^2), exact tails.
Complex even_rational_sum(Complex t, Complex b);
// sum_n d(n) log(a/n)/(a^2 - n^2) for real a > 0 (removable n = a handled).
double vorram_log_sum(double a);
// sum_n d(n) [ (a+in)^-1/2 (b+in)^-1/2 + (a-in)^-1/2 (b-in)^-1/2 ], exact tails.
Complex two_sqrt_sum(Complex alpha, Complex beta);
// sum_n sigma_s(n) B(n), B(n) = A(n) + A(-n) + c0 n^-(lam+s+1) with
// c0 = 2^(2s-2lam+1) (alpha-beta)^lam sin(pi(lam+s)/2); ladder-fit zeta tails.
Complex a_bracket_sum(Complex s, Complex lam, Complex alpha, Complex beta);
// c0 coefficient above.
Complex a_leading_coefficient(Complex s, Complex lam, Complex alpha, Complex beta);
// zeta'(w) for real w > 1 (complex-step derivative of the zeta evaluator).
double zeta_deriv_real(double w);
// sum_{n>N} sigma_s(n) n^-w: closed form minus partial sum while that
// difference has relative headroom, direct summation once it cancels.
Complex sigma_tail_moment(Complex s, Complex w, std::int64_t N);
// sum_{n>N} d(n) log(n) n^-w, same dual-regime strategy.
double d_log_tail_moment(double w, std::int64_t N);
}  // namespace detail

}  // namespace koshlab
