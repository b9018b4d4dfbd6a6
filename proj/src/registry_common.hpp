#pragma once

#include <cmath>

#include "koshlab/bessel.hpp"
#include "koshlab/identities.hpp"
#include "koshlab/quadrature.hpp"

namespace koshlab::registry_detail {

// evaluator-internal tolerance: two-sided residuals are compared relative to
// the identity's own scale, which sits well below 1 for Bessel-pair series
inline double inner_tol(double tol) { return std::max(1e-12, 1e-4 * tol); }

inline bool is_real(Complex z) { return z.imag() == 0.0; }

// decay rate (in sqrt n) of |K(4 pi e^{+-i pi/4} sqrt(n b))|-type terms
inline double pair_rate(Complex b) {
    const Complex sb = csqrt_principal(b);
    return 4.0 * M_PI * std::min((kEps * sb).real(), (kEpsBar * sb).real());
}

// I_lam(e~ x1) K_lam(e~ x2) + I_lam(e x1) K_lam(e x2)
inline Complex ik_pair(Complex lam, Complex x1, Complex x2) {
    return bessel_i(lam, kEpsBar * x1).value * bessel_k(lam, kEpsBar * x2).value +
           bessel_i(lam, kEps * x1).value * bessel_k(lam, kEps * x2).value;
}

// 2 sigma_t(n) n^{lam/2} ( e^{i pi lam/4} K_lam(4 pi e sqrt(n b)) + conj-path )
inline Complex k_pair_term(Complex t, Complex lam, Complex b, std::int64_t n) {
    const double nd = static_cast<double>(n);
    const Complex sq = csqrt_principal(nd * b);
    const Complex rot = std::exp(Complex(0.0, 0.25 * M_PI) * lam);
    const Complex k1 = bessel_k(lam, 4.0 * M_PI * kEps * sq).value;
    const Complex k2 = bessel_k(lam, 4.0 * M_PI * kEpsBar * sq).value;
    return 2.0 * shared_sigma_cache().sigma(t, n) *
           cpow_principal(Complex(nd, 0.0), 0.5 * lam) * (rot * k1 + k2 / rot);
}

inline EvalResult to_eval(const SeriesResult& r) { return {r.value, r.abs_err, r.terms_used}; }
inline EvalResult to_eval(const QuadResult& r) { return {r.value, r.abs_err, r.evals}; }

inline ParamPoint pt(std::initializer_list<std::pair<std::string, Complex>> kv) {
    ParamPoint p;
    for (const auto& e : kv) p.values[e.first] = e.second;
    return p;
}

inline DomainCondition cond(std::string desc, std::function<bool(const ParamPoint&)> f) {
    return {std::move(desc), std::move(f)};
}

inline DomainCondition real_positive(const std::string& name) {
    return cond(name + " must be real and positive", [name](const ParamPoint& p) {
        const Complex v = p.at(name);
        return is_real(v) && v.real() > 0.0;
    });
}

inline DomainCondition re_positive(const std::string& name) {
    return cond("Re(" + name + ") > 0",
                [name](const ParamPoint& p) { return p.at(name).real() > 0.0; });
}

inline DomainCondition arg_under_quarter_pi(const std::string& name) {
    return cond("|arg " + name + "| < pi/4", [name](const ParamPoint& p) {
        return std::abs(principal_arg(p.at(name))) < 0.25 * M_PI;
    });
}

inline DomainCondition arg_under_half_pi(const std::string& name) {
    return cond("|arg " + name + "| < pi/2", [name](const ParamPoint& p) {
        return std::abs(principal_arg(p.at(name))) < 0.5 * M_PI;
    });
}

void append_core_entries(std::vector<IdentityEntry>& reg);
void append_series_entries(std::vector<IdentityEntry>& reg);
void append_auxiliary_entries(std::vector<IdentityEntry>& reg);

}  // namespace koshlab::registry_detail
