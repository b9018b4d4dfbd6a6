// koshlab: verify the identity registry from the command line.
//
//   koshlab list
//   koshlab verify <id> [name=value ...] [--tol X]
//   koshlab sweep <id> <name=a:b:n ...> [--tol X]
//   koshlab eval <fn> <args...>
//
// Global flags: --json, --parallel N, --sieve-limit N. The KOSHLAB_TOL
// environment variable overrides the default tolerance.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "koshlab/bessel.hpp"
#include "koshlab/identities.hpp"

using json = nlohmann::ordered_json;
using koshlab::Complex;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUnknownId = 2;
constexpr int kExitDomain = 3;

const std::map<std::string, std::string>& greek_aliases() {
    static const std::map<std::string, std::string> m = {
        {"α", "alpha"}, {"β", "beta"}, {"γ", "gamma"}, {"λ", "lambda"},
        {"μ", "mu"},    {"ν", "nu"},   {"ρ", "rho"},   {"ξ", "xi"},
        {"σ", "sigma"}};
    return m;
}

std::string canonical_name(const std::string& raw) {
    auto it = greek_aliases().find(raw);
    return it == greek_aliases().end() ? raw : it->second;
}

// complex literal: "<real>" or "<real>+<real>i" / "<real>-<real>i", no spaces
bool parse_complex(const std::string& text, Complex& out) {
    if (text.empty()) return false;
    size_t split = std::string::npos;
    for (size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
            split = i;
    }
    try {
        if (text.back() == 'i' || text.back() == 'j') {
            if (split == std::string::npos) return false;
            const std::string re = text.substr(0, split);
            std::string im = text.substr(split, text.size() - split - 1);
            if (im == "+" || im == "-") im += "1";
            size_t used = 0;
            const double r = std::stod(re, &used);
            if (used != re.size()) return false;
            const double m = std::stod(im, &used);
            if (used != im.size()) return false;
            out = {r, m};
            return true;
        }
        size_t used = 0;
        const double r = std::stod(text, &used);
        if (used != text.size()) return false;
        out = {r, 0.0};
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json report_json(const koshlab::VerificationReport& rep) {
    json params = json::object();
    for (const auto& kv : rep.point.values) params[kv.first] = complex_json(kv.second);
    json j;
    j["id"] = rep.id;
    j["params"] = params;
    j["lhs"] = complex_json(rep.lhs.value);
    j["rhs"] = complex_json(rep.rhs.value);
    j["lhs_err"] = rep.lhs.abs_err;
    j["rhs_err"] = rep.rhs.abs_err;
    j["lhs_evals"] = rep.lhs.evals;
    j["rhs_evals"] = rep.rhs.evals;
    j["abs_diff"] = rep.abs_diff;
    j["rel_diff"] = rep.rel_diff;
    j["tol"] = rep.tol;
    j["pass"] = rep.pass;
    j["verdict"] = rep.verdict;
    if (!rep.failure_reason.empty()) j["failure_reason"] = rep.failure_reason;
    j["wall_ms"] = rep.wall_ms;
    return j;
}

void print_report_table(const koshlab::VerificationReport& rep) {
    std::printf("%-26s %-10s", rep.id.c_str(), rep.verdict.c_str());
    for (const auto& kv : rep.point.values) {
        if (kv.second.imag() == 0.0)
            std::printf(" %s=%g", kv.first.c_str(), kv.second.real());
        else
            std::printf(" %s=%g%+gi", kv.first.c_str(), kv.second.real(), kv.second.imag());
    }
    std::printf("\n");
    if (rep.verdict == "error") {
        std::printf("  %s\n", rep.failure_reason.c_str());
        return;
    }
    std::printf("  lhs = %.15g %+.15gi   (err<=%.2e, evals=%lld)\n", rep.lhs.value.real(),
                rep.lhs.value.imag(), rep.lhs.abs_err, static_cast<long long>(rep.lhs.evals));
    std::printf("  rhs = %.15g %+.15gi   (err<=%.2e, evals=%lld)\n", rep.rhs.value.real(),
                rep.rhs.value.imag(), rep.rhs.abs_err, static_cast<long long>(rep.rhs.evals));
    std::printf("  abs_diff=%.3e rel_diff=%.3e tol=%.1e wall=%.1fms\n", rep.abs_diff,
                rep.rel_diff, rep.tol, rep.wall_ms);
}

int exit_code_for(const koshlab::VerificationReport& rep, bool divergence_demo) {
    if (rep.verdict == "error") {
        return rep.failure_reason.rfind("domain violation", 0) == 0 ? kExitDomain : kExitFail;
    }
    if (divergence_demo) return rep.verdict == "diverged" ? 0 : kExitFail;
    return rep.pass ? 0 : kExitFail;
}

struct GridSpec {
    std::string name;
    double start = 0.0, stop = 0.0;
    std::int64_t count = 0;
};

bool parse_grid_spec(const std::string& text, GridSpec& out) {
    const size_t eq = text.find('=');
    if (eq == std::string::npos) return false;
    out.name = canonical_name(text.substr(0, eq));
    const std::string rest = text.substr(eq + 1);
    const size_t c1 = rest.find(':');
    const size_t c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) return false;
    try {
        out.start = std::stod(rest.substr(0, c1));
        out.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        out.count = std::stoll(rest.substr(c2 + 1));
    } catch (const std::exception&) {
        return false;
    }
    return out.count >= 0;
}

int cmd_list(bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& e : koshlab::registry()) {
            json entry;
            entry["id"] = e.id;
            entry["description"] = e.description;
            entry["params"] = e.param_names;
            json conds = json::array();
            for (const auto& c : e.conditions) conds.push_back(c.description);
            entry["domain"] = conds;
            entry["divergence_demo"] = e.divergence_demo;
            arr.push_back(entry);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : koshlab::registry()) {
        std::printf("%-26s params:", e.id.c_str());
        for (const auto& p : e.param_names) std::printf(" %s", p.c_str());
        std::printf("\n    %s\n    domain:", e.description.c_str());
        for (size_t i = 0; i < e.conditions.size(); ++i)
            std::printf("%s %s", i ? ";" : "", e.conditions[i].description.c_str());
        std::printf("\n");
    }
    return 0;
}

int cmd_eval(const std::vector<std::string>& args, bool as_json) {
    if (args.empty()) {
        std::cerr << "eval: missing function name\n";
        return kExitFail;
    }
    const std::string fn = args[0];
    std::vector<Complex> xs;
    for (size_t i = 1; i < args.size(); ++i) {
        Complex z;
        if (!parse_complex(args[i], z)) {
            std::cerr << "eval: bad complex literal '" << args[i] << "'\n";
            return kExitFail;
        }
        xs.push_back(z);
    }
    auto need = [&](size_t n) {
        if (xs.size() != n)
            throw koshlab::DomainError("eval " + fn + ": expected " + std::to_string(n) +
                                       " argument(s)");
    };
    try {
        koshlab::EvalResult r;
        if (fn == "gamma") {
            need(1);
            r = {koshlab::gamma(xs[0]), 0.0, 1};
        } else if (fn == "zeta") {
            need(1);
            r = {koshlab::zeta(xs[0]), 0.0, 1};
        } else if (fn == "2f1") {
            need(4);
            r = koshlab::hyp2f1(xs[0], xs[1], xs[2], xs[3]);
        } else if (fn == "J") {
            need(2);
            r = koshlab::bessel_j(xs[0], xs[1]);
        } else if (fn == "Y") {
            need(2);
            r = koshlab::bessel_y(xs[0], xs[1]);
        } else if (fn == "I") {
            need(2);
            r = koshlab::bessel_i(xs[0], xs[1]);
        } else if (fn == "K") {
            need(2);
            r = koshlab::bessel_k(xs[0], xs[1]);
        } else if (fn == "M") {
            need(2);
            r = koshlab::m_kernel(xs[0], xs[1].real());
        } else if (fn == "F") {
            need(2);
            r = koshlab::koshliakov_kernel(xs[0], xs[1].real());
        } else if (fn == "sigma") {
            need(2);
            r = {koshlab::shared_sigma_cache().sigma(
                     xs[0], static_cast<std::int64_t>(std::llround(xs[1].real()))),
                 0.0, 1};
        } else if (fn == "A") {
            need(5);
            r = {koshlab::build_A(xs[0], xs[1], xs[2], xs[3], xs[4]), 0.0, 1};
        } else if (fn == "h") {
            need(4);
            r = {koshlab::h_fun(xs[0], xs[1], xs[2], xs[3]), 0.0, 1};
        } else {
            std::cerr << "eval: unknown function '" << fn << "'\n";
            return kExitFail;
        }
        if (as_json) {
            json j;
            j["fn"] = fn;
            j["value"] = complex_json(r.value);
            j["abs_err"] = r.abs_err;
            j["evals"] = r.evals;
            std::cout << j.dump() << "\n";
        } else {
            std::printf("%.17g %+.17gi   abs_err<=%.3e\n", r.value.real(), r.value.imag(),
                        r.abs_err);
        }
        return 0;
    } catch (const koshlab::Error& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kExitFail;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Bessel-kernel integral and divisor-series identities"};
    app.require_subcommand(1);

    bool as_json = false;
    int parallel = 1;
    std::int64_t sieve_limit = 1000000;
    double tol = 1e-6;
    if (const char* env = std::getenv("KOSHLAB_TOL")) {
        try {
            tol = std::stod(env);
        } catch (const std::exception&) {
        }
    }
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_option("--parallel", parallel, "sweep-point parallelism")->check(CLI::Range(1, 256));
    app.add_option("--sieve-limit", sieve_limit, "divisor sieve limit")
        ->check(CLI::Range(static_cast<std::int64_t>(100), static_cast<std::int64_t>(100000000)));

    auto* list_cmd = app.add_subcommand("list", "list registered identities");

    auto* verify_cmd = app.add_subcommand("verify", "verify one identity");
    std::string verify_id;
    std::vector<std::string> verify_params;
    double verify_tol = -1.0;
    verify_cmd->add_option("id", verify_id)->required();
    verify_cmd->add_option("params", verify_params, "name=value parameter overrides");
    verify_cmd->add_option("--tol", verify_tol)->check(CLI::Range(1e-12, 1e-2));

    auto* sweep_cmd = app.add_subcommand("sweep", "verify an identity over a parameter grid");
    std::string sweep_id;
    std::vector<std::string> sweep_specs;
    double sweep_tol = -1.0;
    sweep_cmd->add_option("id", sweep_id)->required();
    sweep_cmd->add_option("grid", sweep_specs, "name=start:stop:count specs");
    sweep_cmd->add_option("--tol", sweep_tol)->check(CLI::Range(1e-12, 1e-2));

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a primitive function");
    std::vector<std::string> eval_args;
    eval_cmd->add_option("args", eval_args, "function name and complex arguments");

    CLI11_PARSE(app, argc, argv);

    if (sieve_limit != 1000000) koshlab::set_sigma_limit(sieve_limit);

    if (list_cmd->parsed()) return cmd_list(as_json);
    if (eval_cmd->parsed()) return cmd_eval(eval_args, as_json);

    if (verify_cmd->parsed()) {
        const auto* entry = koshlab::find_identity(verify_id);
        if (!entry) {
            std::cerr << "unknown identity id: " << verify_id << "\n";
            return kExitUnknownId;
        }
        koshlab::ParamPoint point;
        for (const auto& pv : verify_params) {
            const size_t eq = pv.find('=');
            Complex z;
            if (eq == std::string::npos || !parse_complex(pv.substr(eq + 1), z)) {
                std::cerr << "bad parameter assignment '" << pv << "'\n";
                return kExitFail;
            }
            point.values[canonical_name(pv.substr(0, eq))] = z;
        }
        const auto rep = koshlab::verify(verify_id, point, verify_tol > 0 ? verify_tol : tol);
        if (as_json)
            std::cout << report_json(rep).dump() << "\n";
        else
            print_report_table(rep);
        return exit_code_for(rep, entry->divergence_demo);
    }

    if (sweep_cmd->parsed()) {
        const auto* entry = koshlab::find_identity(sweep_id);
        if (!entry) {
            std::cerr << "unknown identity id: " << sweep_id << "\n";
            return kExitUnknownId;
        }
        std::vector<GridSpec> specs;
        for (const auto& raw : sweep_specs) {
            GridSpec g;
            if (!parse_grid_spec(raw, g)) {
                std::cerr << "bad grid spec '" << raw << "' (want name=start:stop:count)\n";
                return kExitFail;
            }
            specs.push_back(g);
        }
        // cartesian product in spec order
        std::vector<koshlab::ParamPoint> grid;
        grid.emplace_back();
        for (const auto& g : specs) {
            std::vector<koshlab::ParamPoint> next;
            for (std::int64_t i = 0; i < g.count; ++i) {
                const double v =
                    g.count == 1 ? g.start
                                 : g.start + (g.stop - g.start) * static_cast<double>(i) /
                                       static_cast<double>(g.count - 1);
                for (const auto& base : grid) {
                    koshlab::ParamPoint p = base;
                    p.values[g.name] = Complex(v, 0.0);
                    next.push_back(p);
                }
            }
            grid.swap(next);
        }
        if (!specs.empty() && grid.size() == 1 && grid[0].values.empty()) grid.clear();
        const auto reports =
            koshlab::sweep(sweep_id, grid, sweep_tol > 0 ? sweep_tol : tol, parallel);
        int rc = 0;
        json arr = json::array();
        for (const auto& rep : reports) {
            if (as_json)
                arr.push_back(report_json(rep));
            else
                print_report_table(rep);
            const int pc = exit_code_for(rep, entry->divergence_demo);
            if (pc == kExitDomain)
                rc = std::max(rc, kExitDomain);
            else if (pc != 0)
                rc = std::max(rc, kExitFail);
        }
        if (as_json) std::cout << arr.dump() << "\n";
        return rc;
    }
    return 0;
}
