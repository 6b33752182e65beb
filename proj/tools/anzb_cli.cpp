// anzb: command-line front door for the verification toolkit.
//
// Subcommands:
//   verify            run catalogued certified checks (claim ledger)
//   bounds            evaluate the closed-form bounds at one height
//   sweep             CSV sweep of the bounds, optionally with empirical columns
//   explicit-formula  Guinand-Weil reconciliation against a zero table
//
// Exit codes: 0 success/consistent, 1 usage error, 2 violated,
//             3 inconclusive, 4 data error (missing/insufficient inputs).

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "anzb/bounds.hpp"
#include "anzb/claims.hpp"
#include "anzb/explicit_formula.hpp"
#include "anzb/mangoldt.hpp"
#include "anzb/zeros.hpp"

using namespace anzb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitData = 4;

std::string zeros_path_or_env(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ANZB_ZEROS")) return env;
    return {};
}

int cmd_verify(const std::string& filter, const std::string& json_path, long precision,
               long max_precision, int64_t sieve_limit) {
    ClaimOptions opts;
    opts.precision = precision;
    opts.max_precision = max_precision;
    opts.sieve_limit = sieve_limit;
    auto reports = run_all(filter, opts);
    if (reports.empty()) {
        std::cerr << "verify: no claim matches filter '" << filter << "'\n";
        return kExitUsage;
    }
    for (const auto& r : reports) {
        std::printf("%-4s %-12s margin=%-12.6g enclosure=[%.10g, %.10g] bits=%ld %.0fms\n",
                    r.id.c_str(), verdict_name(r.verdict), r.margin, r.computed.lo_d(),
                    r.computed.hi_d(), static_cast<long>(r.precision_bits), r.runtime_ms);
    }
    auto s = summarize(reports);
    std::printf("%d verified, %d violated, %d inconclusive\n", s.verified, s.violated,
                s.inconclusive);
    if (!json_path.empty()) {
        if (json_path == "-") {
            write_json(std::cout, reports);
        } else {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "verify: cannot write " << json_path << "\n";
                return kExitUsage;
            }
            write_json(out, reports);
        }
    }
    if (s.violated > 0) return kExitViolated;
    if (s.inconclusive > 0) return kExitInconclusive;
    return kExitOk;
}

int cmd_bounds(double t, bool compare_prior) {
    static const BoundId main_ids[] = {BoundId::thm11_upper, BoundId::thm11_lower,
                                       BoundId::thm12_abs, BoundId::thm12_recip, BoundId::thm13,
                                       BoundId::two_loglog};
    static const BoundId prior_ids[] = {BoundId::lls_abs, BoundId::lls_recip, BoundId::cvs};
    std::printf("t = %.10g (log t = %.6f, log log t = %.6f)\n", t, std::log(t),
                std::log(std::log(t)));
    std::printf("%-12s %14s %12s  %s\n", "bound", "value", "threshold", "status");
    auto row = [&](BoundId id) {
        std::printf("%-12s %14.10f %12.4g  %s\n", bound_name(id), eval_bound(id, t),
                    bound_threshold(id),
                    bound_valid_at(id, t) ? "asserted" : "below threshold (no assertion)");
    };
    for (BoundId id : main_ids) row(id);
    if (compare_prior)
        for (BoundId id : prior_ids) row(id);
    return kExitOk;
}

int cmd_sweep(double t_min, double t_max, long points, bool linear, const std::string& empirical,
              double max_empirical_height, const std::string& out_path) {
    std::vector<double> ts;
    ts.reserve(points);
    if (points == 1) {
        ts.push_back(t_min);
    } else if (linear) {
        for (long i = 0; i < points; ++i)
            ts.push_back(t_min + (t_max - t_min) * double(i) / double(points - 1));
    } else {
        double l0 = std::log(t_min), l1 = std::log(t_max);
        for (long i = 0; i < points; ++i)
            ts.push_back(std::exp(l0 + (l1 - l0) * double(i) / double(points - 1)));
    }
    SweepConfig cfg;
    cfg.with_empirical = !empirical.empty();
    cfg.max_empirical_height = max_empirical_height;
    auto reports = empirical_sweep(ts, cfg);
    if (out_path.empty() || out_path == "-") {
        write_csv(std::cout, reports);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "sweep: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        write_csv(out, reports);
        std::printf("%zu rows written to %s\n", reports.size(), out_path.c_str());
    }
    for (const auto& r : reports)
        if (!r.flags.empty() && r.flags != "ok") {
            std::cerr << "sweep: bound violated at t = " << r.t << ": " << r.flags << "\n";
            return kExitViolated;
        }
    return kExitOk;
}

int cmd_explicit_formula(double delta, double t, const std::string& zeros_path, double quad_tol,
                         int64_t sieve_limit) {
    ZeroTable table = ZeroTable::load_file(zeros_path);
    std::printf("zero table: %zu ordinates up to %.6f\n", table.count(), table.max_height());
    // the prime sum only sees log n <= 2 pi delta
    int64_t need = static_cast<int64_t>(std::exp(2.0 * M_PI * delta)) + 10;
    MangoldtTable primes = MangoldtTable::build(std::min<int64_t>(sieve_limit, std::max<int64_t>(need, 1000)));
    bool all_ok = true;
    for (Sign sign : {Sign::plus, Sign::minus}) {
        ExtremalParams p{delta, sign};
        GwResult r = gw_reconcile(p, t, table, primes, quad_tol);
        const char* tag = sign == Sign::plus ? "majorant" : "minorant";
        std::printf("\nh_%g^%s at t = %g\n", delta, tag, t);
        std::printf("  zero-side        %.12f (+- %.3e)\n", r.cmp.lhs.value, r.cmp.lhs.err);
        std::printf("  arch+prime side  %.12f (+- %.3e)\n", r.cmp.rhs.value, r.cmp.rhs.err);
        std::printf("  budget: stated_o=%.3e quadrature=%.3e zero_tail=%.3e "
                    "ordinates=%.3e euler_maclaurin=%.3e total=%.3e\n",
                    r.cmp.items.stated_o, r.cmp.items.quadrature, r.cmp.items.zero_tail,
                    r.cmp.items.ordinate_accuracy, r.cmp.items.euler_maclaurin,
                    r.cmp.items.total());
        std::printf("  archimedean closed form %.12f vs quadrature %.12f (+- %.3e): %s\n",
                    r.arch_closed, r.arch_numeric, r.arch_budget,
                    r.arch_consistent ? "consistent" : "VIOLATED");
        std::printf("  verdict: %s\n",
                    r.cmp.verdict == CompVerdict::consistent ? "consistent" : "VIOLATED");
        all_ok = all_ok && r.cmp.verdict == CompVerdict::consistent && r.arch_consistent;
    }
    return all_ok ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified evaluation toolkit for explicit 1-line zeta bounds"};
    app.require_subcommand(1);

    long precision = 128;
    app.add_option("--precision", precision, "working precision in bits")->capture_default_str();
    std::string zeros_flag;
    app.add_option("--zeros", zeros_flag,
                   "zero-ordinate table path (overrides env ANZB_ZEROS)");
    int64_t sieve_limit = 100000000;
    app.add_option("--sieve-limit", sieve_limit, "prime-power sieve size")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the catalogued certified checks");
    verify->fallthrough();
    std::string claims_filter;
    verify->add_option("--claims", claims_filter,
                       "comma-separated claim ids (default: all of C1..C20)");
    std::string json_path;
    verify->add_option("--json", json_path, "write a JSON report ('-' for stdout)");
    long max_precision = 1024;
    verify->add_option("--max-precision", max_precision, "escalation cap in bits")
        ->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "evaluate the closed bounds at one height");
    bounds->fallthrough();
    double t_one = 0.0;
    bounds->add_option("--t", t_one, "height t (must exceed e)")->required();
    bool compare_prior = false;
    bounds->add_flag("--compare-prior", compare_prior, "include the earlier published bounds");

    auto* sweep = app.add_subcommand("sweep", "CSV sweep of the bounds over a height range");
    sweep->fallthrough();
    double t_min = 0.0, t_max = 0.0;
    long points = 0;
    sweep->add_option("--t-min", t_min, "lowest height")->required();
    sweep->add_option("--t-max", t_max, "highest height")->required();
    sweep->add_option("--points", points, "number of samples")->required()
        ->check(CLI::PositiveNumber);
    bool linear = false;
    sweep->add_flag("--linear", linear, "linear spacing (default: log-spaced)");
    std::string empirical;
    sweep->add_option("--empirical", empirical,
                      "fill empirical columns (any of: re-logderiv, abs-zeta, recip-zeta, "
                      "abs-logderiv; all four are computed together)")
        ->check(CLI::IsMember({"re-logderiv", "abs-zeta", "recip-zeta", "abs-logderiv"}));
    double max_emp = 1e9;
    sweep->add_option("--max-empirical-height", max_emp,
                      "skip empirical columns above this height")
        ->capture_default_str();
    std::string out_path;
    sweep->add_option("--out", out_path, "CSV destination (default stdout)");

    auto* ef = app.add_subcommand("explicit-formula",
                                  "reconcile both sides of the explicit formula");
    ef->fallthrough();
    double delta = 0.0, t_ef = 0.0;
    ef->add_option("--delta", delta, "bandwidth parameter (>= 1/2)")->required();
    ef->add_option("--t", t_ef, "center height")->required()->check(CLI::PositiveNumber);
    double quad_tol = 1e-8;
    ef->add_option("--quad-tol", quad_tol, "quadrature tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify)
            return cmd_verify(claims_filter, json_path, precision, max_precision, sieve_limit);
        if (*bounds) {
            if (t_one <= std::exp(1.0)) {
                std::cerr << "bounds: t must exceed e\n";
                return kExitUsage;
            }
            return cmd_bounds(t_one, compare_prior);
        }
        if (*sweep) {
            if (!(t_min > std::exp(1.0)) || !(t_max >= t_min)) {
                std::cerr << "sweep: need e < t-min <= t-max\n";
                return kExitUsage;
            }
            return cmd_sweep(t_min, t_max, points, linear, empirical, max_emp, out_path);
        }
        if (*ef) {
            if (delta < 0.5) {
                std::cerr << "explicit-formula: delta must be at least 1/2\n";
                return kExitUsage;
            }
            std::string zp = zeros_path_or_env(zeros_flag);
            if (zp.empty()) {
                std::cerr << "explicit-formula: no zero table (--zeros or ANZB_ZEROS)\n";
                return kExitData;
            }
            return cmd_explicit_formula(delta, t_ef, zp, quad_tol, sieve_limit);
        }
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
