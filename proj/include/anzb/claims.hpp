#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "anzb/interval.hpp"

namespace anzb {

/// Named constants shared by several certified checks, held as intervals so
/// downstream arithmetic stays outward-rounded.
struct CommonConstants {
    Interval euler_gamma;
    Interval B;           // log(4 pi)/2 - 1 - gamma/2
    Interval eta_plus;    // 8.6544
    Interval eta_minus;   // 6.9856
    Interval eta_star;    // 5.583
    Interval theta_coeff; // 3.332
    Interval c0;          // 1.0467
    Interval lambda0;     // 2.1862
    Interval b1;          // 4 - gamma - log(8 pi^2)
    Interval b2;          // 4 log 4 - eta_plus

    static CommonConstants make(mpfr_prec_t prec = 256);
};

enum class ClaimVerdict { verified, violated, inconclusive };

const char* verdict_name(ClaimVerdict v);

struct ClaimReport {
    std::string id;
    std::string description;
    std::string anchor;  // verbatim quote of the assertion being checked
    ClaimVerdict verdict = ClaimVerdict::inconclusive;
    Interval computed;
    std::string asserted;
    double margin = 0.0;
    mpfr_prec_t precision_bits = 0;
    double runtime_ms = 0.0;
};

struct ClaimOptions {
    mpfr_prec_t precision = 128;
    mpfr_prec_t max_precision = 1024;
    /// sieve size for the checks that consume von Mangoldt tables
    int64_t sieve_limit = 10000000;
};

/// All catalogued claim ids, in canonical order C1..C20.
std::vector<std::string> claim_ids();

/// Runs one catalogued check. Throws DomainError for an unknown id.
ClaimReport run_claim(const std::string& id, const ClaimOptions& opts = {});

struct ClaimSummary {
    int verified = 0;
    int violated = 0;
    int inconclusive = 0;
};

/// Runs every claim matching the comma-separated filter (empty: all),
/// deterministically ordered by id.
std::vector<ClaimReport> run_all(const std::string& filter = "",
                                 const ClaimOptions& opts = {});

ClaimSummary summarize(const std::vector<ClaimReport>& reports);

/// JSON report with a stable key order per entry.
void write_json(std::ostream& out, const std::vector<ClaimReport>& reports);

}  // namespace anzb
