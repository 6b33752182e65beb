#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anzb/enclosure.hpp"
#include "anzb/real.hpp"
#include "anzb/zeta.hpp"

namespace anzb {

struct NoCrossing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form conditional bounds on the 1-line, each with its validity
/// threshold in t.
enum class BoundId {
    thm11_upper,  // Re zeta'/zeta upper
    thm11_lower,  // -Re zeta'/zeta upper
    thm12_abs,    // |zeta|
    thm12_recip,  // 1/|zeta|
    thm13,        // |zeta'/zeta|
    lls_abs,      // prior |zeta| bound
    lls_recip,    // prior 1/|zeta| bound
    cvs,          // prior |zeta'/zeta| bound
    two_loglog,   // 2 log log t
};

const char* bound_name(BoundId id);
/// Smallest t at which the bound is asserted.
double bound_threshold(BoundId id);
bool bound_valid_at(BoundId id, double t);

/// Evaluates the closed formula. Computable for any t > e (values below the
/// threshold are reported but carry no assertion). DomainError for t <= e.
double eval_bound(BoundId id, double t);

/// Bisection in log t for eval_bound(a, t) = eval_bound(b, t). tol is in
/// log t. Throws NoCrossing when the difference has one sign on [t_lo, t_hi].
double crossover(BoundId a, BoundId b, double t_lo, double t_hi, double tol = 1e-9);

struct BoundReport {
    double t = 0.0;
    double bounds[9] = {};  // indexed by BoundId order
    std::optional<Enclosure> emp_re_logderiv;
    std::optional<Enclosure> emp_abs_zeta;
    std::optional<Enclosure> emp_recip_zeta;
    std::optional<Enclosure> emp_abs_logderiv;
    // "ok", or the names of violated bounds; empty when flags are suppressed
    std::string flags;
};

struct SweepConfig {
    bool with_empirical = false;
    double max_empirical_height = 1e9;
    EulerMaclaurinConfig em;
};

/// One report per sample, ordered by t. Empirical columns are filled only
/// when requested and within the height cap; flags compare a bound with an
/// empirical value only when the bound is valid at that t.
std::vector<BoundReport> empirical_sweep(std::vector<double> ts, const SweepConfig& cfg = {});

void write_csv(std::ostream& out, const std::vector<BoundReport>& reports);

}  // namespace anzb
