#pragma once

#include <functional>
#include <optional>

#include "anzb/interval.hpp"

namespace anzb {

/// Interval extension of a real function, evaluated at a stated working
/// precision. Must satisfy the inclusion property: f(box, p) contains
/// {f(x) : x in box} for every box and every precision p.
using IntervalFn = std::function<Interval(const Interval&, mpfr_prec_t)>;

struct CertificateRequest {
    Interval domain;
    double tolerance = 1e-6;
    int max_depth = 60;
    mpfr_prec_t precision = 128;
    mpfr_prec_t max_precision = 1024;
    // box budget per branch-and-bound pass
    long max_boxes = 2000000;
};

/// Certified global minimum: the returned interval contains min f over the
/// domain and has width <= tolerance. Branch-and-bound by bisection; boxes
/// whose lower bound exceeds the incumbent upper bound are pruned.
/// Escalates precision x2 up to max_precision, then throws PrecisionExhausted.
Interval certified_min(const IntervalFn& f, const CertificateRequest& req);

/// Dual of certified_min.
Interval certified_sup(const IntervalFn& f, const CertificateRequest& req);

enum class Direction { increasing, decreasing };

enum class Verdict { verified, refuted, inconclusive };

struct VerifyResult {
    Verdict verdict = Verdict::inconclusive;
    // For refuted: two points in the domain witnessing the violation.
    std::optional<std::pair<double, double>> witness;
    // For verify_nonneg: certified lower bound for f over the domain.
    std::optional<Interval> inf_enclosure;
};

/// Certifies monotonicity on a finite subdivision: thin evaluations at the
/// subdivision nodes must be strictly ordered, and interval images of
/// subintervals separated by at least one mesh cell must be disjoint in the
/// stated order. Overlap forces refinement up to the step budget.
VerifyResult verify_monotone(const IntervalFn& f, const Interval& domain, Direction dir,
                             long step_budget = 100000, mpfr_prec_t prec = 128);

/// Certifies inf f >= floor on the domain by adaptive subdivision; refutes
/// with a witness point whose image is certainly below the floor.
VerifyResult verify_nonneg(const IntervalFn& f, const Interval& domain, long step_budget = 1000000,
                           mpfr_prec_t prec = 128, double floor = 0.0);

}  // namespace anzb
