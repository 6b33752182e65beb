#pragma once

#include <cstdint>
#include <vector>

#include "anzb/enclosure.hpp"
#include "anzb/interval.hpp"

namespace anzb {

/// Sieved von Mangoldt values up to `limit`, stored sparsely as ascending
/// prime powers with Lambda(p^m) = log p. Immutable after build.
class MangoldtTable {
  public:
    static MangoldtTable build(int64_t limit);

    int64_t limit() const { return limit_; }
    size_t count() const { return n_.size(); }
    const std::vector<int64_t>& n() const { return n_; }
    const std::vector<double>& lam() const { return lam_; }

    /// index of the first entry with n > x
    size_t upper_index(double x) const;

    /// Chebyshev psi(x) = sum_{n<=x} Lambda(n). Requires x <= limit.
    double psi(double x) const;

  private:
    int64_t limit_ = 0;
    std::vector<int64_t> n_;
    std::vector<double> lam_;
    std::vector<double> psi_;  // prefix sums
};

enum class SumKind { loglog, cesaro, cesaro_twisted, logweight_twisted, lambda_xy, psi };

struct WeightedSumSpec {
    SumKind kind;
    double x = 0;
    double y = 0;  // lambda_xy only
    double t = 0;  // twisted kinds only
};

/// sum_{n<=x} Lambda(n)/(n log n) * log(x/n)/log x. Requires x >= e.
double sum_loglog(double x, const MangoldtTable& tbl);
/// Right-hand side of the Lemma bounding sum_loglog.
double lemma52_rhs(double x);

/// sum_{n<=x} Lambda(n)/n * (1 - n/x). Requires x > 1.
double sum_cesaro(double x, const MangoldtTable& tbl);
double lemma53_rhs(double x);

/// Real part of the twisted counterpart, n^{-it} = cos(t log n) - i sin(t log n).
double sum_twisted(const WeightedSumSpec& spec, const MangoldtTable& tbl);

/// sum_{n<=xy} Lambda_{x,y}(n)/n with the two-range Selberg weight.
double lambda_xy_sum(double x, double y, const MangoldtTable& tbl);

/// Q(x) = sum_{m>sqrt x} Lambda(m)/(m^2 log m) + 2 sum_{m<=sqrt x} Lambda(m)/(x log x),
/// first sum truncated at tail_limit with a rigorous psi-integral tail bound.
/// Requires x >= 81. tail_limit 0 picks max(10^6, 100 sqrt x), capped at the table.
Enclosure q_of_x(double x, const MangoldtTable& tbl, int64_t tail_limit = 0);

/// The p = 2 trigonometric polynomial from the odd/even prime-power split.
double trig_poly_p2(double theta);
Interval trig_poly_p2(const Interval& theta, mpfr_prec_t prec);

}  // namespace anzb
