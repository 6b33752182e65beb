#pragma once

#include <functional>

#include "anzb/enclosure.hpp"
#include "anzb/extremal.hpp"
#include "anzb/mangoldt.hpp"
#include "anzb/zeros.hpp"
#include "anzb/zeta.hpp"

namespace anzb {

/// Even function with quadratic decay, packaged with the bounds the zero-sum
/// machinery needs: a pointwise |g'| majorant and a constant with
/// |g(x)| <= decay_c / x^2.
struct SumFn {
    std::function<double(double)> value;
    std::function<double(double)> deriv_bound;
    double decay_c;
};

SumFn poisson_sum_fn();
SumFn extremal_sum_fn(const ExtremalParams& p);

/// Itemized error budget; the verdicts below use the sum of all items.
struct BudgetItems {
    double stated_o = 0.0;            // O* radius quoted in the source estimate
    double quadrature = 0.0;         // panel-doubling estimate, inflated x10
    double zero_tail = 0.0;          // density envelope beyond the table top
    double ordinate_accuracy = 0.0;  // table accuracy x sum of |g'| bounds
    double euler_maclaurin = 0.0;    // special-function evaluation radii

    double total() const {
        return stated_o + quadrature + zero_tail + ordinate_accuracy + euler_maclaurin;
    }
};

enum class CompVerdict { consistent, violated };

struct BudgetedComparison {
    Enclosure lhs;
    Enclosure rhs;
    BudgetItems items;
    CompVerdict verdict = CompVerdict::violated;

    double budget() const { return items.total(); }
};

struct ZeroSumOptions {
    // DataError when the tail bound exceeds this fraction of |sum| + 0.01
    double max_tail_fraction = 0.25;
};

/// Sum of g(t - gamma) over all zeros (both conjugate ordinate signs), with
/// the density-envelope tail and ordinate-accuracy error in the enclosure.
/// Requires table coverage max_height >= 2|t| + 20.
Enclosure zero_sum(const SumFn& g, double t, const ZeroTable& table, BudgetItems* items = nullptr,
                   const ZeroSumOptions& opt = {});

/// Both sides of the explicit formula for g(x) = h_delta^{+-}(t - x), plus a
/// cross-check of the archimedean integral against its closed-form expansion.
struct GwResult {
    BudgetedComparison cmp;
    double arch_numeric = 0.0;
    double arch_closed = 0.0;
    double arch_budget = 0.0;
    bool arch_consistent = false;
};

GwResult gw_reconcile(const ExtremalParams& p, double t, const ZeroTable& table,
                      const MangoldtTable& primes, double quad_tol = 1e-8,
                      bool drop_prime_sum = false);

/// Re zeta'/zeta(1+it) against the Poisson-kernel zero sum minus
/// (1/2) log(t/2pi), inside 7/(4 t^2) plus numerics.
BudgetedComparison lemma21_check(double t, const ZeroTable& table,
                                 const EulerMaclaurinConfig& cfg = {});

/// sum_rho 1/|rho - it|^2 <= log(t/2pi) + 2 Re zeta'/zeta(1+it) + 7/(2 t^2).
BudgetedComparison zero_energy_bound_check(double t, const ZeroTable& table);

/// Cesaro-weighted twisted prime sum against the reflected zeta'/zeta route,
/// inside x^{-1/2} sum_rho |rho-it|^{-2} + 1.7/t^2 plus numerics.
BudgetedComparison lemma55_check(double t, double x, const ZeroTable& table,
                                 const MangoldtTable& primes,
                                 const EulerMaclaurinConfig& cfg = {});

}  // namespace anzb
