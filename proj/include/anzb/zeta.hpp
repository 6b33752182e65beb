#pragma once

#include <complex>

#include "anzb/enclosure.hpp"
#include "anzb/real.hpp"

namespace anzb {

struct DivisionByNearZero : DomainError {
    using DomainError::DomainError;
};

/// Euler-Maclaurin truncation parameters. N is the main-sum cutoff, M the
/// number of Bernoulli correction terms. The computed remainder bound must
/// come in under target_abs_err or the evaluation escalates and then throws.
struct EulerMaclaurinConfig {
    long cutoff = 0;          // 0: use max(100, ceil(1.2 t))
    int bernoulli_terms = 12;  // <= 13
    double target_abs_err = 1e-9;
    int threads = 0;  // 0: hardware concurrency
};

/// zeta and zeta' at s = 1 + it in one pass (they share the main sum).
struct ZetaPair {
    ComplexEnclosure zeta;
    ComplexEnclosure zeta_deriv;
};

ZetaPair zeta_pair_1line(double t, const EulerMaclaurinConfig& cfg = {});

/// zeta(1+it) with rigorous absolute error. |t| >= 1 (pole at t=0 excluded).
ComplexEnclosure zeta_1line(double t, const EulerMaclaurinConfig& cfg = {});

/// zeta'/zeta(1+it) with propagated error. Throws DivisionByNearZero if the
/// zeta enclosure contains 0.
ComplexEnclosure zeta_logderiv_1line(double t, const EulerMaclaurinConfig& cfg = {});

}  // namespace anzb
