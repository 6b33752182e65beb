"""Certified evaluation toolkit for explicit 1-line zeta bounds."""

from ._anzb import (
    DataError,
    DomainError,
    NoCrossing,
    ZeroTable,
    bound_threshold,
    bounds_csv,
    crossover,
    eval_bound,
    ft_extremal,
    gw_reconcile,
    h_extremal,
    h_poisson,
    psi,
    re_digamma,
    run_claims,
    zero_sum_poisson,
    zeta_1line,
    zeta_logderiv_1line,
)

__all__ = [
    "DataError",
    "DomainError",
    "NoCrossing",
    "ZeroTable",
    "bound_threshold",
    "bounds_csv",
    "crossover",
    "eval_bound",
    "ft_extremal",
    "gw_reconcile",
    "h_extremal",
    "h_poisson",
    "psi",
    "re_digamma",
    "run_claims",
    "zero_sum_poisson",
    "zeta_1line",
    "zeta_logderiv_1line",
]
