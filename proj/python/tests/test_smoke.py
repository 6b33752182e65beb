import math
import os

import pytest

import anzb


def test_eval_bound_reference_value():
    assert anzb.eval_bound("thm13", 1e30) == pytest.approx(8.4589677857, abs=1e-9)
    assert anzb.eval_bound("thm13", 1e30) <= anzb.eval_bound("two_loglog", 1e30)


def test_eval_bound_domain_error():
    with pytest.raises(anzb.DomainError):
        anzb.eval_bound("thm13", 2.0)
    with pytest.raises(anzb.DomainError):
        anzb.eval_bound("no_such_bound", 1e10)


def test_crossover_and_no_crossing():
    tc = anzb.crossover("thm13", "two_loglog", 1e8, 1e40)
    assert 1e8 < tc <= 1e30
    with pytest.raises(anzb.NoCrossing):
        anzb.crossover("thm13", "thm13", 1e8, 1e40)


def test_run_claims_filter():
    reports = anzb.run_claims("C1,C11")
    assert [r["id"] for r in reports] == ["C1", "C11"]
    assert all(r["verdict"] == "verified" for r in reports)
    c1 = reports[0]
    assert c1["computed_lo"] <= -0.02309 <= c1["computed_hi"] + 1e-5


def test_zeta_1line_against_euler_product_tail():
    z, err = anzb.zeta_1line(100.0)
    assert err < 1e-6
    assert abs(z) == pytest.approx(1.634254301354, abs=1e-6)


def test_logderiv_matches_quotient():
    z, zerr = anzb.zeta_1line(50.0)
    ld, lderr = anzb.zeta_logderiv_1line(50.0)
    assert lderr < 1e-6
    assert abs(ld) < 10.0


def test_extremal_sandwich_at_samples():
    for x in [0.0, 0.3, 1.7, 5.0]:
        lo = anzb.h_extremal(1.0, "minus", x)
        hi = anzb.h_extremal(1.0, "plus", x)
        assert lo <= anzb.h_poisson(x) + 1e-12
        assert anzb.h_poisson(x) <= hi + 1e-12


def test_ft_extremal_support():
    assert anzb.ft_extremal(1.0, "plus", 1.5) == 0.0
    assert anzb.ft_extremal(1.0, "plus", 0.0) > 0.0


def test_psi_small():
    # psi(10) = log 2 + log 3 + log 2 + log 5 + log 7 + log 2 + log 3
    expect = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
    assert anzb.psi(10.0, 1000) == pytest.approx(expect, abs=1e-12)


def test_bounds_csv_header():
    csv = anzb.bounds_csv([1e10, 1e12])
    assert csv.splitlines()[0].startswith("t,log_t,loglog_t,thm11_upper")
    assert len(csv.splitlines()) == 3


@pytest.mark.skipif("ANZB_ZEROS" not in os.environ, reason="no zero table configured")
def test_zero_sum_with_table():
    table = anzb.ZeroTable.load_file(os.environ["ANZB_ZEROS"])
    value, err = anzb.zero_sum_poisson(0.0, table)
    assert abs(value - 0.5 * 0.0461914179) <= err + 1e-3
