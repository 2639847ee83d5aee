"""Closed forms and inequality audits against the polynomial engine."""

from fractions import Fraction

import pytest

from indseqlab import formulas
from indseqlab.indpoly import indpoly_sst, indpoly_tree, root_split
from indseqlab.intpoly import IntPolynomial
from indseqlab.seqcheck import lc_breaks
from indseqlab.trees import tmt1


def P(*cs):
    return IntPolynomial(cs)


def test_spider_count_small():
    assert [formulas.spider_count(2, k) for k in range(4)] == [1, 5, 6, 1]
    assert [formulas.spider_count(1, k) for k in range(3)] == [1, 3, 1]
    for t in range(1, 61):
        assert formulas.spider_count(t, t + 1) == 1
        assert formulas.spider_count(t, 0) == 1
        assert formulas.spider_count(t, -1) == 0
        assert formulas.spider_count(t, t + 2) == 0
    with pytest.raises(ValueError):
        formulas.spider_count(0, 0)


def test_spider_closed_form_matches_engine():
    assert formulas.spider_matches_engine(120)


def test_spider_lc_sweep():
    assert formulas.spider_lc_sweep(120)
    with pytest.raises(ValueError):
        formulas.spider_lc_sweep(0)


def test_spider_ratio_inequality_boundary():
    # k = t endpoint: 2^4 * 5 / 4 = 20 >= 2*3*0/2 = 0
    assert formulas.spider_ratio_inequality(4, 4)
    assert formulas.spider_ratio_inequality(4, 1)


def test_binomial_gap_identity():
    assert formulas.binomial_gap_identity(5, 0)
    assert formulas.binomial_gap_identity(10, 4)
    for t in range(0, 61):
        for k in range(0, t + 1):
            assert formulas.binomial_gap_identity(t, k)
    with pytest.raises(ValueError):
        formulas.binomial_gap_identity(3, 4)


def test_with_root_poly():
    assert formulas.with_root_poly(1, 1) == P(0, 1, 2)
    h = formulas.with_root_poly(2, 2)
    assert h.coeff(5) == 16
    assert h.degree == 5
    for m in range(1, 7):
        for t in range(1, 7):
            assert formulas.with_root_poly(m, t) == root_split(tmt1(m, t), 0).with_root


def test_without_root_poly():
    assert formulas.without_root_poly(1, 2) == P(1, 5, 6, 1)
    f22 = formulas.without_root_poly(2, 2)
    assert f22 == P(1, 5, 6, 1) * P(1, 5, 6, 1)
    assert f22.coeff(6) == 1
    for m in range(1, 7):
        for t in range(1, 7):
            assert formulas.without_root_poly(m, t) == root_split(tmt1(m, t), 0).without_root


def test_split_reassembles_polynomial():
    for m in range(1, 9):
        for t in range(1, 9):
            total = formulas.without_root_poly(m, t) + formulas.with_root_poly(m, t)
            assert total == indpoly_sst([m, t, 1])


def test_mt2_closed_form():
    assert formulas.without_root_mt2_closed(2, 2) == 1
    f53 = formulas.without_root_poly(5, 3)
    assert formulas.without_root_mt2_closed(5, 3) == f53.coeff(17)
    for m in range(2, 7):
        for t in range(2, 7):
            want = formulas.without_root_poly(m, t).coeff(m * t + 2)
            assert formulas.without_root_mt2_closed(m, t) == want
    with pytest.raises(ValueError):
        formulas.without_root_mt2_closed(1, 3)


def test_mt3_lower_bound():
    assert formulas.without_root_mt3_lower(3, 1) == 1
    assert formulas.without_root_mt3_lower(4, 4) == 4 * 2**4
    assert formulas.without_root_poly(4, 4).coeff(19) >= 64
    for m in range(3, 7):
        for t in range(1, 7):
            got = formulas.without_root_poly(m, t).coeff(m * t + 3)
            assert got >= formulas.without_root_mt3_lower(m, t)
    with pytest.raises(ValueError):
        formulas.without_root_mt3_lower(2, 5)


def test_break_sufficient():
    # degree of the avoiding-the-root polynomial is m(t+1), so at (2,2)
    # the mt+3 coefficient is zero and the condition must be false
    assert formulas.break_sufficient(2, 2) is False
    for m in range(1, 9):
        for t in range(1, 9):
            if formulas.break_sufficient(m, t):
                br = lc_breaks(indpoly_sst([m, t, 1]).coeffs)
                assert m * t + 2 in br


def test_break_sufficient_fires_somewhere():
    fired = [
        (m, t)
        for m in range(1, 11)
        for t in range(1, 11)
        if formulas.break_sufficient(m, t)
    ]
    assert fired  # the condition is not vacuous on the grid


def test_audit_rejects_small_parameters():
    with pytest.raises(ValueError):
        formulas.audit_term_ratios(2, 10)
    with pytest.raises(ValueError):
        formulas.audit_term_ratios(5, 1)


def test_audit_regime_boundary():
    audit = formulas.audit_term_ratios(32, 80)
    assert audit.regime_ok  # 32^16 == 2^80 exactly
    assert not audit.t_le_m
    assert audit.all_steps_ok and audit.all_final_ok
    assert audit.max_ratio < Fraction(1, 32)
    assert audit.total_ratio < Fraction(1, 16)
    # rows enumerate every (s, l) with 0 <= l <= min(s-2, (m-s) t)
    assert len(audit.rows) == sum(min(s - 2, (32 - s) * 80) + 1 for s in range(3, 33))
    # m = 32 is a power of two, so the bound exponent is exact:
    # 5 s log2(32) - s*80/3 = -5s/3
    for row in audit.rows:
        assert row.bound_log2 == Fraction(-5 * row.s, 3)
        assert row.ratio > 0


def test_audit_inside_t_le_m_but_outside_regime():
    audit = formulas.audit_term_ratios(16, 16)
    assert audit.t_le_m
    assert not audit.regime_ok
    assert audit.all_steps_ok
    # the exponent 5s*4 - 16s/3 is positive, so the final bound is weak
    # but still true
    assert audit.all_final_ok
    assert all(row.bound_log2 > 0 for row in audit.rows)


def test_audit_step_boundary_is_tight():
    # at s=3, l=0 the lower bound (s-2)t + l >= st/3 holds with equality
    audit = formulas.audit_term_ratios(8, 4)
    row = next(r for r in audit.rows if r.s == 3 and r.ell == 0)
    assert 3 * ((row.s - 2) * 4 + row.ell) == row.s * 4
    assert row.steps_ok


def test_audit_non_power_of_two_has_no_log_field():
    audit = formulas.audit_term_ratios(6, 5)
    assert all(r.bound_log2 is None for r in audit.rows)
    assert audit.all_steps_ok  # per-step bounds never need the log form


def test_audit_dominant_term_matches_closed_form():
    # the closed-form count equals dominant * (1 + total_ratio)
    for m, t in [(4, 3), (6, 4), (8, 5)]:
        audit = formulas.audit_term_ratios(m, t)
        from math import comb

        dominant = comb(m, 2) * (1 << (m * t - 2 * t))
        total = dominant * (1 + audit.total_ratio)
        assert total == formulas.without_root_mt2_closed(m, t)
        assert total.denominator == 1


def test_generic_dp_agrees_with_closed_forms():
    tree = tmt1(5, 4)
    p = indpoly_tree(tree)
    assert p == formulas.without_root_poly(5, 4) + formulas.with_root_poly(5, 4)
