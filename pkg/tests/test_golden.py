"""Tests for golden-power reduction and exact evaluation at q⋆."""

from fractions import Fraction

import pytest

from goldenschur.folded import moments, sums_closed, theta_derivatives, theta_derivatives_fd
from goldenschur.golden import (
    GoldenPower,
    fibonacci,
    golden_power_table,
    lambda_n,
    moments_at_qstar,
    reduce_power,
    sums_at_qstar,
)
from goldenschur.qfield import Q5, QSTAR

# (m, a_m, b_m) rows of q⋆^m = a_m q⋆ + b_m.
REDUCTION_ROWS = [
    (0, 0, 1),
    (1, 1, 0),
    (2, 3, -1),
    (3, 8, -3),
    (4, 21, -8),
    (5, 55, -21),
    (6, 144, -55),
    (7, 377, -144),
    (8, 987, -377),
    (9, 2584, -987),
    (10, 6765, -2584),
    (11, 17711, -6765),
    (12, 46368, -17711),
]


# ---------------------------------------------------------------------------
# reduction table
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("m, a, b", REDUCTION_ROWS)
def test_reduce_power_rows(m, a, b):
    p = reduce_power(m)
    assert (p.m, p.a, p.b) == (m, a, b)


def test_golden_power_table():
    table = golden_power_table(12)
    assert [(p.m, p.a, p.b) for p in table] == REDUCTION_ROWS
    assert all(isinstance(p, GoldenPower) for p in table)


def test_reduction_convention():
    # q⋆² = 3q⋆ − 1 fixes the sign convention for the whole table.
    assert (reduce_power(2).a, reduce_power(2).b) == (3, -1)
    assert QSTAR * QSTAR == 3 * QSTAR - 1


def test_recurrence():
    table = golden_power_table(60)
    for lo, mid, hi in zip(table, table[1:], table[2:]):
        assert hi.a == 3 * mid.a - lo.a
        assert hi.b == 3 * mid.b - lo.b


def test_reduce_power_is_qstar_power():
    for m in range(0, 201):
        p = reduce_power(m)
        assert QSTAR**m == p.a * QSTAR + p.b
        assert p.as_q5() == QSTAR**m


def test_reduce_power_rejects_negative():
    with pytest.raises(ValueError):
        reduce_power(-1)


# ---------------------------------------------------------------------------
# Fibonacci closed form
# ---------------------------------------------------------------------------


def test_fibonacci_values():
    assert [fibonacci(n) for n in range(-2, 11)] == [-1, 1, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        fibonacci(-3)


def test_fibonacci_recurrence():
    prev, cur = fibonacci(0), fibonacci(1)
    for n in range(2, 400):
        prev, cur = cur, prev + cur
        assert fibonacci(n) == cur


def test_closed_form_coefficients():
    # a_m = F_{2m}, b_m = −F_{2m−2} for 0 ≤ m ≤ 200.
    for m in range(0, 201):
        p = reduce_power(m)
        assert p.a == fibonacci(2 * m)
        assert p.b == -fibonacci(2 * m - 2)


# ---------------------------------------------------------------------------
# power sums at q⋆ via the reduction table
# ---------------------------------------------------------------------------


def test_sums_at_qstar_n12_frozen():
    s = sums_at_qstar(12)
    assert s.s0 == Q5(83880, -37512)
    assert s.s1 == Q5(954726, -426966)
    assert s.s2 == Q5(10950528, -4897224)
    assert s.s3 == Q5(126360432, -56510100)


def test_sums_at_qstar_golden_coordinates():
    s = sums_at_qstar(12)
    assert (s.s0.to_golden().c0, s.s0.to_golden().c1) == (-28656, 75024)
    assert (s.s1.to_golden().c0, s.s1.to_golden().c1) == (-326172, 853932)
    assert (s.s2.to_golden().c0, s.s2.to_golden().c1) == (-3741144, 9794448)
    assert (s.s3.to_golden().c0, s.s3.to_golden().c1) == (-43169868, 113020200)


def test_sums_at_qstar_agrees_with_closed_forms():
    # Two independent exact routes: integer-weighted reduction table versus
    # the rational closed forms evaluated in Q(√5).
    for n in range(1, 25):
        assert sums_at_qstar(n).as_tuple() == sums_closed(n, QSTAR).as_tuple()


def test_moments_at_qstar_frozen():
    m = moments_at_qstar(12)
    assert m.i1 == Q5(Fraction(13, 2), Fraction(-131, 60))
    assert m.i2 == Q5(Fraction(805, 12), Fraction(-1703, 60))
    assert m.i3 == Q5(Fraction(6071, 8), Fraction(-13373, 40))
    assert m.var == Fraction(719, 720)
    assert m.var == m.i2 - m.i1 * m.i1


def test_moments_at_qstar_matches_generic_route():
    for n in (1, 2, 3, 12, 24):
        assert moments_at_qstar(n) == moments(n, QSTAR)


# ---------------------------------------------------------------------------
# Λ(N)
# ---------------------------------------------------------------------------


def test_lambda_12_exact():
    lam = lambda_n(12)
    assert lam.value == Q5(13, Fraction(-2425, 719))
    assert (lam.golden.c0, lam.golden.c1) == (Fraction(2072, 719), Fraction(4850, 719))
    assert lam.decimal(10) == "5.4583242762"
    assert abs(float(lam.value) - 5.4583242762) <= 1e-10


def test_lambda_is_derivative_ratio():
    for n in (2, 3, 12, 24):
        d1, d2 = theta_derivatives(moments_at_qstar(n))
        assert lambda_n(n).value == d2 / d1


def test_lambda_2_is_three():
    # For a two-point family I₃ − I₁I₂ = 3·Var identically, so Λ(2) = 3.
    assert lambda_n(2).value == Q5(3, 0)


def test_lambda_monotone_in_family_size():
    vals = [float(lambda_n(n).value) for n in range(2, 25)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_lambda_rejects_degenerate():
    with pytest.raises(ValueError):
        lambda_n(1)
    with pytest.raises(ValueError):
        lambda_n(0)


def test_lambda_fd_cross_check():
    f1, f2 = theta_derivatives_fd(12, float(QSTAR), h=1e-5)
    assert abs(f2 / f1 - float(lambda_n(12).value)) < 1e-6
