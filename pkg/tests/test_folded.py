"""Tests for folded power sums, moments, and θ-derivatives."""

import math
import random
from fractions import Fraction

import pytest

from goldenschur.folded import (
    folded_weights,
    moments,
    moments_from_sums,
    sums_bruteforce,
    sums_closed,
    theta_derivatives,
    theta_derivatives_fd,
)
from goldenschur.qfield import Q5, QSTAR


# ---------------------------------------------------------------------------
# power sums
# ---------------------------------------------------------------------------


def test_bruteforce_small_cases():
    s = sums_bruteforce(2, Fraction(1, 2))
    assert s.as_tuple() == (Fraction(3, 4), Fraction(1), Fraction(3, 2), Fraction(5, 2))
    s1 = sums_bruteforce(1, Fraction(1, 2))
    assert s1.as_tuple() == (Fraction(1, 2),) * 4
    assert sums_bruteforce(3, Fraction(1, 2)).s1 == Fraction(11, 8)


def test_closed_form_n12_half():
    s = sums_closed(12, Fraction(1, 2))
    assert s.s0 == Fraction(4095, 4096)
    assert s.s1 == Fraction(4089, 2048)
    assert s.s2 == Fraction(12189, 2048)
    assert s.s3 == Fraction(51831, 2048)


def test_closed_form_at_golden_ratio():
    s = sums_closed(12, QSTAR)
    assert s.s0 == Q5(83880, -37512)
    assert s.s1 == Q5(954726, -426966)
    assert s.s2 == Q5(10950528, -4897224)
    assert s.s3 == Q5(126360432, -56510100)


def test_closed_equals_bruteforce_rational():
    rng = random.Random(424242)
    for n in range(1, 25):
        for _ in range(50):
            den = rng.randint(2, 500)
            q = Fraction(rng.randint(1, den - 1), den)
            assert sums_closed(n, q).as_tuple() == sums_bruteforce(n, q).as_tuple()


def test_closed_equals_bruteforce_q5():
    rng = random.Random(11)
    for n in (1, 2, 5, 12):
        assert sums_closed(n, QSTAR).as_tuple() == sums_bruteforce(n, QSTAR).as_tuple()
        for _ in range(5):
            # small irrational perturbations kept inside (0, 1)
            q = Q5(Fraction(rng.randint(1, 8), 16), Fraction(rng.randint(1, 3), 100))
            assert 0 < float(q) < 1
            assert sums_closed(n, q).as_tuple() == sums_bruteforce(n, q).as_tuple()


def test_closed_matches_bruteforce_float():
    # The closed forms divide by (1-q)^4, which costs a few digits in floating
    # point as q -> 1; 1e-9 relative still leaves ~100x observed headroom.
    for n in (2, 12, 24):
        for k in range(1, 10):
            q = k / 10
            a = sums_closed(n, q).as_tuple()
            b = sums_bruteforce(n, q).as_tuple()
            for x, y in zip(a, b):
                assert math.isclose(x, y, rel_tol=1e-9)


def test_sum_bounds():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 24)
        q = Fraction(rng.randint(1, 99), 100)
        s = sums_closed(n, q)
        assert s.s0 > 0 and s.s1 > 0 and s.s2 > 0 and s.s3 > 0
        assert s.s1 <= n * s.s0
        assert s.s2 <= n * n * s.s0


@pytest.mark.parametrize("bad_q", [Fraction(0), Fraction(1), Fraction(3, 2), Fraction(-1, 2)])
def test_domain_rejects_bad_q(bad_q):
    with pytest.raises(ValueError):
        sums_closed(5, bad_q)
    with pytest.raises(ValueError):
        sums_bruteforce(5, bad_q)


def test_domain_rejects_bad_n():
    with pytest.raises(ValueError):
        sums_closed(0, Fraction(1, 2))
    with pytest.raises(ValueError):
        moments(-3, Fraction(1, 2))


def test_domain_rejects_irrational_outside_unit_interval():
    with pytest.raises(ValueError):
        sums_closed(5, Q5(2, 0))
    with pytest.raises(ValueError):
        sums_closed(5, Q5(Fraction(1, 2), Fraction(1, 2)))  # φ > 1


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------


def test_moments_exact_rational_values():
    m = moments(12, Fraction(1, 2))
    assert m.i1 == Fraction(2726, 1365)
    assert m.var == Fraction(3660914, 1863225)
    assert m.i2 == Fraction(8126, 1365)
    assert m.i3 == Fraction(886, 35)
    m3 = moments(12, Fraction(1, 3))
    assert m3.i1 == Fraction(199287, 132860)
    assert m3.var == Fraction(13234051731, 17651779600)


def test_moments_at_golden_ratio():
    m = moments(12, QSTAR)
    assert m.i1 == Q5(Fraction(13, 2), Fraction(-131, 60))
    assert m.i2 == Q5(Fraction(805, 12), Fraction(-1703, 60))
    assert m.i3 == Q5(Fraction(6071, 8), Fraction(-13373, 40))
    assert math.isclose(float(m.i1), 1.617918249125459, rel_tol=1e-15)


def test_moments_degenerate_family():
    for q in (Fraction(1, 7), Fraction(9, 10)):
        m = moments(1, q)
        assert m.i1 == 1 and m.var == 0 and m.i2 == 1 and m.i3 == 1


def test_moment_bounds_exact():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 24)
        q = Fraction(rng.randint(1, 199), 200)
        m = moments(n, q)
        assert 1 <= m.i1 <= n
        assert m.i2 >= m.i1 * m.i1
        if n >= 2:
            assert m.var > 0


def test_i1_strictly_increasing():
    qs = [Fraction(k, 40) for k in range(1, 40)]
    for n in (2, 5, 12):
        vals = [moments(n, q).i1 for q in qs]
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_moments_from_sums_consistent():
    s = sums_closed(7, Fraction(2, 5))
    m = moments_from_sums(s)
    assert m.i1 == s.s1 / s.s0
    assert m.var == m.i2 - m.i1 * m.i1
    assert moments(7, Fraction(2, 5)) == m


# ---------------------------------------------------------------------------
# folded weights
# ---------------------------------------------------------------------------


def test_folded_weights_hand_case():
    assert folded_weights(3, Fraction(1, 2)) == [Fraction(4, 7), Fraction(2, 7), Fraction(1, 7)]


def test_folded_weights_normalized():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(1, 20)
        q = Fraction(rng.randint(1, 49), 50)
        w = folded_weights(n, q)
        assert len(w) == n
        assert sum(w) == 1
        assert all(x > 0 for x in w)
        # geometric decay
        assert all(b / a == q for a, b in zip(w, w[1:]))


def test_folded_weights_define_the_moments():
    n, q = 9, Fraction(3, 7)
    w = folded_weights(n, q)
    m = moments(n, q)
    assert sum((r + 1) * x for r, x in enumerate(w)) == m.i1
    assert sum((r + 1) ** 2 * x for r, x in enumerate(w)) == m.i2
    assert sum((r + 1) ** 3 * x for r, x in enumerate(w)) == m.i3


# ---------------------------------------------------------------------------
# θ-derivatives
# ---------------------------------------------------------------------------


def test_theta_derivatives_exact_values():
    m = moments(12, QSTAR)
    d1, d2 = theta_derivatives(m)
    assert d1 == Fraction(719, 720)
    assert d2 == Q5(Fraction(9347, 720), Fraction(-485, 144))


def test_theta_derivatives_degenerate():
    d1, d2 = theta_derivatives(moments(1, Fraction(1, 3)))
    assert d1 == 0 and d2 == 0


def test_theta_derivatives_identities():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(2, 18)
        q = Fraction(rng.randint(1, 99), 100)
        m = moments(n, q)
        d1, d2 = theta_derivatives(m)
        assert d1 == m.var
        assert d2 == m.i3 - m.i1 * m.i2


def test_fd_matches_exact_at_spec_points():
    f1, _ = theta_derivatives_fd(12, float(QSTAR), h=1e-4)
    assert abs(f1 - 719 / 720) < 1e-7
    m = moments_from_sums(sums_bruteforce(2, Fraction(1, 2)))
    f1, _ = theta_derivatives_fd(2, 0.5, h=1e-4)
    assert abs(f1 - float(m.var)) < 1e-7
    assert theta_derivatives_fd(1, 0.5) == (0.0, 0.0)


def test_fd_matches_exact_on_grid():
    # Central differences carry truncation error h²·|f‴|/6; the third
    # θ-derivatives scale with the high moments, so the bound uses the
    # natural magnitude scale max(1, I₃).
    h = 1e-4
    for n in (2, 12, 24):
        for k in range(1, 10):
            q = k / 10
            m = moments(n, q)
            d1, d2 = theta_derivatives(m)
            f1, f2 = theta_derivatives_fd(n, q, h=h)
            bound = 10 * h * h * max(1.0, float(m.i3))
            assert abs(f1 - d1) <= bound
            assert abs(f2 - d2) <= bound


def test_fd_second_order_convergence():
    n, q = 12, 0.6
    d1, d2 = theta_derivatives(moments(n, q))
    errs = []
    for h in (1e-2, 5e-3, 2.5e-3):
        f1, f2 = theta_derivatives_fd(n, q, h=h)
        errs.append(max(abs(f1 - d1), abs(f2 - d2)))
    # halving h should shrink the error about 4x
    assert 3.0 < errs[0] / errs[1] < 5.0
    assert 3.0 < errs[1] / errs[2] < 5.0
