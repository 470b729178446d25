"""Golden-point reduction: powers of q⋆, Fibonacci coefficients, and Λ(N).

Since ``q⋆ = (3 − √5)/2`` satisfies ``q⋆² = 3q⋆ − 1``, every power reduces to
``q⋆^m = a_m·q⋆ + b_m`` with integer coefficients obeying the recurrence
``c_{m+2} = 3c_{m+1} − c_m``.  In closed form ``a_m = F_{2m}`` and
``b_m = −F_{2m−2}`` with the Fibonacci convention ``F_{−2} = −1, F_{−1} = 1``.

That reduction gives a second, independent route to the exact power sums at
the golden point (integer bookkeeping only, no field division), which is
cross-checked against the closed forms from :mod:`.folded`.  On top sit the
exact golden-point moments and the ratio ``Λ(N) = I₂′(θ⋆)/I₁′(θ⋆)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .folded import FoldedMoments, FoldedSums, moments_from_sums, theta_derivatives
from .qfield import QSTAR, GoldenBasis, Q5, decimal_str

__all__ = [
    "GoldenPower",
    "reduce_power",
    "golden_power_table",
    "fibonacci",
    "sums_at_qstar",
    "moments_at_qstar",
    "LambdaValue",
    "lambda_n",
]


@dataclass(frozen=True)
class GoldenPower:
    """Integer coefficients of ``q⋆^m = a·q⋆ + b``."""

    m: int
    a: int
    b: int

    def as_q5(self) -> Q5:
        return GoldenBasis(self.b, self.a).to_q5()


def reduce_power(m: int) -> GoldenPower:
    """Reduce ``q⋆^m`` by the minimal polynomial (m ≥ 0)."""
    if m < 0:
        raise ValueError(f"power must be nonnegative, got {m}")
    a, b = 0, 1  # q⋆^0
    a1, b1 = 1, 0  # q⋆^1
    if m == 0:
        return GoldenPower(0, a, b)
    for _ in range(m - 1):
        a, a1 = a1, 3 * a1 - a
        b, b1 = b1, 3 * b1 - b
    return GoldenPower(m, a1, b1)


def golden_power_table(max_m: int) -> list[GoldenPower]:
    """Rows ``(m, a_m, b_m)`` for m = 0..max_m, by running the recurrence once."""
    if max_m < 0:
        raise ValueError(f"max_m must be nonnegative, got {max_m}")
    rows = [GoldenPower(0, 0, 1)]
    a, b = 0, 1
    a1, b1 = 1, 0
    for m in range(1, max_m + 1):
        rows.append(GoldenPower(m, a1, b1))
        a, a1 = a1, 3 * a1 - a
        b, b1 = b1, 3 * b1 - b
    return rows


def fibonacci(n: int) -> int:
    """Fibonacci number F_n for n ≥ −2, with F_{−2} = −1 and F_{−1} = 1."""
    if n < -2:
        raise ValueError(f"index must be >= -2, got {n}")
    prev, cur = -1, 1  # F_{-2}, F_{-1}
    for _ in range(n + 2):
        prev, cur = cur, prev + cur
    return prev


def sums_at_qstar(n: int) -> FoldedSums:
    """Exact golden-point power sums via the integer reduction route.

    ``S_k(q⋆) = (Σ s^k a_s)·q⋆ + Σ s^k b_s`` — pure integer accumulation,
    deliberately independent of the rational closed forms so the two can be
    compared structurally.
    """
    if n < 1:
        raise ValueError(f"family size must be a positive integer, got {n!r}")
    acc_a = [0, 0, 0, 0]
    acc_b = [0, 0, 0, 0]
    a, b = 1, 0  # coefficients of q⋆^1
    a_next, b_next = 3, -1  # q⋆^2
    for s in range(1, n + 1):
        w = 1
        for k in range(4):
            acc_a[k] += w * a
            acc_b[k] += w * b
            w *= s
        a, a_next = a_next, 3 * a_next - a
        b, b_next = b_next, 3 * b_next - b
    values = [GoldenBasis(acc_b[k], acc_a[k]).to_q5() for k in range(4)]
    return FoldedSums(n, QSTAR, *values)


def moments_at_qstar(n: int) -> FoldedMoments:
    """Exact golden-point moments in Q(√5)."""
    return moments_from_sums(sums_at_qstar(n))


@dataclass(frozen=True)
class LambdaValue:
    """The exact three-cycle ratio ``Λ(N) = I₂′(θ⋆)/I₁′(θ⋆)``."""

    n: int
    value: Q5

    @property
    def golden(self) -> GoldenBasis:
        return self.value.to_golden()

    def decimal(self, digits: int = 10) -> str:
        return decimal_str(self.value, digits)


def lambda_n(n: int) -> LambdaValue:
    """Λ(N) for N ≥ 2, exactly in Q(√5).

    N = 1 is rejected: the index variance vanishes identically, so the ratio
    is undefined.
    """
    if n < 2:
        raise ValueError(f"Λ(N) needs N >= 2 (zero variance at N={n})")
    m = moments_at_qstar(n)
    i1p, i2p = theta_derivatives(m)
    return LambdaValue(n, i2p / i1p)
