"""Power sums and moments of the folded weight family ``x_r ∝ q^r``.

For ``r = 1..N`` the weights ``x_r(q) = q^r / S₀(q)`` form a one-parameter
exponential family in ``θ = ln q``.  Everything here is generic over the
scalar type of ``q``: :class:`fractions.Fraction` and :class:`~.qfield.Q5`
stay exact end to end, plain floats run the same formulas numerically.

The power sums are ``S_k(q) = Σ_{s=1}^N s^k q^s`` for ``k = 0..3``, the
folded moments ``I_k = S_k / S₀``, and the variance ``Var = I₂ − I₁²``.
Because the family is exponential, ``dI₁/dθ = Var`` and
``dI₂/dθ = I₃ − I₁·I₂``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .qfield import Q5

__all__ = [
    "Scalar",
    "FoldedSums",
    "FoldedMoments",
    "sums_bruteforce",
    "sums_closed",
    "moments",
    "moments_from_sums",
    "folded_weights",
    "theta_derivatives",
    "theta_derivatives_fd",
]

Scalar = Union[Fraction, Q5, float]


def _check_domain(n: int, q: Scalar) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"family size must be a positive integer, got {n!r}")
    if isinstance(q, Q5):
        inside = q.sign() > 0 and (1 - q).sign() > 0
    else:
        inside = 0 < q < 1
    if not inside:
        raise ValueError(f"weight ratio must satisfy 0 < q < 1, got {q!r}")


@dataclass(frozen=True)
class FoldedSums:
    """Power sums ``S_k = Σ_{s=1}^N s^k q^s`` for k = 0..3."""

    n: int
    q: Scalar
    s0: Scalar
    s1: Scalar
    s2: Scalar
    s3: Scalar

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.s0, self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class FoldedMoments:
    """Folded moments ``I_k = S_k/S₀`` and the index variance."""

    n: int
    q: Scalar
    i1: Scalar
    i2: Scalar
    i3: Scalar
    var: Scalar


def sums_bruteforce(n: int, q: Scalar) -> FoldedSums:
    """Direct summation — the oracle the closed forms are tested against."""
    _check_domain(n, q)
    s0 = s1 = s2 = s3 = 0 * q
    p = q * 0 + 1  # multiplicative identity of the scalar type
    for s in range(1, n + 1):
        p = p * q
        s0 = s0 + p
        s1 = s1 + s * p
        s2 = s2 + s * s * p
        s3 = s3 + s**3 * p
    return FoldedSums(n, q, s0, s1, s2, s3)


def sums_closed(n: int, q: Scalar) -> FoldedSums:
    """Closed-form power sums via the geometric-series derivatives.

    The cubic-weight numerator coefficients are ``3N³+6N²−4`` and
    ``3N³+3N²−3N+1`` (obtained by differentiating the quadratic-weight form
    once more in θ); with these the closed forms agree with
    :func:`sums_bruteforce` exactly for every scalar type.
    """
    _check_domain(n, q)
    qn = q**n
    r = 1 - q
    s0 = q * (1 - qn) / r
    s1 = q * (1 - (n + 1) * qn + n * qn * q) / r**2
    s2 = (
        q
        * (1 + q - (n + 1) ** 2 * qn + (2 * n * n + 2 * n - 1) * qn * q - n * n * qn * q * q)
        / r**3
    )
    s3 = (
        q
        * (
            1
            + 4 * q
            + q * q
            - (n + 1) ** 3 * qn
            + (3 * n**3 + 6 * n**2 - 4) * qn * q
            - (3 * n**3 + 3 * n**2 - 3 * n + 1) * qn * q * q
            + n**3 * qn * q**3
        )
        / r**4
    )
    return FoldedSums(n, q, s0, s1, s2, s3)


def moments_from_sums(sums: FoldedSums) -> FoldedMoments:
    i1 = sums.s1 / sums.s0
    i2 = sums.s2 / sums.s0
    i3 = sums.s3 / sums.s0
    return FoldedMoments(sums.n, sums.q, i1, i2, i3, i2 - i1 * i1)


def moments(n: int, q: Scalar) -> FoldedMoments:
    """Folded moments I₁, I₂, I₃ and Var at (N, q), exact for exact q."""
    return moments_from_sums(sums_closed(n, q))


def folded_weights(n: int, q: Scalar) -> list[Scalar]:
    """The normalized weights ``x_r = q^r / S₀``, r = 1..N (they sum to 1)."""
    s0 = sums_closed(n, q).s0
    out = []
    p = q * 0 + 1
    for _ in range(n):
        p = p * q
        out.append(p / s0)
    return out


def theta_derivatives(m: FoldedMoments) -> tuple[Scalar, Scalar]:
    """Exponential-family derivatives ``(dI₁/dθ, dI₂/dθ)`` at the same point.

    ``dI₁/dθ = I₂ − I₁² = Var`` and ``dI₂/dθ = I₃ − I₁·I₂``.
    """
    return m.var, m.i3 - m.i1 * m.i2


def theta_derivatives_fd(n: int, q: float, h: float = 1e-4) -> tuple[float, float]:
    """Central finite differences of I₁, I₂ in θ = ln q (float only)."""
    qf = float(q)
    _check_domain(n, qf)
    q_hi = qf * math.exp(h)
    q_lo = qf * math.exp(-h)
    if not q_hi < 1:
        raise ValueError(f"step h={h} leaves the domain at q={qf}")
    # direct summation: positive terms only, so no (1-q)^k cancellation noise
    hi = moments_from_sums(sums_bruteforce(n, q_hi))
    lo = moments_from_sums(sums_bruteforce(n, q_lo))
    return (hi.i1 - lo.i1) / (2 * h), (hi.i2 - lo.i2) / (2 * h)
