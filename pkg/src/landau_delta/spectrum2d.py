"""Planar variant: harmonic-type spectral sum and dimensional transmutation.

The ground state solves ``(lam2 / 4 pi) * sum_{n=0}^{N} 1/(n + b) = 1`` with
``b = -E / (hbar omega) > 0``. Replacing the sum by an integral gives the
non-analytic estimate ``b ~ N exp(-4 pi / lam2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError

# B_2k / (2k) for k = 1..7
_PSI_COEFFS = (1 / 12, -1 / 120, 1 / 252, -1 / 240, 1 / 132, -691 / 32760, 1 / 12)
_ASYMPTOTIC_FROM = 10.0


@dataclass(frozen=True)
class TwoDSetup:
    lam2: float
    N: int

    def __post_init__(self):
        if not (math.isfinite(self.lam2) and self.lam2 > 0):
            raise InvalidParameterError(f"lam2 must be finite and positive, got {self.lam2!r}")
        if int(self.N) != self.N or self.N < 1:
            raise InvalidParameterError(f"cutoff N must be an integer >= 1, got {self.N!r}")


def _psi_series_tail(x):
    # sum_k B_2k / (2k x^2k)
    inv2 = 1.0 / (x * x)
    acc = 0.0
    for c in reversed(_PSI_COEFFS):
        acc = acc * inv2 + c
    return acc * inv2


def digamma(x: float) -> float:
    """Digamma function for ``x > 0``.

    Upward recurrence to ``x >= 10`` followed by the asymptotic series; the
    truncation error there is below 1e-16.
    """
    if not (math.isfinite(x) and x > 0):
        raise InvalidParameterError(f"digamma is implemented for x > 0, got {x!r}")
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift += 1.0 / x
        x += 1.0
    return math.log(x) - 0.5 / x - _psi_series_tail(x) - shift


def _digamma_difference(x, m):
    """``psi(x + m) - psi(x)`` for ``x >= 10``, free of cancellation when m << x."""
    y = x + m
    return (math.log1p(m / x) + 0.5 * m / (x * y)
            - (_psi_series_tail(y) - _psi_series_tail(x)))


def f2(b: float, N: int, method: str = "digamma") -> float:
    """``sum_{n=0}^{N} 1/(n + b)``.

    ``method="digamma"`` evaluates ``psi(N + 1 + b) - psi(b)``;
    ``method="direct"`` sums the terms.
    """
    if not (math.isfinite(b) and b > 0):
        raise InvalidParameterError(f"b must be positive, got {b!r}")
    if int(N) != N or N < 0:
        raise InvalidParameterError("N must be a non-negative integer")
    N = int(N)
    if method == "direct":
        n = np.arange(N + 1, dtype=float)
        return float(np.sum(1.0 / (n + b)))
    if method != "digamma":
        raise InvalidParameterError(f"unknown method {method!r}")
    # leading terms below the asymptotic threshold are summed explicitly
    head = 0.0
    n0 = 0
    while n0 <= N and n0 + b < _ASYMPTOTIC_FROM:
        head += 1.0 / (n0 + b)
        n0 += 1
    if n0 > N:
        return head
    return head + _digamma_difference(n0 + b, N + 1 - n0)


def solve_ground_2d(setup: TwoDSetup, rtol: float = 4e-16) -> float:
    """Root ``b* > 0`` of ``(lam2 / 4 pi) f2(b, N) = 1``.

    ``f2`` decreases strictly from +inf to 0, so the root is unique; it is
    bracketed by doubling/halving and refined by bisection on ``log b``.
    """
    scale = setup.lam2 / (4.0 * math.pi)
    if not math.isfinite(scale * (setup.N + 1)) or scale * (setup.N + 1) > 1e300:
        raise InvalidParameterError("lam2 is too large: the root would overflow")

    def h(b):
        return scale * f2(b, setup.N) - 1.0

    lo = hi = 1.0
    while h(hi) > 0:
        hi *= 2.0
    while h(lo) < 0:
        lo *= 0.5
    for _ in range(400):
        mid = math.sqrt(lo * hi)
        if not lo < mid < hi:
            break
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rtol * hi:
            break
    return lo if abs(h(lo)) <= abs(h(hi)) else hi


def ground_2d_asymptotic(setup: TwoDSetup) -> float:
    """``b_est = N exp(-4 pi / lam2)``, so that ``E0 / (hbar omega) = -b_est``."""
    return setup.N * math.exp(-4.0 * math.pi / setup.lam2)


def relative_gap(setup: TwoDSetup) -> tuple[float, float, float]:
    """Return ``(b_solved, b_estimate, |b_solved - b_estimate| / b_estimate)``."""
    b_star = solve_ground_2d(setup)
    b_est = ground_2d_asymptotic(setup)
    return b_star, b_est, abs(b_star - b_est) / b_est
