"""Spectral function and eigenvalue equation of the 3D contact well in a magnetic field.

The energy levels ``x = E / (hbar omega)`` solve ``g * f(x) = 1`` with

    f(x) = sum_{n=0}^{N} |n - x|**(-1/2)

where ``g = lambda / (8 sqrt(2) pi a)``. ``f`` diverges at every integer
``0 <= k <= N``; the roots are therefore located with bisection inside
singular brackets.

Evaluation is done in an *anchored* representation ``x = anchor + t`` with an
integer anchor, so that the distance ``|n - x| = |(n - anchor) - t|`` keeps full
relative precision even when a root sits within 1e-10 of a Landau level.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import BracketError, InvalidParameterError, SingularityError
from .params import COUPLING_SCALE

EPS = np.finfo(float).eps

EXACT = "exact"
CORRECTED = "integral-corrected"


@dataclass(frozen=True)
class SpectralFunction:
    """Configuration for evaluating ``f(x)``.

    Parameters
    ----------
    N
        Landau-level cutoff of the sum.
    window
        In ``integral-corrected`` mode, terms with ``|n - x| <= window`` are
        summed exactly and the rest is replaced by the integral of the summand
        plus the first Euler-Maclaurin correction.
    tail_mode
        ``"exact"`` or ``"integral-corrected"``.
    guard
        Minimum admissible distance from a pole.
    """

    N: int
    window: int = 1000
    tail_mode: str = EXACT
    guard: float = 1e-12

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise InvalidParameterError(f"cutoff N must be an integer >= 1, got {self.N!r}")
        if int(self.window) != self.window or self.window < 1:
            raise InvalidParameterError("window must be an integer >= 1")
        if self.tail_mode not in (EXACT, CORRECTED):
            raise InvalidParameterError(f"unknown tail_mode {self.tail_mode!r}")
        if not self.guard > 0:
            raise InvalidParameterError("guard must be positive")

    @functools.cached_property
    def _levels(self):
        return np.arange(self.N + 1, dtype=float)

    def evaluate(self, x: float) -> tuple[float, float]:
        """Return ``(f(x), error_bound)``."""
        anchor = min(max(int(round(x)), 0), self.N)
        return self.evaluate_anchored(anchor, x - anchor)

    def evaluate_anchored(self, anchor: int, t: float) -> tuple[float, float]:
        """Return ``(f(anchor + t), error_bound)``."""
        if not math.isfinite(t):
            raise InvalidParameterError("evaluation point must be finite")
        nearest = min(max(anchor + int(round(t)), 0), self.N)
        if abs((nearest - anchor) - t) < self.guard:
            raise SingularityError(
                f"x = {anchor} + {t!r} is within {self.guard:g} of the pole at {nearest}")
        if self.tail_mode == EXACT or 2 * self.window + 1 >= self.N + 1:
            d = np.abs((self._levels - anchor) - t)
            value = float(np.sum(1.0 / np.sqrt(d)))
            return value, self._rounding(value)
        return self._corrected(anchor, t)

    def _rounding(self, value):
        # pairwise-summation allowance for a full (N+1)-term reference sum
        return EPS * (math.log2(self.N + 2) + 8.0) * value

    def _corrected(self, anchor, t):
        W = self.window
        # integer part of the window edges relative to the anchor
        lo_edge = anchor + math.ceil(t - W)
        hi_edge = anchor + math.floor(t + W)
        value = 0.0
        bound = 0.0
        p, q = max(lo_edge, 0), min(hi_edge, self.N)
        if p <= q:
            k = np.arange(p - anchor, q - anchor + 1, dtype=float)
            value += float(np.sum(1.0 / np.sqrt(np.abs(k - t))))
        # left tail: x - n > W
        p, q = 0, min(self.N, lo_edge - 1)
        if p <= q:
            s, b = _em_tail(-1, anchor, t, p, q)
            value += s
            bound += b
        # right tail: n - x > W
        p, q = max(0, hi_edge + 1), self.N
        if p <= q:
            s, b = _em_tail(1, anchor, t, p, q)
            value += s
            bound += b
        return value, bound + self._rounding(value)

    def __call__(self, x: float) -> float:
        return self.evaluate(x)[0]


def _em_tail(direction, anchor, t, p, q):
    """Sum of ``D(n)**-1/2`` for n in [p, q] by integral + first Euler-Maclaurin term.

    ``D(n) = direction * (n - x)`` is positive on the range. The returned bound
    is the magnitude of the first omitted (B4) term, which dominates the
    remainder because all even derivatives of ``D**-1/2`` are positive.
    """
    Dp = direction * ((p - anchor) - t)
    Dq = direction * ((q - anchor) - t)
    if p == q:
        return 1.0 / math.sqrt(Dp), 0.0
    sp, sq = math.sqrt(Dp), math.sqrt(Dq)
    integral = 2.0 * direction * (sq - sp)
    endpoints = 0.5 * (1.0 / sp + 1.0 / sq)
    d1p = -0.5 * direction * Dp**-1.5
    d1q = -0.5 * direction * Dq**-1.5
    d3p = -1.875 * direction * Dp**-3.5
    d3q = -1.875 * direction * Dq**-3.5
    value = integral + endpoints + (d1q - d1p) / 12.0
    bound = abs(d3q - d3p) / 720.0 + 8.0 * EPS * (sp + sq)
    return value, bound


def f3(x: float, sf: SpectralFunction) -> float:
    """Spectral function ``sum_{n=0}^{N} |n - x|**-1/2``."""
    return sf.evaluate(x)[0]


def f3_with_bound(x: float, sf: SpectralFunction) -> tuple[float, float]:
    return sf.evaluate(x)


@dataclass(frozen=True)
class RootRecord:
    n: int
    x: float
    residual: float
    bracket: tuple[float, float]
    offset: float = 0.0  # x - n, kept at full precision


@dataclass(frozen=True)
class GroundRecord:
    x0: float
    residual: float
    bracket: tuple[float, float]


@dataclass(frozen=True)
class SpectrumResult:
    g: float
    N: int
    ground: GroundRecord
    roots: list[RootRecord] = field(default_factory=list)
    tolerance: float = 1e-12

    def as_rows(self):
        """Rows ``(n, x, residual, lo, hi)``; the ground state is labelled n = 0."""
        rows = [(0, self.ground.x0, self.ground.residual, *self.ground.bracket)]
        rows += [(r.n, r.x, r.residual, *r.bracket) for r in self.roots]
        return rows


def _bisect(func, lo, hi, xtol, rtol, maxiter=2000):
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0:
        return lo, 0.0
    if f_hi == 0:
        return hi, 0.0
    if (f_lo > 0) == (f_hi > 0):
        raise BracketError(
            f"no sign change on [{lo!r}, {hi!r}]: g*f-1 = {f_lo:.6g}, {f_hi:.6g}",
            lo=lo, hi=hi, f_lo=f_lo, f_hi=f_hi)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = func(mid)
        if f_mid == 0:
            return mid, 0.0
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo <= xtol and min(abs(f_lo), abs(f_hi)) <= rtol:
            break
    if abs(f_lo) <= abs(f_hi):
        return lo, abs(f_lo)
    return hi, abs(f_hi)


def solve_spectrum(g: float, sf: SpectralFunction, n_max: int,
                   xtol: float = 1e-13, rtol: float = 1e-12) -> SpectrumResult:
    """Solve ``g f(x) = 1`` for the ground root and the levels n = 1..n_max.

    The ground root is the unique negative root. For n >= 1 the reported root
    is the one adjoining the Landau level n from below, ``x_n = n + delta_n``
    with ``delta_n < 0``: bisection runs between the minimum of ``f`` on
    ``(n-1, n)`` and ``n - guard``. When ``g * min f >= 1`` the level has no
    root and :class:`BracketError` is raised with the evaluated endpoints.
    """
    if not (math.isfinite(g) and g > 0):
        raise InvalidParameterError(f"g must be positive, got {g!r}")
    if int(n_max) != n_max or n_max < 0 or n_max > sf.N:
        raise InvalidParameterError(f"n_max must be an integer in [0, N], got {n_max!r}")
    guard = sf.guard

    def residual_at(anchor):
        return lambda t: g * sf.evaluate_anchored(anchor, t)[0] - 1.0

    # ground root: t_lo expands geometrically since f -> 0 as x -> -inf
    r0 = residual_at(0)
    t_lo = -1.0
    while r0(t_lo) >= 0:
        t_lo *= 2.0
        if not math.isfinite(t_lo) or t_lo < -1e300:
            raise BracketError("ground-state bracket expansion did not terminate",
                               lo=t_lo, hi=-guard)
    t0, res0 = _bisect(r0, t_lo, -guard, xtol, rtol)
    ground = GroundRecord(x0=t0, residual=res0, bracket=(t_lo, -guard))

    roots = []
    for n in range(1, int(n_max) + 1):
        rn = residual_at(n)
        lo_t, hi_t = -1.0 + guard, -guard
        opt = minimize_scalar(lambda t: sf.evaluate_anchored(n, t)[0], bounds=(lo_t, hi_t),
                              method="bounded", options={"xatol": 1e-10})
        t_min = float(opt.x)
        r_min = rn(t_min)
        if r_min >= 0:
            raise BracketError(
                f"level n={n}: g*f-1 >= {r_min:.6g} on the whole interval ({n - 1}, {n}); "
                f"g*min(f) = {r_min + 1:.6g} >= 1 so no crossing exists",
                lo=n - 1 + guard, hi=n - guard, f_lo=residual_at(n - 1)(guard), f_hi=rn(hi_t))
        t, res = _bisect(rn, t_min, hi_t, xtol, rtol)
        roots.append(RootRecord(n=n, x=n + t, residual=res, bracket=(n + t_min, n + hi_t), offset=t))
    return SpectrumResult(g=g, N=sf.N, ground=ground, roots=roots, tolerance=rtol)


def perturbative_shift(g: float) -> float:
    """Leading shift of a level below its Landau level, ``-g**2``.

    Keeping only the singular term of the sum, ``g / sqrt(-delta) = 1``.
    """
    if g < 0:
        raise InvalidParameterError("g must be non-negative")
    return -g * g


def printed_shift(g: float) -> float:
    """The shift as printed in the source formula, ``-lambda^2 m omega^2/(32 pi^2)``.

    In reduced units this is ``-4 g**2``; reported next to :func:`perturbative_shift`.
    """
    if g < 0:
        raise InvalidParameterError("g must be non-negative")
    return -4.0 * g * g


def level_tail_sum(N: int) -> float:
    """``sum_{n=1}^{N} n**-1/2``, the regular part of ``f`` at ``x = 0``."""
    n = np.arange(1, int(N) + 1, dtype=float)
    return float(np.sum(1.0 / np.sqrt(n)))


def tail_corrected_shift(g: float, N: int) -> float:
    """Ground-root estimate with the regular part of the sum resummed.

    ``sqrt(-x0) (1 - g S_N) = g`` up to O(g x0) corrections, giving
    ``x0 ~ -(g / (1 - g S_N))**2``.
    """
    tail = level_tail_sum(N)
    if g * tail >= 1:
        raise InvalidParameterError(
            f"g * S_N = {g * tail:.4g} >= 1: the ground root is not perturbative")
    return -(g / (1.0 - g * tail)) ** 2


def cutoff_from_coupling(lambda_over_a: float, x0: float) -> int:
    """Cutoff ``N`` that keeps the bound-state energy fixed as the well shrinks.

    ``N**1.5 = 12 sqrt(2) pi a / lambda + (-x0)**1.5``
    """
    if not (math.isfinite(lambda_over_a) and lambda_over_a > 0):
        raise InvalidParameterError("lambda_over_a must be positive")
    if x0 > 0:
        raise InvalidParameterError("x0 must be <= 0")
    value = (12.0 * math.sqrt(2.0) * math.pi / lambda_over_a + (-x0) ** 1.5) ** (2.0 / 3.0)
    return max(1, math.ceil(value * (1.0 - 1e-12)))


def normalization_sum(b: float, N: int) -> float:
    """``sum_{n=0}^{N} (n + b)**-3/2``, the reduced form of the norm of C_E."""
    if not (math.isfinite(b) and b > 0):
        raise InvalidParameterError(f"b must be positive, got {b!r}")
    if int(N) != N or N < 0:
        raise InvalidParameterError("N must be a non-negative integer")
    n = np.arange(int(N) + 1, dtype=float)
    return float(np.sum((n + b) ** -1.5))


def coupling_from_lambda_over_a(lambda_over_a: float) -> float:
    return lambda_over_a / COUPLING_SCALE
