"""Decay of the bound state in a weak electric field parallel to B.

Far from the well the electron moves in the linear potential ``-|e| eps z``
and the outgoing wave is the complex Airy combination

    V(Z) = pi * (Bi(Z) + i Ai(Z))
         ~ sqrt(pi) Z^{-1/4} [exp(2/3 Z^{3/2}) + (i/2) exp(-2/3 Z^{3/2})],

whose exponentially small imaginary part carries the flux. The total rate
reduces, in units of ``|E0| / hbar``, to ``prefactor * exp(-4 sqrt(2) / (3 r))``
with ``r = eps / eps0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .boundstate import BoundState
from .errors import InvalidParameterError, ValidityError

_SWITCH = 8.0
_SQRT_PI = math.sqrt(math.pi)


def _u_coefficients(kmax):
    # u_k = (2k+1)(2k+3)...(6k-1) / (216^k k!), v_k = -(6k+1)/(6k-1) u_k
    u = [1.0]
    for k in range(1, kmax + 1):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k))
    v = [1.0] + [-(6 * k + 1) / (6 * k - 1) * u[k] for k in range(1, kmax + 1)]
    return u, v


_U, _V = _u_coefficients(60)


def _asymptotic_sums(zeta, terms=None):
    """Return (S_u+, S_u-, S_v+, S_v-): sums of u_k/zeta^k and (-1)^k u_k/zeta^k etc.

    Without ``terms`` the series is cut at its smallest term.
    """
    sums = [0.0, 0.0, 0.0, 0.0]
    prev = math.inf
    limit = len(_U) if terms is None else min(terms, len(_U))
    for k in range(limit):
        zk = zeta ** (-k)
        tu, tv = _U[k] * zk, _V[k] * zk
        if terms is None:
            size = abs(tu) + abs(tv)
            if size > prev:
                break
            prev = size
        sign = -1.0 if k % 2 else 1.0
        sums[0] += tu
        sums[1] += sign * tu
        sums[2] += tv
        sums[3] += sign * tv
        if terms is None and size < 1e-18:
            break
    return sums


def airy_outgoing(Z: float, terms: int | None = None) -> complex:
    """Outgoing complex Airy function ``V(Z) = pi (Bi(Z) + i Ai(Z))``.

    For ``Z >= 8`` (or whenever ``terms`` is given and ``Z > 0``) the
    two-exponential asymptotic form is used, including the recessive term;
    ``terms=1`` gives the leading-order form. Smaller ``Z`` uses the
    convergent representation from :func:`scipy.special.airy`.
    """
    Z = float(Z)
    if terms is None and Z < _SWITCH or Z <= 0:
        ai, _, bi, _ = special.airy(Z)
        return complex(math.pi * bi, math.pi * ai)
    zeta = 2.0 / 3.0 * Z**1.5
    su, su_alt, _, _ = _asymptotic_sums(zeta, terms)
    pref = _SQRT_PI / Z**0.25
    return complex(pref * math.exp(zeta) * su, 0.5 * pref * math.exp(-zeta) * su_alt)


def airy_outgoing_derivative(Z: float, terms: int | None = None) -> complex:
    """``dV/dZ`` with the same switch-over as :func:`airy_outgoing`."""
    Z = float(Z)
    if terms is None and Z < _SWITCH or Z <= 0:
        _, aip, _, bip = special.airy(Z)
        return complex(math.pi * bip, math.pi * aip)
    zeta = 2.0 / 3.0 * Z**1.5
    _, _, sv, sv_alt = _asymptotic_sums(zeta, terms)
    pref = _SQRT_PI * Z**0.25
    return complex(pref * math.exp(zeta) * sv, -0.5 * pref * math.exp(-zeta) * sv_alt)


def airy_flux(Z: float, terms: int | None = None) -> float:
    """``Im(V* dV/dZ)``; equal to ``-pi`` for every Z (Wronskian of Ai, Bi)."""
    v = airy_outgoing(Z, terms)
    dv = airy_outgoing_derivative(Z, terms)
    return (v.conjugate() * dv).imag


def overlap_F(p1, p2, bs: BoundState):
    """Transverse Fourier amplitude of the bound state.

    ``norm / (4 pi^2) * int dx dy exp(-(x^2 + y^2 - 2ixy)/4a^2 + i(p1 x + p2 y)/hbar)``
    evaluated in closed form:
    ``norm * a^2 / (sqrt(2) pi) * exp(-a^2 (k1^2 + k2^2) / 2 - i a^2 k1 k2)``, ``k = p/hbar``.
    The z-dependent factor ``exp(-|z|/l) / V(Z)`` is left to the caller.
    """
    k1 = np.asarray(p1, dtype=float) / bs.hbar
    k2 = np.asarray(p2, dtype=float) / bs.hbar
    a2 = bs.a**2
    gauss = np.exp(-0.5 * a2 * (k1 * k1 + k2 * k2) - 1j * a2 * k1 * k2)
    return bs.norm * a2 / (math.sqrt(2.0) * math.pi) * gauss


@dataclass(frozen=True)
class TunnelingInput:
    """Field strength relative to ``eps0 = sqrt(m) |E0|^{3/2} / (hbar |e|)`` and ``a / l``."""

    eps_ratio: float
    a_over_l: float

    def __post_init__(self):
        if not math.isfinite(self.eps_ratio) or self.eps_ratio <= 0:
            raise InvalidParameterError(f"eps_ratio must be positive, got {self.eps_ratio!r}")
        if self.eps_ratio >= 1:
            raise ValidityError(
                f"eps_ratio = {self.eps_ratio!r} violates the weak-field condition eps << eps0 "
                "(eps_ratio must be < 1)")
        if not (math.isfinite(self.a_over_l) and self.a_over_l > 0):
            raise InvalidParameterError("a_over_l must be finite and positive")

    @classmethod
    def from_bound_state(cls, eps_ratio, bs: BoundState):
        return cls(eps_ratio=eps_ratio, a_over_l=bs.a / bs.l)


@dataclass(frozen=True)
class TunnelingResult:
    eps_ratio: float
    w: float
    exponent: float
    prefactor: float


def critical_field(E0: float, mass: float = 1.0, hbar: float = 1.0, charge: float = 1.0) -> float:
    """``eps0 = sqrt(m) |E0|^{3/2} / (hbar |e|)``."""
    return math.sqrt(mass) * abs(E0) ** 1.5 / (hbar * abs(charge))


def decay_rate(inp: TunnelingInput) -> TunnelingResult:
    """Ionisation probability per unit time, in units of ``|E0| / hbar``.

    Works in ``hbar = m = l = 1`` where the field enters as
    ``u = |e| eps = eps_ratio / (2 sqrt 2)``. The rate is the magnitude of the
    flux (the closed form carries an overall minus sign from the flux
    orientation).
    """
    a = inp.a_over_l
    u = inp.eps_ratio / (2.0 * math.sqrt(2.0))
    exponent = -2.0 / (3.0 * u)
    denom = a * a * u + 1.0
    pref = 2.0 * _SQRT_PI * a * a * u / denom * (1.0 + u / (2.0 * denom))
    # hbar/(m l^2) = 2 |E0| / hbar
    prefactor = 2.0 * pref
    return TunnelingResult(eps_ratio=inp.eps_ratio, w=prefactor * math.exp(exponent),
                           exponent=exponent, prefactor=prefactor)
