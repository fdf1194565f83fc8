"""Unit system and reduction of physical inputs to the dimensionless problem.

Reduced units used throughout the package: energies in hbar*omega, lengths
in the magnetic length ``a``, and the spectral variable ``x = E / (hbar*omega)``
(so that ``b = -x``). Gaussian units are assumed for the physical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError

SPEED_OF_LIGHT_CGS = 2.99792458e10  # cm/s

#: 8*sqrt(2)*pi, the constant relating lambda/a to the reduced coupling g.
COUPLING_SCALE = 8.0 * math.sqrt(2.0) * math.pi


def _require_positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise InvalidParameterError(f"{name} must be a finite positive number, got {value!r}")


@dataclass(frozen=True)
class PhysicalParams:
    """Physical inputs of the problem (Gaussian units).

    ``coupling`` is the strength lambda of the contact well
    ``U(r) = -(hbar**2 * lambda / 2m) delta(r)``; it has the dimension of a length.
    Use :meth:`from_cyclotron` when the cyclotron frequency is known directly
    (for instance when working in SI).
    """

    mass: float
    charge: float
    hbar: float
    field: float
    coupling: float
    well_depth: float | None = None
    well_radius: float | None = None
    electric_field: float = 0.0
    c: float = SPEED_OF_LIGHT_CGS
    cyclotron: float | None = None

    def __post_init__(self):
        _require_positive("mass", self.mass)
        _require_positive("hbar", self.hbar)
        _require_positive("coupling", self.coupling)
        if self.cyclotron is None:
            _require_positive("field", self.field)
            _require_positive("c", self.c)
            if not (math.isfinite(self.charge) and self.charge != 0):
                raise InvalidParameterError(f"charge must be finite and non-zero, got {self.charge!r}")
        else:
            _require_positive("cyclotron", self.cyclotron)
        if not (math.isfinite(self.electric_field) and self.electric_field >= 0):
            raise InvalidParameterError("electric_field must be finite and >= 0")
        for name in ("well_depth", "well_radius"):
            value = getattr(self, name)
            if value is not None:
                _require_positive(name, value)

    @classmethod
    def from_cyclotron(cls, mass, hbar, omega, coupling, **kwargs):
        """Build from a known cyclotron frequency ``omega`` instead of (|e|, B, c)."""
        return cls(mass=mass, charge=1.0, hbar=hbar, field=1.0, coupling=coupling,
                   cyclotron=omega, **kwargs)

    @property
    def omega(self) -> float:
        """Cyclotron frequency |e|B/(mc)."""
        if self.cyclotron is not None:
            return self.cyclotron
        return abs(self.charge) * self.field / (self.mass * self.c)

    @property
    def magnetic_length(self) -> float:
        """a = sqrt(hbar / (m omega))."""
        return math.sqrt(self.hbar / (self.mass * self.omega))


@dataclass(frozen=True)
class DimensionlessSetup:
    """Reduced 3D problem: ``g * f(x) = 1`` with cutoff ``N``.

    ``two_d_lambda`` is the dimensionless coupling of the planar variant; it is
    independent of the 3D length coupling and may be ``None``.
    """

    g: float
    N: int
    lambda_over_a: float
    two_d_lambda: float | None = None

    def __post_init__(self):
        _require_positive("g", self.g)
        _require_positive("lambda_over_a", self.lambda_over_a)
        if int(self.N) != self.N or self.N < 1:
            raise InvalidParameterError(f"cutoff N must be an integer >= 1, got {self.N!r}")
        if self.two_d_lambda is not None:
            _require_positive("two_d_lambda", self.two_d_lambda)

    @classmethod
    def from_lambda_over_a(cls, lambda_over_a, N, two_d_lambda=None):
        _require_positive("lambda_over_a", lambda_over_a)
        return cls(g=lambda_over_a / COUPLING_SCALE, N=int(N),
                   lambda_over_a=float(lambda_over_a), two_d_lambda=two_d_lambda)


@dataclass(frozen=True)
class LandauLevel:
    n: int
    p3: float
    s: int

    @property
    def energy(self) -> float:
        return landau_energy(self.n, self.p3, self.s)


def reduce(p: PhysicalParams, cutoff: int = 10**6, two_d_lambda=None) -> DimensionlessSetup:
    """Reduce physical inputs to ``g = lambda / (8 sqrt(2) pi a)``."""
    if not isinstance(p, PhysicalParams):
        raise InvalidParameterError("reduce expects a PhysicalParams instance")
    ratio = p.coupling / p.magnetic_length
    return DimensionlessSetup.from_lambda_over_a(ratio, cutoff, two_d_lambda)


def well_to_lambda(U0, R, m, hbar):
    """Coupling of the delta well equivalent to a square well of depth U0, radius R.

    lambda = 2 m U0 R**3 / hbar**2
    """
    _require_positive("U0", U0)
    _require_positive("R", R)
    _require_positive("m", m)
    _require_positive("hbar", hbar)
    return 2.0 * m * U0 * R**3 / hbar**2


def landau_energy(n: int, p3: float, s: int) -> float:
    """Landau-level energy in units of hbar*omega for m_e = m.

    ``(n + 1/2) + p3**2/2 + s/2`` with ``p3`` in units of sqrt(m hbar omega).
    """
    if int(n) != n or n < 0:
        raise InvalidParameterError(f"Landau index must be a non-negative integer, got {n!r}")
    if s not in (1, -1):
        raise InvalidParameterError(f"spin must be +1 or -1, got {s!r}")
    # n + (1 + s)/2 is an exact integer, so degenerate pairs compare equal
    return (n + (1 + s) // 2) + 0.5 * p3 * p3
