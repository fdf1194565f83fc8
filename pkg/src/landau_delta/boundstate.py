"""Ground-state wave function and its probability current.

The bound state is

    Psi0 = norm * exp(-(x^2 + y^2 - 2i x y) / (4 a^2)) * exp(-|z| / l)

in the Landau gauge ``A = (-yB, 0, 0)`` for an electron (charge e < 0).
Its probability current is purely azimuthal,

    J = J0 * (-y, x, 0) * exp(-rho^2 / (2 a^2) - 2|z| / l),
    J0 = hbar * norm^2 / (2 m a^2),

and forms a stack of planar vortices. Units: ``hbar = m = 1`` by default, so
with ``a = 1`` energies are in ``hbar omega`` and lengths in ``a``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError

DERIVED = "derived"
PRINTED = "printed"


@dataclass(frozen=True)
class BoundState:
    """Ground state characterised by the magnetic length ``a`` and decay length ``l``."""

    a: float
    l: float
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        for name in ("a", "l", "hbar", "mass"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be finite and positive, got {value!r}")

    @classmethod
    def from_energy(cls, E0, a=1.0, hbar=1.0, mass=1.0):
        """``l = hbar / sqrt(2 m |E0|)``; ``E0`` must be negative."""
        if not (math.isfinite(E0) and E0 < 0):
            raise InvalidParameterError(f"E0 must be negative, got {E0!r}")
        return cls(a=a, l=hbar / math.sqrt(2.0 * mass * -E0), hbar=hbar, mass=mass)

    @classmethod
    def from_root(cls, x0, a=1.0):
        """From a reduced ground root ``x0 = E0 / (hbar omega) < 0`` (hbar = m = 1)."""
        omega = 1.0 / (a * a)
        return cls.from_energy(x0 * omega, a=a)

    @property
    def omega(self) -> float:
        return self.hbar / (self.mass * self.a**2)

    @property
    def E0(self) -> float:
        return -self.hbar**2 / (2.0 * self.mass * self.l**2)

    @property
    def norm(self) -> float:
        return 1.0 / math.sqrt(2.0 * math.pi * self.a**2 * self.l)

    @property
    def current_amplitude(self) -> float:
        """J0 in ``J = J0 (-y, x, 0) exp(...)``."""
        return self.hbar * self.norm**2 / (2.0 * self.mass * self.a**2)

    def vortex_amplitude(self, z=0.0):
        """Circulation amplitude ``A(z) = 2 pi J0 exp(-2|z|/l)``."""
        return 2.0 * math.pi * self.current_amplitude * np.exp(-2.0 * np.abs(z) / self.l)


@dataclass(frozen=True)
class VectorSample:
    position: tuple
    J: tuple

    @property
    def Jx(self):
        return self.J[0]

    @property
    def Jy(self):
        return self.J[1]

    @property
    def Jz(self):
        return self.J[2]


@dataclass(frozen=True)
class ZeroFieldState:
    """Bound state of the bare contact well, ``Psi = exp(-r/l0) / (sqrt(2 pi l0) r)``."""

    l0: float
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.l0) and self.l0 > 0):
            raise InvalidParameterError("l0 must be finite and positive")

    @classmethod
    def from_energy(cls, E0, hbar=1.0, mass=1.0):
        if not (math.isfinite(E0) and E0 < 0):
            raise InvalidParameterError(f"E0 must be negative, got {E0!r}")
        return cls(l0=math.sqrt(hbar**2 / (2.0 * mass * -E0)), hbar=hbar, mass=mass)

    @property
    def E0(self) -> float:
        return -self.hbar**2 / (2.0 * self.mass * self.l0**2)


def _xyz(pos):
    x, y, z = (np.asarray(c, dtype=float) for c in pos)
    return np.broadcast_arrays(x, y, z)


def psi0(pos, bs: BoundState):
    """Landau-gauge ground-state wave function at ``pos = (x, y, z)``."""
    x, y, z = _xyz(pos)
    a2 = bs.a**2
    phase_arg = -(x * x + y * y - 2j * x * y) / (4.0 * a2)
    return bs.norm * np.exp(phase_arg) * np.exp(-np.abs(z) / bs.l)


def grad_psi0(pos, bs: BoundState):
    """Analytic gradient of :func:`psi0`; ``d|z|/dz`` is taken as sign(z)."""
    x, y, z = _xyz(pos)
    psi = psi0((x, y, z), bs)
    a2 = bs.a**2
    return (psi * (-(x - 1j * y) / (2.0 * a2)),
            psi * (-(y - 1j * x) / (2.0 * a2)),
            psi * (-np.sign(z) / bs.l))


def density(pos, bs: BoundState):
    x, y, z = _xyz(pos)
    return bs.norm**2 * np.exp(-(x * x + y * y) / (2.0 * bs.a**2) - 2.0 * np.abs(z) / bs.l)


def current(pos, bs: BoundState, gauge: str = "landau", z_decay: str = DERIVED) -> VectorSample:
    """Probability current at ``pos``.

    ``gauge="landau"`` evaluates ``(hbar/m) Im(Psi* grad Psi) - (e/mc) A |Psi|^2``
    with ``A = (-yB, 0, 0)`` on the complex wave function. ``gauge="symmetric"``
    first removes the phase ``exp(i x y / 2a^2)`` (the gauge function Bxy/2)
    and uses ``A = (B/2)(-y, x, 0)``. ``gauge="analytic"`` returns the closed
    form. ``z_decay="printed"`` switches the closed form to the
    ``exp(-2 sqrt(2) |z| / l)`` decay for comparison; it is only meaningful
    with ``gauge="analytic"``.
    """
    x, y, z = _xyz(pos)
    # -(e/mc) A with e < 0 and |e|B/(mc) = omega
    omega = bs.omega
    if gauge == "analytic":
        if z_decay == DERIVED:
            zfac = 2.0 * np.abs(z) / bs.l
        elif z_decay == PRINTED:
            zfac = 2.0 * math.sqrt(2.0) * np.abs(z) / bs.l
        else:
            raise InvalidParameterError(f"unknown z_decay {z_decay!r}")
        w = bs.current_amplitude * np.exp(-(x * x + y * y) / (2.0 * bs.a**2) - zfac)
        return VectorSample((x, y, z), (-(y * w), x * w, np.zeros_like(w)))
    if z_decay != DERIVED:
        raise InvalidParameterError("the printed z-decay is only available for gauge='analytic'")
    psi = psi0((x, y, z), bs)
    grads = grad_psi0((x, y, z), bs)
    if gauge == "landau":
        rho2 = np.abs(psi) ** 2
        kin = [bs.hbar / bs.mass * np.imag(np.conj(psi) * g) for g in grads]
        return VectorSample((x, y, z), (kin[0] - omega * y * rho2, kin[1], kin[2]))
    if gauge == "symmetric":
        phase = np.exp(-1j * x * y / (2.0 * bs.a**2))
        psi_s = psi * phase
        # grad(psi * phase) = (grad psi - i psi grad(xy/2a^2)) * phase
        gx = (grads[0] - 1j * psi * y / (2.0 * bs.a**2)) * phase
        gy = (grads[1] - 1j * psi * x / (2.0 * bs.a**2)) * phase
        gz = grads[2] * phase
        rho2 = np.abs(psi_s) ** 2
        kin = [bs.hbar / bs.mass * np.imag(np.conj(psi_s) * g) for g in (gx, gy, gz)]
        half = 0.5 * omega * rho2
        return VectorSample((x, y, z), (kin[0] - half * y, kin[1] + half * x, kin[2]))
    raise InvalidParameterError(f"unknown gauge {gauge!r}")


def electric_current(sample: VectorSample, charge: float):
    """Electric current density ``e * J`` for a particle of charge ``charge``."""
    return tuple(charge * c for c in sample.J)


def divergence(field, pos, h: float):
    """Central-difference divergence of ``field`` at the points ``pos``.

    ``field`` maps ``(x, y, z)`` arrays to ``(Fx, Fy, Fz)``. Points closer than
    ``h`` to the plane z = 0 straddle the kink of ``|z|`` and trigger a warning.
    """
    if not h > 0:
        raise InvalidParameterError("stencil h must be positive")
    x, y, z = _xyz(pos)
    if np.any(np.abs(z) < h):
        warnings.warn("stencil crosses the z = 0 kink plane", RuntimeWarning, stacklevel=2)
    dx = (np.asarray(field((x + h, y, z))[0]) - np.asarray(field((x - h, y, z))[0])) / (2 * h)
    dy = (np.asarray(field((x, y + h, z))[1]) - np.asarray(field((x, y - h, z))[1])) / (2 * h)
    dz = (np.asarray(field((x, y, z + h))[2]) - np.asarray(field((x, y, z - h))[2])) / (2 * h)
    return dx + dy + dz


def curl_z_fd(field, pos, h: float):
    """Central-difference ``dFy/dx - dFx/dy``."""
    x, y, z = _xyz(pos)
    dFy = (np.asarray(field((x + h, y, z))[1]) - np.asarray(field((x - h, y, z))[1])) / (2 * h)
    dFx = (np.asarray(field((x, y + h, z))[0]) - np.asarray(field((x, y - h, z))[0])) / (2 * h)
    return dFy - dFx


def vortex_intensity(r, bs: BoundState, z=0.0):
    """Circulation of the planar current on a circle of radius ``r`` at height ``z``.

    ``I(r) = A(z) r^2 exp(-r^2 / 2a^2)``
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise InvalidParameterError("radius must be non-negative")
    return bs.vortex_amplitude(z) * r * r * np.exp(-r * r / (2.0 * bs.a**2))


def curl_z(r, bs: BoundState, z=0.0):
    """Planar curl ``(A/pi) (1 - r^2/2a^2) exp(-r^2/2a^2)``."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise InvalidParameterError("radius must be non-negative")
    t = r * r / (2.0 * bs.a**2)
    return bs.vortex_amplitude(z) / math.pi * (1.0 - t) * np.exp(-t)


def circulation(r: float, bs: BoundState, z: float = 0.0, points: int = 1024,
                gauge: str = "analytic") -> float:
    """Trapezoid-rule line integral of the current around the circle of radius ``r``."""
    theta = 2.0 * math.pi * np.arange(points) / points
    x, y = r * np.cos(theta), r * np.sin(theta)
    J = current((x, y, np.full_like(x, z)), bs, gauge=gauge).J
    tangent_x, tangent_y = -np.sin(theta), np.cos(theta)
    integrand = (J[0] * tangent_x + J[1] * tangent_y) * r
    return float(np.sum(integrand) * (2.0 * math.pi / points))


def psi_zero_field(r, zf: ZeroFieldState):
    r = np.asarray(r, dtype=float)
    return np.exp(-r / zf.l0) / (math.sqrt(2.0 * math.pi * zf.l0) * r)


def zero_field_density(r, zf: ZeroFieldState):
    """Radial probability density ``4 pi r^2 |Psi|^2 = (2/l0) exp(-2r/l0)``."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise InvalidParameterError("radius must be non-negative")
    return 2.0 / zf.l0 * np.exp(-2.0 * r / zf.l0)


def zero_field_current(pos, zf: ZeroFieldState):
    """The bare-well state is real, so its current vanishes identically."""
    x, y, z = _xyz(pos)
    zero = np.zeros_like(x)
    return VectorSample((x, y, z), (zero, zero.copy(), zero.copy()))


def localization_report(bs: BoundState) -> dict:
    """Moments of ``|Psi0|^2`` and the characteristic localisation scales.

    The transverse density is Gaussian with ``<rho^2> = 2 a^2``; along z the
    density ``exp(-2|z|/l)/l`` has ``<|z|> = l/2``.
    """
    return {
        "rms_rho": math.sqrt(2.0) * bs.a,
        "mean_abs_z": 0.5 * bs.l,
        "transverse_scale": math.sqrt(2.0) * bs.a,
        "longitudinal_scale": 2.0 * bs.l,
        "a": bs.a,
        "l": bs.l,
    }
