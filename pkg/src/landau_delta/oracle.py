"""Brute-force checks used only in verification.

Nothing in the production modules calls into this one. The routines here
deliberately avoid the solver code paths: spectral sums are re-evaluated by
direct summation, brackets come from dense sampling, and integrals are done
by quadrature.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import mpmath
import numpy as np
from scipy import integrate, optimize

from .errors import EvaluationError, InvalidParameterError, ToleranceNotMetError

TRUNCATION_DECAY_LENGTHS = 12.0


@dataclass(frozen=True)
class QuadratureSpec:
    rule: str = "adaptive-simpson"
    abs_tol: float = 1e-12
    max_depth: int = 30

    def __post_init__(self):
        if self.rule not in ("trapezoid", "adaptive-simpson"):
            raise InvalidParameterError(f"unknown quadrature rule {self.rule!r}")
        if not self.abs_tol > 0:
            raise InvalidParameterError("abs_tol must be positive")
        if int(self.max_depth) != self.max_depth or self.max_depth < 1:
            raise InvalidParameterError("max_depth must be an integer >= 1")


@dataclass
class QuadratureResult:
    value: complex | float
    error: float
    history: list[float] = field(default_factory=list)


def integrate_1d(func, a: float, b: float, spec: QuadratureSpec = QuadratureSpec()) -> QuadratureResult:
    """Integrate a vectorised ``func`` over ``[a, b]``.

    ``history[k]`` is the global error estimate after refinement level k+1.
    Raises :class:`ToleranceNotMetError` if ``abs_tol`` is not reached within
    ``max_depth`` levels.
    """
    if spec.rule == "trapezoid":
        return _trapezoid(func, a, b, spec)
    return _adaptive_simpson(func, a, b, spec)


def _trapezoid(func, a, b, spec):
    n = 1
    x = np.array([a, b], dtype=float)
    fx = func(x)
    prev = 0.5 * (b - a) * (fx[0] + fx[1])
    total = fx[0] + fx[-1]
    interior = 0.0
    history = []
    for _ in range(spec.max_depth):
        h = (b - a) / (2 * n)
        mids = a + h * (2 * np.arange(n) + 1)
        interior = interior + np.sum(func(mids))
        n *= 2
        current = h * (0.5 * total + interior)
        err = abs(current - prev) / 3.0
        history.append(err)
        prev = current
        if err <= spec.abs_tol and len(history) > 2:
            return QuadratureResult(current, err, history)
    raise ToleranceNotMetError(f"trapezoid rule did not reach {spec.abs_tol:g} (estimate {err:.3g})")


def _simpson(fa, fm, fb, width):
    return width / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive_simpson(func, a, b, spec):
    # breadth-first refinement: every level splits the intervals that have not converged
    lo = np.array([a], dtype=float)
    hi = np.array([b], dtype=float)
    value = 0.0
    accepted_err = 0.0
    history = []
    total_width = b - a
    for _ in range(spec.max_depth):
        mid = 0.5 * (lo + hi)
        q1, q3 = 0.5 * (lo + mid), 0.5 * (mid + hi)
        fl, fq1, fm, fq3, fh = (func(p) for p in (lo, q1, mid, q3, hi))
        coarse = _simpson(fl, fm, fh, hi - lo)
        fine = _simpson(fl, fq1, fm, mid - lo) + _simpson(fm, fq3, fh, hi - mid)
        err = np.abs(fine - coarse) / 15.0
        ok = err <= spec.abs_tol * (hi - lo) / total_width
        value = value + np.sum((fine + (fine - coarse) / 15.0)[ok])
        accepted_err += float(np.sum(err[ok]))
        pending = float(np.sum(err[~ok]))
        history.append(accepted_err + pending)
        if not np.any(~ok):
            return QuadratureResult(value, accepted_err, history)
        lo_next, hi_next = lo[~ok], hi[~ok]
        mids = mid[~ok]
        lo = np.concatenate([lo_next, mids])
        hi = np.concatenate([mids, hi_next])
    raise ToleranceNotMetError(
        f"adaptive Simpson did not reach {spec.abs_tol:g} within depth {spec.max_depth}")


def dense_scan_roots(func, lo: float, hi: float, samples: int):
    """All sign-change brackets of ``func`` on a uniform grid of ``samples`` points."""
    if not lo < hi:
        raise InvalidParameterError("require lo < hi")
    if samples < 2:
        raise InvalidParameterError("need at least 2 samples")
    x = np.linspace(lo, hi, int(samples))
    try:
        v = np.asarray(func(x), dtype=float)
        if v.shape != x.shape:
            raise ValueError
    except (TypeError, ValueError):
        v = np.array([func(float(t)) for t in x], dtype=float)
    bad = ~np.isfinite(v)
    if np.any(bad):
        where = float(x[np.argmax(bad)])
        raise EvaluationError(f"non-finite function value at x = {where!r}", location=where)
    s = np.sign(v)
    brackets = []
    for i in range(len(x) - 1):
        if s[i] == 0:
            brackets.append((float(x[i]), float(x[i])))
        elif s[i] * s[i + 1] < 0:
            brackets.append((float(x[i]), float(x[i + 1])))
    if s[-1] == 0:
        brackets.append((float(x[-1]), float(x[-1])))
    return brackets


# spectral-equation oracle -------------------------------------------------

def brute_f3(x, N: int, chunk: int = 2_000_000):
    """Direct evaluation of ``sum_{n=0}^{N} |n - x|^{-1/2}`` for an array of x."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    n = np.arange(N + 1, dtype=float)
    out = np.empty_like(x)
    step = max(1, chunk // (N + 1))
    for i in range(0, x.size, step):
        xs = x[i:i + step, None]
        out[i:i + step] = np.sum(np.abs(n[None, :] - xs) ** -0.5, axis=1)
    return out


def oracle_spectrum(g: float, N: int, n_max: int, samples: int = 10_000, guard: float = 1e-12):
    """Roots of ``g f(x) = 1`` from dense sampling plus Brent refinement.

    Returns ``(x0, [x_1, ..., x_nmax])`` where ``x_n`` is the root in ``(n-1, n)``
    closest to ``n``.
    """
    def h(x):
        return g * brute_f3(x, N) - 1.0

    lo = -1.0
    while h(lo)[0] >= 0:
        lo *= 2.0
    brackets = dense_scan_roots(h, lo, -guard, samples)
    if len(brackets) != 1:
        raise EvaluationError(f"expected one negative bracket, found {len(brackets)}")
    x0 = _refine(h, *brackets[0])
    levels = []
    for n in range(1, n_max + 1):
        brackets = dense_scan_roots(h, n - 1 + guard, n - guard, samples)
        if not brackets:
            raise EvaluationError(f"no sign change in ({n - 1}, {n})")
        levels.append(_refine(h, *brackets[-1]))
    return x0, levels


def _refine(h, a, b):
    if a == b:
        return a
    return optimize.brentq(lambda t: float(h(t)[0]), a, b, xtol=1e-300, rtol=4 * np.finfo(float).eps,
                           maxiter=500)


# derivation identities ----------------------------------------------------

def _report(name, numeric, closed, tol, **extra):
    rel = abs(numeric - closed) / abs(closed)
    report = {"identity": name, "quadrature": numeric, "closed_form": closed,
              "relative_error": float(rel), "tolerance": tol, "passed": bool(rel <= tol)}
    report.update(extra)
    return report


def verify_overlap_identity(y: float, z: float, u: float, tol: float = 1e-8) -> dict:
    """Check ``int dx e^{-ixy} U0(x+z) U0(x+u) = exp(iy(z+u)/2 - rho/2)``.

    ``U0(x) = pi^{-1/4} exp(-x^2/2)`` is the lowest oscillator function in units
    of the magnetic length and ``rho = (y^2 + (u-z)^2)/2``. The integrand is a
    Gaussian of unit width centred at ``-(z+u)/2``; the domain is truncated at
    12 widths and the truncated tail bound is added to the error.
    """
    def integrand(x):
        return (np.exp(-1j * x * y) * math.pi**-0.5
                * np.exp(-0.5 * (x + z) ** 2 - 0.5 * (x + u) ** 2))

    centre = -(z + u) / 2.0
    half = TRUNCATION_DECAY_LENGTHS
    res = integrate_1d(integrand, centre - half, centre + half, QuadratureSpec(abs_tol=1e-14, max_depth=40))
    tail = math.pi**-0.5 * math.exp(-(u - z) ** 2 / 4.0) * math.sqrt(math.pi) * math.erfc(half)
    rho = (y * y + (u - z) ** 2) / 2.0
    closed = complex(np.exp(1j * y * (z + u) / 2.0 - rho / 2.0))
    return _report("overlap_identity", complex(res.value), closed, tol,
                   arguments={"y": y, "z": z, "u": u}, error_estimate=res.error + tail)


def verify_momentum_integral(z: float, kappa: float, hbar: float = 1.0, tol: float = 1e-8) -> dict:
    """Check ``int dp e^{-ipz/hbar} / (p^2 + kappa^2) = pi e^{-kappa|z|/hbar} / kappa``.

    The cosine transform over the half line is done with QUADPACK's Fourier
    integrator, since the Lorentzian decays only algebraically. The report
    flags the printed closed form (without pi) when the ratio to it is pi.
    """
    if not kappa > 0:
        raise InvalidParameterError("kappa must be positive")
    k = abs(z) / hbar
    if k == 0:
        half, _ = integrate.quad(lambda p: 1.0 / (p * p + kappa * kappa), 0, np.inf,
                                 epsabs=0, epsrel=1e-13)
    else:
        with warnings.catch_warnings():
            # QAWF reports spurious cycle warnings once the cycles are below epsabs
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            half, _ = integrate.quad(lambda p: 1.0 / (p * p + kappa * kappa), 0, np.inf,
                                     weight="cos", wvar=k, epsabs=1e-15, limlst=200)
    numeric = 2.0 * half
    closed = math.pi * math.exp(-kappa * k) / kappa
    printed = math.exp(-kappa * k) / kappa
    ratio = numeric / printed
    return _report("momentum_integral", numeric, closed, tol,
                   arguments={"z": z, "kappa": kappa, "hbar": hbar},
                   printed_form=printed, ratio_to_printed=ratio,
                   missing_pi_flag=bool(abs(ratio - math.pi) <= 1e-6 * math.pi))


def airy_quadrature(Z: float, dps: int = 30) -> complex:
    """``pi (Bi(Z) + i Ai(Z))`` for ``Z > 0`` from integral representations.

    Ai uses ``e^{-zeta}/pi int exp(-sqrt(Z) t^2) cos(t^3/3) dt``. Bi uses
    ``(1/pi)[int exp(-t^3/3 + Z t) dt + int sin(t^3/3 + Z t) dt]`` with the
    oscillatory part rotated onto the ray ``arg t = pi/6``.
    """
    if not Z > 0:
        raise InvalidParameterError("the quadrature oracle is implemented for Z > 0")
    with mpmath.workdps(dps):
        Zm = mpmath.mpf(Z)
        zeta = 2 * Zm**1.5 / 3
        ai = mpmath.exp(-zeta) / mpmath.pi * mpmath.quad(
            lambda t: mpmath.exp(-mpmath.sqrt(Zm) * t * t) * mpmath.cos(t**3 / 3), [0, 2, 6, mpmath.inf])
        peak = mpmath.sqrt(Zm)
        grow = mpmath.quad(lambda t: mpmath.exp(-t**3 / 3 + Zm * t), [0, peak, 2 * peak + 4, mpmath.inf])
        rot = mpmath.exp(1j * mpmath.pi / 6)
        osc = rot * mpmath.quad(
            lambda s: mpmath.exp(-s**3 / 3 - Zm * s / 2 + 1j * mpmath.sqrt(3) / 2 * Zm * s), [0, 1, 4, mpmath.inf])
        bi = (grow + mpmath.im(osc)) / mpmath.pi
        return complex(mpmath.pi * bi + 1j * mpmath.pi * ai)


def fourier_overlap_quadrature(p1: float, p2: float, bs, half_width: float = 14.0, step: float = 0.05):
    """Trapezoid-rule transverse Fourier amplitude on a truncated square grid.

    Same convention as :func:`landau_delta.tunneling.overlap_F`. The integrand
    is analytic and Gaussian-decaying, so the uniform trapezoid rule converges
    geometrically in ``1/step``.
    """
    a = bs.a
    L = half_width * a
    n = int(round(2 * L / (step * a))) + 1
    x = np.linspace(-L, L, n)
    h = x[1] - x[0]
    X, Y = np.meshgrid(x, x, indexing="ij")
    k1, k2 = p1 / bs.hbar, p2 / bs.hbar
    f = np.exp(-(X * X + Y * Y - 2j * X * Y) / (4 * a * a) + 1j * (k1 * X + k2 * Y))
    return complex(bs.norm / (4 * math.pi**2) * np.sum(f) * h * h)


def density_quadrature(bs, nodes: int = 160, weight=None, z_extent: float = 20.0) -> float:
    """Triple integral of ``weight * |Psi0|^2`` by tensor-product Gauss-Legendre.

    Box: ``|x|, |y| <= 10 a`` and ``|z| <= z_extent * l``, with the z range
    split at the kink plane z = 0. ``weight(x, y, z)`` defaults to 1. For
    polynomial weights of low degree the truncation error is below 1e-14.
    """
    from .boundstate import density  # verification-only dependency

    t, w = np.polynomial.legendre.leggauss(nodes)
    X = 10.0 * bs.a
    Zb = z_extent * bs.l
    xs, wx = X * t, X * w
    zs = np.concatenate([0.5 * Zb * (t - 1.0), 0.5 * Zb * (t + 1.0)])
    wz = np.concatenate([0.5 * Zb * w, 0.5 * Zb * w])
    total = 0.0
    for z, wgt in zip(zs, wz):
        pos = (xs[:, None], xs[None, :], z)
        plane = density(pos, bs)
        if weight is not None:
            plane = plane * weight(*pos)
        total += wgt * float(wx @ plane @ wx)
    return total


def run_verification_suite() -> list[dict]:
    """Reports for every derivation identity and quadrature-checked closed form."""
    from .boundstate import BoundState
    from .tunneling import airy_outgoing, overlap_F

    reports = [
        verify_overlap_identity(0.0, 0.0, 0.0),
        verify_overlap_identity(1.0, 0.5, -0.5),
        verify_momentum_integral(0.0, 1.0),
        verify_momentum_integral(2.0, 1.0),
    ]
    ref = airy_quadrature(10.0)
    reports.append(_report("airy_outgoing", ref, airy_outgoing(10.0), 1e-8, arguments={"Z": 10.0}))
    bs = BoundState(a=1.0, l=0.8)
    for p1, p2 in ((0.0, 0.0), (0.7, -0.4), (1.3, 0.9)):
        reports.append(_report("overlap_F", fourier_overlap_quadrature(p1, p2, bs),
                               complex(overlap_F(p1, p2, bs)), 1e-8, arguments={"p1": p1, "p2": p2}))
    return reports
