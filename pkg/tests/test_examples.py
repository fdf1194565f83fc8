"""Worked input/output examples for each operation."""

import csv
import io
import math

import mpmath
import numpy as np
import pytest

from landau_delta import boundstate as bsm, cli, oracle, spectrum2d as s2, spectrum3d as s3, tunneling as tn
from landau_delta.errors import InvalidParameterError
from landau_delta.params import COUPLING_SCALE, DimensionlessSetup, PhysicalParams, landau_energy, reduce, well_to_lambda


# params -------------------------------------------------------------------

def test_coupling_examples():
    p = PhysicalParams.from_cyclotron(mass=1.0, hbar=1.0, omega=1.0, coupling=COUPLING_SCALE)
    assert reduce(p).g == pytest.approx(1.0, rel=1e-15)
    assert DimensionlessSetup.from_lambda_over_a(0.1, 10).g == pytest.approx(2.8135e-3, rel=1e-4)
    with pytest.raises(InvalidParameterError):
        PhysicalParams.from_cyclotron(mass=1.0, hbar=1.0, omega=1.0, coupling=0.0)


def test_well_examples():
    R, m, hbar = 0.7, 1.3, 0.9
    assert well_to_lambda(hbar**2 / (2 * m * R**2), R, m, hbar) == pytest.approx(R, rel=1e-15)
    assert well_to_lambda(1.0, 2 * R, m, hbar) == pytest.approx(8 * well_to_lambda(1.0, R, m, hbar), rel=1e-15)
    assert well_to_lambda(1.0, 1.0, 1.0, 1.0) == 2.0


def test_landau_examples():
    assert landau_energy(0, 0.0, -1) == 0.0
    assert landau_energy(2, 1.0, -1) == 2.5
    assert landau_energy(3, 0.0, +1) == landau_energy(4, 0.0, -1)


# spectrum3d ---------------------------------------------------------------

def test_f3_decays_far_left():
    sf = s3.SpectralFunction(10)
    vals = [sf(-10.0**k) for k in range(1, 8)]
    assert all(a > b for a, b in zip(vals, vals[1:])) and vals[-1] < 1e-2


def test_ground_root_vanishes_with_g():
    sf = s3.SpectralFunction(50)
    x = [s3.solve_spectrum(g, sf, 0).ground.x0 for g in (1e-2, 1e-3, 1e-4)]
    assert all(v < 0 for v in x) and abs(x[-1]) < 1e-7


def test_perturbative_examples():
    assert s3.perturbative_shift(0.0) == 0.0
    assert s3.perturbative_shift(0.01) == pytest.approx(-1e-4, rel=1e-15)


def test_cutoff_examples():
    assert s3.cutoff_from_coupling(1e300, -1.0) == 1
    assert s3.cutoff_from_coupling(12 * math.sqrt(2) * math.pi, 0.0) == 1
    assert s3.cutoff_from_coupling(0.1, -1.0) == math.ceil((120 * math.sqrt(2) * math.pi + 1) ** (2 / 3))
    with pytest.raises(InvalidParameterError):
        s3.cutoff_from_coupling(0.0, -1.0)


def test_normalization_examples():
    assert s3.normalization_sum(1.0, 0) == 1.0
    zeta = float(mpmath.zeta(1.5))
    # remainder after N terms is about 2 / sqrt(N)
    assert s3.normalization_sum(1.0, 10**6) == pytest.approx(zeta - 2e-3, abs=2e-6)
    assert zeta == pytest.approx(2.612375, abs=1e-6)
    sums = [s3.normalization_sum(0.3, N) for N in (1, 5, 50)]
    assert sums[0] < sums[1] < sums[2]


# spectrum2d ---------------------------------------------------------------

def test_f2_examples():
    assert s2.f2(1.0, 10) == pytest.approx(3.019877, abs=1e-6)
    assert s2.f2(1e12, 10) < 1e-10
    for b in (0.1, 1.0, 10.0):
        assert s2.f2(b, 10**5) == pytest.approx(s2.f2(b, 10**5, method="direct"), rel=1e-12)


def test_planar_root_examples():
    N = 1000
    lam2 = 4 * math.pi / s2.f2(1.0, N)
    assert s2.solve_ground_2d(s2.TwoDSetup(lam2, N)) == pytest.approx(1.0, rel=1e-12)
    bs = [s2.solve_ground_2d(s2.TwoDSetup(l, N)) for l in (0.5, 1.0, 2.0)]
    assert bs[0] < bs[1] < bs[2]
    b, est, gap = s2.relative_gap(s2.TwoDSetup(1.0, 10**6))
    assert est == pytest.approx(3.487, abs=1e-3) and gap < 0.15


def test_planar_estimate_examples():
    assert s2.ground_2d_asymptotic(s2.TwoDSetup(4 * math.pi, 10**6)) == pytest.approx(1e6 / math.e, rel=1e-15)
    small = [s2.ground_2d_asymptotic(s2.TwoDSetup(l, 10**6)) for l in (0.2, 0.1, 0.05)]
    assert small[1] / small[0] < 0.1**4 and small[2] / small[1] < 0.05**4


# boundstate ---------------------------------------------------------------

BS = bsm.BoundState(a=1.2, l=0.6)


def test_psi0_examples():
    v = bsm.psi0((0.0, 0.0, 0.0), BS)
    assert v.imag == 0 and v.real == pytest.approx(BS.norm, rel=1e-15)
    p = (0.4, -0.9, 0.3)
    m = abs(bsm.psi0(p, BS))
    assert abs(bsm.psi0((-0.4, 0.9, 0.3), BS)) == pytest.approx(m, rel=1e-15)
    assert abs(bsm.psi0((0.4, -0.9, -0.3), BS)) == pytest.approx(m, rel=1e-15)


def test_current_at_origin():
    for gauge in ("landau", "symmetric", "analytic"):
        assert all(float(c) == 0.0 for c in bsm.current((0.0, 0.0, 0.0), BS, gauge=gauge).J)


def test_divergence_examples():
    pts = (np.array([0.3, -0.8]), np.array([1.1, 0.2]), np.array([0.4, 0.9]))
    field = lambda p: bsm.current(p, BS, gauge="analytic").J
    scaled = np.max(np.abs(bsm.divergence(field, pts, 1e-3 * BS.a))) / (BS.current_amplitude / BS.a)
    assert scaled < 1e-5
    const = lambda p: tuple(np.full_like(np.asarray(c, dtype=float), 2.5) for c in p)
    assert np.all(bsm.divergence(const, pts, 0.125) == 0.0)
    # dyadic points keep x +- h exact, so the linear field differences exactly
    dyadic = (np.array([0.25, -0.75]), np.array([1.5, 0.5]), np.array([0.375, 0.875]))
    assert np.all(bsm.divergence(lambda p: p, dyadic, 0.125) == 3.0)


def test_intensity_examples():
    assert bsm.vortex_intensity(0.0, BS) == 0.0
    r = np.linspace(0, 5, 20001)
    i = bsm.vortex_intensity(r, BS)
    assert r[np.argmax(i)] == pytest.approx(math.sqrt(2) * BS.a, abs=5e-4)
    assert i.max() == pytest.approx(2 * BS.a**2 * BS.vortex_amplitude() / math.e, rel=1e-7)


def test_curl_examples():
    assert bsm.curl_z(math.sqrt(2) * BS.a, BS) == pytest.approx(0.0, abs=1e-16)
    q = oracle.integrate_1d(lambda s: 2 * math.pi * s * bsm.curl_z(s, BS), 0.0, 15 * BS.a,
                            oracle.QuadratureSpec(abs_tol=1e-14))
    assert abs(q.value) < 1e-12


def test_zero_field_examples():
    zf = bsm.ZeroFieldState(l0=0.8)
    total = oracle.integrate_1d(lambda r: bsm.zero_field_density(r, zf), 0.0, 40 * zf.l0).value
    mean = oracle.integrate_1d(lambda r: r * bsm.zero_field_density(r, zf), 0.0, 40 * zf.l0).value
    assert total == pytest.approx(1.0, abs=1e-12)
    assert mean == pytest.approx(zf.l0 / 2, rel=1e-10)
    r = np.linspace(0, 3, 50)
    assert np.all(np.diff(bsm.zero_field_density(r, zf)) < 0)


def test_localization_scales_with_a():
    small = bsm.localization_report(bsm.BoundState(a=0.5, l=1.0))
    large = bsm.localization_report(bsm.BoundState(a=1.0, l=1.0))
    assert small["rms_rho"] / large["rms_rho"] == pytest.approx(0.5)


# tunneling ----------------------------------------------------------------

def test_airy_examples():
    for Z in (5.0, 7.0, 10.0):
        v = tn.airy_outgoing(Z)
        assert abs(v.imag) / abs(v.real) == pytest.approx(0.5 * math.exp(-4 / 3 * Z**1.5), rel=0.05)
    mags = [abs(tn.airy_outgoing(Z)) for Z in np.linspace(1, 12, 60)]
    assert all(a < b for a, b in zip(mags, mags[1:]))
    ref = oracle.airy_quadrature(10.0)
    assert abs(tn.airy_outgoing(10.0) - ref) <= 1e-8 * abs(ref)


def test_overlap_examples():
    bs = bsm.BoundState(a=1.0, l=0.8)
    rng = np.random.default_rng(11)
    for p1, p2 in rng.uniform(-1.5, 1.5, (12, 2)):
        ref = oracle.fourier_overlap_quadrature(p1, p2, bs)
        assert abs(complex(tn.overlap_F(p1, p2, bs)) - ref) <= 1e-8 * abs(ref)
    peak = abs(tn.overlap_F(0.0, 0.0, bs))
    assert all(abs(tn.overlap_F(p1, p2, bs)) < peak for p1, p2 in rng.uniform(-1, 1, (20, 2)))
    theta = np.linspace(0, 2 * np.pi, 16)
    ring = np.abs(tn.overlap_F(0.9 * np.cos(theta), 0.9 * np.sin(theta), bs))
    assert np.allclose(ring, ring[0], rtol=1e-13)


def test_rate_examples():
    res = tn.decay_rate(tn.TunnelingInput(0.02, 1.0))
    assert res.exponent == pytest.approx(-94.28, abs=5e-3)
    w = [tn.decay_rate(tn.TunnelingInput(r, 1.0)).w for r in (0.02, 0.01, 0.005)]
    assert w[1] / w[0] < 0.01**4 and w[2] / w[1] < 0.005**4


# oracle -------------------------------------------------------------------

def test_dense_scan_examples():
    assert len(oracle.dense_scan_roots(lambda x: x * x - 1, -2.0, 2.0, 1000)) == 2
    assert oracle.dense_scan_roots(lambda x: np.exp(x), -2.0, 2.0, 1000) == []
    g, N = 0.01, 1000
    for n in (1, 2, 5):
        h = lambda x: g * oracle.brute_f3(x, N) - 1
        assert len(oracle.dense_scan_roots(h, n - 1 + 1e-12, n - 1e-12, 1000)) == 2


def test_identity_examples():
    rep = oracle.verify_overlap_identity(0.0, 0.0, 0.0)
    assert abs(rep["quadrature"].imag) < 1e-14 and abs(rep["quadrature"] / rep["closed_form"] - 1) < 1e-10
    assert oracle.verify_overlap_identity(1.0, 0.5, -0.5)["relative_error"] < 1e-8
    a = oracle.verify_overlap_identity(0.7, 0.2, 0.9)["closed_form"]
    b = oracle.verify_overlap_identity(-0.7, 0.2, 0.9)["closed_form"]
    assert abs(a) == pytest.approx(abs(b), rel=1e-15)
    assert oracle.verify_momentum_integral(0.0, 2.0)["quadrature"] == pytest.approx(math.pi / 2, rel=1e-12)
    assert oracle.verify_momentum_integral(2.0, 1.0)["quadrature"] == pytest.approx(math.pi * math.exp(-2), rel=1e-8)
    plus = oracle.verify_momentum_integral(1.5, 1.0)["quadrature"]
    minus = oracle.verify_momentum_integral(-1.5, 1.0)["quadrature"]
    assert plus == pytest.approx(minus, rel=1e-14)


# cli ----------------------------------------------------------------------

def _csv(argv, capsys):
    assert cli.main(argv) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    return rows[0], [list(map(float, r)) for r in rows[1:]]


def test_cli_f1_flanks_poles(capsys):
    sharp = _csv(["figdata", "f1", "--samples", "10", "--fig-guard", "1e-10"], capsys)[1]
    assert max(f for x, f in sharp if abs(x - 3) < 1e-9) > 1e4


def test_cli_f4_tangent(capsys):
    header, rows = _csv(["figdata", "f4", "--points", "9"], capsys)
    assert header == ["x", "y", "jx", "jy"]
    assert all(abs(x * jx + y * jy) <= 1e-11 * (abs(x * jx) + 1e-300) + 1e-15 for x, y, jx, jy in rows)


def test_cli_f2_decreasing_leftwards(capsys):
    rows = _csv(["figdata", "f2", "--samples", "50"], capsys)[1]
    assert all(a[1] < b[1] for a, b in zip(rows, rows[1:]))


def test_cli_field_origin_row(capsys):
    header, rows = _csv(["field", "--points", "3", "--z-points", "1"], capsys)
    origin = [r for r in rows if r[0] == r[1] == r[2] == 0.0][0]
    assert origin[3:6] == [0.0, 0.0, 0.0]


def test_cli_spectrum2d_examples(capsys):
    assert cli.main(["spectrum2d", "--lam2", str(4 * math.pi), "--cutoff", "1000000"]) == 0
    import json
    rec = json.loads(capsys.readouterr().out)
    assert rec["b_estimate"] == pytest.approx(1e6 / math.e, rel=1e-11)
    assert cli.main(["spectrum2d", "--lam2", "1", "--cutoff", "0"]) == 2


def test_cli_tunnel_exponent(capsys):
    import json
    assert cli.main(["tunnel", "--eps-ratio", "0.02"]) == 0
    assert json.loads(capsys.readouterr().out)["exponent"] == pytest.approx(-94.28, abs=5e-3)
