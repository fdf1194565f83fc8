import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landau_delta import boundstate as bsm, oracle
from landau_delta.boundstate import BoundState, ZeroFieldState
from landau_delta.errors import InvalidParameterError

BS = BoundState(a=1.0, l=0.7)
lengths = st.floats(min_value=0.05, max_value=20.0)


def grid(n=21, half=3.0):
    t = np.linspace(-half, half, n)
    return np.meshgrid(t, t, t + 0.013, indexing="ij")


def test_from_root_and_energy():
    bs = BoundState.from_root(-0.25)
    assert bs.E0 == pytest.approx(-0.25 * bs.omega, rel=1e-15)
    assert bs.l == pytest.approx(1 / math.sqrt(0.5), rel=1e-15)
    with pytest.raises(InvalidParameterError):
        BoundState.from_energy(0.1)
    with pytest.raises(InvalidParameterError):
        BoundState(a=-1.0, l=1.0)


@settings(max_examples=15, deadline=None)
@given(lengths, lengths)
def test_normalization(a, l):
    assert oracle.density_quadrature(BoundState(a=a, l=l)) == pytest.approx(1.0, abs=1e-10)


def test_localization_moments():
    bs = BoundState(a=1.3, l=0.4)
    rep = bsm.localization_report(bs)
    r2 = oracle.density_quadrature(bs, weight=lambda x, y, z: x * x + y * y)
    mz = oracle.density_quadrature(bs, weight=lambda x, y, z: np.abs(z) + 0 * x)
    assert math.sqrt(r2) == pytest.approx(rep["rms_rho"], rel=1e-10)
    assert mz == pytest.approx(rep["mean_abs_z"], rel=1e-10)


def test_density_is_modulus_squared():
    pos = (0.3, -1.2, 0.4)
    assert bsm.density(pos, BS) == pytest.approx(abs(bsm.psi0(pos, BS)) ** 2, rel=1e-15)


def test_gradient_matches_finite_difference():
    pos = np.array([0.4, -0.7, 0.3])
    grads = bsm.grad_psi0(tuple(pos), BS)
    h = 1e-6
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        fd = (bsm.psi0(tuple(pos + e), BS) - bsm.psi0(tuple(pos - e), BS)) / (2 * h)
        assert abs(complex(grads[i]) - complex(fd)) < 1e-8


def test_azimuthal_purity_and_planarity():
    X, Y, Z = grid()
    J = bsm.current((X, Y, Z), BS, gauge="analytic").J
    assert np.all(J[2] == 0.0)
    # x (y w) and y (x w) round independently, so exact zero holds to a couple of ulps
    radial = X * J[0] + Y * J[1]
    assert np.all(np.abs(radial) <= 2 * np.finfo(float).eps * np.abs(X * J[0]))
    on_axis = (X == 0) | (Y == 0)
    assert np.all(radial[on_axis] == 0.0)
    for gauge in ("landau", "symmetric"):
        J = bsm.current((X, Y, Z), BS, gauge=gauge).J
        scale = np.abs(X * J[0]) + np.abs(Y * J[1])
        assert np.all(np.abs(X * J[0] + Y * J[1]) <= 8 * np.finfo(float).eps * scale + 1e-300)
        # Im(conj(psi) * dpsi/dz) vanishes up to complex rounding
        assert np.all(np.abs(J[2]) <= 1e-15 * BS.current_amplitude)


@pytest.mark.parametrize("gauge", ["landau", "symmetric"])
def test_gauge_paths_agree(gauge):
    X, Y, Z = grid()
    ref = bsm.current((X, Y, Z), BS, gauge="analytic").J
    got = bsm.current((X, Y, Z), BS, gauge=gauge).J
    mag = np.hypot(ref[0], ref[1])
    peak = mag.max()
    for r, g in zip(ref[:2], got[:2]):
        err = np.abs(r - g)
        assert np.all(err <= 1e-12 * np.maximum(mag, 1e-300) + 1e-15 * peak * (mag == 0))


def test_rotational_symmetry():
    theta = 2 * math.pi * np.arange(16) / 16
    for rho, z in ((0.5, 0.0), (1.0, 0.3), (2.2, -1.1)):
        J = bsm.current((rho * np.cos(theta), rho * np.sin(theta), np.full(16, z)), BS,
                        gauge="landau").J
        mag = np.hypot(J[0], J[1])
        assert np.all(np.abs(mag / mag[0] - 1) <= 1e-12)


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
def test_circulation_matches_intensity(r):
    exact = bsm.vortex_intensity(r, BS)
    for points in (256, 512):
        assert bsm.circulation(r, BS, points=points) == pytest.approx(exact, rel=1e-6)
    assert bsm.circulation(r, BS, points=64, gauge="landau") == pytest.approx(exact, rel=1e-6)


@pytest.mark.parametrize("zl", [0.5, 1.0, 2.0])
def test_pancake_factorization(zl):
    ratio = bsm.circulation(1.0, BS, z=zl * BS.l) / bsm.circulation(1.0, BS)
    assert ratio == pytest.approx(math.exp(-2 * zl), rel=1e-8)


def test_divergence_order():
    rng = np.random.default_rng(3)
    pts = rng.uniform(-2, 2, (3, 50))
    pts[2] = np.abs(pts[2]) + 0.3

    def field(p):
        return bsm.current(p, BS, gauge="landau").J

    scale = BS.current_amplitude
    errs = [np.max(np.abs(bsm.divergence(field, tuple(pts), h))) / scale for h in (0.04, 0.02, 0.01)]
    orders = [math.log2(e1 / e2) for e1, e2 in zip(errs, errs[1:])]
    assert min(orders) >= 1.9


def test_divergence_warns_at_kink():
    with pytest.warns(RuntimeWarning):
        bsm.divergence(lambda p: bsm.current(p, BS, gauge="analytic").J, (0.1, 0.2, 0.0), 1e-3)


def test_curl_matches_finite_difference():
    r = np.array([0.3, 1.0, 1.7])
    pos = (r, np.zeros_like(r), np.full_like(r, 0.2))
    fd = bsm.curl_z_fd(lambda p: bsm.current(p, BS, gauge="analytic").J, pos, 1e-4)
    assert np.allclose(fd, bsm.curl_z(r, BS, z=0.2), rtol=1e-7)


def test_curl_integrates_to_circulation():
    r = 1.4
    q = oracle.integrate_1d(lambda s: 2 * math.pi * s * bsm.curl_z(s, BS), 0.0, r,
                            oracle.QuadratureSpec(abs_tol=1e-13))
    assert q.value == pytest.approx(bsm.vortex_intensity(r, BS), rel=1e-10)


def test_printed_decay_flag():
    pos = (0.5, 0.5, 0.6)
    d = bsm.current(pos, BS, gauge="analytic").J[1]
    p = bsm.current(pos, BS, gauge="analytic", z_decay="printed").J[1]
    assert p / d == pytest.approx(math.exp(-(2 * math.sqrt(2) - 2) * 0.6 / BS.l), rel=1e-14)
    with pytest.raises(InvalidParameterError):
        bsm.current(pos, BS, gauge="landau", z_decay="printed")
    with pytest.raises(InvalidParameterError):
        bsm.current(pos, BS, gauge="coulomb")


def test_electric_current_sign():
    s = bsm.current((1.0, 0.0, 0.0), BS, gauge="analytic")
    e = bsm.electric_current(s, -2.0)
    assert e[1] == pytest.approx(-2.0 * s.Jy)


def test_zero_field_state():
    zf = ZeroFieldState.from_energy(-0.5)
    assert zf.l0 == pytest.approx(1.0)
    q = oracle.integrate_1d(lambda r: bsm.zero_field_density(r, zf), 0.0, 40.0)
    assert q.value == pytest.approx(1.0, abs=1e-12)
    r = np.array([0.5, 2.0])
    assert np.allclose(4 * math.pi * r**2 * bsm.psi_zero_field(r, zf) ** 2, bsm.zero_field_density(r, zf))
    J = bsm.zero_field_current((r, r, r), zf).J
    assert all(np.all(c == 0) for c in J)


def test_invalid_radius():
    with pytest.raises(InvalidParameterError):
        bsm.vortex_intensity(-1.0, BS)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        bsm.curl_z(0.0, BS)
