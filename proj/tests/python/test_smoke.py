"""Smoke tests for the pybind11 surface; the numerical heavy lifting is
covered by the C++ suites."""

import math

import numpy as np
import pytest

import se2wave


def band_limited(rng, n, max_mode=6):
    phi = 2 * np.pi * np.arange(n) / n
    out = np.zeros(n, dtype=complex)
    for m in range(-max_mode, max_mode + 1):
        c = rng.standard_normal() + 1j * rng.standard_normal()
        out += c * np.exp(1j * m * phi)
    return out


def test_circle_basics():
    n = 64
    one = np.ones(n, dtype=complex)
    assert se2wave.inner_product(one, one) == pytest.approx(2 * np.pi)
    assert se2wave.norm(one) == pytest.approx(math.sqrt(2 * np.pi))

    wave = np.exp(1j * 2 * np.pi * np.arange(n) / n)
    rot = se2wave.rotate(wave, np.pi)
    assert np.allclose(rot, -wave)
    dphi = se2wave.spectral_derivative(wave)
    assert np.allclose(dphi, 1j * wave)


def test_j0_and_minimal_wavelet():
    assert se2wave.j0(0) == pytest.approx(2 * np.pi)
    assert se2wave.j0(-2j).real == pytest.approx(14.323056878100513)

    u = se2wave.minimal_wavelet(0.5, 2.0, 256)
    assert se2wave.norm(u) == pytest.approx(1.0, abs=1e-12)
    assert se2wave.uncertainty_gap(2.0, u) == pytest.approx(0.0, abs=1e-10)

    with pytest.raises(ValueError):
        se2wave.minimal_wavelet(-1.0, 2.0, 256)


def test_group_ops():
    g = se2wave.GroupElement(1.0, 0.0, np.pi / 2)
    h = se2wave.compose(g, se2wave.inverse(g))
    assert h.q1 == pytest.approx(0.0, abs=1e-14)
    assert h.q2 == pytest.approx(0.0, abs=1e-14)
    x = se2wave.act(g, (1.0, 0.0))
    assert x == pytest.approx((1.0, 1.0))


def test_plane_ring_and_field():
    m, extent, n = 64, 8.0, 128
    xs = -extent + 2 * extent * np.arange(m) / m
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    f = se2wave.PlaneFunction(np.exp(-(X**2 + Y**2) / 2).astype(complex), extent)

    ring = se2wave.ring_restrict(f, 1.0, n)
    assert np.allclose(ring.density, math.exp(-0.5), atol=1e-8)
    assert se2wave.h_omega_norm(ring) == pytest.approx(
        math.exp(-0.5) * math.sqrt(2 * np.pi), abs=1e-8
    )

    rec = se2wave.reconstruct(f, 8.0, 48, n)
    err = np.linalg.norm(rec.values - f.values) / np.linalg.norm(f.values)
    assert err < 1e-6


def test_analysis_roundtrip():
    rng = np.random.default_rng(5)
    n, omega, lam = 128, 2.0, 0.5
    phi = band_limited(rng, n)
    field = se2wave.bargmann_se2(lam, omega, phi, 16, 4.0, 32)
    assert field.values.shape == (16, 16, 32)
    assert se2wave.field_norm(field) == pytest.approx(se2wave.norm(phi), rel=1e-10)

    back = se2wave.surjective_invert(field, lam)
    assert np.linalg.norm(back - phi) / np.linalg.norm(phi) < 1e-9

    weak = se2wave.weak_reconstruct(field)
    assert np.linalg.norm(weak - phi) / np.linalg.norm(phi) < 1e-9

    assert se2wave.cr_residual(field, lam, field.extent / 8) < 0.2


def test_reproducing_and_kernel():
    n, omega = 128, 2.0
    u0 = se2wave.minimal_wavelet(0.5, omega, n)
    rng = np.random.default_rng(7)
    phi = band_limited(rng, n)
    g = se2wave.GroupElement(0.3, -0.8, 1.1)
    lhs, rhs = se2wave.reproduce_check(omega, u0, phi, g)
    assert lhs == pytest.approx(rhs, abs=1e-9 * (1 + abs(rhs)))
    assert se2wave.kernel(omega, u0, g, g) == pytest.approx(1.0, abs=1e-12)


def test_bargmann_bridge():
    n, omega, sigma = 128, 2.0, 1.0
    rng = np.random.default_rng(9)
    phi = band_limited(rng, n)
    points = [((0.4, -0.2), (0.8, 0.3)), ((0.0, 0.0), (0.0, 0.0))]
    rows, max_rel = se2wave.restriction_theorem_check(sigma, omega, phi, points)
    assert len(rows) == 2
    assert max_rel < 1e-8


def test_io_roundtrip(tmp_path):
    rng = np.random.default_rng(11)
    u = band_limited(rng, 64)
    path = str(tmp_path / "u.csv")
    se2wave.write_circle_csv(path, u)
    assert np.array_equal(se2wave.read_circle_csv(path), u)

    field = se2wave.bargmann_se2(0.5, 2.0, u, 16, 4.0, 8)
    fpath = str(tmp_path / "f.se2f")
    se2wave.write_se2f_field(fpath, field)
    back = se2wave.read_se2f_field(fpath)
    assert np.array_equal(back.values, field.values)
    assert np.array_equal(back.phi, u)


def test_verify_suite():
    reports = se2wave.run_suite("uncertainty", 1)
    assert reports
    assert all(r["passed"] for r in reports)
