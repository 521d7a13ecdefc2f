import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from squeezing import sampling
from squeezing.catalog import DomainSpec, squeeze_annulus_ball
from squeezing.core import Ball, Polydisk, norm
from squeezing.psh import (
    CertificateError,
    DiscOutsideDomain,
    Field,
    PshReport,
    circle_mean,
    scan_psh,
    slice_value,
    submean_check,
    capped_shell_domain,
    capped_shell_field,
    verify_capped_shell,
)

E1 = np.array([1, 0], dtype=complex)


def _ball_centers(count, n, max_norm):
    return lambda gen: sampling.solid_ball(gen, count, n, max_norm)


# ---------------------------------------------------------------- quadrature


def test_constant_field_mean():
    f = Field(lambda z: 0.37, Ball(2))
    assert circle_mean(f, [0.1, 0.2], E1, 0.3, 16) == pytest.approx(0.37, abs=1e-15)


@given(st.integers(1, 20), st.floats(-1, 1), st.floats(-1, 1), st.floats(0.05, 0.4))
def test_harmonic_polynomials_equal_center_value(k, x, y, rho):
    # Re(z1^k) and Im(z1 z2) are harmonic on every complex line
    c = np.array([0.3 * x + 0.3j * y, 0.2])
    v = np.array([1, 1j]) / math.sqrt(2)
    for g in (lambda z: (z[0] ** k).real, lambda z: (z[0] * z[1]).imag):
        f = Field(g, Ball(2))
        assert circle_mean(f, c, v, rho, 64) == pytest.approx(f(c), abs=1e-10)


def test_quadrature_converges_for_catalog_fields():
    f = Field(lambda z: squeeze_annulus_ball(z, 0.25), DomainSpec("annulus-ball", 2, 0.25))
    c = np.array([0.6, 0.1j])
    v = np.array([0.6, 0.8j])
    assert abs(circle_mean(f, c, v, 0.2, 512) - circle_mean(f, c, v, 0.2, 1024)) < 1e-8


def test_quadrature_arguments_validated():
    f = Field(lambda z: 0.0, Ball(2))
    with pytest.raises(ValueError):
        circle_mean(f, [0, 0], [1, 1], 0.1)
    with pytest.raises(ValueError):
        circle_mean(f, [0, 0], E1, 0.1, 15)
    with pytest.raises(ValueError):
        circle_mean(f, [0, 0], E1, 0.1, 8)
    with pytest.raises(ValueError):
        circle_mean(f, [0, 0], E1, 0.0)


def test_disc_must_lie_in_domain():
    f = Field(lambda z: 0.0, Ball(2))
    with pytest.raises(DiscOutsideDomain):
        circle_mean(f, [0.5, 0], E1, 0.6)
    # circle inside the domain but the disc crosses the deleted shell
    f = capped_shell_field(0.5, 0.05, 2)
    with pytest.raises(DiscOutsideDomain):
        circle_mean(f, [0.0, 0], E1, 0.7)


# ---------------------------------------------------------------- psh fields never violate


def _psh_fields(n):
    return [
        Field(lambda z: float(np.max(np.abs(z))), Polydisk(n), "max modulus"),
        Field(lambda z: norm(z), Ball(n), "norm"),
        Field(lambda z: norm(z) ** 2, Ball(n), "norm squared"),
    ]


@pytest.mark.parametrize("n", [2, 3])
def test_psh_fields_have_no_violations(n):
    for f in _psh_fields(n):
        rep = scan_psh(f, _ball_centers(63, n, 0.6), directions=16, radii=(0.3,), quad_n=64, tol=1e-9, seed=n)
        assert rep.scanned == 63 * 16 and rep.skipped == 0
        assert rep.violations == []


# ---------------------------------------------------------------- capped-shell complement


@pytest.mark.parametrize("rho", [0.1, 0.25, 0.4])
def test_slice_disc_deficit_is_exact(rho):
    r = 0.5
    f = capped_shell_field(r, 0.05, 2)
    hit = submean_check(f, [0, 0], E1, rho, 512, 1e-6)
    assert hit is not None
    assert hit.center_value == pytest.approx(r, abs=1e-10)
    assert hit.deficit == pytest.approx(r - (r - rho) / (1 - r * rho), abs=1e-10)


def test_slice_value_matches_numerical_field():
    r = 0.5
    f = capped_shell_field(r, 0.05, 2)
    for z in ([0.1, 0], [0.3j, 0], [0.0, 0]):
        assert f(z) == pytest.approx(slice_value(r, z), abs=2e-3)
    assert slice_value(r, [0.1, 0]) == pytest.approx(0.4 / 0.95, abs=1e-15)


def test_certificate_reports_three_fourteenths():
    rep = verify_capped_shell(0.5, 0.05, 2)
    assert len(rep.violations) == 1
    v = rep.violations[0]
    assert v.radius == 0.25
    assert np.all(v.center == 0)
    assert v.deficit == pytest.approx(3 / 14, abs=1e-6)
    assert rep.checks["sliceMaxError"] <= 2e-3
    d = rep.to_dict()
    assert d["quadratureN"] == 512 and d["violations"][0]["deficit"] == pytest.approx(3 / 14, abs=1e-6)


def test_certificate_argument_errors():
    with pytest.raises(ValueError):
        capped_shell_domain(0.5, 0.6, 2)
    with pytest.raises(ValueError):
        capped_shell_domain(0.5, 0.05, 1)
    with pytest.raises(ValueError):
        capped_shell_domain(1.2, 0.05, 2)
    with pytest.raises(ValueError):
        verify_capped_shell(0.5, 0.05, 2, radius=0.5, slice_points=2)


def test_certificate_fails_when_slice_tolerance_is_impossible():
    with pytest.raises(CertificateError):
        verify_capped_shell(0.5, 0.05, 2, slice_points=3, slice_tol=-1.0)


def test_scan_finds_violation_near_origin():
    f = capped_shell_field(0.5, 0.05, 2)
    rep = scan_psh(f, [np.zeros(2)], directions=4, radii=(0.25,), quad_n=64, seed=3)
    assert isinstance(rep, PshReport)
    assert rep.scanned == 4 and rep.violations
    assert min(v.deficit for v in rep.violations) == pytest.approx(3 / 14, abs=1e-6)


def test_scan_counts_skipped_discs():
    f = Field(lambda z: 0.0, Ball(2))
    rep = scan_psh(f, [[0.9, 0]], directions=3, radii=(0.05, 0.5), quad_n=16)
    assert rep.scanned == 3 and rep.skipped == 3


def test_scan_is_deterministic():
    f = Field(lambda z: float(np.max(np.abs(z))), Polydisk(2))
    a = scan_psh(f, _ball_centers(5, 2, 0.5), quad_n=16, seed=9).to_dict()
    b = scan_psh(f, _ball_centers(5, 2, 0.5), quad_n=16, seed=9).to_dict()
    assert a == b
