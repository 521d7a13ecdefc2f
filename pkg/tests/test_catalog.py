import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from squeezing import sampling
from squeezing.caratheodory import OutsideDomainError
from squeezing.catalog import (
    DomainKind,
    DomainSpec,
    Interval,
    evaluate,
    fridman_equality_applies,
    squeeze_1d,
    squeeze_annulus_ball,
    squeeze_ball_minus_polydisk,
    squeeze_bounds_punctured_disk_times_polydisk,
    squeeze_bounds_punctured_polydisk,
    squeeze_omega_minus_set,
    squeeze_polydisk_minus_ball,
    squeeze_polydisk_minus_polydisk,
    squeeze_punctured_ball_polydisk_model,
)
from squeezing.core import Ball, Polydisk
from squeezing.set_distance import (
    HyperplaneArrangement,
    PointSet,
    PolydiskShell,
    SphereShell,
    SphereShellMinusCap,
    VerticalHyperplanes,
    dist_generic,
    dist_sphere_in_ball,
    grid_min_oracle,
)

from .oracles import ball_points, polydisk_points


# ---------------------------------------------------------------- annulus in the ball


def test_annulus_spot_values():
    assert squeeze_annulus_ball([0.5, 0], 0.25) == pytest.approx(2 / 7, abs=1e-12)
    assert squeeze_annulus_ball([0.3j, 0.4], 0.25) == pytest.approx(2 / 7, abs=1e-12)
    z = np.array([1 - 1e-12, 0])
    assert squeeze_annulus_ball(z, 0.25) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("k", range(2, 7))
def test_annulus_vanishes_at_inner_boundary(k):
    r = 0.25
    eps = 10.0**-k
    val = squeeze_annulus_ball([r + eps, 0], r)
    assert 0 < val <= 2 * eps / (1 - r * r)


@given(ball_points(3, 0.99), st.floats(0.05, 0.9))
def test_annulus_depends_only_on_norm(z, r):
    t = np.linalg.norm(z)
    if not (r < t < 1):
        return
    val = squeeze_annulus_ball(z, r)
    assert val == pytest.approx(squeeze_annulus_ball([t, 0, 0], r), abs=1e-14)
    assert val == pytest.approx(dist_sphere_in_ball(z, r), abs=1e-14)
    assert 0 < val < 1


def test_annulus_errors():
    with pytest.raises(OutsideDomainError):
        squeeze_annulus_ball([0.1, 0], 0.25)
    with pytest.raises(OutsideDomainError):
        squeeze_annulus_ball([0.5], 0.25)


# ---------------------------------------------------------------- polydisk minus polydisk


def test_polydisk_minus_polydisk_spot_values():
    assert squeeze_polydisk_minus_polydisk([0.75, 0.2], 0.5) == pytest.approx(0.4, abs=1e-12)
    t, r = 0.6, 0.3
    assert squeeze_polydisk_minus_polydisk([t, 0], r) == pytest.approx((t - r) / (1 - r * t), abs=1e-15)
    assert squeeze_polydisk_minus_polydisk([1 - 1e-12, 0.1], r) == pytest.approx(1.0, abs=1e-9)


@given(polydisk_points(3, 0.99), st.floats(0.05, 0.9), st.permutations(range(3)), st.floats(0, 2 * np.pi))
def test_polydisk_minus_polydisk_symmetries(z, r, perm, phi):
    if np.max(np.abs(z)) <= r + 1e-9:
        return
    val = squeeze_polydisk_minus_polydisk(z, r)
    assert 0 < val < 1
    moved = z[list(perm)] * np.exp(1j * phi * np.arange(1, 4))
    assert squeeze_polydisk_minus_polydisk(moved, r) == pytest.approx(val, abs=1e-14)


def test_polydisk_minus_polydisk_errors():
    with pytest.raises(OutsideDomainError):
        squeeze_polydisk_minus_polydisk([0.2, 0.3], 0.5)
    with pytest.raises(OutsideDomainError):
        squeeze_polydisk_minus_polydisk([1.0, 0.3], 0.5)


# ---------------------------------------------------------------- numerical entries


def test_polydisk_minus_ball_delegates():
    r = 0.25
    assert squeeze_polydisk_minus_ball([0.5, 0.5], r) == pytest.approx(
        (0.5 - r / math.sqrt(2)) / (1 - 0.5 * r / math.sqrt(2)), abs=1e-7
    )
    assert squeeze_polydisk_minus_ball([0.999999, 0.0], r) > 0.9999
    with pytest.raises(OutsideDomainError):
        squeeze_polydisk_minus_ball([0.1, 0.1], r)


def test_ball_minus_polydisk_delegates():
    z = np.array([0.9, 0.0])
    val = squeeze_ball_minus_polydisk(z, 0.3)
    assert val == pytest.approx(grid_min_oracle(Ball(2), z, PolydiskShell(0.3, 2)), abs=1e-3)
    with pytest.raises(ValueError):
        squeeze_ball_minus_polydisk(z, 0.71)
    with pytest.raises(OutsideDomainError):
        squeeze_ball_minus_polydisk([0.2, 0.2], 0.3)


# ---------------------------------------------------------------- bounds


def test_punctured_polydisk_bounds():
    iv = squeeze_bounds_punctured_polydisk([0.9, 0.8])
    assert iv.lo == pytest.approx(1 / math.sqrt(2), abs=1e-12) and iv.hi == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    iv = squeeze_bounds_punctured_polydisk([0.3, 0.3])
    assert iv.lo == pytest.approx(0.3, abs=1e-12) and iv.hi == pytest.approx(0.3, abs=1e-12)
    iv = squeeze_bounds_punctured_polydisk([0.5, 0.1])
    assert iv.lo == pytest.approx(math.sqrt(0.26) / math.sqrt(2), abs=1e-12) and iv.hi == 0.5
    with pytest.raises(OutsideDomainError):
        squeeze_bounds_punctured_polydisk([0, 0])


@given(st.integers(2, 5), st.floats(1e-3, 0.99), st.floats(0, 2 * np.pi))
def test_punctured_polydisk_pinches_on_equal_moduli(n, a, phi):
    z = a * np.exp(1j * phi * np.arange(n))
    if a * math.sqrt(n) >= 1:
        return
    iv = squeeze_bounds_punctured_polydisk(z)
    assert iv.hi - iv.lo <= 1e-12


@given(polydisk_points(3, 0.99))
def test_bounds_are_ordered(z):
    if np.max(np.abs(z)) == 0 or z[0] == 0:
        return
    for iv in (squeeze_bounds_punctured_polydisk(z), squeeze_bounds_punctured_disk_times_polydisk(z)):
        assert 0 <= iv.lo <= iv.hi <= 1


def test_punctured_disk_times_polydisk():
    iv = squeeze_bounds_punctured_disk_times_polydisk([0.5, 0.0])
    assert iv.lo == pytest.approx(0.5 / math.sqrt(1.25), abs=1e-12) and iv.hi == 0.5
    iv = squeeze_bounds_punctured_disk_times_polydisk([0.37j])
    assert iv.lo == pytest.approx(0.37) and iv.hi == pytest.approx(0.37)
    iv = squeeze_bounds_punctured_disk_times_polydisk([1e-14, 0.5])
    assert iv.hi < 1e-13
    with pytest.raises(OutsideDomainError):
        squeeze_bounds_punctured_disk_times_polydisk([0.0, 0.5])


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(0.5, 0.4)
    with pytest.raises(ValueError):
        Interval(-0.1, 0.4)
    assert Interval(0.2, 0.5).width == pytest.approx(0.3)


# ---------------------------------------------------------------- exact values


def test_punctured_ball_polydisk_model():
    assert squeeze_punctured_ball_polydisk_model([0.3, 0]) == pytest.approx(0.3)
    assert squeeze_punctured_ball_polydisk_model([0.9, 0]) == pytest.approx(1 / math.sqrt(2))
    z = np.array([0.5, 0.5])
    assert squeeze_punctured_ball_polydisk_model(z) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    with pytest.raises(OutsideDomainError):
        squeeze_punctured_ball_polydisk_model([0, 0])


def test_one_dimensional_values():
    assert squeeze_1d("annulus", [0.4], 0.25) == pytest.approx(0.625)
    assert squeeze_1d("annulus", [0.5], 0.25) == pytest.approx(0.5)
    assert squeeze_1d("punctured-disk", [0.7j]) == pytest.approx(0.7)
    assert squeeze_1d("punctured-ball", [0.3, 0.4]) == pytest.approx(0.5)
    with pytest.raises(OutsideDomainError):
        squeeze_1d("annulus", [0.2], 0.25)
    with pytest.raises(ValueError):
        squeeze_1d("torus", [0.2])


# ---------------------------------------------------------------- omega minus a set


def test_omega_minus_set_examples():
    spec = DomainSpec(DomainKind.OMEGA_MINUS_SET, 2, model=Ball(2), deleted=SphereShell(0.25, 2))
    assert squeeze_omega_minus_set(spec, [0.5, 0]) == pytest.approx(squeeze_annulus_ball([0.5, 0], 0.25), abs=1e-15)
    spec = DomainSpec(DomainKind.OMEGA_MINUS_SET, 2, model=Polydisk(2), deleted=PointSet([[0, 0]]))
    assert squeeze_omega_minus_set(spec, [0.3j, -0.6]) == pytest.approx(0.6)
    q = np.array([0, 0.5])
    spec = DomainSpec(DomainKind.OMEGA_MINUS_SET, 2, model=Ball(2), deleted=SphereShellMinusCap(0.5, q, 0.05))
    z = np.array([0.1, 0])
    assert squeeze_omega_minus_set(spec, z) == pytest.approx(0.4 / 0.95, abs=1e-9)
    with pytest.raises(OutsideDomainError):
        squeeze_omega_minus_set(spec, [0.5, 0])


def test_fridman_flags():
    assert fridman_equality_applies(Ball(2), SphereShell(0.3, 2))
    assert fridman_equality_applies(Ball(2), PolydiskShell(0.3, 2))
    assert not fridman_equality_applies(Polydisk(2), PolydiskShell(0.3, 2))
    assert fridman_equality_applies(Ball(2), HyperplaneArrangement([[0.5, 0]], [[1, 0]]))
    assert fridman_equality_applies(Polydisk(2), VerticalHyperplanes([0.5], 2))
    assert fridman_equality_applies(Polydisk(2), PointSet([[0, 0]]))


def test_closed_forms_agree_with_generic_distance():
    gen = sampling.rng(201)
    for _ in range(20):
        r = gen.uniform(0.1, 0.6)
        z = sampling.disk(gen, 2, 0.95)
        if np.max(np.abs(z)) > r:
            expect = dist_generic(Polydisk(2), z, PolydiskShell(r, 2)).value
            assert squeeze_polydisk_minus_polydisk(z, r) == pytest.approx(expect, abs=1e-15)


# ---------------------------------------------------------------- specs and dispatch


def test_domain_spec_validation_and_membership():
    with pytest.raises(ValueError):
        DomainSpec(DomainKind.ANNULUS_BALL, 2)
    with pytest.raises(ValueError):
        DomainSpec(DomainKind.BALL_MINUS_POLYDISK, 2, 0.8)
    with pytest.raises(ValueError):
        DomainSpec(DomainKind.ANNULUS_1D, 2, 0.3)
    with pytest.raises(ValueError):
        DomainSpec(DomainKind.OMEGA_MINUS_SET, 2, model=Ball(2))
    with pytest.raises(ValueError):
        DomainSpec("no-such-domain", 2)
    ann = DomainSpec("annulus-ball", 2, 0.25)
    assert ann.contains([0.5, 0]) and not ann.contains([0.2, 0]) and not ann.contains([0.5])
    pd = DomainSpec(DomainKind.POLYDISK_MINUS_BALL, 2, 0.5)
    assert pd.contains([0.9, 0.9]) and not pd.contains([0.3, 0.3])
    om = DomainSpec(DomainKind.OMEGA_MINUS_SET, 2, model=Ball(2), deleted=SphereShell(0.5, 2))
    assert om.contains([0.1, 0]) and not om.contains([0.5, 0]) and not om.contains([1.0, 0])


@pytest.mark.parametrize(
    "spec,z",
    [
        (DomainSpec(DomainKind.ANNULUS_BALL, 2, 0.25), [0.5, 0]),
        (DomainSpec(DomainKind.POLYDISK_MINUS_POLYDISK, 2, 0.5), [0.75, 0.2]),
        (DomainSpec(DomainKind.POLYDISK_MINUS_BALL, 2, 0.25), [0.5, 0.5]),
        (DomainSpec(DomainKind.BALL_MINUS_POLYDISK, 2, 0.3), [0.9, 0]),
        (DomainSpec(DomainKind.PUNCTURED_POLYDISK, 2), [0.3, 0.3]),
        (DomainSpec(DomainKind.PUNCTURED_DISK_TIMES_POLYDISK, 2), [0.5, 0.0]),
        (DomainSpec(DomainKind.PUNCTURED_BALL_POLYDISK_MODEL, 2), [0.3, 0]),
        (DomainSpec(DomainKind.PUNCTURED_DISK, 1), [0.7]),
        (DomainSpec(DomainKind.ANNULUS_1D, 1, 0.25), [0.4]),
        (DomainSpec(DomainKind.OMEGA_MINUS_SET, 2, model=Ball(2), deleted=SphereShell(0.25, 2)), [0.5, 0]),
    ],
    ids=lambda v: v.kind.value if isinstance(v, DomainSpec) else "",
)
def test_evaluate_dispatch_stays_in_unit_interval(spec, z):
    assert spec.contains(z)
    val = evaluate(spec, z)
    if isinstance(val, Interval):
        assert 0 <= val.lo <= val.hi <= 1
    else:
        assert 0 < val < 1
