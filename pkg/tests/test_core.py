import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from squeezing.core import Ball, DimensionError, ModelDomain, Polydisk, as_cvector, contains, hermitian_inner, minkowski, norm

from .oracles import ball_points, polydisk_points


def test_model_domain_validation():
    assert Ball(3).is_ball and not Polydisk(2).is_ball
    assert ModelDomain("ball", 2) == Ball(2)
    with pytest.raises(ValueError):
        Ball(0)
    with pytest.raises(ValueError):
        ModelDomain("cube", 2)


def test_as_cvector_pairs_and_errors():
    z = as_cvector([[0.1, 0.2], [0.3, -0.4]], dim=2)
    assert np.allclose(z, [0.1 + 0.2j, 0.3 - 0.4j])
    assert as_cvector(0.5).shape == (1,)
    with pytest.raises(ValueError):
        as_cvector([np.nan, 0.0])
    with pytest.raises(DimensionError):
        as_cvector([1, 2, 3], dim=2)


def test_hermitian_inner_is_linear_in_second_slot():
    a = np.array([1j, 0.0])
    z = np.array([1.0, 2.0])
    assert hermitian_inner(a, z) == pytest.approx(-1j)
    assert hermitian_inner(a, 2j * z) == pytest.approx(2j * hermitian_inner(a, z))
    with pytest.raises(DimensionError):
        hermitian_inner([1, 2], [1, 2, 3])


def test_minkowski_values():
    z = np.array([0.3, 0.4j])
    assert minkowski(Ball(2), z) == pytest.approx(0.5, abs=1e-15)
    assert minkowski(Polydisk(2), z) == pytest.approx(0.4, abs=1e-15)
    with pytest.raises(DimensionError):
        minkowski(Ball(3), z)


def test_contains_is_strict():
    assert contains(Ball(2), [0.6, 0.79])
    assert not contains(Ball(2), [0.6, 0.8])
    assert not contains(Polydisk(2), [0.5, 0.5], radius=0.5)
    assert list(contains(Polydisk(2), np.array([[0.1, 0.2], [1.0, 0.0]]))) == [True, False]
    with pytest.raises(ValueError):
        contains(Ball(2), [0, 0], radius=0.0)


@given(ball_points(3), st.floats(0.0, 1.0))
def test_minkowski_ball_is_homogeneous_norm(z, t):
    assert minkowski(Ball(3), t * z) == pytest.approx(t * norm(z), abs=1e-14)
    assert minkowski(Ball(3), z) >= minkowski(Polydisk(3), z) - 1e-15


@given(polydisk_points(2), polydisk_points(2))
def test_polydisk_gauge_triangle_inequality(a, b):
    d = Polydisk(2)
    assert minkowski(d, a + b) <= minkowski(d, a) + minkowski(d, b) + 1e-15
