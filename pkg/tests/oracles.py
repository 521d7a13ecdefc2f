"""Independent reference formulas and hypothesis strategies shared by the tests."""

import numpy as np
from hypothesis import strategies as st

from squeezing import sampling


def _complex(max_abs):
    return st.tuples(
        st.floats(0.0, max_abs, allow_nan=False), st.floats(0.0, 2 * np.pi, allow_nan=False)
    ).map(lambda p: p[0] * np.exp(1j * p[1]))


def ball_points(n, max_norm=0.95):
    """Points of the ball of C^n with norm at most ``max_norm``."""

    def build(parts):
        v, t = parts
        v = np.asarray(v, dtype=np.complex128)
        nv = np.linalg.norm(v)
        if nv == 0:
            return np.zeros(n, dtype=np.complex128)
        return t * max_norm * v / nv

    return st.tuples(st.lists(_complex(1.0), min_size=n, max_size=n), st.floats(0.0, 1.0)).map(build)


def polydisk_points(n, max_mod=0.95):
    return st.lists(_complex(max_mod), min_size=n, max_size=n).map(lambda v: np.asarray(v, dtype=np.complex128))


def naive_tanh_c_ball(a, z):
    """Textbook formula: 1 - tanh^2 = (1-|a|^2)(1-|z|^2)/|1-<z,a>|^2."""
    a, z = np.asarray(a, complex), np.asarray(z, complex)
    inner = np.sum(z * np.conj(a))
    val = 1.0 - (1.0 - np.vdot(a, a).real) * (1.0 - np.vdot(z, z).real) / abs(1.0 - inner) ** 2
    return float(np.sqrt(max(val, 0.0)))


def naive_mobius(a, z):
    return abs((z - a) / (1.0 - np.conj(a) * z))


def moderate_ball_input(gen, n=2):
    """r in [0.1, 0.4], ||z|| <= 0.8, at least 0.1 away from the shell: the 10^5-point oracle resolves 2e-3 here."""
    r = gen.uniform(0.1, 0.4)
    while True:
        t = gen.uniform(0.0, 0.8)
        if abs(t - r) >= 0.1:
            break
    return r, t * sampling.unit_sphere(gen, 1, n)[0]


def moderate_polydisk_input(gen, n=2):
    r = gen.uniform(0.1, 0.4)
    while True:
        z = sampling.disk(gen, n, 0.8)
        if np.max(np.abs(z)) >= r + 0.1:
            return r, z
