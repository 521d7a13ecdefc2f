"""Deterministic samplers.

All randomness goes through :func:`rng`, a numpy ``Generator`` on the
counter-based Philox bit generator, so a given seed reproduces the same
stream bit for bit on every platform.
"""

from __future__ import annotations

import numpy as np


def rng(seed: int | None = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(0 if seed is None else int(seed)))


def unit_sphere(gen: np.random.Generator, count: int, n: int) -> np.ndarray:
    """Uniform points on the unit sphere of C^n (real dimension 2n - 1)."""
    g = gen.standard_normal((count, n)) + 1j * gen.standard_normal((count, n))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def solid_ball(gen: np.random.Generator, count: int, n: int, radius: float = 1.0) -> np.ndarray:
    """Uniform points in the open ball of C^n with the given radius."""
    u = unit_sphere(gen, count, n)
    rad = radius * gen.random(count) ** (1.0 / (2 * n))
    return u * rad[:, None]


def disk(gen: np.random.Generator, shape, radius: float = 1.0) -> np.ndarray:
    rad = radius * np.sqrt(gen.random(shape))
    return rad * np.exp(2j * np.pi * gen.random(shape))


def unit_vector(gen: np.random.Generator, n: int) -> np.ndarray:
    return unit_sphere(gen, 1, n)[0]


def unitary(gen: np.random.Generator, n: int) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a complex Ginibre matrix."""
    g = gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def orthogonal(gen: np.random.Generator, k: int) -> np.ndarray:
    """Haar-random real orthogonal k x k matrix."""
    q, r = np.linalg.qr(gen.standard_normal((k, k)))
    return q * np.sign(np.diag(r))


def orthonormal_complement(v: np.ndarray) -> np.ndarray:
    """Columns form an orthonormal basis of the complex hyperplane v^perp."""
    v = np.asarray(v, dtype=np.complex128)
    n = v.shape[0]
    m = np.eye(n, dtype=np.complex128)
    m[:, 0] = v
    q, _ = np.linalg.qr(m)
    return q[:, 1:]


def moduli_on_sphere(angles: np.ndarray, n: int) -> np.ndarray:
    """Hyperspherical map [0, pi/2]^(n-1) -> positive orthant of the unit sphere of R^n."""
    out = np.ones(angles.shape[:-1] + (n,))
    s = np.ones(angles.shape[:-1])
    for j in range(n - 1):
        out[..., j] = s * np.cos(angles[..., j])
        s = s * np.sin(angles[..., j])
    out[..., n - 1] = s
    return out


def _ring_phases(count: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(count) / count


def _ring_count(length: float, h: float) -> int:
    return max(1, int(np.ceil(length / h)))


def _sphere_levels(n: int, h: float):
    """Moduli levels of :func:`sphere_grid` and the phase counts on each."""
    if n == 1:
        return np.ones((1, 1)), np.array([[_ring_count(2.0 * np.pi, h)]])
    steps = _ring_count(np.pi / 2, h)
    axis = np.linspace(0.0, np.pi / 2, steps + 1)
    grid = np.array(np.meshgrid(*([axis] * (n - 1)), indexing="ij")).reshape(n - 1, -1).T
    # angles past a vanishing sine repeat the same moduli vector
    moduli = np.unique(np.round(moduli_on_sphere(grid, n), 12), axis=0)
    counts = np.maximum(1, np.ceil(2.0 * np.pi * moduli / h)).astype(int)
    return moduli, counts


def sphere_grid(n: int, h: float) -> np.ndarray:
    """Points of the unit sphere of C^n with spacing about ``h``.

    Hyperspherical grid on the moduli, and on each moduli level an
    equispaced phase grid per coordinate with arc spacing at most ``h``.
    """
    moduli, counts = _sphere_levels(n, h)
    out = []
    for t, cs in zip(moduli, counts):
        phases = np.meshgrid(*[_ring_phases(c) for c in cs], indexing="ij")
        ph = np.stack([q.ravel() for q in phases], axis=1)
        out.append(t * np.exp(1j * ph))
    return np.concatenate(out)


def _disk_rings(h: float, radius: float):
    radii = np.linspace(0.0, radius, _ring_count(radius, h) + 1)[1:]
    return radii, [_ring_count(2.0 * np.pi * rho, h) for rho in radii]


def disk_grid(h: float, radius: float = 1.0) -> np.ndarray:
    """Concentric rings covering the closed disc of ``radius`` with spacing about ``h``."""
    radii, counts = _disk_rings(h, radius)
    pts = [np.zeros(1, dtype=np.complex128)]
    pts += [rho * np.exp(1j * _ring_phases(c)) for rho, c in zip(radii, counts)]
    return np.concatenate(pts)


def _fit_spacing(size, count: int, guess: float) -> float:
    """Smallest spacing h (to 0.1%) with size(h) <= count; ``size`` is nonincreasing in h."""
    lo, hi = guess / 2, guess * 2
    while size(hi) > count:
        lo, hi = hi, 2 * hi
        if hi > 16.0:
            raise ValueError(f"cannot fit a grid into {count} points")
    while size(lo) <= count and lo > 1e-6:
        lo, hi = lo / 2, lo
    while hi / lo > 1.001:
        mid = np.sqrt(lo * hi)
        if size(mid) > count:
            lo = mid
        else:
            hi = mid
    return hi


def sphere_lattice(gen: np.random.Generator, count: int, n: int) -> np.ndarray:
    """At most ``count`` quasi-uniform points of the unit sphere of C^n, randomly rotated."""

    def size(h):
        return int(np.sum(np.prod(_sphere_levels(n, h)[1], axis=1)))

    area = 2.0 * np.pi**n / np.prod(np.arange(1, n))
    h = _fit_spacing(size, count, (area / count) ** (1.0 / (2 * n - 1)))
    return sphere_grid(n, h) @ unitary(gen, n).T


def polydisk_shell_lattice(gen: np.random.Generator, count: int, n: int, r: float) -> np.ndarray:
    """At most ``count`` quasi-uniform points of {max_i |w_i| = r}: a grid on every face, random phases."""

    def size(h):
        inner = 1 + sum(_disk_rings(h, r)[1]) if n > 1 else 1
        return n * _ring_count(2.0 * np.pi * r, h) * inner ** (n - 1)

    vol = n * 2.0 * np.pi * r * (np.pi * r * r) ** (n - 1)
    h = _fit_spacing(size, count, (vol / count) ** (1.0 / (2 * n - 1)))
    circle = r * np.exp(1j * _ring_phases(_ring_count(2.0 * np.pi * r, h)))
    if n == 1:
        return circle[:, None] * np.exp(2j * np.pi * gen.random(1))
    inner = disk_grid(h, r)
    faces = []
    for i in range(n):
        axes = [inner] * n
        axes[i] = circle
        mesh = np.meshgrid(*axes, indexing="ij")
        faces.append(np.stack([m.ravel() for m in mesh], axis=1))
    return np.concatenate(faces) * np.exp(2j * np.pi * gen.random(n))
