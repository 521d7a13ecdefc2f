"""Counterexample configurations whose squeezing function is not plurisubharmonic.

Points z_i cover the sphere (or circle) of radius r by balls of radius
delta, and each is pushed out to p_i = (R/r) z_i. Deleting the p_i (in the
disc), hyperplanes through p_i orthogonal to z_i - p_i (in the ball), or
the vertical hyperplanes w_1 = p_i1 (in the polydisk) gives a domain whose
squeezing function is R at the origin but strictly below R on the whole
r-sphere (or slice circle).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import sampling
from .caratheodory import tanh_c_ball_unchecked, tanh_c_polydisk_unchecked
from .core import Ball, Polydisk, norm
from .set_distance import (
    HyperplaneArrangement,
    PointSet,
    VerticalHyperplanes,
    _mobius_abs,
    _points_from_json,
    _points_json,
    boundary_set_from_json,
    dist_generic,
)

FEASIBILITY_MARGIN = 1e-4
MAX_BALL_DIM = 3
CENTER_TOL = 1e-9


class ConfigKind(str, enum.Enum):
    BALL_HYPERPLANES = "ball_hyperplanes"
    DISK_POINTS = "disk_points"
    POLYDISK_VERTICAL_PLANES = "polydisk_vertical_planes"


class CoveringError(RuntimeError):
    pass


@dataclass(eq=False)
class Config:
    kind: ConfigKind
    r: float
    R: float
    m: int
    delta: float
    sample_points: np.ndarray
    pushed_points: np.ndarray
    planes: HyperplaneArrangement | VerticalHyperplanes | None = None

    def __post_init__(self):
        self.kind = ConfigKind(self.kind)
        self.sample_points = np.atleast_2d(np.asarray(self.sample_points, dtype=np.complex128))
        self.pushed_points = np.atleast_2d(np.asarray(self.pushed_points, dtype=np.complex128))
        if self.sample_points.shape != self.pushed_points.shape:
            raise ValueError("sample and pushed points must have the same shape")
        if len(self.sample_points) != self.m:
            raise ValueError(f"m={self.m} but {len(self.sample_points)} sample points")

    @property
    def n(self) -> int:
        return self.sample_points.shape[1]

    def deleted_set(self):
        if self.kind is ConfigKind.DISK_POINTS:
            return PointSet(self.pushed_points)
        return self.planes

    def model(self):
        return Ball(self.n) if self.kind is ConfigKind.BALL_HYPERPLANES else Polydisk(self.n)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "r": self.r,
            "R": self.R,
            "m": self.m,
            "delta": self.delta,
            "samplePoints": _points_json(self.sample_points),
            "pushedPoints": _points_json(self.pushed_points),
            "planes": None if self.planes is None else self.planes.to_json(),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Config":
        planes = doc.get("planes")
        return cls(
            kind=doc["kind"],
            r=doc["r"],
            R=doc["R"],
            m=doc["m"],
            delta=doc["delta"],
            sample_points=_points_from_json(doc["samplePoints"]),
            pushed_points=_points_from_json(doc["pushedPoints"]),
            planes=None if planes is None else boundary_set_from_json(planes),
        )

    def dump(self, path):
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")

    @classmethod
    def load(cls, path) -> "Config":
        return cls.from_json(json.loads(Path(path).read_text()))


@dataclass
class VerificationReport:
    covering_ok: bool
    worst_gap: float
    feasibility_ok: bool
    worst_feasibility: float
    center_value: float
    center_ok: bool
    boundary_max: float
    boundary_ok: bool
    consistency_ok: bool
    samples: int
    seed: int

    @property
    def ok(self) -> bool:
        return self.covering_ok and self.feasibility_ok and self.center_ok and self.boundary_ok and self.consistency_ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "coveringOK": self.covering_ok,
            "worstGap": self.worst_gap,
            "feasibilityOK": self.feasibility_ok,
            "worstFeasibility": self.worst_feasibility,
            "centerValue": self.center_value,
            "centerOK": self.center_ok,
            "boundaryMax": self.boundary_max,
            "boundaryOK": self.boundary_ok,
            "consistencyOK": self.consistency_ok,
            "samples": self.samples,
            "seed": self.seed,
        }


def _check_radii(r, R):
    if not (0.0 < r < R < 1.0):
        raise ValueError(f"need 0 < r < R < 1, got r={r}, R={R}")


def pushed_distance(r: float, R: float) -> float:
    """tanh c between a point of norm r and its push-out to norm R along the same ray."""
    return (R - r) / (1.0 - r * R)


def _ball_offsets(gen, count: int, n: int) -> np.ndarray:
    """Offsets in the closed unit ball of C^n: half on the sphere, half inside, plus the axes."""
    surface = sampling.unit_sphere(gen, count - count // 2, n)
    inner = sampling.solid_ball(gen, count // 2, n)
    eye = np.eye(n, dtype=np.complex128)
    axes = np.concatenate([eye, -eye, 1j * eye, -1j * eye])
    return np.concatenate([axes, surface, inner])


def delta_is_feasible(r: float, R: float, n: int, delta: float, probe: int = 4000, seed: int = 0) -> bool:
    """Sampled test that B(z, delta) sits in B^n and tanh c(p, .) < R on it (z = (r,0,..), p = (R/r) z)."""
    _check_radii(r, R)
    if delta <= 0.0 or r + delta >= 1.0:
        return False
    z = np.zeros(n, dtype=np.complex128)
    z[0] = r
    p = (R / r) * z
    margin = min(FEASIBILITY_MARGIN, 0.5 * (R - pushed_distance(r, R)))
    w = z + delta * _ball_offsets(sampling.rng(seed), probe, n)
    return bool(np.max(tanh_c_ball_unchecked(p[None, :], w)) < R - margin)


def feasible_delta(r: float, R: float, n: int = 2, probe: int = 4000, seed: int = 0) -> float:
    """Largest delta (by bisection) passing :func:`delta_is_feasible`.

    By unitary invariance one base point z = (r, 0, ..., 0) represents the
    whole sphere.
    """
    _check_radii(r, R)
    lo, hi = 0.0, 1.0 - r
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if delta_is_feasible(r, R, n, mid, probe, seed):
            lo = mid
        else:
            hi = mid
    if lo <= 0.0:
        raise RuntimeError("no feasible delta found")
    return lo


def example_disk_delta_bound(r: float, R: float) -> float:
    return (r - r * R * R) / (1.0 + R * R)


def example_disk_config(r: float, R: float) -> Config:
    """m equispaced points on the circle |z| = r, chord delta = 2r sin(pi/m), smallest admissible m."""
    _check_radii(r, R)
    bound = example_disk_delta_bound(r, R)
    m = 3
    while True:
        delta = r * math.sqrt(2.0 - 2.0 * math.cos(2.0 * math.pi / m))
        if delta < bound and r + delta < 1.0:
            break
        m += 1
    ang = 2.0 * np.pi * np.arange(1, m + 1) / m
    z = (r * np.exp(1j * ang))[:, None]
    p = (R * np.exp(1j * ang))[:, None]
    return Config(ConfigKind.DISK_POINTS, r, R, m, delta, z, p, None)


def _sphere_grid(n: int, r: float, h: float) -> np.ndarray:
    return r * sampling.sphere_grid(n, h / r)


def _worst_gap(points: np.ndarray, centers: np.ndarray, chunk: int = 2000) -> float:
    worst = 0.0
    for a in range(0, len(points), chunk):
        pts = points[a : a + chunk]
        d = np.min(norm(pts[:, None, :] - centers[None, :, :]), axis=1)
        worst = max(worst, float(np.max(d)))
    return worst


def build_ball_config(r: float, R: float, n: int = 2, budget: int = 20000, check_samples: int = 10000, seed: int = 0) -> Config:
    """Hyperplane configuration in B^n; ``budget`` caps the number of covering points."""
    _check_radii(r, R)
    if n < 2:
        raise ValueError("the ball construction needs n >= 2")
    if n > MAX_BALL_DIM:
        raise ValueError(f"sphere coverings above n={MAX_BALL_DIM} exceed desk-scale budgets")
    delta = feasible_delta(r, R, n)
    check = r * sampling.unit_sphere(sampling.rng(seed), check_samples, n)
    h = 2.0 * delta / math.sqrt(2 * n - 1)
    gap = math.inf
    while True:
        z = _sphere_grid(n, r, h)
        if len(z) > budget:
            raise CoveringError(f"covering needs more than {budget} points (last sampled gap {gap:.4g} vs delta {delta:.4g})")
        gap = _worst_gap(check, z)
        if gap < 0.95 * delta:
            break
        h *= 0.85
    p = (R / r) * z
    planes = HyperplaneArrangement(p, z - p)
    return Config(ConfigKind.BALL_HYPERPLANES, r, R, len(z), delta, z, p, planes)


def build_polydisk_config(r: float, R: float, n: int = 2) -> Config:
    """The disc construction on the first coordinate, deleting the hyperplanes w_1 = p_i1 from D^n."""
    if n < 2:
        raise ValueError("the polydisk construction needs n >= 2")
    disk = example_disk_config(r, R)
    z = np.zeros((disk.m, n), dtype=np.complex128)
    p = np.zeros((disk.m, n), dtype=np.complex128)
    z[:, 0] = disk.sample_points[:, 0]
    p[:, 0] = disk.pushed_points[:, 0]
    planes = VerticalHyperplanes(p[:, 0].copy(), n)
    return Config(ConfigKind.POLYDISK_VERTICAL_PLANES, r, R, disk.m, disk.delta, z, p, planes)


def _boundary_samples(cfg: Config, gen, samples: int) -> np.ndarray:
    if cfg.kind is ConfigKind.BALL_HYPERPLANES:
        return cfg.r * sampling.unit_sphere(gen, samples, cfg.n)
    w = np.zeros((samples, cfg.n), dtype=np.complex128)
    w[:, 0] = cfg.r * np.exp(2j * np.pi * gen.random(samples))
    return w


def _hyperplane_distances(w: np.ndarray, planes: HyperplaneArrangement) -> np.ndarray:
    """Batch tanh c_{B^n} distance from each row of ``w`` to the nearest plane (exact)."""
    v = planes.normals
    c = planes.offsets()
    zz = np.sum(np.abs(w) ** 2, axis=1)
    s = np.sqrt(1.0 - zz)
    vz = v @ np.conj(w).T  # (m, N): <v_i, w_k>
    safe = np.where(zz > 0, zz, 1.0)
    coef = (vz / safe).T[:, :, None]  # (N, m, 1)
    pv = coef * w[:, None, :]
    vp = pv + s[:, None, None] * (v[None, :, :] - pv) - np.conj(c)[None, :, None] * w[:, None, :]
    cp = (np.conj(vz).T) - c[None, :]  # <w, v_i> - c_i
    dist = np.abs(cp) / np.sqrt(np.sum(np.abs(vp) ** 2, axis=2))
    return np.min(dist, axis=1)


def _deleted_set_distance(cfg: Config, w: np.ndarray) -> np.ndarray:
    if cfg.kind is ConfigKind.DISK_POINTS:
        return np.min(_mobius_abs(w[:, :1], cfg.pushed_points[None, :, 0]), axis=1)
    if cfg.kind is ConfigKind.POLYDISK_VERTICAL_PLANES:
        return np.min(_mobius_abs(w[:, :1], cfg.planes.values[None, :]), axis=1)
    out = []
    for a in range(0, len(w), 500):
        out.append(_hyperplane_distances(w[a : a + 500], cfg.planes))
    return np.concatenate(out)


def _consistent(cfg: Config) -> bool:
    z, p = cfg.sample_points, cfg.pushed_points
    if not np.allclose(p, (cfg.R / cfg.r) * z, rtol=0.0, atol=1e-12):
        return False
    if cfg.kind is ConfigKind.BALL_HYPERPLANES:
        on_sphere = np.abs(norm(z) - cfg.r) <= 1e-12
        planes = cfg.planes
        return bool(
            np.all(on_sphere)
            and isinstance(planes, HyperplaneArrangement)
            and np.allclose(planes.base_points, p, atol=1e-12)
            and np.allclose(planes.normals, z - p, atol=1e-12)
        )
    if not np.all(np.abs(np.abs(z[:, 0]) - cfg.r) <= 1e-12):
        return False
    if cfg.kind is ConfigKind.POLYDISK_VERTICAL_PLANES:
        return isinstance(cfg.planes, VerticalHyperplanes) and np.allclose(cfg.planes.values, p[:, 0], atol=1e-12)
    return True


def verify_config(cfg: Config, samples: int = 10000, seed: int = 0) -> VerificationReport:
    """Sampled certificate for a configuration; never raises on a failed check."""
    gen = sampling.rng(seed)
    n, R, delta = cfg.n, cfg.R, cfg.delta

    boundary = _boundary_samples(cfg, gen, samples)
    gap = _worst_gap(boundary, cfg.sample_points)
    covering_ok = gap < delta

    offsets = delta * _ball_offsets(gen, samples, n)
    worst = 0.0
    inside = True
    for zi, pi in zip(cfg.sample_points, cfg.pushed_points):
        w = zi + offsets
        if cfg.kind is ConfigKind.BALL_HYPERPLANES:
            inside &= bool(np.all(norm(w) < 1.0))
            val = tanh_c_ball_unchecked(pi[None, :], w)
        else:
            inside &= bool(np.all(np.abs(w) < 1.0))
            val = tanh_c_polydisk_unchecked(pi[None, :], w)
        worst = max(worst, float(np.max(val)))
    feasibility_ok = inside and worst < R

    origin = np.zeros(n, dtype=np.complex128)
    center = dist_generic(cfg.model(), origin, cfg.deleted_set()).value
    center_ok = abs(center - R) <= CENTER_TOL

    bmax = float(np.max(_deleted_set_distance(cfg, boundary)))
    return VerificationReport(
        covering_ok=bool(covering_ok),
        worst_gap=gap,
        feasibility_ok=bool(feasibility_ok),
        worst_feasibility=worst,
        center_value=center,
        center_ok=bool(center_ok),
        boundary_max=bmax,
        boundary_ok=bool(bmax < R),
        consistency_ok=bool(_consistent(cfg)),
        samples=samples,
        seed=seed,
    )


def config_field(cfg: Config):
    """The squeezing function of the configuration's domain as a scalar field for :mod:`psh`."""
    from .catalog import DomainKind, DomainSpec
    from .psh import Field

    model, deleted = cfg.model(), cfg.deleted_set()
    spec = DomainSpec(DomainKind.OMEGA_MINUS_SET, cfg.n, model=model, deleted=deleted)
    return Field(lambda z: dist_generic(model, z, deleted).value, spec, f"{cfg.kind.value}(r={cfg.r}, R={cfg.R})")
