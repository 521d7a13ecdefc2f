"""Distance from a point to a compact deleted set, measured by tanh c.

``d^S(z) = min_{w in S} tanh c_Omega(z, w)`` is evaluated by a closed form
when one is known, by exact enumeration for finite sets and vertical
hyperplanes, and otherwise by grid seeding over a parameterization of S
followed by a shrinking compass search. :func:`grid_min_oracle` is an
independent brute-force upper bound used to check all of the above.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import optimize

from . import sampling
from .caratheodory import OutsideDomainError, ball_automorphism, tanh_c_unchecked
from .core import DimensionError, ModelDomain, as_cvector, norm

DEFAULT_BUDGET = 10_000
DEFAULT_ORACLE_SAMPLES = 100_000
ON_SET_TOL = 1e-12


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    GRID_REFINE = "grid_refine"
    SAMPLING = "sampling"


@dataclass
class MinimizerResult:
    value: float
    argmin: np.ndarray
    method: Method
    samples: int
    converged: bool = True

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "argmin": [[float(c.real), float(c.imag)] for c in self.argmin],
            "method": self.method.value,
            "samples": self.samples,
            "converged": self.converged,
        }


# --------------------------------------------------------------------------
# deleted sets


def _points_json(a: np.ndarray):
    return [[[float(c.real), float(c.imag)] for c in row] for row in np.atleast_2d(a)]


def _points_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class SphereShell:
    """The sphere ||w|| = r."""

    r: float
    dim: int
    kind = "sphere_shell"

    def __post_init__(self):
        if not (0.0 < self.r < 1.0):
            raise ValueError(f"shell radius must lie in (0, 1), got {self.r}")

    def to_json(self):
        return {"kind": self.kind, "r": self.r, "dim": self.dim}


@dataclass(frozen=True, eq=False)
class PolydiskShell:
    """The boundary max_i |w_i| = r of the polydisk of radius r."""

    r: float
    dim: int
    kind = "polydisk_shell"

    def __post_init__(self):
        if not (0.0 < self.r < 1.0):
            raise ValueError(f"shell radius must lie in (0, 1), got {self.r}")

    def to_json(self):
        return {"kind": self.kind, "r": self.r, "dim": self.dim}


@dataclass(frozen=True, eq=False)
class SphereShellMinusCap:
    """The sphere ||w|| = r with the open Euclidean ball B(cap_center, cap_radius) removed."""

    r: float
    cap_center: np.ndarray
    cap_radius: float
    kind = "sphere_shell_minus_cap"

    def __post_init__(self):
        if not (0.0 < self.r < 1.0):
            raise ValueError(f"shell radius must lie in (0, 1), got {self.r}")
        q = as_cvector(self.cap_center)
        object.__setattr__(self, "cap_center", q)
        if abs(norm(q) - self.r) > 1e-12:
            raise ValueError("cap center must lie on the shell")
        if self.cap_radius <= 0.0:
            raise ValueError("cap radius must be positive")
        # the antipode -Q is the point of the shell farthest from Q
        if self.cap_radius > 2.0 * self.r:
            raise ValueError("cap swallows the whole shell; residual set is empty")

    @property
    def dim(self) -> int:
        return self.cap_center.shape[0]

    def to_json(self):
        return {
            "kind": self.kind,
            "r": self.r,
            "cap_center": _points_json(self.cap_center)[0],
            "cap_radius": self.cap_radius,
        }


@dataclass(frozen=True, eq=False)
class HyperplaneArrangement:
    """Affine complex hyperplanes {w : <w - p_i, v_i> = 0}."""

    base_points: np.ndarray
    normals: np.ndarray
    kind = "hyperplanes"

    def __post_init__(self):
        p = np.atleast_2d(as_cvector(self.base_points))
        v = np.atleast_2d(as_cvector(self.normals))
        if p.shape != v.shape:
            raise DimensionError("base points and normals must have the same shape")
        if len(p) == 0:
            raise ValueError("empty hyperplane arrangement")
        if np.any(norm(v) == 0.0):
            raise ValueError("hyperplane normal must be nonzero")
        object.__setattr__(self, "base_points", p)
        object.__setattr__(self, "normals", v)

    @property
    def dim(self) -> int:
        return self.base_points.shape[1]

    def offsets(self) -> np.ndarray:
        """c_i = <p_i, v_i>, so that H_i = {w : <w, v_i> = c_i}."""
        return np.sum(self.base_points * np.conj(self.normals), axis=1)

    def to_json(self):
        return {
            "kind": self.kind,
            "base_points": _points_json(self.base_points),
            "normals": _points_json(self.normals),
        }


@dataclass(frozen=True, eq=False)
class VerticalHyperplanes:
    """Hyperplanes {w : w_1 = p_i}."""

    values: np.ndarray
    dim: int
    kind = "vertical_hyperplanes"

    def __post_init__(self):
        vals = np.atleast_1d(np.asarray(self.values, dtype=np.complex128))
        if vals.ndim != 1 or len(vals) == 0:
            raise ValueError("need a nonempty list of first-coordinate values")
        object.__setattr__(self, "values", vals)

    def as_arrangement(self) -> HyperplaneArrangement:
        m = len(self.values)
        base = np.zeros((m, self.dim), dtype=np.complex128)
        base[:, 0] = self.values
        normal = np.zeros((m, self.dim), dtype=np.complex128)
        normal[:, 0] = 1.0
        return HyperplaneArrangement(base, normal)

    def to_json(self):
        return {"kind": self.kind, "values": [[float(c.real), float(c.imag)] for c in self.values], "dim": self.dim}


@dataclass(frozen=True, eq=False)
class PointSet:
    points: np.ndarray
    kind = "points"

    def __post_init__(self):
        pts = np.atleast_2d(as_cvector(self.points))
        if len(pts) == 0:
            raise ValueError("empty point set")
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def to_json(self):
        return {"kind": self.kind, "points": _points_json(self.points)}


BoundarySet = SphereShell | PolydiskShell | SphereShellMinusCap | HyperplaneArrangement | VerticalHyperplanes | PointSet


def boundary_set_from_json(doc: dict) -> BoundarySet:
    kind = doc["kind"]
    if kind == "sphere_shell":
        return SphereShell(doc["r"], doc["dim"])
    if kind == "polydisk_shell":
        return PolydiskShell(doc["r"], doc["dim"])
    if kind == "sphere_shell_minus_cap":
        return SphereShellMinusCap(doc["r"], _points_from_json([doc["cap_center"]])[0], doc["cap_radius"])
    if kind == "hyperplanes":
        return HyperplaneArrangement(_points_from_json(doc["base_points"]), _points_from_json(doc["normals"]))
    if kind == "vertical_hyperplanes":
        return VerticalHyperplanes(np.array([complex(a, b) for a, b in doc["values"]]), doc["dim"])
    if kind == "points":
        return PointSet(_points_from_json(doc["points"]))
    raise ValueError(f"unknown boundary set kind {kind!r}")


def _mobius_abs(a, b):
    """|a - b| / |1 - conj(b) a| for complex scalars or arrays."""
    return np.abs((a - b) / (1.0 - np.conj(b) * a))


def _mobius_moduli(s, t):
    """Möbius distance between two nonnegative moduli on a common ray."""
    return np.abs(s - t) / (1.0 - s * t)


def _aligned(z: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Put moduli ``t`` on the rays of the coordinates of ``z`` (phase 0 where z_i = 0)."""
    # angle() rather than z/|z|: stays finite for subnormal coordinates
    return t * np.exp(1j * np.angle(z))


# --------------------------------------------------------------------------
# grid seeding + compass search


@dataclass
class Chart:
    """Box-shaped parameter domain mapped onto (part of) a set."""

    lo: np.ndarray
    hi: np.ndarray
    periodic: np.ndarray
    to_points: Callable[[np.ndarray], np.ndarray]
    feasible: Callable[[np.ndarray], np.ndarray] | None = None

    @property
    def dim(self) -> int:
        return len(self.lo)

    def grid(self, count: int):
        k = self.dim
        if k == 0:
            return np.zeros((1, 0)), np.zeros(0)
        per = max(2, int(math.floor(count ** (1.0 / k) + 1e-9)))
        axes, steps = [], []
        for lo, hi, wrap in zip(self.lo, self.hi, self.periodic):
            if wrap:
                step = (hi - lo) / per
                axes.append(lo + step * np.arange(per))
            else:
                step = (hi - lo) / (per - 1)
                axes.append(np.linspace(lo, hi, per))
            steps.append(step)
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=1), np.array(steps)

    def clip(self, x: np.ndarray) -> np.ndarray:
        span = self.hi - self.lo
        wrapped = self.lo + np.mod(x - self.lo, np.where(span > 0, span, 1.0))
        return np.where(self.periodic, wrapped, np.clip(x, self.lo, self.hi))


def _directions(k: int) -> np.ndarray:
    """Compass directions: the nonzero points of {-2..2}^k for k <= 3, of {-1,0,1}^k up to k = 5."""
    if k > 5:
        eye = np.eye(k)
        return np.concatenate([eye, -eye])
    span = (-2, -1, 0, 1, 2) if k <= 3 else (-1, 0, 1)
    dirs = np.array([d for d in itertools.product(span, repeat=k) if any(d)], dtype=float)
    # drop duplicates of the same ray, keep the shortest representative
    keep, seen = [], set()
    for d in sorted(dirs, key=lambda d: np.abs(d).max()):
        key = tuple(np.round(d / np.linalg.norm(d), 12))
        if key not in seen:
            seen.add(key)
            keep.append(d)
    return np.array(keep)


def _chart_values(chart: Chart, objective, params: np.ndarray) -> np.ndarray:
    pts = chart.to_points(params)
    vals = np.asarray(objective(pts), dtype=float)
    if chart.feasible is not None:
        vals = np.where(chart.feasible(pts), vals, np.inf)
    return vals


def _compass(chart: Chart, objective, x0, f0, steps, rounds, shrink, tol, max_iter):
    k = chart.dim
    x, fx = x0.copy(), f0
    if k == 0:
        return x, fx, 0, True
    base = _directions(k)
    # fresh random rotations of the stencil let the search follow ridges of
    # max-type objectives that no fixed stencil direction is aligned with
    gen = sampling.rng(k)
    h = 0.5 * steps
    evals = 0
    last_gain = np.inf
    for rnd in range(rounds):
        start = fx
        misses = 0
        for _ in range(max_iter):
            dirs = base if misses == 0 else base @ sampling.orthogonal(gen, k).T
            cand = chart.clip(x + dirs * h)
            vals = _chart_values(chart, objective, cand)
            evals += len(cand)
            i = int(np.argmin(vals))
            if vals[i] < fx:
                x, fx = cand[i], float(vals[i])
                misses = 0
            else:
                misses += 1
                if misses > 4:
                    break
        last_gain = start - fx
        h = h * shrink
        if rnd >= 2 and last_gain < tol:
            break
    return x, fx, evals, bool(last_gain <= 1e-6)


def minimize_over_charts(
    objective,
    charts: Sequence[Chart],
    budget: int = DEFAULT_BUDGET,
    *,
    rounds: int = 6,
    shrink: float = 0.1,
    tol: float = 1e-9,
    max_iter: int = 400,
    starts: int = 3,
    polish: bool = True,
):
    """Grid-seed every chart, compass-search from the best few seeds, then
    polish the winner with Nelder-Mead.

    Returns ``(point, value, evaluations, converged)``.
    """
    per_chart = max(1, budget // len(charts))
    seeds = []
    evals = 0
    for ci, chart in enumerate(charts):
        params, steps = chart.grid(per_chart)
        vals = _chart_values(chart, objective, params)
        evals += len(params)
        order = np.argsort(vals, kind="stable")[:starts]
        seeds.extend((float(vals[i]), ci, params[i], steps) for i in order if np.isfinite(vals[i]))
    if not seeds:
        raise ValueError("no feasible grid point on the set")
    seeds.sort(key=lambda s: (s[0], s[1]))
    best = None
    for f0, ci, x0, steps in seeds[:starts]:
        chart = charts[ci]
        x, fx, e, conv = _compass(chart, objective, x0, f0, steps, rounds, shrink, tol, max_iter)
        evals += e
        if best is None or fx < best[2]:
            best = (ci, x, fx, conv, steps)
    ci, x, fx, conv, steps = best
    if polish and charts[ci].dim > 0:
        x, fx, e = _nelder_mead(charts[ci], objective, x, fx, steps)
        evals += e
    return charts[ci].to_points(x[None, :])[0], fx, evals, conv


def _nelder_mead(chart: Chart, objective, x0, f0, steps):
    """Simplex polish; unlike a fixed stencil it can turn to follow a ridge."""

    def f(x):
        return float(_chart_values(chart, objective, chart.clip(x)[None, :])[0])

    k = chart.dim
    simplex = np.vstack([x0, x0 + np.diag(0.5 * steps)])
    res = optimize.minimize(
        f,
        x0,
        method="Nelder-Mead",
        options={"initial_simplex": simplex, "xatol": 1e-12, "fatol": 1e-15, "maxfev": 400 * k, "adaptive": k > 2},
    )
    if res.fun < f0:
        return chart.clip(res.x), float(res.fun), res.nfev
    return x0, f0, res.nfev


_moduli_on_sphere = sampling.moduli_on_sphere


def sphere_moduli_chart(n: int, r: float) -> Chart:
    return Chart(
        lo=np.zeros(n - 1),
        hi=np.full(n - 1, np.pi / 2),
        periodic=np.zeros(n - 1, dtype=bool),
        to_points=lambda a: r * _moduli_on_sphere(a, n),
    )


def polydisk_moduli_charts(n: int, r: float) -> list[Chart]:
    """One chart per face {t_j = r} of the shell of [0, r]^n."""

    def face(j):
        def to_points(x):
            t = np.insert(x, j, r, axis=-1)
            return t

        return Chart(np.zeros(n - 1), np.full(n - 1, r), np.zeros(n - 1, dtype=bool), to_points)

    return [face(j) for j in range(n)]


def sphere_chart(n: int, r: float, feasible=None) -> Chart:
    """Moduli angles followed by one phase per coordinate (real dimension 2n - 1)."""

    def to_points(x):
        t = _moduli_on_sphere(x[..., : n - 1], n)
        return r * t * np.exp(1j * x[..., n - 1 :])

    k = 2 * n - 1
    periodic = np.zeros(k, dtype=bool)
    periodic[n - 1 :] = True
    hi = np.concatenate([np.full(n - 1, np.pi / 2), np.full(n, 2 * np.pi)])
    return Chart(np.zeros(k), hi, periodic, to_points, feasible)


def polydisk_shell_charts(n: int, r: float, feasible=None) -> list[Chart]:
    """Face j: phase of w_j, then (modulus, phase) of each other coordinate."""

    def face(j):
        others = [i for i in range(n) if i != j]

        def to_points(x):
            w = np.empty(x.shape[:-1] + (n,), dtype=np.complex128)
            w[..., j] = r * np.exp(1j * x[..., 0])
            for k, i in enumerate(others):
                w[..., i] = x[..., 1 + 2 * k] * np.exp(1j * x[..., 2 + 2 * k])
            return w

        dim = 1 + 2 * (n - 1)
        lo = np.zeros(dim)
        hi = np.array([2 * np.pi] + [r, 2 * np.pi] * (n - 1))
        periodic = np.array([True] + [False, True] * (n - 1))
        return Chart(lo, hi, periodic, to_points, feasible)

    return [face(j) for j in range(n)]


def hyperplane_charts(d: ModelDomain, planes: HyperplaneArrangement) -> list[Chart]:
    """Each plane as foot-of-perpendicular + box in an orthonormal basis of v^perp, masked to Omega."""
    n = d.dim
    charts = []
    half = 1.0 if d.is_ball else math.sqrt(n)
    for p, v, c in zip(planes.base_points, planes.normals, planes.offsets()):
        foot = c * v / np.vdot(v, v).real
        basis = sampling.orthonormal_complement(v)

        def to_points(x, foot=foot, basis=basis):
            coeff = x[..., 0::2] + 1j * x[..., 1::2]
            return foot + coeff @ basis.T

        def feasible(w):
            if d.is_ball:
                return norm(w) < 1.0
            return np.max(np.abs(w), axis=-1) < 1.0

        k = 2 * (n - 1)
        charts.append(Chart(np.full(k, -half), np.full(k, half), np.zeros(k, dtype=bool), to_points, feasible))
    return charts


# --------------------------------------------------------------------------
# closed forms and specialised minimizers


def _check_point(d: ModelDomain, z) -> np.ndarray:
    z = as_cvector(z)
    if z.ndim != 1:
        raise DimensionError("expected a single point")
    if z.shape[0] != d.dim:
        raise DimensionError(f"{d} expects dimension {d.dim}, got {z.shape[0]}")
    rho = norm(z) if d.is_ball else float(np.max(np.abs(z)))
    if rho >= 1.0:
        raise OutsideDomainError(f"point lies outside the open unit {d.kind.value}")
    return z


def dist_sphere_in_ball(z, r: float) -> float:
    """tanh c distance from z to the sphere ||w|| = r inside B^n: |‖z‖ - r| / (1 - r‖z‖)."""
    z = as_cvector(z)
    if not (0.0 < r < 1.0):
        raise ValueError(f"r must lie in (0, 1), got {r}")
    t = norm(z)
    if t >= 1.0:
        raise OutsideDomainError("point lies outside the open unit ball")
    if abs(t - r) <= ON_SET_TOL:
        return 0.0
    return abs(t - r) / (1.0 - r * t)


def _polydisk_shell_closed_form(z: np.ndarray, r: float) -> float:
    a = np.abs(z)
    return float(np.max((np.maximum(a, r) - r) / (1.0 - r * a)))


def dist_polydisk_shell_in_polydisk(z, r: float, budget: int = DEFAULT_BUDGET) -> float:
    """tanh c distance inside D^n from z to the shell max|w_i| = r.

    Closed form when z lies outside the closed r-polydisk; a moduli-space
    grid search otherwise.
    """
    return _polydisk_shell_in_polydisk(as_cvector(z), r, budget).value


def _polydisk_shell_in_polydisk(z: np.ndarray, r: float, budget: int) -> MinimizerResult:
    if not (0.0 < r < 1.0):
        raise ValueError(f"r must lie in (0, 1), got {r}")
    a = np.abs(z)
    if np.max(a) >= 1.0:
        raise OutsideDomainError("point lies outside the open unit polydisk")
    if abs(np.max(a) - r) <= ON_SET_TOL:
        return MinimizerResult(0.0, z.copy(), Method.CLOSED_FORM, 0)
    if np.max(a) > r:
        w = _aligned(z, np.minimum(a, r))
        return MinimizerResult(_polydisk_shell_closed_form(z, r), w, Method.CLOSED_FORM, 0)
    n = len(z)

    def objective(t):
        return np.max(_mobius_moduli(a, t), axis=-1)

    t, _, evals, conv = minimize_over_charts(objective, polydisk_moduli_charts(n, r), budget)
    w = _aligned(z, t)
    return MinimizerResult(float(tanh_c_unchecked(ModelDomain("polydisk", n), z, w)), w, Method.GRID_REFINE, evals, conv)


def dist_sphere_in_polydisk(z, r: float, budget: int = DEFAULT_BUDGET) -> MinimizerResult:
    """Minimum over ||w|| = r of tanh c_{D^n}(z, w), searched over the moduli of w."""
    if budget < 1000:
        raise ValueError("budget must be at least 1000")
    if not (0.0 < r < 1.0):
        raise ValueError(f"r must lie in (0, 1), got {r}")
    z = as_cvector(z)
    a = np.abs(z)
    if np.max(a) >= 1.0:
        raise OutsideDomainError("point lies outside the open unit polydisk")
    n = len(z)
    if abs(norm(z) - r) <= ON_SET_TOL:
        return MinimizerResult(0.0, z.copy(), Method.CLOSED_FORM, 0)

    def objective(t):
        return np.max(_mobius_moduli(a, t), axis=-1)

    t, _, evals, conv = minimize_over_charts(objective, [sphere_moduli_chart(n, r)], budget)
    w = _aligned(z, t)
    return MinimizerResult(float(tanh_c_unchecked(ModelDomain("polydisk", n), z, w)), w, Method.GRID_REFINE, evals, conv)


def dist_polydisk_shell_in_ball(z, r: float, budget: int = DEFAULT_BUDGET) -> MinimizerResult:
    """Minimum over max|w_i| = r of tanh c_{B^n}(z, w), searched over the moduli of w."""
    if budget < 1000:
        raise ValueError("budget must be at least 1000")
    z = as_cvector(z)
    n = len(z)
    if not (0.0 < r < 1.0 / math.sqrt(n)):
        raise ValueError(f"r must lie in (0, 1/sqrt(n)) so the closed r-polydisk sits in the ball, got {r}")
    if norm(z) >= 1.0:
        raise OutsideDomainError("point lies outside the open unit ball")
    a = np.abs(z)
    if abs(np.max(a) - r) <= ON_SET_TOL:
        return MinimizerResult(0.0, z.copy(), Method.CLOSED_FORM, 0)
    zz = float(np.sum(a**2))

    def objective(t):
        ww = np.sum(t**2, axis=-1)
        s = np.sum(a * t, axis=-1)
        inner = 1.0 - (1.0 - ww) * (1.0 - zz) / (1.0 - s) ** 2
        return np.sqrt(np.clip(inner, 0.0, 1.0))

    t, _, evals, conv = minimize_over_charts(objective, polydisk_moduli_charts(n, r), budget)
    w = _aligned(z, t)
    return MinimizerResult(float(tanh_c_unchecked(ModelDomain("ball", n), z, w)), w, Method.GRID_REFINE, evals, conv)


def _hyperplane_in_ball(z: np.ndarray, v: np.ndarray, c: complex):
    """Exact nearest point of {<w, v> = c} ∩ B^n to z in the Carathéodory metric.

    The automorphism exchanging z and 0 maps the plane to {<u, v'> = c'}
    with v' = A v - conj(c) z, c' = <z, v> - c (A = P_z + sqrt(1-|z|^2) Q_z),
    and tanh c(z, .) becomes the Euclidean norm, so the nearest point is
    the foot of the perpendicular from 0.
    """
    zz = float(np.vdot(z, z).real)
    if zz == 0.0:
        vp, cp = v, c
    else:
        s = math.sqrt(1.0 - zz)
        pv = (np.vdot(z, v) / zz) * z
        vp = pv + s * (v - pv) - np.conj(c) * z
        cp = np.sum(z * np.conj(v)) - c
    nv = float(np.vdot(vp, vp).real)
    if nv == 0.0:
        return np.inf, None
    dist = abs(cp) / math.sqrt(nv)
    if dist >= 1.0:
        return np.inf, None
    foot = (cp / nv) * vp
    return dist, ball_automorphism(z, foot)


def dist_hyperplanes_in_ball(z, planes: HyperplaneArrangement) -> MinimizerResult:
    """min over i and w in H_i ∩ B^n of tanh c_{B^n}(z, w), exactly."""
    z = as_cvector(z)
    if norm(z) >= 1.0:
        raise OutsideDomainError("point lies outside the open unit ball")
    if planes.dim != len(z):
        raise DimensionError("plane and point dimensions differ")
    offsets = planes.offsets()
    nv = norm(planes.normals)
    if np.any(np.abs(offsets) / nv >= 1.0):
        raise ValueError("every hyperplane must meet the open unit ball")
    best, arg = np.inf, None
    for v, c in zip(planes.normals, offsets):
        if abs(np.sum(z * np.conj(v)) - c) <= ON_SET_TOL * norm(v):
            return MinimizerResult(0.0, z.copy(), Method.CLOSED_FORM, len(offsets))
        dist, w = _hyperplane_in_ball(z, v, c)
        if dist < best:
            best, arg = dist, w
    return MinimizerResult(float(best), arg, Method.CLOSED_FORM, len(offsets))


# --------------------------------------------------------------------------
# dispatch


def _on_set(d: ModelDomain, z: np.ndarray, s: BoundarySet) -> bool:
    if isinstance(s, SphereShell):
        return abs(norm(z) - s.r) <= ON_SET_TOL
    if isinstance(s, PolydiskShell):
        return abs(float(np.max(np.abs(z))) - s.r) <= ON_SET_TOL
    if isinstance(s, SphereShellMinusCap):
        return abs(norm(z) - s.r) <= ON_SET_TOL and norm(z - s.cap_center) >= s.cap_radius
    if isinstance(s, HyperplaneArrangement):
        res = np.abs(np.sum(z * np.conj(s.normals), axis=1) - s.offsets())
        return bool(np.any(res <= ON_SET_TOL * norm(s.normals)))
    if isinstance(s, VerticalHyperplanes):
        return bool(np.any(np.abs(z[0] - s.values) <= ON_SET_TOL))
    if isinstance(s, PointSet):
        return bool(np.any(norm(s.points - z) <= ON_SET_TOL))
    raise TypeError(f"unsupported boundary set {type(s).__name__}")


def _validate_set(d: ModelDomain, s: BoundarySet):
    if s.dim != d.dim:
        raise DimensionError(f"set has dimension {s.dim}, domain {d}")
    if isinstance(s, PolydiskShell) and d.is_ball and s.r >= 1.0 / math.sqrt(d.dim):
        raise ValueError("polydisk shell of radius >= 1/sqrt(n) leaves the ball")
    if isinstance(s, PointSet):
        rho = norm(s.points) if d.is_ball else np.max(np.abs(s.points), axis=1)
        if np.any(rho >= 1.0):
            raise ValueError("every point of the set must lie in the domain")
    if isinstance(s, VerticalHyperplanes) and np.any(np.abs(s.values) >= 1.0):
        raise ValueError("vertical hyperplanes must meet the domain")
    if isinstance(s, HyperplaneArrangement) and d.is_ball:
        if np.any(np.abs(s.offsets()) / norm(s.normals) >= 1.0):
            raise ValueError("every hyperplane must meet the open unit ball")


def dist_generic(d: ModelDomain, z, s: BoundarySet, budget: int = DEFAULT_BUDGET) -> MinimizerResult:
    """Distance d^S(z) with the best available method for the (domain, set) pair."""
    if budget < 1000:
        raise ValueError("budget must be at least 1000")
    z = _check_point(d, z)
    _validate_set(d, s)
    if _on_set(d, z, s):
        return MinimizerResult(0.0, z.copy(), Method.CLOSED_FORM, 0)
    n = d.dim

    if isinstance(s, PointSet):
        vals = tanh_c_unchecked(d, z[None, :], s.points)
        i = int(np.argmin(vals))
        return MinimizerResult(float(vals[i]), s.points[i].copy(), Method.CLOSED_FORM, len(vals))

    if isinstance(s, VerticalHyperplanes):
        if d.is_ball:
            return dist_hyperplanes_in_ball(z, s.as_arrangement())
        vals = _mobius_abs(z[0], s.values)
        i = int(np.argmin(vals))
        w = z.copy()
        w[0] = s.values[i]
        return MinimizerResult(float(vals[i]), w, Method.CLOSED_FORM, len(vals))

    if isinstance(s, HyperplaneArrangement):
        if d.is_ball:
            return dist_hyperplanes_in_ball(z, s)
        charts = hyperplane_charts(d, s)
        return _grid_refine(d, z, charts, budget)

    if isinstance(s, SphereShell):
        if d.is_ball:
            t = norm(z)
            w = s.r * z / t if t > 0 else np.eye(n, dtype=np.complex128)[0] * s.r
            return MinimizerResult(dist_sphere_in_ball(z, s.r), w, Method.CLOSED_FORM, 0)
        return dist_sphere_in_polydisk(z, s.r, budget)

    if isinstance(s, PolydiskShell):
        if d.is_ball:
            return dist_polydisk_shell_in_ball(z, s.r, budget)
        return _polydisk_shell_in_polydisk(z, s.r, budget)

    if isinstance(s, SphereShellMinusCap):
        full = dist_generic(d, z, SphereShell(s.r, n), budget)
        if norm(full.argmin - s.cap_center) >= s.cap_radius:
            # a minimizer over the whole shell survives the cap removal
            return full
        return dist_numeric(d, z, s, budget)

    raise TypeError(f"unsupported boundary set {type(s).__name__}")


def set_charts(d: ModelDomain, s: BoundarySet) -> list[Chart]:
    """Full-coordinate parameterizations of a continuous set."""
    n = d.dim
    if isinstance(s, SphereShell):
        return [sphere_chart(n, s.r)]
    if isinstance(s, PolydiskShell):
        return polydisk_shell_charts(n, s.r)
    if isinstance(s, SphereShellMinusCap):
        q, eps = s.cap_center, s.cap_radius
        return [sphere_chart(n, s.r, lambda w: norm(w - q) >= eps)]
    if isinstance(s, HyperplaneArrangement):
        return hyperplane_charts(d, s)
    if isinstance(s, VerticalHyperplanes):
        return hyperplane_charts(d, s.as_arrangement())
    raise TypeError(f"no continuous parameterization for {type(s).__name__}")


def dist_numeric(d: ModelDomain, z, s: BoundarySet, budget: int = DEFAULT_BUDGET) -> MinimizerResult:
    """Grid seeding + local refinement over the full parameterization of S, no shortcuts."""
    z = _check_point(d, z)
    _validate_set(d, s)
    return _grid_refine(d, z, set_charts(d, s), budget)


def _grid_refine(d: ModelDomain, z: np.ndarray, charts: list[Chart], budget: int) -> MinimizerResult:
    def objective(w):
        return tanh_c_unchecked(d, z, w)

    w, _, evals, conv = minimize_over_charts(objective, charts, budget)
    return MinimizerResult(float(tanh_c_unchecked(d, z, w)), w, Method.GRID_REFINE, evals, conv)


# --------------------------------------------------------------------------
# brute-force oracle


def sample_set(s: BoundarySet, d: ModelDomain, count: int, seed: int = 0) -> np.ndarray:
    """About ``count`` points of S, deterministic in ``seed``.

    Shells get a randomly rotated quasi-uniform lattice (at most ``count``
    points), hyperplanes get random points, point sets are returned whole.
    """
    gen = sampling.rng(seed)
    n = d.dim
    if isinstance(s, PointSet):
        return s.points.copy()
    if isinstance(s, SphereShell):
        return s.r * sampling.sphere_lattice(gen, count, n)
    if isinstance(s, PolydiskShell):
        return sampling.polydisk_shell_lattice(gen, count, n, s.r)
    if isinstance(s, SphereShellMinusCap):
        w = s.r * sampling.sphere_lattice(gen, count, n)
        return w[norm(w - s.cap_center) >= s.cap_radius]
    if isinstance(s, VerticalHyperplanes):
        m = len(s.values)
        idx = np.arange(count) % m
        w = np.empty((count, n), dtype=np.complex128)
        w[:, 0] = s.values[idx]
        if n > 1:
            if d.is_ball:
                rad = np.sqrt(1.0 - np.abs(w[:, :1]) ** 2)
                w[:, 1:] = sampling.solid_ball(gen, count, n - 1) * rad
            else:
                w[:, 1:] = sampling.disk(gen, (count, n - 1))
        return w
    if isinstance(s, HyperplaneArrangement):
        m = len(s.base_points)
        per = max(1, count // m)
        chunks = []
        for v, c in zip(s.normals, s.offsets()):
            foot = c * v / np.vdot(v, v).real
            basis = sampling.orthonormal_complement(v)
            if d.is_ball:
                rad = math.sqrt(max(0.0, 1.0 - norm(foot) ** 2))
                coeff = sampling.solid_ball(gen, per, n - 1, rad) if n > 1 else np.zeros((per, 0))
                chunks.append(foot + coeff @ basis.T)
            else:
                got, have = [], 0
                while have < per:
                    coeff = sampling.solid_ball(gen, per, n - 1, math.sqrt(n)) if n > 1 else np.zeros((per, 0))
                    w = foot + coeff @ basis.T
                    w = w[np.max(np.abs(w), axis=1) < 1.0]
                    got.append(w)
                    have += len(w)
                chunks.append(np.concatenate(got)[:per])
        return np.concatenate(chunks)
    raise TypeError(f"unsupported boundary set {type(s).__name__}")


def grid_min_oracle(d: ModelDomain, z, s: BoundarySet, samples: int = DEFAULT_ORACLE_SAMPLES, seed: int = 0) -> float:
    """Brute force: min of tanh c(z, w) over about ``samples`` points of S.

    Always an upper bound for the true distance; exact for point sets.
    """
    if samples < 1000:
        raise ValueError("oracle needs at least 1000 samples")
    z = as_cvector(z, d.dim)
    w = sample_set(s, d, samples, seed)
    best = np.inf
    for chunk in np.array_split(w, max(1, len(w) // 20000)):
        best = min(best, float(np.min(tanh_c_unchecked(d, z[None, :], chunk))))
    return best
