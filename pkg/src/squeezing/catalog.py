"""Squeezing functions and Fridman invariants with known closed forms or bounds.

Where the value is known exactly the squeezing function and the
Carathéodory-Fridman invariant coincide, so one function returns both.
Bounds-only results come back as an :class:`Interval`; treat them as
bounds, never as point estimates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .caratheodory import OutsideDomainError
from .core import ModelDomain, as_cvector, norm
from .set_distance import (
    DEFAULT_BUDGET,
    BoundarySet,
    HyperplaneArrangement,
    PointSet,
    PolydiskShell,
    SphereShell,
    SphereShellMinusCap,
    VerticalHyperplanes,
    _on_set,
    dist_generic,
    dist_polydisk_shell_in_ball,
    dist_sphere_in_polydisk,
)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi + 1e-15 and self.hi <= 1.0):
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


class DomainKind(str, enum.Enum):
    ANNULUS_BALL = "annulus-ball"
    POLYDISK_MINUS_POLYDISK = "polydisk-minus-polydisk"
    POLYDISK_MINUS_BALL = "polydisk-minus-ball"
    BALL_MINUS_POLYDISK = "ball-minus-polydisk"
    PUNCTURED_POLYDISK = "punctured-polydisk"
    PUNCTURED_DISK_TIMES_POLYDISK = "punctured-disk-times-polydisk"
    PUNCTURED_BALL_POLYDISK_MODEL = "punctured-ball-polydisk-model"
    PUNCTURED_DISK = "punctured-disk"
    ANNULUS_1D = "annulus-1d"
    OMEGA_MINUS_SET = "omega-minus-set"


_NEEDS_R = {
    DomainKind.ANNULUS_BALL,
    DomainKind.POLYDISK_MINUS_POLYDISK,
    DomainKind.POLYDISK_MINUS_BALL,
    DomainKind.BALL_MINUS_POLYDISK,
    DomainKind.ANNULUS_1D,
}


@dataclass(frozen=True)
class DomainSpec:
    kind: DomainKind
    n: int
    r: float | None = None
    model: ModelDomain | None = None
    deleted: BoundarySet | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", DomainKind(self.kind))
        k, n, r = self.kind, self.n, self.r
        if n < 1:
            raise ValueError("dimension must be positive")
        if k in _NEEDS_R and (r is None or not (0.0 < r < 1.0)):
            raise ValueError(f"{k.value} needs 0 < r < 1")
        if k in (DomainKind.PUNCTURED_DISK, DomainKind.ANNULUS_1D) and n != 1:
            raise ValueError(f"{k.value} is one-dimensional")
        if k is DomainKind.BALL_MINUS_POLYDISK and r >= 1.0 / math.sqrt(n):
            raise ValueError("ball minus polydisk needs 0 < r < 1/sqrt(n)")
        if k is DomainKind.OMEGA_MINUS_SET:
            if self.model is None or self.deleted is None:
                raise ValueError("omega-minus-set needs a model domain and a deleted set")
            if self.model.dim != n or self.deleted.dim != n:
                raise ValueError("model, deleted set and n disagree on dimension")

    def contains(self, z) -> bool:
        """Membership of a single point, boundary excluded."""
        z = as_cvector(z)
        if z.shape != (self.n,):
            return False
        k, r = self.kind, self.r
        t = norm(z)
        mx = float(np.max(np.abs(z)))
        if k is DomainKind.ANNULUS_BALL:
            return r < t < 1.0
        if k is DomainKind.POLYDISK_MINUS_POLYDISK:
            return r < mx < 1.0
        if k is DomainKind.POLYDISK_MINUS_BALL:
            return mx < 1.0 and t > r
        if k is DomainKind.BALL_MINUS_POLYDISK:
            return t < 1.0 and mx > r
        if k is DomainKind.PUNCTURED_POLYDISK:
            return 0.0 < mx < 1.0
        if k is DomainKind.PUNCTURED_DISK_TIMES_POLYDISK:
            return mx < 1.0 and z[0] != 0
        if k is DomainKind.PUNCTURED_BALL_POLYDISK_MODEL:
            return 0.0 < t < 1.0
        if k is DomainKind.PUNCTURED_DISK:
            return 0.0 < t < 1.0
        if k is DomainKind.ANNULUS_1D:
            return r < t < 1.0
        rho = t if self.model.is_ball else mx
        if rho >= 1.0:
            return False
        return not _on_set(self.model, z, self.deleted)


def _require(ok: bool, msg: str):
    if not ok:
        raise OutsideDomainError(msg)


def squeeze_annulus_ball(z, r: float) -> float:
    """Squeezing function of {r < ||z|| < 1}, n >= 2: (||z|| - r) / (1 - r||z||)."""
    z = as_cvector(z)
    _require(len(z) >= 2, "the n-dimensional annulus formula needs n >= 2")
    t = norm(z)
    _require(r < t < 1.0, f"point with norm {t} is not in the annulus r={r}")
    return (t - r) / (1.0 - r * t)


def squeeze_polydisk_minus_polydisk(z, r: float) -> float:
    """Generalized (polydisk-model) squeezing function of D^n minus the closed r-polydisk."""
    z = as_cvector(z)
    _require(len(z) >= 2, "needs n >= 2")
    a = np.abs(z)
    _require(r < a.max() < 1.0, "point must lie in D^n outside the closed r-polydisk")
    return float(np.max((np.maximum(a, r) - r) / (1.0 - r * a)))


def squeeze_polydisk_minus_ball(z, r: float, budget: int = DEFAULT_BUDGET) -> float:
    """Polydisk-model squeezing function of D^n minus the closed r-ball (numerical minimum)."""
    z = as_cvector(z)
    _require(np.abs(z).max() < 1.0 and norm(z) > r, "point must lie in D^n outside the closed r-ball")
    return dist_sphere_in_polydisk(z, r, budget).value


def squeeze_ball_minus_polydisk(z, r: float, budget: int = DEFAULT_BUDGET) -> float:
    """Squeezing function of B^n minus the closed r-polydisk, 0 < r < 1/sqrt(n) (numerical minimum)."""
    z = as_cvector(z)
    n = len(z)
    if not (0.0 < r < 1.0 / math.sqrt(n)):
        raise ValueError("needs 0 < r < 1/sqrt(n)")
    _require(norm(z) < 1.0 and np.abs(z).max() > r, "point must lie in B^n outside the closed r-polydisk")
    return dist_polydisk_shell_in_ball(z, r, budget).value


def squeeze_bounds_punctured_polydisk(z) -> Interval:
    """Two-sided bounds for the squeezing function of D^n minus the origin, n >= 2."""
    z = as_cvector(z)
    n = len(z)
    _require(n >= 2, "needs n >= 2")
    a = np.abs(z)
    _require(a.max() < 1.0, "point must lie in the unit polydisk")
    if not np.any(a > 0):
        raise OutsideDomainError("the origin is deleted")
    cap = 1.0 / math.sqrt(n)
    t = norm(z)
    if t >= 1.0:
        return Interval(cap, cap)
    hi = min(float(a.max()), cap)
    # lo <= hi exactly; clamp away rounding at equal moduli
    return Interval(min(t / math.sqrt(n), hi), hi)


def squeeze_bounds_punctured_disk_times_polydisk(z) -> Interval:
    """Bounds for the squeezing function of D* x D^(n-1)."""
    z = as_cvector(z)
    n = len(z)
    a = np.abs(z)
    _require(a.max() < 1.0, "point must lie in the unit polydisk")
    if z[0] == 0:
        raise OutsideDomainError("first coordinate must be nonzero")
    a1 = float(a[0])
    lo = a1 / math.sqrt(1.0 + (n - 1) * a1 * a1)
    hi = min(a1, 1.0 / math.sqrt(n))
    return Interval(lo, max(lo, hi))


def squeeze_punctured_ball_polydisk_model(z) -> float:
    """Polydisk-model squeezing function of B^n minus the origin: min(||z||, 1/sqrt(n))."""
    z = as_cvector(z)
    n = len(z)
    _require(n >= 2, "needs n >= 2")
    t = norm(z)
    _require(0.0 < t < 1.0, "point must lie in the punctured ball")
    return min(t, 1.0 / math.sqrt(n))


def squeeze_1d(kind: str, z, r: float | None = None) -> float:
    """Classical values: punctured disc |z|, annulus max(|z|, r/|z|), punctured ball ||z||."""
    z = as_cvector(z)
    t = norm(z)
    if kind == "punctured-disk":
        _require(len(z) == 1 and 0.0 < t < 1.0, "point must lie in the punctured disc")
        return t
    if kind == "annulus":
        if r is None or not (0.0 < r < 1.0):
            raise ValueError("annulus needs 0 < r < 1")
        _require(len(z) == 1 and r < t < 1.0, "point must lie in the annulus")
        return max(t, r / t)
    if kind == "punctured-ball":
        _require(0.0 < t < 1.0, "point must lie in the punctured ball")
        return t
    raise ValueError(f"unknown one-dimensional kind {kind!r}")


def fridman_equality_applies(model: ModelDomain, deleted: BoundarySet) -> bool:
    """Whether the squeezing function equals the Carathéodory-Fridman invariant for Omega minus S.

    Declarative: analytic sets, spherical shells (and pieces of them) and the
    polydisk shell inside the ball qualify; the Levi-flat polydisk shell in
    the polydisk only has the squeezing identity.
    """
    if isinstance(deleted, (HyperplaneArrangement, VerticalHyperplanes, PointSet)):
        return True
    if isinstance(deleted, (SphereShell, SphereShellMinusCap)):
        return True
    if isinstance(deleted, PolydiskShell):
        return model.is_ball
    return False


def squeeze_omega_minus_set(spec: DomainSpec, z, budget: int = DEFAULT_BUDGET) -> float:
    """Generalized squeezing function of Omega minus S, as the tanh c distance from z to S."""
    if spec.kind is not DomainKind.OMEGA_MINUS_SET:
        raise ValueError("expected an omega-minus-set domain")
    res = dist_generic(spec.model, z, spec.deleted, budget)
    if res.value == 0.0:
        raise OutsideDomainError("point lies on the deleted set")
    return res.value


def evaluate(spec: DomainSpec, z, budget: int = DEFAULT_BUDGET) -> float | Interval:
    """Dispatch a catalog entry by domain kind."""
    k, r = spec.kind, spec.r
    if k is DomainKind.ANNULUS_BALL:
        return squeeze_annulus_ball(z, r)
    if k is DomainKind.POLYDISK_MINUS_POLYDISK:
        return squeeze_polydisk_minus_polydisk(z, r)
    if k is DomainKind.POLYDISK_MINUS_BALL:
        return squeeze_polydisk_minus_ball(z, r, budget)
    if k is DomainKind.BALL_MINUS_POLYDISK:
        return squeeze_ball_minus_polydisk(z, r, budget)
    if k is DomainKind.PUNCTURED_POLYDISK:
        return squeeze_bounds_punctured_polydisk(z)
    if k is DomainKind.PUNCTURED_DISK_TIMES_POLYDISK:
        return squeeze_bounds_punctured_disk_times_polydisk(z)
    if k is DomainKind.PUNCTURED_BALL_POLYDISK_MODEL:
        return squeeze_punctured_ball_polydisk_model(z)
    if k is DomainKind.PUNCTURED_DISK:
        return squeeze_1d("punctured-disk", z)
    if k is DomainKind.ANNULUS_1D:
        return squeeze_1d("annulus", z, r)
    return squeeze_omega_minus_set(spec, z, budget)
