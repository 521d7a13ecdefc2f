"""Sub-mean-value testing of scalar fields along complex discs.

A field that is plurisubharmonic satisfies u(c) <= mean of u over every
circle c + rho e^{i theta} v inside the domain. One violating disc is
enough to disprove plurisubharmonicity; nothing here tries to prove it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import sampling
from .catalog import DomainKind, DomainSpec, squeeze_omega_minus_set
from .core import Ball, as_cvector, norm
from .discs import disc_inside
from .set_distance import DEFAULT_BUDGET, SphereShellMinusCap, dist_numeric

DEFAULT_QUAD_N = 512
DEFAULT_TOL = 1e-6
DEFAULT_DIRECTIONS = 16


class DiscOutsideDomain(ValueError):
    pass


class CertificateError(RuntimeError):
    pass


@dataclass
class Field:
    evaluator: Callable[[np.ndarray], float]
    domain: object  # anything with ``contains(z) -> bool``
    label: str = ""

    def __call__(self, z) -> float:
        return float(self.evaluator(as_cvector(z)))


@dataclass
class Violation:
    center: np.ndarray
    direction: np.ndarray
    radius: float
    center_value: float
    circle_mean: float

    @property
    def deficit(self) -> float:
        return self.center_value - self.circle_mean

    def to_dict(self) -> dict:
        return {
            "center": [[float(c.real), float(c.imag)] for c in self.center],
            "direction": [[float(c.real), float(c.imag)] for c in self.direction],
            "radius": self.radius,
            "centerValue": self.center_value,
            "circleMean": self.circle_mean,
            "deficit": self.deficit,
        }


@dataclass
class PshReport:
    violations: list[Violation]
    scanned: int
    quad_n: int
    skipped: int = 0
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "violations": [v.to_dict() for v in self.violations],
            "scanned": self.scanned,
            "skipped": self.skipped,
            "quadratureN": self.quad_n,
            "checks": self.checks,
        }


def _disc_nodes(center, direction, radius, quad_n):
    center = as_cvector(center)
    direction = as_cvector(direction, len(center))
    if abs(norm(direction) - 1.0) > 1e-12:
        raise ValueError("direction must be a unit vector")
    if quad_n < 16 or quad_n % 2:
        raise ValueError("quadrature size must be even and at least 16")
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    theta = 2.0 * np.pi * np.arange(quad_n) / quad_n
    return center, direction, theta, center + radius * np.exp(1j * theta)[:, None] * direction


def circle_mean(f: Field, center, direction, radius: float, quad_n: int = DEFAULT_QUAD_N) -> float:
    """Trapezoidal mean of f over the circle center + radius e^{i theta} direction."""
    center, direction, theta, nodes = _disc_nodes(center, direction, radius, quad_n)
    inside = disc_inside(f.domain, center, direction, radius)
    if inside is False:
        raise DiscOutsideDomain(f"closed disc of radius {radius} leaves the domain")
    if inside is None:
        # unknown geometry: radial spokes through every node are the best available check
        for s in (0.5, 1.0):
            pts = center + s * (nodes - center)
            for th, w in zip(theta, pts):
                if not f.domain.contains(w):
                    raise DiscOutsideDomain(f"disc leaves the domain at theta={th:.6f} (radius fraction {s})")
    return float(np.mean([f(w) for w in nodes]))


def submean_check(f: Field, center, direction, radius: float, quad_n: int = DEFAULT_QUAD_N, tol: float = DEFAULT_TOL):
    """A :class:`Violation` if f(center) exceeds its circle mean by more than ``tol``, else None."""
    mean = circle_mean(f, center, direction, radius, quad_n)
    c = as_cvector(center)
    value = f(c)
    if value - mean > tol:
        return Violation(c.copy(), as_cvector(direction).copy(), float(radius), value, mean)
    return None


def scan_psh(
    f: Field,
    centers: Iterable | Callable[[np.random.Generator], Iterable],
    directions: int = DEFAULT_DIRECTIONS,
    radii: Iterable[float] = (0.1,),
    quad_n: int = DEFAULT_QUAD_N,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> PshReport:
    """Check every (center, random unit direction, radius) disc; infeasible discs are skipped and counted."""
    gen = sampling.rng(seed)
    pts = centers(gen) if callable(centers) else centers
    radii = list(radii)
    violations, scanned, skipped = [], 0, 0
    for c in pts:
        c = as_cvector(c)
        dirs = sampling.unit_sphere(gen, directions, len(c))
        for v in dirs:
            for rho in radii:
                try:
                    hit = submean_check(f, c, v, rho, quad_n, tol)
                except DiscOutsideDomain:
                    skipped += 1
                    continue
                scanned += 1
                if hit is not None:
                    violations.append(hit)
    return PshReport(violations, scanned, quad_n, skipped)


def capped_shell_domain(r: float, eps: float, n: int) -> DomainSpec:
    """B^n minus the sphere ||w|| = r with the cap B((0, ..., 0, r), eps) cut out."""
    if not (0.0 < r < 1.0):
        raise ValueError("need 0 < r < 1")
    if n < 2:
        raise ValueError("need n >= 2")
    if eps <= 0.0 or r + eps > 1.0:
        raise ValueError("need eps > 0 with the cap ball inside the unit ball (r + eps <= 1)")
    q = np.zeros(n, dtype=np.complex128)
    q[-1] = r
    return DomainSpec(DomainKind.OMEGA_MINUS_SET, n, model=Ball(n), deleted=SphereShellMinusCap(r, q, eps))


def capped_shell_field(r: float, eps: float, n: int, budget: int = DEFAULT_BUDGET) -> Field:
    spec = capped_shell_domain(r, eps, n)
    return Field(lambda z: squeeze_omega_minus_set(spec, z, budget), spec, f"ball minus capped shell r={r} eps={eps} n={n}")


def slice_value(r: float, z) -> float:
    """Squeezing function on the slice z_2 = ... = z_n = 0 inside the r-ball."""
    t = norm(as_cvector(z))
    return (r - t) / (1.0 - r * t)


def verify_capped_shell(
    r: float,
    eps: float,
    n: int,
    quad_n: int = DEFAULT_QUAD_N,
    radius: float | None = None,
    slice_points: int = 20,
    slice_tol: float = 2e-3,
    budget: int = DEFAULT_BUDGET,
) -> PshReport:
    """Certify that the squeezing function of the capped-shell complement is not psh.

    Checks the slice formula against the fully numerical set distance at
    ``slice_points`` points, then reports the sub-mean-value violation on
    the slice disc of ``radius`` (default r/2) centred at 0.
    """
    spec = capped_shell_domain(r, eps, n)
    f = capped_shell_field(r, eps, n, budget)
    gen = sampling.rng(41)
    moduli = np.linspace(0.0, 0.95 * r, slice_points)
    phases = 2.0 * np.pi * gen.random(slice_points)
    worst = 0.0
    for t, ph in zip(moduli, phases):
        z = np.zeros(n, dtype=np.complex128)
        z[0] = t * np.exp(1j * ph)
        numeric = dist_numeric(spec.model, z, spec.deleted, budget).value
        worst = max(worst, abs(numeric - slice_value(r, z)))
    if worst > slice_tol:
        raise CertificateError(f"slice formula off by {worst:.3e} > {slice_tol}")
    rho = r / 2 if radius is None else radius
    if not (0.0 < rho < r):
        raise ValueError("disc radius must lie in (0, r)")
    e1 = np.zeros(n, dtype=np.complex128)
    e1[0] = 1.0
    hit = submean_check(f, np.zeros(n, dtype=np.complex128), e1, rho, quad_n, DEFAULT_TOL)
    checks = {"slicePoints": slice_points, "sliceMaxError": worst, "sliceTol": slice_tol}
    return PshReport([] if hit is None else [hit], 1, quad_n, 0, checks)
