"""Exact containment of closed complex discs c + zeta v, |zeta| <= rho, in catalog domains.

Point sampling cannot see a disc crossing a thin deleted set (a shell, a
hyperplane, a point), so membership is decided from the geometry instead.
With v a unit vector, ||c + zeta v||^2 = |zeta + beta|^2 + h^2 where
beta = <c, v> and h^2 = ||c||^2 - |beta|^2, which gives the extreme norms
over the disc in closed form.
"""

from __future__ import annotations

import numpy as np

from .catalog import DomainKind, DomainSpec
from .core import ModelDomain, as_cvector, norm
from .set_distance import (
    HyperplaneArrangement,
    PointSet,
    PolydiskShell,
    SphereShell,
    SphereShellMinusCap,
    VerticalHyperplanes,
)

TOUCH_TOL = 1e-12  # a disc this close to a thin set counts as meeting it
ARC_NODES = 4096
GOLDEN_STEPS = 64

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def _golden(f, a: float, b: float) -> float:
    """Minimum value of a convex function on [a, b] (endpoints included)."""
    best = min(f(a), f(b))
    x1, x2 = b - _INVPHI * (b - a), a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(GOLDEN_STEPS):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    return min(best, f1, f2)


class Disc:
    def __init__(self, center, direction, radius: float):
        self.c = as_cvector(center)
        self.v = as_cvector(direction, len(self.c))
        self.rho = float(radius)
        self.beta = complex(np.vdot(self.v, self.c))
        self.h2 = max(norm(self.c) ** 2 - abs(self.beta) ** 2, 0.0)

    def point(self, zeta):
        return self.c + np.multiply.outer(zeta, self.v)

    def norm_range(self) -> tuple[float, float]:
        b = abs(self.beta)
        lo = np.sqrt(self.h2 + max(b - self.rho, 0.0) ** 2)
        hi = np.sqrt(self.h2 + (b + self.rho) ** 2)
        return float(lo), float(hi)

    def max_modulus_hi(self) -> float:
        return float(np.max(np.abs(self.c) + self.rho * np.abs(self.v)))

    def max_modulus_range(self) -> tuple[float, float]:
        return self._min_max_modulus(), self.max_modulus_hi()

    def _min_max_modulus(self) -> float:
        # max_i |c_i + zeta v_i| is convex on the convex disc, and so is its partial
        # minimum over y; nested golden-section search therefore finds the global minimum
        c, v, rho = self.c, self.v, self.rho

        def g(x, y):
            return float(np.max(np.abs(c + complex(x, y) * v)))

        def inner(x):
            half = np.sqrt(max(rho * rho - x * x, 0.0))
            return _golden(lambda y: g(x, y), -half, half)

        return _golden(inner, -rho, rho)

    def hits_affine_zero(self, a: complex, b: complex) -> bool:
        """Does a + zeta b vanish somewhere on the disc?"""
        if abs(b) <= TOUCH_TOL:
            return abs(a) <= TOUCH_TOL
        return abs(a / b) <= self.rho + TOUCH_TOL


def _meets_set(disc: Disc, s) -> bool:
    if isinstance(s, SphereShell):
        lo, hi = disc.norm_range()
        return lo - TOUCH_TOL <= s.r <= hi + TOUCH_TOL
    if isinstance(s, PolydiskShell):
        lo, hi = disc.max_modulus_range()
        return lo - TOUCH_TOL <= s.r <= hi + TOUCH_TOL
    if isinstance(s, SphereShellMinusCap):
        lo, hi = disc.norm_range()
        if not (lo - TOUCH_TOL <= s.r <= hi + TOUCH_TOL):
            return False
        # the shell cuts the zeta-plane in the circle |zeta + beta| = sqrt(r^2 - h^2)
        t = np.sqrt(max(s.r**2 - disc.h2, 0.0))
        zeta = -disc.beta + t * np.exp(2j * np.pi * np.arange(ARC_NODES) / ARC_NODES)
        zeta = zeta[np.abs(zeta) <= disc.rho + TOUCH_TOL]
        if len(zeta) == 0:  # tangential touch between nodes
            return True
        return bool(np.any(norm(disc.point(zeta) - s.cap_center) >= s.cap_radius))
    if isinstance(s, VerticalHyperplanes):
        return _meets_set(disc, s.as_arrangement())
    if isinstance(s, HyperplaneArrangement):
        for p, nu in zip(s.base_points, s.normals):
            nu = nu / norm(nu)
            if disc.hits_affine_zero(np.vdot(nu, disc.c - p), np.vdot(nu, disc.v)):
                return True
        return False
    if isinstance(s, PointSet):
        for p in s.points:
            coef = complex(np.vdot(disc.v, p - disc.c))
            if abs(coef) <= disc.rho + TOUCH_TOL and norm(p - disc.c - coef * disc.v) <= TOUCH_TOL:
                return True
        return False
    raise TypeError(f"unsupported boundary set {type(s).__name__}")


def _in_model(disc: Disc, ball: bool) -> bool:
    # convex model: the closed disc is inside iff its largest modulus is
    hi = disc.norm_range()[1] if ball else disc.max_modulus_hi()
    return hi < 1.0


def disc_inside(domain, center, direction, radius: float) -> bool | None:
    """Whether the closed disc lies in ``domain``; None when the domain type is not understood."""
    disc = Disc(center, direction, radius)
    if isinstance(domain, ModelDomain):
        return len(disc.c) == domain.dim and _in_model(disc, domain.is_ball)
    if not isinstance(domain, DomainSpec):
        return None
    if len(disc.c) != domain.n:
        return False
    k, r = domain.kind, domain.r
    ball_models = {
        DomainKind.ANNULUS_BALL, DomainKind.BALL_MINUS_POLYDISK,
        DomainKind.PUNCTURED_BALL_POLYDISK_MODEL, DomainKind.PUNCTURED_DISK, DomainKind.ANNULUS_1D,
    }
    if k is DomainKind.OMEGA_MINUS_SET:
        return _in_model(disc, domain.model.is_ball) and not _meets_set(disc, domain.deleted)
    if not _in_model(disc, k in ball_models):
        return False
    if k in (DomainKind.ANNULUS_BALL, DomainKind.POLYDISK_MINUS_BALL, DomainKind.ANNULUS_1D):
        return disc.norm_range()[0] > r
    if k in (DomainKind.POLYDISK_MINUS_POLYDISK, DomainKind.BALL_MINUS_POLYDISK):
        return disc.max_modulus_range()[0] > r
    if k in (DomainKind.PUNCTURED_POLYDISK, DomainKind.PUNCTURED_BALL_POLYDISK_MODEL, DomainKind.PUNCTURED_DISK):
        return not _meets_set(disc, PointSet(np.zeros((1, domain.n))))
    if k is DomainKind.PUNCTURED_DISK_TIMES_POLYDISK:
        return not disc.hits_affine_zero(disc.c[0], disc.v[0])
    return None
