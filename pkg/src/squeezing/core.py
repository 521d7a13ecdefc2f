"""Complex vectors, Minkowski functionals and membership for the model domains.

A point of C^n is a 1-d ``complex128`` numpy array. Batches of points are
arrays of shape ``(..., n)``; every function here broadcasts over the
leading axes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class DimensionError(ValueError):
    pass


class Kind(str, enum.Enum):
    BALL = "ball"
    POLYDISK = "polydisk"


@dataclass(frozen=True)
class ModelDomain:
    """The unit ball B^n or the unit polydisk D^n."""

    kind: Kind
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")

    @property
    def is_ball(self) -> bool:
        return self.kind is Kind.BALL

    def contains(self, z) -> bool:
        """Strict membership of a single point (wrong length counts as outside)."""
        z = np.asarray(z)
        return z.shape == (self.dim,) and bool(contains(self, z))

    def __str__(self):
        return f"{self.kind.value}{self.dim}"


def Ball(n: int) -> ModelDomain:
    return ModelDomain(Kind.BALL, n)


def Polydisk(n: int) -> ModelDomain:
    return ModelDomain(Kind.POLYDISK, n)


def as_cvector(z, dim: int | None = None) -> np.ndarray:
    """Coerce ``z`` to a finite complex vector (or batch of vectors).

    Accepts complex numbers, sequences of complex numbers, or sequences of
    ``[re, im]`` pairs when ``z`` has a trailing axis of length 2 with a
    real dtype and ``dim`` says the pairs are coordinates.
    """
    a = np.asarray(z)
    if a.dtype.kind in "iuf" and a.ndim >= 2 and a.shape[-1] == 2 and dim is not None and a.shape[-2] == dim:
        a = a[..., 0] + 1j * a[..., 1]
    a = np.atleast_1d(a).astype(np.complex128)
    if a.shape[-1] < 1:
        raise DimensionError("a point of C^n needs at least one coordinate")
    if not np.all(np.isfinite(a)):
        raise ValueError("complex vector has non-finite components")
    if dim is not None and a.shape[-1] != dim:
        raise DimensionError(f"expected dimension {dim}, got {a.shape[-1]}")
    return a


def _check_same_dim(a: np.ndarray, z: np.ndarray):
    if a.shape[-1] != z.shape[-1]:
        raise DimensionError(f"dimension mismatch: {a.shape[-1]} vs {z.shape[-1]}")


def hermitian_inner(a, z):
    """<z, a> = sum_j z_j conj(a_j), linear in ``z``."""
    a = as_cvector(a)
    z = as_cvector(z)
    _check_same_dim(a, z)
    out = np.sum(z * np.conj(a), axis=-1)
    return complex(out) if out.ndim == 0 else out


def norm(z):
    z = np.asarray(z)
    out = np.sqrt(np.sum(z.real**2 + z.imag**2, axis=-1))
    return float(out) if out.ndim == 0 else out


def minkowski(d: ModelDomain, z):
    """Minkowski functional: Euclidean norm for the ball, max modulus for the polydisk."""
    z = as_cvector(z)
    if z.shape[-1] != d.dim:
        raise DimensionError(f"{d} expects dimension {d.dim}, got {z.shape[-1]}")
    if d.is_ball:
        return norm(z)
    out = np.max(np.abs(z), axis=-1)
    return float(out) if out.ndim == 0 else out


def contains(d: ModelDomain, z, radius: float = 1.0):
    """Strict membership in the Minkowski ball of ``radius`` around 0."""
    if not (0.0 < radius <= 1.0):
        raise ValueError(f"radius must lie in (0, 1], got {radius}")
    rho = minkowski(d, z)
    out = np.asarray(rho) < radius
    return bool(out) if out.ndim == 0 else out
