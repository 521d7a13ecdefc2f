"""Carathéodory pseudodistance of the unit ball and the unit polydisk.

Everything is expressed through ``tanh c``, which lives in [0, 1) and is
what the invariants use; ``c`` itself is only available via
:func:`distance_value`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DimensionError, ModelDomain, as_cvector, norm

#: atanh(1 - 1e-15); larger tanh values are reported as saturated.
C_CAP = float(np.arctanh(1.0 - 1e-15))


class OutsideDomainError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceValue:
    tanh_c: float
    c: float
    saturated: bool = False


def distance_value(t: float) -> DistanceValue:
    t = float(t)
    if not (0.0 <= t < 1.0):
        raise ValueError(f"tanh c must lie in [0, 1), got {t}")
    if t > 1.0 - 1e-15:
        return DistanceValue(t, C_CAP, saturated=True)
    return DistanceValue(t, float(np.arctanh(t)))


def _pair(a, z):
    a = as_cvector(a)
    z = as_cvector(z)
    if a.shape[-1] != z.shape[-1]:
        raise DimensionError(f"dimension mismatch: {a.shape[-1]} vs {z.shape[-1]}")
    return a, z


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def tanh_c_ball_unchecked(a: np.ndarray, z: np.ndarray):
    """Batch ``tanh c_{B^n}(a, z)`` without validation (hot path for minimizers).

    Uses |1-<z,a>|^2 - (1-|a|^2)(1-|z|^2) = |a-z|^2 - sum_{j<k} |a_j z_k - a_k z_j|^2,
    which is exact at a = z and loses less precision near the diagonal.
    """
    diff = a - z
    num = np.sum(diff.real**2 + diff.imag**2, axis=-1)
    n = a.shape[-1]
    for j in range(n):
        for k in range(j + 1, n):
            w = a[..., j] * z[..., k] - a[..., k] * z[..., j]
            num = num - (w.real**2 + w.imag**2)
    inner = np.sum(z * np.conj(a), axis=-1)
    den = (1.0 - inner.real) ** 2 + inner.imag**2
    ratio = np.clip(np.maximum(num, 0.0) / den, 0.0, 1.0)
    return np.sqrt(ratio)


def tanh_c_polydisk_unchecked(a: np.ndarray, z: np.ndarray):
    return np.max(np.abs((z - a) / (1.0 - np.conj(a) * z)), axis=-1)


def tanh_c_ball(a, z):
    """tanh of the Carathéodory distance of B^n between ``a`` and ``z``."""
    a, z = _pair(a, z)
    if np.any(norm(a) >= 1.0) or np.any(norm(z) >= 1.0):
        raise OutsideDomainError("tanh_c_ball: both points must lie in the open unit ball")
    return _scalar(tanh_c_ball_unchecked(a, z))


def tanh_c_polydisk(a, z):
    """Max over coordinates of the Möbius pseudodistance of the disc."""
    a, z = _pair(a, z)
    if np.any(np.abs(a) >= 1.0) or np.any(np.abs(z) >= 1.0):
        raise OutsideDomainError("tanh_c_polydisk: both points must lie in the open unit polydisk")
    return _scalar(tanh_c_polydisk_unchecked(a, z))


def tanh_c(d: ModelDomain, a, z):
    a, z = _pair(a, z)
    if a.shape[-1] != d.dim:
        raise DimensionError(f"{d} expects dimension {d.dim}, got {a.shape[-1]}")
    return tanh_c_ball(a, z) if d.is_ball else tanh_c_polydisk(a, z)


def tanh_c_unchecked(d: ModelDomain, a: np.ndarray, z: np.ndarray):
    return tanh_c_ball_unchecked(a, z) if d.is_ball else tanh_c_polydisk_unchecked(a, z)


def ball_automorphism(a, z):
    """The involutive automorphism of B^n exchanging ``a`` and 0, applied to ``z``.

    ``|ball_automorphism(a, z)| == tanh_c_ball(a, z)``.
    """
    a = as_cvector(a)
    z = as_cvector(z)
    aa = float(np.real(np.vdot(a, a)))
    za = np.sum(z * np.conj(a), axis=-1)
    if aa == 0.0:
        return -z
    s = np.sqrt(1.0 - aa)
    proj = (za / aa)[..., None] * a
    return (a - proj - s * (z - proj)) / (1.0 - za)[..., None]
