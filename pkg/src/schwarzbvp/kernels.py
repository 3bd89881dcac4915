"""Closed-form kernels: Poisson, conjugate Poisson, Schwarz, and the iterate weight.

All evaluations accept scalars or numpy arrays and are stateless.  The
disk kernels live on 0 <= r < 1; evaluation at or beyond the rim raises
``DomainError`` since every operator takes traces as limits from inside.
"""

from enum import Enum

import numpy as np

from .errors import DomainError


class KernelId(Enum):
    CAUCHY = "cauchy"
    SCHWARZ_DISK = "schwarz_disk"
    POISSON_DISK = "poisson_disk"
    CONJ_POISSON_DISK = "conj_poisson_disk"
    POISSON_HALFPLANE = "poisson_halfplane"
    SCHWARZ_HALFPLANE = "schwarz_halfplane"
    ITERATED_WEIGHT = "iterated_weight"


def poisson_disk(r, theta):
    """P_r(theta) = (1 - r^2) / (1 - 2 r cos(theta) + r^2)."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("poisson_disk requires 0 <= r < 1")
    den = 1.0 - 2.0 * r * np.cos(theta) + r * r
    return (1.0 - r * r) / den


def conj_poisson_disk(r, theta):
    """Q_r(theta) = 2 r sin(theta) / (1 - 2 r cos(theta) + r^2)."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("conj_poisson_disk requires 0 <= r < 1")
    den = 1.0 - 2.0 * r * np.cos(theta) + r * r
    return 2.0 * r * np.sin(theta) / den


def schwarz_disk(zeta, z):
    """(zeta + z) / (zeta - z) for |zeta| = 1, |z| < 1.

    Equals P_r(theta - t) + i Q_r(theta - t) when zeta = e^{it},
    z = r e^{i theta}.
    """
    zeta = np.asarray(zeta, dtype=np.complex128)
    z = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(z) >= 1):
        raise DomainError("schwarz_disk requires |z| < 1")
    return (zeta + z) / (zeta - z)


def cauchy(zeta, z):
    """1 / (zeta - z)."""
    zeta = np.asarray(zeta, dtype=np.complex128)
    return 1.0 / (zeta - z)


def schwarz_halfplane(t, z):
    """1/(t - z) - t/(t^2 + 1) for real t, Im z > 0."""
    t = np.asarray(t, dtype=float)
    z = np.asarray(z, dtype=np.complex128)
    if np.any(np.imag(z) <= 0):
        raise DomainError("schwarz_halfplane requires Im z > 0")
    return 1.0 / (t - z) - t / (t * t + 1.0)


def poisson_halfplane(x, y):
    """P(x, y) = y / (x^2 + y^2) for y > 0."""
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("poisson_halfplane requires y > 0")
    x = np.asarray(x, dtype=float)
    return y / (x * x + y * y)


def iterated_weight(zeta, z, n):
    """(zeta - z + conj(zeta - z))^{n-1} = (2 Re(zeta - z))^{n-1}; real."""
    if n < 1:
        raise DomainError("iterated_weight requires n >= 1")
    if n == 1:
        return np.ones_like(np.real(np.asarray(zeta, dtype=np.complex128) - z))
    d = 2.0 * np.real(np.asarray(zeta, dtype=np.complex128) - z)
    return d ** (n - 1)
