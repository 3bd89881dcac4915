"""Finite-difference Wirtinger derivatives d/d(conj z).

dbar = (d/dx + i d/dy)/2 via central differences.  Nested application
realizes higher orders; fields that expose exact derivative chains are
differentiated exactly instead (the step argument is then ignored),
unless ``force_fd`` demands the honest stencil.
"""

import numpy as np

from .errors import BoundaryProximityError, DomainError, UnsupportedOrderError
from .fields import ComplexField

# Larger steps at higher orders: the 1/(2h)^n rounding amplification
# dominates long before the h^2 truncation term matters.
_DISK_STEPS = {1: 1e-5, 2: 1e-4, 3: 6e-4, 4: 2e-3}
_HP_STEPS = {1: 1e-4, 2: 3e-4, 3: 1.5e-3, 4: 4e-3}

MAX_FD_ORDER = 4


def default_step(domain, n=1):
    table = _DISK_STEPS if domain == "disk" else _HP_STEPS
    return table[min(n, MAX_FD_ORDER)]


def _clearance(domain, z):
    if domain == "disk":
        return 1.0 - abs(z)
    return z.imag


def _check_clearance(domain, z, step, n):
    if _clearance(domain, complex(z)) <= (n + 1) * step:
        raise BoundaryProximityError(
            f"point {z} within {(n + 1) * step} of the {domain} boundary"
        )


def _stencil(n, step):
    """Offsets and coefficients of the n-fold nested central dbar stencil."""
    base = [
        (complex(step, 0.0), 0.25 / step),
        (complex(-step, 0.0), -0.25 / step),
        (complex(0.0, step), 0.25j / step),
        (complex(0.0, -step), -0.25j / step),
    ]
    stencil = {0.0 + 0.0j: 1.0 + 0.0j}
    for _ in range(n):
        new = {}
        for off, coeff in stencil.items():
            for doff, dcoeff in base:
                key = off + doff
                new[key] = new.get(key, 0.0 + 0.0j) + coeff * dcoeff
        stencil = new
    return stencil


def _evaluate(field, pts):
    if isinstance(field, ComplexField):
        return field.evaluate(pts)
    return np.asarray(field(pts), dtype=np.complex128)


def wirtinger_dbar(field, z, step=None, domain=None):
    """Central-difference dbar at an interior point; error O(step^2)."""
    if isinstance(field, ComplexField):
        domain = field.domain
    if domain is None:
        raise DomainError("domain must be given for bare callables")
    step = step or default_step(domain, 1)
    if step <= 0:
        raise DomainError("step must be positive")
    z = complex(z)
    _check_clearance(domain, z, step, 1)
    stencil = _stencil(1, step)
    pts = np.array(list(stencil.keys())) + z
    vals = _evaluate(field, pts)
    if not np.all(np.isfinite(vals)):
        raise DomainError("non-finite field value in FD stencil")
    return complex(np.sum(vals * np.array(list(stencil.values()))))


def wirtinger_dbar_n(field, z, n, step=None, domain=None, force_fd=False):
    """n-fold dbar; exact derivative chains take precedence when present."""
    if n < 1:
        raise UnsupportedOrderError("derivative order must be >= 1")
    if isinstance(field, ComplexField):
        domain = field.domain
        if not force_fd:
            exact = field.dbar_n(n)
            if exact is not None:
                return complex(exact.evaluate(np.array([complex(z)]))[0])
    if n > MAX_FD_ORDER:
        raise UnsupportedOrderError(
            f"FD order {n} > {MAX_FD_ORDER} and no exact derivative form available"
        )
    if domain is None:
        raise DomainError("domain must be given for bare callables")
    step = step or default_step(domain, n)
    z = complex(z)
    _check_clearance(domain, z, step, n)
    stencil = _stencil(n, step)
    pts = np.array(list(stencil.keys())) + z
    vals = _evaluate(field, pts)
    if not np.all(np.isfinite(vals)):
        raise DomainError("non-finite field value in FD stencil")
    return complex(np.sum(vals * np.array(list(stencil.values()))))
