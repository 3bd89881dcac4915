"""Schwarz boundary value problems on the unit disk and upper half-plane.

Constructs solutions of first- and higher-order nonhomogeneous
Cauchy-Riemann equations with boundary data given as boundary values in
the sense of distributions, and verifies every clause numerically.
"""

from .backend import BACKEND_NAME
from .quadrature import (
    IntegralResult,
    QuadratureConfig,
    integrate_disk_singular,
    integrate_halfplane,
    integrate_line,
)

__all__ = [
    "BACKEND_NAME",
    "IntegralResult",
    "QuadratureConfig",
    "integrate_disk_singular",
    "integrate_halfplane",
    "integrate_line",
]

__version__ = "0.1.0"
