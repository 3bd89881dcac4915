"""Bivariate polynomials in z and conj(z).

This is the whole symbolic layer of the package: enough algebra for the
source terms and for exact Wirtinger derivatives, nothing more.
"""

import numpy as np

from . import backend
from .errors import SchwarzBVPError


class ZPolynomial:
    """p(z) = sum_{j,k} c[j,k] z^j conj(z)^k with complex coefficients.

    Immutable; all operations return new instances.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.atleast_2d(np.asarray(coeffs, dtype=np.complex128))
        if c.ndim != 2:
            raise ValueError("coefficient array must be 2-D")
        if not np.all(np.isfinite(c)):
            raise SchwarzBVPError("non-finite polynomial coefficient")
        c = _trim(c)
        c.setflags(write=False)
        self.coeffs = c

    @classmethod
    def zero(cls):
        return cls([[0.0]])

    @classmethod
    def constant(cls, value):
        return cls([[value]])

    @classmethod
    def monomial(cls, j, k, coeff=1.0):
        c = np.zeros((j + 1, k + 1), dtype=np.complex128)
        c[j, k] = coeff
        return cls(c)

    @classmethod
    def from_terms(cls, terms):
        """terms: iterable of (j, k, coefficient)."""
        terms = list(terms)
        if not terms:
            return cls.zero()
        nj = max(t[0] for t in terms) + 1
        nk = max(t[1] for t in terms) + 1
        c = np.zeros((nj, nk), dtype=np.complex128)
        for j, k, a in terms:
            c[j, k] += a
        return cls(c)

    @property
    def total_degree(self):
        js, ks = np.nonzero(self.coeffs)
        if len(js) == 0:
            return 0
        return int(np.max(js + ks))

    @property
    def is_zero(self):
        return not np.any(self.coeffs)

    def vanishing_order(self):
        """Minimal j + k over nonzero coefficients (0 for the zero polynomial)."""
        js, ks = np.nonzero(self.coeffs)
        if len(js) == 0:
            return 0
        return int(np.min(js + ks))

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        flat = np.ascontiguousarray(z.reshape(-1))
        out = backend.polyval_zzbar(self.coeffs, flat)
        return out.reshape(z.shape) if z.shape else out[0]

    def __add__(self, other):
        if not isinstance(other, ZPolynomial):
            other = ZPolynomial.constant(other)
        nj = max(self.coeffs.shape[0], other.coeffs.shape[0])
        nk = max(self.coeffs.shape[1], other.coeffs.shape[1])
        c = np.zeros((nj, nk), dtype=np.complex128)
        c[: self.coeffs.shape[0], : self.coeffs.shape[1]] += self.coeffs
        c[: other.coeffs.shape[0], : other.coeffs.shape[1]] += other.coeffs
        return ZPolynomial(c)

    def __mul__(self, other):
        if isinstance(other, ZPolynomial):
            a, b = self.coeffs, other.coeffs
            c = np.zeros(
                (a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1),
                dtype=np.complex128,
            )
            for j in range(a.shape[0]):
                for k in range(a.shape[1]):
                    if a[j, k] != 0:
                        c[j : j + b.shape[0], k : k + b.shape[1]] += a[j, k] * b
            return ZPolynomial(c)
        return ZPolynomial(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + (-1.0) * (other if isinstance(other, ZPolynomial) else ZPolynomial.constant(other))

    def __neg__(self):
        return (-1.0) * self

    def conj(self):
        """Polynomial representing conj(p(z)): swaps the roles of z and conj(z)."""
        return ZPolynomial(np.conj(self.coeffs).T)

    def dbar(self):
        """Exact Wirtinger derivative d/d(conj z): shifts the conj(z) index down."""
        c = self.coeffs
        if c.shape[1] == 1:
            return ZPolynomial.zero()
        ks = np.arange(1, c.shape[1])
        return ZPolynomial(c[:, 1:] * ks[None, :])

    def dz(self):
        c = self.coeffs
        if c.shape[0] == 1:
            return ZPolynomial.zero()
        js = np.arange(1, c.shape[0])
        return ZPolynomial(c[1:, :] * js[:, None])

    def terms(self):
        js, ks = np.nonzero(self.coeffs)
        return [(int(j), int(k), complex(self.coeffs[j, k])) for j, k in zip(js, ks)]

    def __repr__(self):
        parts = [f"({a:.3g})z^{j}zb^{k}" for j, k, a in self.terms()] or ["0"]
        return "ZPolynomial(" + " + ".join(parts) + ")"


def _trim(c):
    """Drop all-zero trailing rows/columns, keeping at least a 1x1 array."""
    nj, nk = c.shape
    while nj > 1 and not np.any(c[nj - 1, :]):
        nj -= 1
    while nk > 1 and not np.any(c[:, nk - 1]):
        nk -= 1
    return np.array(c[:nj, :nk], dtype=np.complex128)


def zplus_zbar_power(k):
    """(z + conj z)^k as a ZPolynomial."""
    from math import comb

    return ZPolynomial.from_terms((a, k - a, comb(k, a)) for a in range(k + 1))
