"""Truncated Taylor series in one real variable.

Used to pair kernels and test functions with derivative atoms: a jet of
order m carries exact derivatives up to order m, so no finite
differencing ever touches a distributional pairing.
"""

import math

import numpy as np


class Jet:
    """Taylor coefficients f(t0), f'(t0)/1!, ..., f^(m)(t0)/m!."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=np.complex128)

    @classmethod
    def constant(cls, value, order):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def variable(cls, t0, order):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = t0
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def derivative(self, k):
        """Exact k-th derivative at the expansion point."""
        if k > self.order:
            raise ValueError("jet order too low for requested derivative")
        return complex(self.coeffs[k] * math.factorial(k))

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.coeffs + other.coeffs)
        c = self.coeffs.copy()
        c[0] += other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            n = self.order
            out = np.zeros(n + 1, dtype=np.complex128)
            for i in range(n + 1):
                out[i] = np.sum(self.coeffs[: i + 1] * other.coeffs[i::-1])
            return Jet(out)
        return Jet(self.coeffs * complex(other))

    __rmul__ = __mul__

    def reciprocal(self):
        n = self.order
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("jet with vanishing value has no reciprocal")
        out = np.zeros(n + 1, dtype=np.complex128)
        out[0] = 1.0 / a[0]
        for i in range(1, n + 1):
            out[i] = -np.sum(a[1 : i + 1] * out[i - 1 :: -1]) / a[0]
        return Jet(out)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / complex(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * complex(other)

    def __pow__(self, k):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = Jet.constant(1.0, self.order)
        for _ in range(int(k)):
            out = out * self
        return out

    def conj(self):
        """Conjugate jet; valid because the underlying variable is real."""
        return Jet(np.conj(self.coeffs))

    def real(self):
        return 0.5 * (self + self.conj())

    def imag(self):
        return (self - self.conj()) * (-0.5j)


def jet_exp(a):
    """exp of a jet via the standard recurrence e' = a' e."""
    n = a.order
    out = np.zeros(n + 1, dtype=np.complex128)
    out[0] = np.exp(a.coeffs[0])
    for i in range(1, n + 1):
        out[i] = np.sum(np.arange(1, i + 1) * a.coeffs[1 : i + 1] * out[i - 1 :: -1]) / i
    return Jet(out)


def jet_exp_it(t0, order):
    """Jet of t -> e^{it} at t0: coefficients i^k e^{i t0} / k!."""
    k = np.arange(order + 1)
    facts = np.array([math.factorial(int(m)) for m in k], dtype=float)
    return Jet(np.exp(1j * t0) * (1j**k) / facts)
