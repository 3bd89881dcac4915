"""Complex scalar fields on the disk and upper half-plane.

A field is a labeled sum of terms.  Each term knows how to evaluate
itself on arrays of points, how to differentiate itself exactly under
d/d(conj z) (returning a list of terms), and -- on the disk -- how to
pair its restriction to the circle |z| = r against a Fourier mode
(used by the distributional trace checks, where direct sampling would
need ~1/(1-r) nodes).
"""

from dataclasses import dataclass

import numpy as np

from .distributions import (
    BoundaryDistribution,
    imbalance_constant_disk,
    schwarz_disk_kernel_fn,
    schwarz_extend_disk,
)
from .errors import DomainError
from .polynomials import ZPolynomial

_TWO_PI = 2.0 * np.pi


class Term:
    """Base class; subclasses are immutable after construction."""

    kind = "constant"

    def evaluate(self, z):
        raise NotImplementedError

    def dbar_terms(self):
        """Exact Wirtinger-derivative terms, or None when unavailable."""
        raise NotImplementedError

    def circle_pairing(self, r, m):
        """integral_0^{2pi} term(r e^{i theta}) e^{i m theta} d theta.

        Default: dense midpoint sampling (spectrally accurate for smooth
        terms); subclasses override with exact reductions.
        """
        n = _pairing_nodes(r)
        theta = _TWO_PI * (np.arange(n) + 0.5) / n
        vals = self.evaluate(r * np.exp(1j * theta))
        return np.sum(vals * np.exp(1j * m * theta)) * (_TWO_PI / n)

    def line_values(self, x, y):
        """Values along Im z = y; half-plane terms override with batched paths."""
        x = np.asarray(x, dtype=float)
        return self.evaluate(x + 1j * y)


def _pairing_nodes(r):
    if r < 0.9:
        return 2048
    return int(min(1 << 18, max(2048, 64.0 / (1.0 - r))))


class ConstantTerm(Term):
    kind = "constant"

    def __init__(self, value):
        self.value = complex(value)

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return np.full(z.shape, self.value)

    def dbar_terms(self):
        return []

    def circle_pairing(self, r, m):
        return _TWO_PI * self.value if m == 0 else 0.0j

    def __repr__(self):
        return f"ConstantTerm({self.value:.6g})"


class PolynomialTerm(Term):
    kind = "polynomial"

    def __init__(self, poly):
        if not isinstance(poly, ZPolynomial):
            poly = ZPolynomial(poly)
        self.poly = poly

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return np.asarray(self.poly(z), dtype=np.complex128).reshape(z.shape)

    def dbar_terms(self):
        d = self.poly.dbar()
        return [] if d.is_zero else [PolynomialTerm(d)]

    def circle_pairing(self, r, m):
        total = 0.0j
        for j, k, c in self.poly.terms():
            if j - k + m == 0:
                total += c * r ** (j + k)
        return _TWO_PI * total

    def __repr__(self):
        return f"PolynomialTerm({self.poly!r})"


class HolomorphicDiskExtension(Term):
    """Reconstruction of h from its boundary distribution.

    Evaluates the Schwarz extension of Re h_b plus the constant
    i <Im h_b, 1>/2pi, which coincides with the Poisson pairing
    (1/2pi)<h_b, P_r(theta - .)> whenever h_b really is the boundary
    value of a holomorphic function, and is holomorphic regardless.
    """

    kind = "holomorphic_extension"

    def __init__(self, h_b, cfg=None):
        self.h_b = h_b
        self.cfg = cfg
        self._re = h_b.real_part()
        self._const = imbalance_constant_disk(h_b, cfg)  # equals i Im h(0)

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        vals = schwarz_extend_disk(self._re, z, self.cfg)
        return np.asarray(vals, dtype=np.complex128).reshape(z.shape) + self._const

    def dbar_terms(self):
        return []

    def circle_pairing(self, r, m):
        # int SchwarzExt(g)(r e^{i th}) e^{i m th} dth: modes m >= 1 vanish,
        # m = 0 gives <g, 1>, m <= -1 gives 2 r^{|m|} <g, e^{i m .}>.
        if m == 0:
            total = self._re.fourier_pairing(0) + _TWO_PI * self._const
        elif m > 0:
            total = 0.0j
        else:
            total = 2.0 * r ** (-m) * self._re.fourier_pairing(m)
        return total

    def __repr__(self):
        return "HolomorphicDiskExtension"


class DiskKernelPairing(Term):
    """S_k(z) = (-1)^k/(2 pi k!) <h, SK(., z) W(., z)^k>, k >= 1.

    Satisfies dbar S_k = S_{k-1}; S_0 is the plain (holomorphic) Schwarz
    extension of h.
    """

    def __init__(self, h, k, cfg=None):
        self.h = h
        self.k = int(k)
        self.cfg = cfg
        self.kind = "kernel_pairing" if self.k >= 1 else "holomorphic_extension"

    def evaluate(self, z):
        import math

        z = np.asarray(z, dtype=np.complex128)
        flat = z.reshape(-1)
        scale = (-1.0) ** self.k / (_TWO_PI * math.factorial(self.k))
        out = np.array(
            [self.h.pair(schwarz_disk_kernel_fn(p, self.k), self.cfg) for p in flat]
        )
        return (scale * out).reshape(z.shape)

    def dbar_terms(self):
        if self.k == 0:
            return []
        return [DiskKernelPairing(self.h, self.k - 1, self.cfg)]

    def circle_pairing(self, r, m):
        import math
        from math import comb

        # theta-integral of SK * W^k * e^{i m theta} reduces to finitely
        # many Fourier pairings of h: only the SK series terms with
        # p = -(2a - j + m) survive the theta average.
        total = 0.0j
        k = self.k
        for j in range(k + 1):
            for a in range(j + 1):
                base = comb(k, j) * comb(j, a) * (-r) ** j
                p = -(2 * a - j + m)
                if p < 0:
                    continue
                kernel_factor = 1.0 if p == 0 else 2.0 * r**p
                # remaining t-function: (2 cos t)^{k-j} e^{-i p t}
                for b in range(k - j + 1):
                    nu = (k - j - 2 * b) - p
                    coeff = base * kernel_factor * comb(k - j, b)
                    total += coeff * self.h.fourier_pairing(nu)
        return (-1.0) ** k / math.factorial(k) * total

    def __repr__(self):
        return f"DiskKernelPairing(k={self.k})"


class ZbarPowerTerm(Term):
    """scale * conj(z)^power * inner(z) with a whole field as the inner factor."""

    kind = "zbar_product"

    def __init__(self, power, scale, inner):
        self.power = int(power)
        self.scale = complex(scale)
        self.inner = inner

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        vals = self.inner.evaluate(z)
        return self.scale * np.conj(z) ** self.power * vals

    def dbar_terms(self):
        out = []
        if self.power >= 1:
            out.append(ZbarPowerTerm(self.power - 1, self.scale * self.power, self.inner))
        inner_d = self.inner.dbar()
        if inner_d is not None and inner_d.terms:
            out.append(ZbarPowerTerm(self.power, self.scale, inner_d))
        return out

    def circle_pairing(self, r, m):
        # conj(z)^l on the circle contributes r^l e^{-i l theta}
        return self.scale * r**self.power * self.inner.circle_pairing(r, m - self.power)

    def __repr__(self):
        return f"ZbarPowerTerm(power={self.power}, scale={self.scale:.4g})"


class CallableHolomorphicTerm(Term):
    """Closed-form holomorphic function (catalog entries)."""

    kind = "holomorphic_extension"

    def __init__(self, fn, name="holomorphic"):
        self.fn = fn
        self.name = name

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return np.asarray(self.fn(z), dtype=np.complex128).reshape(z.shape)

    def dbar_terms(self):
        return []

    def __repr__(self):
        return f"CallableHolomorphicTerm({self.name})"


class ComplexField:
    """Sum of labeled terms over a fixed domain ('disk' or 'half_plane')."""

    def __init__(self, domain, terms=()):
        if domain not in ("disk", "half_plane"):
            raise DomainError("domain must be 'disk' or 'half_plane'")
        self.domain = domain
        self.terms = tuple(terms)

    @classmethod
    def constant(cls, domain, value):
        return cls(domain, [ConstantTerm(value)])

    @classmethod
    def zero(cls, domain):
        return cls(domain, [])

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        scalar = z.shape == ()
        pts = z.reshape(-1) if scalar else z
        out = np.zeros(pts.shape, dtype=np.complex128)
        for term in self.terms:
            out = out + term.evaluate(pts)
        if not np.all(np.isfinite(out)):
            raise DomainError("field evaluation produced a non-finite value")
        return complex(out[0]) if scalar else out

    def __call__(self, z):
        return self.evaluate(z)

    def dbar(self):
        """Exact Wirtinger derivative as a new field, or None if any term lacks one."""
        new_terms = []
        for term in self.terms:
            d = term.dbar_terms()
            if d is None:
                return None
            new_terms.extend(d)
        return ComplexField(self.domain, new_terms)

    def dbar_n(self, n):
        f = self
        for _ in range(n):
            f = f.dbar()
            if f is None:
                return None
        return f

    def with_term(self, term):
        return ComplexField(self.domain, self.terms + (term,))

    def scaled(self, factor):
        return ComplexField(self.domain, [ZbarPowerTerm(0, factor, self)])

    def circle_pairing(self, r, m):
        if self.domain != "disk":
            raise DomainError("circle_pairing is a disk operation")
        return sum((term.circle_pairing(r, m) for term in self.terms), 0.0j)

    def line_values(self, x, y):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=np.complex128)
        for term in self.terms:
            out = out + term.line_values(x, y)
        return out

    def trace_pairing(self, r, phi):
        """integral Re(field) * phi on the circle of radius r, via Fourier modes.

        Valid for real-valued trig test functions: the integral of
        Re(w) * phi equals Re of the integral of w * phi.
        """
        total = 0.0j
        for mu, b in phi.modes.items():
            total += b * self.circle_pairing(r, mu)
        return float(np.real(total))

    def __repr__(self):
        return f"ComplexField({self.domain}, {len(self.terms)} terms)"


@dataclass(frozen=True)
class DiskGrid:
    """Interior evaluation points plus the boundary-approach circle family."""

    interior: tuple
    approach_levels: tuple  # r_j = 1 - 2^{-j}, strictly increasing to 1

    @classmethod
    def build(cls, n_rings=3, n_angles=8, max_radius=0.7, j_max=10, seed=0):
        rng = np.random.default_rng(seed)
        radii = np.linspace(max_radius / n_rings, max_radius, n_rings)
        pts = []
        for r in radii:
            offset = rng.uniform(0.0, 2.0 * np.pi / n_angles)
            for a in range(n_angles):
                pts.append(r * np.exp(1j * (offset + _TWO_PI * a / n_angles)))
        levels = tuple(1.0 - 2.0 ** (-j) for j in range(1, j_max + 1))
        return cls(tuple(pts), levels)

    def __post_init__(self):
        if any(abs(p) >= 1.0 for p in self.interior):
            raise DomainError("disk grid point outside the open disk")
        rs = list(self.approach_levels)
        if any(b <= a for a, b in zip(rs, rs[1:])) or any(not 0 < r < 1 for r in rs):
            raise DomainError("approach radii must increase strictly toward 1")


@dataclass(frozen=True)
class HalfPlaneGrid:
    interior: tuple
    approach_levels: tuple  # y_j = 2^{-j}, strictly decreasing to 0
    truncation_radius: float = 8.0

    @classmethod
    def build(cls, n_x=5, n_y=3, x_span=2.0, y_range=(0.4, 2.5), j_max=10, seed=0):
        rng = np.random.default_rng(seed)
        xs = np.linspace(-x_span, x_span, n_x) + rng.uniform(-0.05, 0.05, n_x)
        ys = np.geomspace(y_range[0], y_range[1], n_y)
        pts = tuple(complex(x, y) for y in ys for x in xs)
        levels = tuple(2.0 ** (-j) for j in range(1, j_max + 1))
        return cls(pts, levels)

    def __post_init__(self):
        if any(p.imag <= 0.0 for p in self.interior):
            raise DomainError("half-plane grid point not in the open upper half-plane")
        ys = list(self.approach_levels)
        if any(b >= a for a, b in zip(ys, ys[1:])) or any(y <= 0 for y in ys):
            raise DomainError("approach heights must decrease strictly toward 0")
