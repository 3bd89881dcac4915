"""Area-integral operators on the unit disk: T_D, T-tilde, the symmetrized
operator, and its iterates.

Kernel decomposition used throughout (partial fractions):

    (zeta + z) / (zeta (zeta - z))       =  2/(zeta - z) - 1/zeta
    (1 + z conj zeta) / (conj zeta (1 - z conj zeta))
                                         =  1/conj zeta + 2 z/(1 - z conj zeta)

so the symmetrized operator splits as T-tilde plus two constants
(kappa - conj kappa with kappa = (1/2pi) iint f/zeta), and every area
integral carries at most one interior Cauchy singularity.

The n-fold iterate is evaluated from the single weighted integral with
weight (-1)^{n-1} (zeta - z + conj(zeta - z))^{n-1} / (n-1)!; the
binomial expansion of the weight turns it into plain operator
evaluations of z-independent polynomial sources.
"""

import math
import warnings
from functools import lru_cache
from math import comb

import numpy as np

from .errors import QuadratureToleranceWarning, SchwarzBVPError, UnsupportedOrderError
from .fields import PolynomialTerm, Term
from .polynomials import ZPolynomial, zplus_zbar_power
from .quadrature import (
    QuadratureConfig,
    _disk_frame_total,
    _graded_edges_to_zero,
    _richardson,
    integrate_disk_singular,
)

MAX_ITER_ORDER = 4

# Calibrated against the exact monomial transforms: ~1e-10 worst-case on
# the degree-6 source class at ~3 ms per singular integral.
DEFAULT_DISK_CFG = QuadratureConfig(radial_panels=20, angular_panels=64, refine_depth=2)


class SourceTerm:
    """Right-hand side f = sum a_{jk} z^j conj(z)^k, total degree <= 6."""

    MAX_DEGREE = 6

    def __init__(self, poly):
        if not isinstance(poly, ZPolynomial):
            poly = ZPolynomial(poly)
        if poly.total_degree > self.MAX_DEGREE:
            raise SchwarzBVPError(
                f"source degree {poly.total_degree} exceeds {self.MAX_DEGREE}"
            )
        self.poly = poly

    @classmethod
    def zero(cls):
        return cls(ZPolynomial.zero())

    @classmethod
    def monomial(cls, j, k, coeff=1.0):
        return cls(ZPolynomial.monomial(j, k, coeff))

    @classmethod
    def from_triples(cls, triples):
        return cls(ZPolynomial.from_terms(triples))

    @property
    def is_zero(self):
        return self.poly.is_zero

    @property
    def vanishing_order(self):
        return self.poly.vanishing_order()

    def __call__(self, z):
        return self.poly(z)

    def __repr__(self):
        return f"SourceTerm({self.poly!r})"


def _warn_result(res, label):
    for w in res.warnings:
        warnings.warn(f"{label}: {w}", QuadratureToleranceWarning, stacklevel=3)
    return res.value


def _poly_key(poly):
    return (poly.coeffs.shape, poly.coeffs.tobytes())


def _cauchy_part(poly, z, cfg):
    """iint_D poly(zeta)/(zeta - z) dA via a z-centered frame."""
    res = integrate_disk_singular(lambda zeta: poly(zeta) / (zeta - z), [z], cfg)
    return _warn_result(res, "cauchy part")


@lru_cache(maxsize=256)
def _kappa_cached(poly_key, cfg):
    poly = ZPolynomial(np.frombuffer(poly_key[1], dtype=np.complex128).reshape(poly_key[0]))
    res = integrate_disk_singular(lambda zeta: poly(zeta) / zeta, [0.0], cfg)
    return _warn_result(res, "kappa") / (2.0 * np.pi)


def kappa_constant(f, cfg=None):
    """(1/2pi) iint_D f(zeta)/zeta dA."""
    cfg = cfg or DEFAULT_DISK_CFG
    return _kappa_cached(_poly_key(f.poly if isinstance(f, SourceTerm) else f), cfg)


def _second_part(poly, z, cfg):
    """iint_D z conj(poly(zeta)) / (1 - conj(zeta) z) dA.

    Smooth on D, but peaked near the rim point z/|z| as |z| -> 1; the
    z-centered frame with radial grading toward the center resolves the
    peak at every radius.
    """
    if poly.is_zero:
        return 0.0j
    scale = max(1e-6, (1.0 - abs(z)) / 4.0)
    edges = _graded_edges_to_zero(scale)
    counts = [6] * (len(edges) - 1)
    counts[-1] = max(12, cfg.radial_panels // 2)

    def integrand(zeta):
        return z * np.conj(poly(zeta)) / (1.0 - np.conj(zeta) * z)

    totals = [
        _disk_frame_total(integrand, z, cfg, lev, radial_edges=(edges, counts))
        for lev in range(cfg.refine_depth + 1)
    ]
    value, err = _richardson(totals)
    if err > cfg.rel_tol * max(abs(value), 1.0):
        warnings.warn(f"second kernel part: est {err:.2e}", QuadratureToleranceWarning, stacklevel=3)
    return value


def _map_points(fn, z):
    z = np.asarray(z, dtype=np.complex128)
    scalar = z.shape == ()
    flat = z.reshape(-1)
    out = np.array([fn(complex(p)) for p in flat])
    return complex(out[0]) if scalar else out.reshape(z.shape)


def t_disk(f, z, cfg=None):
    """Pompeiu integral T_D(f)(z) = -(1/pi) iint f(zeta)/(zeta - z) dA."""
    cfg = cfg or DEFAULT_DISK_CFG
    poly = f.poly if isinstance(f, SourceTerm) else ZPolynomial(f)
    if poly.is_zero:
        return _map_points(lambda p: 0.0j, z)
    return _map_points(lambda p: -_cauchy_part(poly, p, cfg) / np.pi, z)


def t_tilde(f, z, cfg=None):
    """T-tilde(f)(z): Pompeiu integral plus the reflected term.

    Right inverse of dbar with vanishing real boundary trace.
    """
    cfg = cfg or DEFAULT_DISK_CFG
    poly = f.poly if isinstance(f, SourceTerm) else ZPolynomial(f)
    if poly.is_zero:
        return _map_points(lambda p: 0.0j, z)
    return _map_points(
        lambda p: -(_cauchy_part(poly, p, cfg) + _second_part(poly, p, cfg)) / np.pi, z
    )


def t_cal(f, z, cfg=None):
    """Symmetrized operator: T-tilde(f) + kappa - conj(kappa)."""
    cfg = cfg or DEFAULT_DISK_CFG
    poly = f.poly if isinstance(f, SourceTerm) else ZPolynomial(f)
    if poly.is_zero:
        return _map_points(lambda p: 0.0j, z)
    kap = kappa_constant(poly, cfg)
    shift = kap - np.conj(kap)
    return _map_points(
        lambda p: -(_cauchy_part(poly, p, cfg) + _second_part(poly, p, cfg)) / np.pi + shift,
        z,
    )


def _iter_sources(poly, n):
    """Polynomial sources f * (zeta + conj zeta)^m for m = 0..n-1."""
    return [poly * zplus_zbar_power(m) for m in range(n)]


def t_cal_iter(f, z, n, cfg=None):
    """n-fold composition of the symmetrized operator, as one weighted integral.

    Evaluates (-1)^{n-1}/(n-1)! sum_m C(n-1,m) (-(z+conj z))^{n-1-m}
    T_cal(f (zeta+conj zeta)^m)(z); agrees with the n-fold composition.
    """
    cfg = cfg or DEFAULT_DISK_CFG
    if n < 1 or n > MAX_ITER_ORDER:
        raise UnsupportedOrderError(f"iterate order {n} outside 1..{MAX_ITER_ORDER}")
    poly = f.poly if isinstance(f, SourceTerm) else ZPolynomial(f)
    if poly.is_zero:
        return _map_points(lambda p: 0.0j, z)
    if n == 1:
        return t_cal(f, z, cfg)
    sources = _iter_sources(poly, n)
    kappas = [kappa_constant(g, cfg) for g in sources]

    def at_point(p):
        s = 2.0 * p.real
        total = 0.0j
        for m, g in enumerate(sources):
            base = -(_cauchy_part(g, p, cfg) + _second_part(g, p, cfg)) / np.pi
            base += kappas[m] - np.conj(kappas[m])
            total += comb(n - 1, m) * (-s) ** (n - 1 - m) * base
        return (-1.0) ** (n - 1) / math.factorial(n - 1) * total

    return _map_points(at_point, z)


# ---------------------------------------------------------------------------
# Field term and circle-trace reduction


def _annulus_moment(poly, power, lo, hi, cfg):
    """iint_{lo < |zeta| < hi} poly(zeta) zeta^power dA (power may be < 0)."""
    if hi <= lo:
        return 0.0j
    return _annulus_moment_cached(_poly_key(poly), int(power), float(lo), float(hi), cfg)


@lru_cache(maxsize=4096)
def _annulus_moment_cached(poly_key, power, lo, hi, cfg):
    poly = ZPolynomial(np.frombuffer(poly_key[1], dtype=np.complex128).reshape(poly_key[0]))

    def integrand(zeta):
        return poly(zeta) * zeta ** float(power)

    edges = [lo, hi]
    counts = [max(24, cfg.radial_panels)]
    totals = [
        _disk_frame_total(integrand, 0.0, cfg, lev, radial_edges=(edges, counts))
        for lev in range(cfg.refine_depth + 1)
    ]
    return _richardson(totals)[0]


class DiskAreaTerm(Term):
    """Solution term T_cal^n(f) with exact dbar recursion to lower iterates."""

    kind = "area_integral"

    def __init__(self, source, n, cfg=None):
        if not isinstance(source, SourceTerm):
            source = SourceTerm(source)
        if n < 1 or n > MAX_ITER_ORDER:
            raise UnsupportedOrderError(f"iterate order {n} outside 1..{MAX_ITER_ORDER}")
        self.source = source
        self.n = int(n)
        self.cfg = cfg or DEFAULT_DISK_CFG

    def evaluate(self, z):
        z = np.asarray(z, dtype=np.complex128)
        out = t_cal_iter(self.source, z.reshape(-1), self.n, self.cfg)
        return np.asarray(out, dtype=np.complex128).reshape(z.shape)

    def dbar_terms(self):
        if self.n > 1:
            return [DiskAreaTerm(self.source, self.n - 1, self.cfg)]
        return [] if self.source.is_zero else [PolynomialTerm(self.source.poly)]

    def circle_pairing(self, r, m):
        """Exact theta reduction of int T_cal^n(f)(r e^{i th}) e^{i m th} d th.

        The Cauchy kernel's angular integral against e^{i mu theta} has a
        closed form, piecewise across |zeta| = r, leaving one area
        integral per Fourier mode.
        """
        if self.source.is_zero:
            return 0.0j
        poly = self.source.poly
        n, cfg = self.n, self.cfg
        total = 0.0j
        for mm in range(n):
            g = poly * zplus_zbar_power(mm)
            q = n - 1 - mm
            pref = comb(n - 1, mm) * (-r) ** q
            for a in range(q + 1):
                mu = m + q - 2 * a
                total += pref * comb(q, a) * self._base_mode(g, mu, r, cfg)
        return (-1.0) ** (n - 1) / math.factorial(n - 1) * total

    def _base_mode(self, g, mu, r, cfg):
        """int over theta of [T_tilde(g) + kappa - conj kappa](r e^{i th}) e^{i mu th}."""
        kap = kappa_constant(g, cfg)
        total = 2.0 * np.pi * (kap - np.conj(kap)) if mu == 0 else 0.0j
        if mu <= 0:
            total += -2.0 * r ** (-mu) * _annulus_moment(g, mu - 1, r, 1.0, cfg)
        else:
            total += 2.0 * r ** (-mu) * _annulus_moment(g, mu - 1, 0.0, r, cfg)
        if mu <= -1:
            total += -2.0 * r ** (-mu) * np.conj(_annulus_moment(g, -1 - mu, 0.0, 1.0, cfg))
        return total

    def __repr__(self):
        return f"DiskAreaTerm(n={self.n})"
