"""Boundary values in the sense of distributions on the circle and the line.

The representable class: an integrable density plus finitely many
weighted Dirac atoms and derivative atoms (order <= 4).  Pairings with
smooth test functions are exact on the atomic part (Taylor jets) and
quadrature-based on the density part; trigonometric densities and test
functions pair exactly through their Fourier modes.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .errors import CarrierMismatchError, DivergenceRiskError, DomainError
from .quadrature import QuadratureConfig, integrate_line
from .taylorjets import Jet, jet_exp, jet_exp_it

MAX_ATOM_ORDER = 4
_CIRCLE_NODES = 2048


# ---------------------------------------------------------------------------
# Test functions


class TrigTestFunction:
    """Trigonometric polynomial sum_m modes[m] e^{i m t} on the circle."""

    carrier = "circle"

    def __init__(self, modes, name=None):
        self.modes = {int(m): complex(c) for m, c in modes.items() if c != 0} or {0: 0.0}
        self.name = name or "trig"

    @classmethod
    def one(cls):
        return cls({0: 1.0}, "1")

    @classmethod
    def cos(cls, k=1):
        return cls({k: 0.5, -k: 0.5}, f"cos({k}t)" if k != 1 else "cos")

    @classmethod
    def sin(cls, k=1):
        return cls({k: -0.5j, -k: 0.5j}, f"sin({k}t)" if k != 1 else "sin")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape, dtype=np.complex128)
        for m, c in self.modes.items():
            out += c * np.exp(1j * m * t)
        return out

    def taylor(self, t0, order):
        out = Jet.constant(0.0, order)
        for m, c in self.modes.items():
            k = np.arange(order + 1)
            facts = np.array([math.factorial(int(q)) for q in k], dtype=float)
            out = out + Jet(c * np.exp(1j * m * t0) * (1j * m) ** k / facts)
        return out


class BumpTestFunction:
    """Compactly supported C-infinity bump exp(1 - 1/(1-u^2)), u=(t-c)/w."""

    carrier = "line"
    decay_order = np.inf

    def __init__(self, center=0.0, width=1.0, name=None):
        if width <= 0:
            raise DomainError("bump width must be positive")
        self.center = float(center)
        self.width = float(width)
        self.support = (self.center - self.width, self.center + self.width)
        self.features = ((self.center, self.width),)
        self.name = name or f"bump({self.center},{self.width})"

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        u = (t - self.center) / self.width
        out = np.zeros(t.shape, dtype=float)
        inside = np.abs(u) < 1.0
        ui = u[inside]
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - ui * ui))
        return out.astype(np.complex128)

    def taylor(self, t0, order):
        u0 = (t0 - self.center) / self.width
        if abs(u0) >= 1.0:
            return Jet.constant(0.0, order)
        u = Jet.variable(t0, order)
        u = (u - self.center) * (1.0 / self.width)
        inner = Jet.constant(1.0, order) - (Jet.constant(1.0, order) - u * u).reciprocal()
        return jet_exp(inner)


class GaussPolyTestFunction:
    """p(t) exp(-((t-c)/s)^2) with a real polynomial p."""

    carrier = "line"
    support = None

    def __init__(self, poly_coeffs, center=0.0, scale=1.0, name=None):
        self.poly_coeffs = tuple(float(c) for c in poly_coeffs)
        self.center = float(center)
        self.scale = float(scale)
        self.decay_order = np.inf  # super-polynomial decay
        self.features = ((self.center, self.scale),)
        self.name = name or f"gausspoly({self.center})"
        # effective support where the Gaussian is numerically nonzero
        half = self.scale * 7.0
        self.support = (self.center - half, self.center + half)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        u = (t - self.center) / self.scale
        p = np.zeros(t.shape, dtype=float)
        for c in reversed(self.poly_coeffs):
            p = p * t + c
        return (p * np.exp(-u * u)).astype(np.complex128)

    def taylor(self, t0, order):
        tj = Jet.variable(t0, order)
        p = Jet.constant(0.0, order)
        for c in reversed(self.poly_coeffs):
            p = p * tj + c
        u = (tj - self.center) * (1.0 / self.scale)
        return p * jet_exp(-(u * u))


class KernelTestFunction:
    """Adapter exposing a kernel (in the pairing variable) as a test function."""

    def __init__(self, carrier, value_fn, jet_fn, decay_order=None, features=(), support=None, name="kernel"):
        self.carrier = carrier
        self._value_fn = value_fn
        self._jet_fn = jet_fn
        self.decay_order = decay_order
        self.features = tuple(features)
        self.support = support
        self.name = name

    def __call__(self, t):
        return self._value_fn(np.asarray(t, dtype=float))

    def taylor(self, t0, order):
        return self._jet_fn(float(t0), int(order))


def schwarz_disk_kernel_fn(z, weight_power=0):
    """Kernel t -> SK(e^{it}, z) * W(t, z)^k as a KernelTestFunction."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("Schwarz kernel pairing requires |z| < 1")

    def value(t):
        zeta = np.exp(1j * t)
        sk = (zeta + z) / (zeta - z)
        if weight_power == 0:
            return sk
        w = 2.0 * np.real(zeta - z)
        return sk * w**weight_power

    def jet(t0, order):
        e = jet_exp_it(t0, order)
        sk = (e + z) / (e - z)
        if weight_power == 0:
            return sk
        w = (e + e.conj()) - 2.0 * z.real
        return sk * w**weight_power

    return KernelTestFunction("circle", value, jet, name=f"schwarz_kernel(z={z:.3g},k={weight_power})")


def poisson_disk_kernel_fn(z):
    """Kernel t -> P_r(theta - t) for z = r e^{i theta}."""
    sk = schwarz_disk_kernel_fn(z)
    return KernelTestFunction(
        "circle",
        lambda t: np.real(sk(t)).astype(np.complex128),
        lambda t0, order: sk.taylor(t0, order).real(),
        name=f"poisson_kernel(z={complex(z):.3g})",
    )


def poisson_halfplane_kernel_fn(z):
    """Kernel t -> P(x - t, y) = Im 1/(t - z) for z = x + iy, y > 0."""
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("half-plane Poisson kernel requires Im z > 0")

    def value(t):
        return np.imag(1.0 / (t - z)).astype(np.complex128)

    def jet(t0, order):
        return (Jet.variable(t0, order) - z).reciprocal().imag()

    return KernelTestFunction(
        "line", value, jet, decay_order=2.0, features=((z.real, z.imag),),
        name=f"poisson_hp_kernel(z={z:.3g})",
    )


def halfplane_schwarz_kernel_fn(z, weight_power=0):
    """Kernel t -> (1/(t-z) - t/(t^2+1)) * (2t - z - conj z)^k."""
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("half-plane Schwarz kernel requires Im z > 0")

    def value(t):
        g = 1.0 / (t - z) - t / (t * t + 1.0)
        if weight_power == 0:
            return g.astype(np.complex128)
        return (g * (2.0 * t - 2.0 * z.real) ** weight_power).astype(np.complex128)

    def jet(t0, order):
        tj = Jet.variable(t0, order)
        g = (tj - z).reciprocal() - tj * (tj * tj + 1.0).reciprocal()
        if weight_power == 0:
            return g
        return g * (2.0 * tj - 2.0 * z.real) ** weight_power

    # the kernel itself decays like 1/t^2 for fixed z; the weight eats k powers
    return KernelTestFunction(
        "line", value, jet, decay_order=hp_schwarz_kernel_decay(weight_power),
        features=((z.real, max(z.imag, 0.05)),),
        name=f"hp_schwarz_kernel(z={z:.3g},k={weight_power})",
    )


def hp_schwarz_kernel_decay(weight_power=0):
    """Decay order in t of the weighted Gaertner kernel."""
    return 2.0 - weight_power


# ---------------------------------------------------------------------------
# Distributions


@dataclass(frozen=True)
class Atom:
    location: float
    weight: complex
    order: int = 0

    def __post_init__(self):
        if self.order < 0 or self.order > MAX_ATOM_ORDER:
            raise DomainError(f"atom derivative order must be in 0..{MAX_ATOM_ORDER}")
        if not (np.isfinite(self.location) and np.isfinite(self.weight)):
            raise DomainError("atom location/weight must be finite")


@dataclass(frozen=True)
class Density:
    """Integrable density on the carrier.

    ``modes`` gives an exact finite Fourier representation (circle only);
    ``decay_order`` and ``features`` steer line quadrature.
    """

    fn: object
    modes: dict = None
    decay_order: float = None
    features: tuple = ()
    real_valued: bool = False

    def __call__(self, t):
        if self.fn is not None:
            return np.asarray(self.fn(np.asarray(t, dtype=float)), dtype=np.complex128)
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape, dtype=np.complex128)
        for m, c in self.modes.items():
            out += c * np.exp(1j * m * t)
        return out


class BoundaryDistribution:
    """density + sum of weighted derivative atoms on the circle or line."""

    def __init__(self, carrier, density=None, atoms=()):
        if carrier not in ("circle", "line"):
            raise DomainError("carrier must be 'circle' or 'line'")
        self.carrier = carrier
        self.density = density
        self.atoms = tuple(atoms)
        for a in self.atoms:
            if carrier == "circle" and not (0.0 <= a.location < 2.0 * np.pi):
                raise DomainError("circle atom locations must lie in [0, 2*pi)")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, carrier="circle"):
        return cls(carrier)

    @classmethod
    def dirac(cls, carrier, location, weight=1.0, order=0):
        return cls(carrier, atoms=[Atom(float(location), complex(weight), int(order))])

    @classmethod
    def circle_trig(cls, modes):
        """Density sum_m modes[m] e^{imt} on the circle (exact pairing)."""
        modes = {int(m): complex(c) for m, c in modes.items() if c != 0}
        real = all(
            np.isclose(modes.get(-m, 0.0), np.conj(c)) for m, c in modes.items()
        )
        return cls("circle", Density(None, modes=modes, real_valued=real))

    @classmethod
    def line_density(cls, fn, decay_order, features=(), real_valued=False):
        return cls("line", Density(fn, decay_order=float(decay_order), features=tuple(features), real_valued=real_valued))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self):
        return self.density is None and not self.atoms

    def is_real(self):
        dens_ok = True
        if self.density is not None:
            if self.density.modes is not None:
                dens_ok = all(
                    np.isclose(self.density.modes.get(-m, 0.0), np.conj(c))
                    for m, c in self.density.modes.items()
                )
            else:
                dens_ok = self.density.real_valued
        return dens_ok and all(abs(a.weight.imag) == 0.0 for a in self.atoms)

    def __add__(self, other):
        if not isinstance(other, BoundaryDistribution):
            return NotImplemented
        if other.carrier != self.carrier:
            raise CarrierMismatchError("cannot add distributions on different carriers")
        dens = self.density
        if dens is None:
            dens = other.density
        elif other.density is not None:
            a, b = self.density, other.density
            if a.modes is not None and b.modes is not None:
                modes = dict(a.modes)
                for m, c in b.modes.items():
                    modes[m] = modes.get(m, 0.0) + c
                dens = Density(None, modes=modes)
            else:
                dens = Density(
                    lambda t, a=a, b=b: a(t) + b(t),
                    decay_order=min(a.decay_order or np.inf, b.decay_order or np.inf),
                    features=tuple(a.features) + tuple(b.features),
                )
        return BoundaryDistribution(self.carrier, dens, self.atoms + other.atoms)

    def __mul__(self, scalar):
        scalar = complex(scalar)
        dens = None
        if self.density is not None:
            d = self.density
            if d.modes is not None:
                dens = Density(None, modes={m: scalar * c for m, c in d.modes.items()})
            else:
                dens = Density(lambda t, d=d: scalar * d(t), decay_order=d.decay_order, features=d.features)
        atoms = [Atom(a.location, scalar * a.weight, a.order) for a in self.atoms]
        return BoundaryDistribution(self.carrier, dens, atoms)

    __rmul__ = __mul__

    def _component(self, op):
        dens = None
        if self.density is not None:
            d = self.density
            if d.modes is not None:
                if op == "re":
                    modes = {}
                    for m, c in d.modes.items():
                        modes[m] = modes.get(m, 0.0) + 0.5 * c
                        modes[-m] = modes.get(-m, 0.0) + 0.5 * np.conj(c)
                else:
                    modes = {}
                    for m, c in d.modes.items():
                        modes[m] = modes.get(m, 0.0) + c / 2.0j
                        modes[-m] = modes.get(-m, 0.0) - np.conj(c) / 2.0j
                modes = {m: c for m, c in modes.items() if abs(c) > 0}
                dens = Density(None, modes=modes, real_valued=True)
            else:
                f = (lambda t, d=d: np.real(d(t)).astype(np.complex128)) if op == "re" else (
                    lambda t, d=d: np.imag(d(t)).astype(np.complex128)
                )
                dens = Density(f, decay_order=d.decay_order, features=d.features, real_valued=True)
        atoms = [
            Atom(a.location, complex(a.weight.real if op == "re" else a.weight.imag), a.order)
            for a in self.atoms
            if (a.weight.real if op == "re" else a.weight.imag) != 0.0
        ]
        return BoundaryDistribution(self.carrier, dens, atoms)

    def real_part(self):
        """Distribution pairing to Re<g, phi> for every real test function."""
        return self._component("re")

    def imag_part(self):
        return self._component("im")

    # -- pairing -----------------------------------------------------------

    def pair(self, phi, cfg=None, n_circle_nodes=_CIRCLE_NODES):
        """<g, phi> = integral of density * phi plus atomic terms."""
        if getattr(phi, "carrier", None) != self.carrier:
            raise CarrierMismatchError(
                f"distribution on {self.carrier} paired with test function on {getattr(phi, 'carrier', None)}"
            )
        total = 0.0 + 0.0j
        if self.density is not None:
            total += self._pair_density(phi, cfg, n_circle_nodes)
        for a in self.atoms:
            jet = phi.taylor(a.location, a.order)
            total += a.weight * (-1.0) ** a.order * jet.derivative(a.order)
        return total

    def _pair_density(self, phi, cfg, n_circle_nodes):
        d = self.density
        if self.carrier == "circle":
            if d.modes is not None and isinstance(phi, TrigTestFunction):
                return 2.0 * np.pi * sum(
                    c * phi.modes.get(-m, 0.0) for m, c in d.modes.items()
                )
            t = 2.0 * np.pi * (np.arange(n_circle_nodes) + 0.5) / n_circle_nodes
            return np.sum(d(t) * phi(t)) * (2.0 * np.pi / n_circle_nodes)
        # line carrier
        d_decay = d.decay_order if d.decay_order is not None else 0.0
        phi_decay = phi.decay_order if getattr(phi, "decay_order", None) is not None else 0.0
        if getattr(phi, "support", None) is not None:
            lo, hi = phi.support
            n = 512
            cfg = cfg or QuadratureConfig()
            totals = []
            for lev in range(cfg.refine_depth + 1):
                m = n << lev
                h = (hi - lo) / m
                t = lo + (np.arange(m) + 0.5) * h
                totals.append(np.sum(d(t) * phi(t)) * h)
            from .quadrature import _richardson

            return _richardson(totals)[0]
        if d_decay + phi_decay <= 1.0:
            raise DivergenceRiskError(
                f"combined decay {d_decay + phi_decay} <= 1 in line pairing"
            )
        features = tuple(d.features) + tuple(getattr(phi, "features", ()))
        res = integrate_line(lambda t: d(t) * phi(t), d_decay + phi_decay, cfg, features=features)
        return res.value

    def fourier_pairing(self, m, n_circle_nodes=_CIRCLE_NODES):
        """<g, e^{i m t}> on the circle; exact for trig densities and atoms."""
        if self.carrier != "circle":
            raise CarrierMismatchError("fourier_pairing is a circle-carrier operation")
        total = 0.0 + 0.0j
        if self.density is not None:
            d = self.density
            if d.modes is not None:
                total += 2.0 * np.pi * d.modes.get(-m, 0.0)
            else:
                t = 2.0 * np.pi * (np.arange(n_circle_nodes) + 0.5) / n_circle_nodes
                total += np.sum(d(t) * np.exp(1j * m * t)) * (2.0 * np.pi / n_circle_nodes)
        for a in self.atoms:
            total += a.weight * (-1.0) ** a.order * (1j * m) ** a.order * np.exp(1j * m * a.location)
        return total


# ---------------------------------------------------------------------------
# Kernel extensions into the domain


def _as_points(z):
    z = np.asarray(z, dtype=np.complex128)
    return z, z.shape


def poisson_extend_disk(g, z, cfg=None):
    """(1/2pi) <g, P_r(theta - .)>; harmonic in the disk."""
    if g.carrier != "circle":
        raise CarrierMismatchError("poisson_extend_disk needs a circle distribution")
    z, shape = _as_points(z)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("poisson_extend_disk requires |z| < 1")
    flat = z.reshape(-1)
    out = np.array(
        [g.pair(poisson_disk_kernel_fn(p), cfg, _circle_nodes_for(abs(p))) for p in flat]
    )
    out /= 2.0 * np.pi
    return out.reshape(shape) if shape else out[0]


def schwarz_extend_disk(g, z, cfg=None):
    """(1/2pi) <g, (P_r + i Q_r)(theta - .)>; holomorphic in z."""
    if g.carrier != "circle":
        raise CarrierMismatchError("schwarz_extend_disk needs a circle distribution")
    z, shape = _as_points(z)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("schwarz_extend_disk requires |z| < 1")
    flat = z.reshape(-1)
    out = np.array(
        [g.pair(schwarz_disk_kernel_fn(p), cfg, _circle_nodes_for(abs(p))) for p in flat]
    )
    out /= 2.0 * np.pi
    return out.reshape(shape) if shape else out[0]


def _circle_nodes_for(r):
    """Enough circle nodes to resolve the (1 - r) kernel peak spectrally."""
    if r < 0.9:
        return _CIRCLE_NODES
    return int(min(1 << 18, max(_CIRCLE_NODES, 48.0 / (1.0 - r))))


def poisson_extend_halfplane(g, z, cfg=None):
    """(1/pi) <g, P(x - ., y)> for z = x + iy in the upper half-plane."""
    if g.carrier != "line":
        raise CarrierMismatchError("poisson_extend_halfplane needs a line distribution")
    z, shape = _as_points(z)
    if np.any(np.imag(z) <= 0.0):
        raise DomainError("poisson_extend_halfplane requires Im z > 0")
    flat = z.reshape(-1)
    out = np.array([g.pair(poisson_halfplane_kernel_fn(p), cfg) for p in flat])
    out /= np.pi
    return out.reshape(shape) if shape else out[0]


def imbalance_constant_disk(g, cfg=None):
    """I = (i/2pi) <Im g, 1>; purely imaginary."""
    if g.carrier != "circle":
        raise CarrierMismatchError("imbalance_constant_disk needs a circle distribution")
    val = g.imag_part().pair(TrigTestFunction.one(), cfg)
    return 1j * np.real(val) / (2.0 * np.pi)


def imbalance_constant_halfplane(g, cfg=None):
    """I = (i/pi) <Im g, P(., 1)>; purely imaginary."""
    if g.carrier != "line":
        raise CarrierMismatchError("imbalance_constant_halfplane needs a line distribution")
    val = g.imag_part().pair(poisson_halfplane_kernel_fn(1j), cfg)
    return 1j * np.real(val) / np.pi
