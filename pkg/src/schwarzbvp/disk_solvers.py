"""Solvers for the Schwarz problems on the unit disk.

Solution fields are assembled term by term with per-term provenance:
point constants, the imbalance constant, the holomorphic reconstruction
of the order-0 boundary datum, weighted Schwarz pairings for the higher
orders, and the iterated area operator for the source.  Every term
carries an exact dbar, so derivative chains used inside the solvers are
exact; verification differentiates by finite differences independently.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .disk_operators import DiskAreaTerm, SourceTerm
from .distributions import BoundaryDistribution, imbalance_constant_disk, poisson_extend_disk
from .errors import SchwarzBVPError, UnsupportedOrderError
from .fields import (
    ComplexField,
    ConstantTerm,
    DiskKernelPairing,
    HolomorphicDiskExtension,
    PolynomialTerm,
    Term,
    ZbarPowerTerm,
)
from .polynomials import ZPolynomial, zplus_zbar_power

MAX_ORDER = 4


@dataclass(frozen=True)
class SchwarzProblem:
    """Problem data: domain, order, source, per-order boundary data, constants.

    ``boundary[k]`` prescribes Re of the k-th dbar derivative trace;
    ``constants[k]`` its imaginary part at the normalization point.
    """

    domain: str
    order: int
    source: object
    boundary: tuple
    constants: tuple
    kind: str = "higher_order"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1 or self.order > MAX_ORDER:
            raise UnsupportedOrderError(f"order {self.order} outside 1..{MAX_ORDER}")
        if len(self.boundary) != self.order:
            raise SchwarzBVPError(
                f"boundary data length {len(self.boundary)} != order {self.order}"
            )
        if len(self.constants) != self.order:
            raise SchwarzBVPError(
                f"point-condition length {len(self.constants)} != order {self.order}"
            )


@dataclass
class SchwarzSolution:
    problem: SchwarzProblem
    field: ComplexField
    inner_field: ComplexField = None
    constants: dict = None
    diagnostics: tuple = ()

    def __call__(self, z):
        return self.field.evaluate(z)


def _holomorphy_diagnostic(h_b, cfg, label="h"):
    """Flag inputs whose Poisson extension differs from the holomorphic
    reconstruction (i.e. h_b is not the trace of a holomorphic function)."""
    if h_b.is_zero:
        return ()
    ext = HolomorphicDiskExtension(h_b, cfg)
    pts = np.array([0.31 + 0.17j, -0.42 + 0.05j, 0.1 - 0.33j])
    gap = np.max(np.abs(ext.evaluate(pts) - poisson_extend_disk(h_b, pts, cfg)))
    if gap > 1e-6:
        return (
            f"{label}: Poisson extension is not holomorphic "
            f"(gap {gap:.2e}); input treated as Re-trace data",
        )
    return ()


def solve_first_order(f, h, c, cfg=None):
    """Solve dbar w = f, Re w_b = Re h_b, Im w(0) = c on the disk."""
    if not isinstance(f, SourceTerm):
        f = SourceTerm(f) if f is not None else SourceTerm.zero()
    if h is None:
        h = BoundaryDistribution.zero("circle")
    big_i = imbalance_constant_disk(h, cfg)
    terms = [ConstantTerm(1j * c), ConstantTerm(-big_i), HolomorphicDiskExtension(h, cfg)]
    if not f.is_zero:
        terms.append(DiskAreaTerm(f, 1, cfg))
    problem = SchwarzProblem("disk", 1, f, (h,), (float(c),), kind="first_order")
    return SchwarzSolution(
        problem,
        ComplexField("disk", terms),
        constants={"I": big_i},
        diagnostics=_holomorphy_diagnostic(h, cfg),
    )


def solve_higher_order(problem, cfg=None):
    """Solve the order-n problem: dbar^n w = f with per-order trace and
    point conditions.

    The point-constant polynomial sum starts at k = 0 (the constant
    i c_0), which the n = 1 reduction requires.
    """
    if problem.domain != "disk":
        raise SchwarzBVPError("solve_higher_order handles disk problems")
    n = problem.order
    f = problem.source if isinstance(problem.source, SourceTerm) else SourceTerm.zero()
    h0 = problem.boundary[0]
    if n == 1:
        sol = solve_first_order(f, h0, problem.constants[0], cfg)
        return SchwarzSolution(problem, sol.field, constants=sol.constants, diagnostics=sol.diagnostics)

    diagnostics = list(_holomorphy_diagnostic(h0, cfg, "h0"))
    for k in range(1, n):
        if not problem.boundary[k].is_real():
            raise SchwarzBVPError(f"boundary datum h_{k} must be real-valued")

    poly = ZPolynomial.zero()
    for k, ck in enumerate(problem.constants):
        poly = poly + (1j * ck / math.factorial(k)) * zplus_zbar_power(k)
    big_i = imbalance_constant_disk(h0, cfg)
    terms = [PolynomialTerm(poly), ConstantTerm(-big_i), HolomorphicDiskExtension(h0, cfg)]
    for k in range(1, n):
        if not problem.boundary[k].is_zero:
            terms.append(DiskKernelPairing(problem.boundary[k], k, cfg))
    if not f.is_zero:
        terms.append(DiskAreaTerm(f, n, cfg))
    return SchwarzSolution(
        problem,
        ComplexField("disk", terms),
        constants={"I": big_i},
        diagnostics=tuple(diagnostics),
    )


def make_higher_order_problem(n, source, boundary, constants, kind="higher_order"):
    src = source if isinstance(source, SourceTerm) else SourceTerm.zero()
    bnd = tuple(
        b if b is not None else BoundaryDistribution.zero("circle") for b in boundary
    )
    return SchwarzProblem("disk", n, src, bnd, tuple(float(c) for c in constants), kind=kind)


# ---------------------------------------------------------------------------
# Polyanalytic toolkit


class PolyanalyticField(ComplexField):
    """f(z) = sum_k conj(z)^k f_k(z) with holomorphic components f_k."""

    def __init__(self, components):
        comps = []
        for fk in components:
            if isinstance(fk, ComplexField):
                comps.append(fk)
            elif isinstance(fk, Term):
                comps.append(ComplexField("disk", [fk]))
            else:
                comps.append(ComplexField("disk", [ConstantTerm(fk)]))
        self.components = tuple(comps)
        terms = [
            ZbarPowerTerm(k, 1.0, fk)
            for k, fk in enumerate(self.components)
        ]
        super().__init__("disk", terms)

    @property
    def order(self):
        return len(self.components)


def assemble_polyanalytic(components):
    """Build sum_k conj(z)^k f_k(z) from holomorphic components."""
    return PolyanalyticField(components)


def exact_dbar(pf, j):
    """Exact dbar^j of a polyanalytic field by coefficient shifting.

    Orders j >= n give the zero field, by definition of the class.
    """
    if j < 0:
        raise UnsupportedOrderError("derivative order must be >= 0")
    n = pf.order
    if j == 0:
        return pf
    if j >= n:
        return PolyanalyticField([])
    comps = []
    for k in range(j, n):
        scale = math.factorial(k) / math.factorial(k - j)
        comps.append(pf.components[k].scaled(scale))
    return PolyanalyticField(comps)


# ---------------------------------------------------------------------------
# The recursive chain and the special case


def build_f_chain(h_list, c_list, n, cfg=None):
    """Fields f_1..f_n with dbar f_k = f_{k-1} (f_0 = 0), built bottom-up.

    f_k = i c_{k-1} - I_{k-1} + reconstruction(h_{k-1})
          - sum_{l=1}^{k-1} (-1)^l/l! conj(z)^l f_{k-l}.
    """
    if n < 1 or n > MAX_ORDER:
        raise UnsupportedOrderError(f"chain length {n} outside 1..{MAX_ORDER}")
    if len(h_list) != n or len(c_list) != n:
        raise SchwarzBVPError("chain needs n boundary data and n constants")
    fields = []
    for k in range(1, n + 1):
        h = h_list[k - 1] if h_list[k - 1] is not None else BoundaryDistribution.zero("circle")
        c = float(c_list[k - 1])
        big_i = imbalance_constant_disk(h, cfg)
        terms = [ConstantTerm(1j * c), ConstantTerm(-big_i), HolomorphicDiskExtension(h, cfg)]
        for ell in range(1, k):
            scale = -((-1.0) ** ell) / math.factorial(ell)
            terms.append(ZbarPowerTerm(ell, scale, fields[k - ell - 1]))
        fields.append(ComplexField("disk", terms))
    return fields


def solve_special_case(n, h, c, h0, h_rest, c_list, cfg=None):
    """First-order problem whose source f solves the order-n homogeneous
    problem with data (h0, h_rest, c_list); w is assembled from the
    polyanalytic representation w = w0 - sum (-1)^k/k! conj(z)^k dbar^{k-1} f.
    """
    if n < 1 or n > MAX_ORDER:
        raise UnsupportedOrderError(f"order {n} outside 1..{MAX_ORDER}")
    boundary = [h0 if h0 is not None else BoundaryDistribution.zero("circle")] + list(h_rest)
    inner_problem = make_higher_order_problem(n, SourceTerm.zero(), boundary, c_list)
    inner = solve_higher_order(inner_problem, cfg)
    f_field = inner.field

    derivs = [f_field]
    for _ in range(n - 1):
        derivs.append(derivs[-1].dbar())

    if h is None:
        h = BoundaryDistribution.zero("circle")
    big_i = imbalance_constant_disk(h, cfg)
    terms = [ConstantTerm(1j * c), ConstantTerm(-big_i), HolomorphicDiskExtension(h, cfg)]
    for k in range(1, n + 1):
        scale = -((-1.0) ** k) / math.factorial(k)
        terms.append(ZbarPowerTerm(k, scale, derivs[k - 1]))

    problem = SchwarzProblem(
        "disk",
        n,
        SourceTerm.zero(),
        tuple(boundary),
        tuple(float(x) for x in c_list),
        kind="special_case",
        extra={"h": h, "c": float(c)},
    )
    return SchwarzSolution(
        problem,
        ComplexField("disk", terms),
        inner_field=f_field,
        constants={"I": big_i, "I_tilde": imbalance_constant_disk(boundary[0], cfg)},
        diagnostics=_holomorphy_diagnostic(h, cfg) + inner.diagnostics,
    )
