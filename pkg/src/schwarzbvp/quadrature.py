"""Area and line quadrature for weakly singular integrands.

Design: every integral is reduced to midpoint tensor rules in polar
coordinates.  A Cauchy-type singularity is handled by centering the
polar frame on it -- the Jacobian rho drho dphi cancels the 1/|zeta - z|
blow-up exactly, leaving a smooth integrand.  The frame covers the whole
domain via the ray distance rho_max(phi) to the boundary, so no region
is ever cut out.  Panel counts double ``refine_depth`` times and the
totals are Richardson-extrapolated (composite midpoint has a clean even
error expansion); the last two extrapolants give the error estimate.

Half-plane integrals add a compactified tail (u = 1/rho) beyond the
truncation radius, plus a conservative bound for what lies beyond the
last graded panel.

Several singularities are separated by a smooth partition of unity; the
integrand is never evaluated where its weight vanishes.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DivergenceRiskError, DomainError, SingularityMisdeclarationError

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class QuadratureConfig:
    radial_panels: int = 48
    angular_panels: int = 144
    refine_depth: int = 2
    rel_tol: float = 1e-6
    halfplane_radius: float = 8.0
    angular_offset: float = 0.0

    def __post_init__(self):
        if self.radial_panels < 16 or self.angular_panels < 16:
            raise DomainError("panel counts must be >= 16")
        if not (0.0 < self.rel_tol < 1.0):
            raise DomainError("rel_tol must lie in (0, 1)")
        if self.halfplane_radius < 4.0:
            raise DomainError("halfplane truncation radius must be >= 4")
        if self.refine_depth < 1:
            raise DomainError("refine_depth must be >= 1")

    def scaled(self, factor):
        """Config with panel counts scaled by ``factor`` (>= minimums)."""
        return QuadratureConfig(
            radial_panels=max(16, int(self.radial_panels * factor)),
            angular_panels=max(16, int(self.angular_panels * factor)),
            refine_depth=self.refine_depth,
            rel_tol=self.rel_tol,
            halfplane_radius=self.halfplane_radius,
            angular_offset=self.angular_offset,
        )


@dataclass(frozen=True)
class IntegralResult:
    value: complex
    error_estimate: float
    tail_estimate: float = 0.0
    warnings: tuple = field(default_factory=tuple)

    def __complex__(self):
        return complex(self.value)


def _richardson(totals):
    """Extrapolate a sequence of midpoint totals at h, h/2, h/4, ...

    Returns (value, error_estimate).
    """
    t = [list(totals)]
    n = len(totals)
    for j in range(1, n):
        prev = t[j - 1]
        t.append([prev[i + 1] + (prev[i + 1] - prev[i]) / (4.0**j - 1.0) for i in range(n - j)])
    value = t[-1][0]
    if n >= 3:
        err = abs(value - t[-2][1])
    else:
        err = abs(value - t[0][-1])
    return value, err


# Absolute scale floor for tolerance warnings: estimates below
# rel_tol * this are noise regardless of the integral's own size (every
# acceptance budget in this package is an absolute one on O(1) values).
WARN_SCALE_FLOOR = 1.0


def _finalize(totals, cfg, tail_estimate=0.0, extra_warnings=()):
    value, err = _richardson(totals)
    warnings = list(extra_warnings)
    scale = max(abs(value), WARN_SCALE_FLOOR)
    if err > cfg.rel_tol * scale:
        warnings.append(f"tolerance not met: est {err:.2e} vs target {cfg.rel_tol * scale:.2e}")
    return IntegralResult(value, float(err), float(tail_estimate), tuple(warnings))


def _midpoint_1d(edges, counts, level):
    """Midpoint nodes/weights on consecutive [edges[i], edges[i+1]] panels."""
    xs, ws = [], []
    for i, n0 in enumerate(counts):
        a, b = edges[i], edges[i + 1]
        if b <= a:
            continue
        n = n0 << level
        h = (b - a) / n
        xs.append(a + (np.arange(n) + 0.5) * h)
        ws.append(np.full(n, h))
    if not xs:
        return np.empty(0), np.empty(0)
    return np.concatenate(xs), np.concatenate(ws)


def _graded_edges_to_zero(scale, n_panels_cap=40):
    """Panel edges on [0, 1] geometrically refined toward 0 down to ``scale``."""
    scale = min(max(scale, 1e-14), 0.5)
    edges = [1.0]
    x = 0.5
    while x > scale and len(edges) < n_panels_cap:
        edges.append(x)
        x *= 0.5
    edges.append(x)
    edges.append(0.0)
    return list(reversed(edges))


def _eval_masked(integrand, nodes, weights):
    """Evaluate integrand where weight is nonzero; verify finiteness there."""
    flat_nodes = nodes.ravel()
    flat_w = weights.ravel()
    vals = np.zeros(flat_nodes.shape, dtype=np.complex128)
    live = flat_w != 0.0
    if np.any(live):
        vals[live] = integrand(flat_nodes[live])
    if not np.all(np.isfinite(vals[live])):
        raise SingularityMisdeclarationError(
            "non-finite integrand value at a node not covered by a declared singularity"
        )
    return np.sum(vals * flat_w)


def _smoothstep(x):
    """C-infinity step: 0 for x <= 0, 1 for x >= 1."""
    x = np.clip(x, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        a = np.where(x > 0.0, np.exp(-1.0 / np.maximum(x, 1e-300)), 0.0)
        b = np.where(x < 1.0, np.exp(-1.0 / np.maximum(1.0 - x, 1e-300)), 0.0)
    return a / (a + b)


def _bump_weight(dist, r0, r1):
    """1 inside r0, 0 outside r1, smooth in between."""
    return _smoothstep((r1 - dist) / (r1 - r0))


# ---------------------------------------------------------------------------
# Unit disk


def _disk_rho_max(center, phi):
    b = np.real(np.conj(center) * np.exp(1j * phi))
    disc = b * b + (1.0 - abs(center) ** 2)
    return -b + np.sqrt(np.maximum(disc, 0.0))


def _disk_frame_total(integrand, center, cfg, level, radial_edges=None, weight_fn=None):
    nphi = cfg.angular_panels << level
    phi = _TWO_PI * (np.arange(nphi) + 0.5 + cfg.angular_offset) / nphi
    rho_max = _disk_rho_max(center, phi)
    if radial_edges is None:
        u, du = _midpoint_1d([0.0, 1.0], [cfg.radial_panels], level)
    else:
        edges, counts = radial_edges
        u, du = _midpoint_1d(edges, counts, level)
    e_iphi = np.exp(1j * phi)
    nodes = center + (u[:, None] * rho_max[None, :]) * e_iphi[None, :]
    weights = (u * du)[:, None] * (rho_max**2)[None, :] * (_TWO_PI / nphi)
    if weight_fn is not None:
        weights = weights * weight_fn(nodes)
    return _eval_masked(integrand, nodes, weights)


def _patch_radii(s, others, boundary_clearance):
    d = boundary_clearance
    for o in others:
        d = min(d, abs(s - o))
    d = min(d, 0.8)
    return 0.35 * d, 0.75 * d


def integrate_disk_singular(integrand, singularities, cfg=None):
    """Area integral over the unit disk with declared Cauchy-type singularities.

    integrand : callable on complex arrays.
    singularities : points in the open disk where up-to-first-order
        blow-up is expected.
    """
    cfg = cfg or QuadratureConfig()
    sings = [complex(s) for s in (singularities or [])]
    for s in sings:
        if abs(s) >= 1.0:
            raise DomainError("declared singularity outside the open unit disk")

    if len(sings) <= 1:
        center = sings[0] if sings else 0.0
        totals = [
            _disk_frame_total(integrand, center, cfg, lev) for lev in range(cfg.refine_depth + 1)
        ]
        return _finalize(totals, cfg)

    # Partition of unity: one recentered frame per singularity plus a
    # smooth remainder integrated in the standard frame.
    radii = [_patch_radii(s, [o for o in sings if o != s], 1.0 - abs(s)) for s in sings]

    def chi(i, nodes):
        r0, r1 = radii[i]
        return _bump_weight(np.abs(nodes - sings[i]), r0, r1)

    def remainder_weight(nodes):
        w = np.ones(nodes.shape)
        for i in range(len(sings)):
            w = w - chi(i, nodes)
        return np.maximum(w, 0.0)

    totals = []
    for lev in range(cfg.refine_depth + 1):
        total = _disk_frame_total(integrand, 0.0, cfg, lev, weight_fn=remainder_weight)
        for i, s in enumerate(sings):
            total += _disk_frame_total(
                integrand, s, cfg, lev, weight_fn=lambda nodes, i=i: chi(i, nodes)
            )
        totals.append(total)
    return _finalize(totals, cfg)


# ---------------------------------------------------------------------------
# Upper half-plane (truncated region + compactified tail)


def _halfplane_arcs(center, R):
    """Sub-arcs of [0, 2pi) on which the binding boundary is smooth."""
    c = complex(center)
    if c.imag <= 1e-14:
        return [(0.0, np.pi, "circle", 1.0)]
    a1 = np.angle(-R - c) % _TWO_PI
    a2 = np.angle(R - c) % _TWO_PI
    return [
        (0.0, np.pi, "circle", 0.5),
        (np.pi, a1, "circle", 1.0 / 6.0),
        (a1, a2, "line", 1.0 / 6.0),
        (a2, _TWO_PI, "circle", 1.0 / 6.0),
    ]


def _halfplane_frame_nodes(center, cfg, level, grade_scale=None):
    """Nodes and weights of the truncated-region frame centered at ``center``."""
    R = cfg.halfplane_radius
    c = complex(center)
    if grade_scale is None:
        redges, rcounts = [0.0, 1.0], [cfg.radial_panels]
    else:
        redges = _graded_edges_to_zero(grade_scale)
        rcounts = [max(6, cfg.radial_panels // 8)] * (len(redges) - 1)
    u, du = _midpoint_1d(redges, rcounts, level)
    all_nodes, all_weights = [], []
    for a, b, kind, share in _halfplane_arcs(c, R):
        if b <= a + 1e-15:
            continue
        nphi = max(8, int(cfg.angular_panels * share)) << level
        h = (b - a) / nphi
        phi = a + (np.arange(nphi) + 0.5 + cfg.angular_offset) * h
        bb = np.real(np.conj(c) * np.exp(1j * phi))
        rho_circ = -bb + np.sqrt(np.maximum(bb * bb + (R * R - abs(c) ** 2), 0.0))
        if kind == "line":
            sin_phi = np.sin(phi)
            rho_line = np.where(sin_phi < 0, -c.imag / np.minimum(sin_phi, -1e-300), np.inf)
            rho_max = np.minimum(rho_circ, rho_line)
        else:
            rho_max = rho_circ
        nodes = c + (u[:, None] * rho_max[None, :]) * np.exp(1j * phi)[None, :]
        weights = (u * du)[:, None] * (rho_max**2)[None, :] * h
        all_nodes.append(nodes.ravel())
        all_weights.append(weights.ravel())
    return np.concatenate(all_nodes), np.concatenate(all_weights)


def _halfplane_frame_total(integrand, center, cfg, level, grade_scale=None, weight_fn=None):
    R = cfg.halfplane_radius
    c = complex(center)
    total = 0.0 + 0.0j
    if grade_scale is None:
        redges, rcounts = [0.0, 1.0], [cfg.radial_panels]
    else:
        redges = _graded_edges_to_zero(grade_scale)
        rcounts = [max(6, cfg.radial_panels // 8)] * (len(redges) - 1)
    u, du = _midpoint_1d(redges, rcounts, level)
    for a, b, kind, share in _halfplane_arcs(c, R):
        if b <= a + 1e-15:
            continue
        nphi = max(8, int(cfg.angular_panels * share)) << level
        h = (b - a) / nphi
        phi = a + (np.arange(nphi) + 0.5 + cfg.angular_offset) * h
        bb = np.real(np.conj(c) * np.exp(1j * phi))
        rho_circ = -bb + np.sqrt(np.maximum(bb * bb + (R * R - abs(c) ** 2), 0.0))
        if kind == "line":
            sin_phi = np.sin(phi)
            rho_line = np.where(sin_phi < 0, -c.imag / np.minimum(sin_phi, -1e-300), np.inf)
            rho_max = np.minimum(rho_circ, rho_line)
        else:
            rho_max = rho_circ
        nodes = c + (u[:, None] * rho_max[None, :]) * np.exp(1j * phi)[None, :]
        weights = (u * du)[:, None] * (rho_max**2)[None, :] * h
        if weight_fn is not None:
            weights = weights * weight_fn(nodes)
        total += _eval_masked(integrand, nodes, weights)
    return total


def _halfplane_tail_nodes(cfg, level):
    R = cfg.halfplane_radius
    edges = [(1.0 / R) * 0.5**k for k in range(_TAIL_PANELS + 1)]
    edges = list(reversed(edges))
    u, du = _midpoint_1d(edges, [4] * _TAIL_PANELS, level)
    nphi = max(16, cfg.angular_panels // 2) << level
    h = np.pi / nphi
    phi = (np.arange(nphi) + 0.5 + cfg.angular_offset) * h
    nodes = np.exp(1j * phi)[None, :] / u[:, None]
    weights = np.broadcast_to((du / u**3)[:, None] * h, nodes.shape)
    return nodes.ravel(), weights.ravel().copy()


_TAIL_PANELS = 26


def _halfplane_tail_total(integrand, cfg, level):
    """Integral over the half-plane beyond |zeta| = R via u = 1/rho."""
    R = cfg.halfplane_radius
    edges = [(1.0 / R) * 0.5**k for k in range(_TAIL_PANELS + 1)]
    edges = list(reversed(edges))
    u, du = _midpoint_1d(edges, [4] * _TAIL_PANELS, level)
    nphi = max(16, cfg.angular_panels // 2) << level
    h = np.pi / nphi
    phi = (np.arange(nphi) + 0.5 + cfg.angular_offset) * h
    nodes = np.exp(1j * phi)[None, :] / u[:, None]
    weights = (du / u**3)[:, None] * np.full((1, nphi), h)
    return _eval_masked(integrand, nodes, np.broadcast_to(weights, nodes.shape).copy())


def _halfplane_tail_bound(integrand, cfg, decay_order):
    rho_far = cfg.halfplane_radius * 2.0**_TAIL_PANELS
    phi = np.linspace(0.15, np.pi - 0.15, 7)
    samples = np.abs(integrand(rho_far * np.exp(1j * phi)))
    c_est = float(np.max(samples)) * rho_far**decay_order
    return np.pi * c_est * rho_far ** (2.0 - decay_order) / (decay_order - 2.0)


def integrate_halfplane(integrand, singularities, decay_order, cfg=None):
    """Area integral over the upper half-plane.

    Requires |integrand| <= C |zeta|^{-decay_order} at infinity with
    decay_order > 2; interior singular handling as in the disk rule.
    """
    cfg = cfg or QuadratureConfig()
    if decay_order <= 2.0:
        raise DivergenceRiskError(f"decay order {decay_order} <= 2; integral may diverge")
    R = cfg.halfplane_radius
    sings = [complex(s) for s in (singularities or [])]
    for s in sings:
        if s.imag <= 0:
            raise DomainError("declared singularity must lie in the open upper half-plane")
        if abs(s) > 0.85 * R:
            raise DomainError("declared singularity too close to the truncation radius")

    if len(sings) <= 1:
        center = sings[0] if sings else 0.0
        totals = [
            _halfplane_frame_total(integrand, center, cfg, lev) + _halfplane_tail_total(integrand, cfg, lev)
            for lev in range(cfg.refine_depth + 1)
        ]
        return _finalize(totals, cfg, _halfplane_tail_bound(integrand, cfg, decay_order))

    radii = [
        _patch_radii(s, [o for o in sings if o != s], min(s.imag, R - abs(s))) for s in sings
    ]

    def chi(i, nodes):
        r0, r1 = radii[i]
        return _bump_weight(np.abs(nodes - sings[i]), r0, r1)

    def remainder_weight(nodes):
        w = np.ones(nodes.shape)
        for i in range(len(sings)):
            w = w - chi(i, nodes)
        return np.maximum(w, 0.0)

    totals = []
    for lev in range(cfg.refine_depth + 1):
        total = _halfplane_frame_total(integrand, 0.0, cfg, lev, weight_fn=remainder_weight)
        for i, s in enumerate(sings):
            total += _halfplane_frame_total(
                integrand, s, cfg, lev, weight_fn=lambda nodes, i=i: chi(i, nodes)
            )
        total += _halfplane_tail_total(integrand, cfg, lev)
        totals.append(total)
    return _finalize(totals, cfg, _halfplane_tail_bound(integrand, cfg, decay_order))


def halfplane_cauchy(integrand, pole, decay_order, cfg=None):
    """Integral over the half-plane of an integrand with one Cauchy pole.

    ``pole`` may lie anywhere: in the upper half-plane it becomes the
    frame center; on or below the axis the frame is centered at the
    nearest boundary point with the radial direction graded at the
    pole-distance scale, which resolves the near-boundary peak.
    """
    cfg = cfg or QuadratureConfig()
    if decay_order <= 2.0:
        raise DivergenceRiskError(f"decay order {decay_order} <= 2; integral may diverge")
    w = complex(pole)
    R = cfg.halfplane_radius
    if abs(w) > 0.8 * R:
        # pole well separated from the truncated region: no frame needed
        center, grade = 0.0j, None
    elif w.imag > 1e-12:
        center = w
        grade = None
    else:
        center = complex(w.real, 0.0)
        grade = max(abs(w.imag), 1e-3) / R
    totals = [
        _halfplane_frame_total(integrand, center, cfg, lev, grade_scale=grade)
        + _halfplane_tail_total(integrand, cfg, lev)
        for lev in range(cfg.refine_depth + 1)
    ]
    return _finalize(totals, cfg, _halfplane_tail_bound(integrand, cfg, decay_order))


# ---------------------------------------------------------------------------
# Line integrals over R


def integrate_line(integrand, decay_order, cfg=None, features=()):
    """Integral over the real line of a decaying integrand.

    ``features`` lists (center, scale) pairs around which the integrand
    varies on a short scale (e.g. a Poisson kernel peak); these get their
    own refined panels.  Tails beyond the truncation span are integrated
    under u = 1/t, so power-law tails are captured, and a bound on the
    remainder beyond the last graded panel is reported as the tail
    estimate.
    """
    cfg = cfg or QuadratureConfig()
    if decay_order <= 1.0:
        raise DivergenceRiskError(f"decay order {decay_order} <= 1; integral may diverge")
    span = cfg.halfplane_radius
    for c, s in features:
        span = max(span, abs(c) + 10.0 * abs(s))

    breakpoints = [-span, span]
    feature_intervals = []
    for c, s in features:
        s = max(abs(s), 1e-6)
        lo, hi = max(-span, c - 8.0 * s), min(span, c + 8.0 * s)
        if hi > lo:
            feature_intervals.append((lo, hi))
            breakpoints.extend([lo, hi])
    edges = sorted(set(breakpoints))
    counts = []
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        in_feature = any(lo <= mid <= hi for lo, hi in feature_intervals)
        counts.append(96 if in_feature else cfg.radial_panels)

    tail_edges = [(1.0 / span) * 0.5**k for k in range(_TAIL_PANELS + 1)]
    tail_edges = list(reversed(tail_edges))
    tail_counts = [4] * _TAIL_PANELS

    totals = []
    for lev in range(cfg.refine_depth + 1):
        x, wx = _midpoint_1d(edges, counts, lev)
        total = _eval_masked(lambda t: integrand(np.real(t)), x.astype(complex), wx)
        u, wu = _midpoint_1d(tail_edges, tail_counts, lev)
        for sign in (1.0, -1.0):
            total += _eval_masked(
                lambda t: integrand(np.real(t)),
                (sign / u).astype(complex),
                wu / u**2,
            )
        totals.append(total)

    t_far = span * 2.0**_TAIL_PANELS
    c_est = max(abs(complex(np.asarray(integrand(np.array([t_far]))).ravel()[0])),
                abs(complex(np.asarray(integrand(np.array([-t_far]))).ravel()[0]))) * t_far**decay_order
    tail_bound = 2.0 * c_est * t_far ** (1.0 - decay_order) / (decay_order - 1.0)
    return _finalize(totals, cfg, tail_bound)
