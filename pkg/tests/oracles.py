"""Independent oracles for the operator tests.

Exact monomial transforms come from Fourier expansion of the Cauchy
kernel in polar coordinates; the dense rules are plain midpoint polar
quadrature with singularity subtraction, sharing no code with the
package's production frames.
"""

import numpy as np


def t_disk_exact(j, k, z):
    """T_D(zeta^j conj(zeta)^k)(z) in closed form, |z| < 1."""
    z = np.asarray(z, dtype=complex)
    if j <= k:
        return z**j * np.conj(z) ** (k + 1) / (k + 1)
    return -(z ** (j - k - 1)) * (1.0 - np.abs(z) ** (2 * (k + 1))) / (k + 1)


def second_term_exact(j, k, z):
    """-(1/pi) iint z conj(zeta^j conj(zeta)^k) / (1 - conj(zeta) z) dA."""
    z = np.asarray(z, dtype=complex)
    if j <= k:
        return -(z ** (k - j + 1)) / (k + 1)
    return np.zeros_like(z)


def t_tilde_exact(j, k, z):
    return t_disk_exact(j, k, z) + second_term_exact(j, k, z)


def kappa_exact(j, k):
    """(1/2pi) iint zeta^{j-1} conj(zeta)^k dA."""
    return 1.0 / (2.0 * (k + 1)) if j == k + 1 else 0.0


def t_cal_exact(j, k, z):
    kap = kappa_exact(j, k)
    return t_tilde_exact(j, k, z) + (kap - np.conj(kap))


def t_cal_exact_poly(poly, z):
    """Closed-form symmetrized operator for a ZPolynomial source."""
    out = np.zeros_like(np.asarray(z, dtype=complex))
    for j, k, c in poly.terms():
        out = out + c * t_cal_exact(j, k, z)
    return out


def t_cal_sq_one_exact(z):
    """Frozen composition T_cal(T_cal(1)): (zb^2 - z^2)/2 + 1 - |z|^2.

    Derived by applying the operator to zbar - z using the monomial
    closed forms; cross-checked against dense polar quadrature.
    """
    z = np.asarray(z, dtype=complex)
    return (np.conj(z) ** 2 - z**2) / 2.0 + 1.0 - np.abs(z) ** 2


def dense_polar_grid(n_r=400, n_phi=800):
    rho = (np.arange(n_r) + 0.5) / n_r
    phi = 2.0 * np.pi * (np.arange(n_phi) + 0.5) / n_phi
    nodes = rho[:, None] * np.exp(1j * phi)[None, :]
    weights = (rho / n_r)[:, None] * np.full((1, n_phi), 2.0 * np.pi / n_phi)
    return nodes.ravel(), weights.ravel()


def dense_disk_integral(fn, n_r=400, n_phi=800):
    nodes, weights = dense_polar_grid(n_r, n_phi)
    return np.sum(fn(nodes) * weights)


def compose_t_cal_disk(inner_vals_fn, z, n_r=400, n_phi=800):
    """T_cal(g)(z) by a fixed-grid rule with Cauchy subtraction.

    inner_vals_fn supplies g on arbitrary points (typically an exact
    closed form or sampled production values).  Independent of the
    package's singularity-centered frames.
    """
    nodes, weights = dense_polar_grid(n_r, n_phi)
    g = inner_vals_fn(nodes)
    out = []
    for p in np.atleast_1d(np.asarray(z, dtype=complex)):
        gp = complex(inner_vals_fn(np.array([p]))[0])
        # T_D part with subtraction: iint (g - g(z))/(zeta - z) + g(z)(-pi zb)
        td = np.sum((g - gp) / (nodes - p) * weights) + gp * (-np.pi * np.conj(p))
        second = np.sum(p * np.conj(g) / (1.0 - np.conj(nodes) * p) * weights)
        kap = np.sum(g / nodes * weights) / (2.0 * np.pi)
        out.append(-(td + second) / np.pi + kap - np.conj(kap))
    return np.array(out)


def hp_cartesian_grid(R=8.0, n_x=192, n_y=80, y_min=1e-3):
    """Tensor grid on [-R, R] x (0, R] with geometric y-grading near 0."""
    x = -R + (np.arange(n_x) + 0.5) * (2.0 * R / n_x)
    wx = np.full(n_x, 2.0 * R / n_x)
    edges = [R]
    while edges[-1] > y_min:
        edges.append(edges[-1] / 2.0)
    edges = np.array(list(reversed(edges + [0.0])))
    ys, wys = [], []
    m = max(4, n_y // (len(edges) - 1))
    for a, b in zip(edges[:-1], edges[1:]):
        h = (b - a) / m
        ys.append(a + (np.arange(m) + 0.5) * h)
        wys.append(np.full(m, h))
    y = np.concatenate(ys)
    wy = np.concatenate(wys)
    return x, wx, y, wy


def compose_t_cal_halfplane(row_values_fn, z_list, R=8.0, n_x=192, delta=0.4):
    """T_cal(g)(z) on a fixed cartesian grid with local singular omission.

    row_values_fn(x_array, y) supplies g along horizontal lines.  The
    Cauchy singularities at z and at i are handled by subtracting the
    local mean value over a small ball (whose Cauchy integral vanishes
    by symmetry), so the rule needs no recentered frames.
    """
    x, wx, y, wy = hp_cartesian_grid(R=R, n_x=n_x)
    rows = [row_values_fn(x, yy) for yy in y]
    g = np.stack(rows)  # (n_y, n_x)
    zeta = x[None, :] + 1j * y[:, None]
    w2 = wy[:, None] * wx[None, :]
    g_at_i = complex(row_values_fn(np.array([0.0]), 1.0)[0])

    out = []
    for p in np.atleast_1d(np.asarray(z_list, dtype=complex)):
        gp = complex(row_values_fn(np.array([p.real]), p.imag)[0])
        near_p = np.abs(zeta - p) <= delta
        near_i = np.abs(zeta - 1j) <= delta
        term = (g - gp * near_p) / (zeta - p)
        term -= 0.5 * (g - g_at_i * near_i) / (zeta - 1j)
        term -= 0.5 * g / (zeta + 1j)
        term -= np.conj(g) / (np.conj(zeta) - p)
        term += 0.5 * np.conj(g - g_at_i * near_i) / (np.conj(zeta) + 1j)
        term += 0.5 * np.conj(g) / (np.conj(zeta) - 1j)
        out.append(-np.sum(term * w2) / np.pi)
    return np.array(out)
