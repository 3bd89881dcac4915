"""Pure-numpy implementations of the hot numeric kernels.

Every function here has a numba twin in ``_impl_numba`` with identical
signature and semantics; ``backend`` picks one at import time.
"""

import numpy as np


def polyval_zzbar(coeffs, z):
    """Evaluate sum_{j,k} coeffs[j, k] * z**j * conj(z)**k elementwise.

    coeffs : complex128 2-D array, rows indexed by the z power.
    z : complex128 1-D array.
    """
    zb = np.conj(z)
    nj, nk = coeffs.shape
    out = np.zeros_like(z)
    for j in range(nj - 1, -1, -1):
        row = np.zeros_like(z)
        for k in range(nk - 1, -1, -1):
            row = row * zb + coeffs[j, k]
        out = out * z + row
    return out


def cauchy_weighted_sum(fvals, nodes, weights, z):
    """sum_i weights[i] * fvals[i] / (nodes[i] - z) for each z.

    Returns a complex array of the same length as ``z``.
    """
    out = np.empty(len(z), dtype=np.complex128)
    for m in range(len(z)):
        out[m] = np.sum(weights * fvals / (nodes - z[m]))
    return out


def disk_second_kernel_sum(fvals, nodes, weights, z):
    """sum_i w[i] * z * conj(f[i]) / (1 - conj(nodes[i]) * z) per z."""
    fc = np.conj(fvals)
    nc = np.conj(nodes)
    out = np.empty(len(z), dtype=np.complex128)
    for m in range(len(z)):
        out[m] = z[m] * np.sum(weights * fc / (1.0 - nc * z[m]))
    return out


def schwarz_kernel_matrix(t, z):
    """Matrix K[m, i] = (e^{i t_i} + z_m) / (e^{i t_i} - z_m)."""
    zeta = np.exp(1j * t)[None, :]
    zz = z[:, None]
    return (zeta + zz) / (zeta - zz)


def halfplane_schwarz_matrix(t, z):
    """Matrix G[m, i] = 1/(t_i - z_m) - t_i/(t_i^2 + 1)."""
    tt = t[None, :]
    zz = z[:, None]
    return 1.0 / (tt - zz) - tt / (tt * tt + 1.0)


def poisson_line_matrix(t, x, y):
    """Matrix P[m, i] = y_m / ((x_m - t_i)^2 + y_m^2)."""
    dx = x[:, None] - t[None, :]
    yy = y[:, None]
    return yy / (dx * dx + yy * yy)


def weighted_dot(matrix, vec):
    """matrix @ vec with complex128 accumulation."""
    return matrix.astype(np.complex128) @ vec.astype(np.complex128)
