"""Numba-jitted twins of the kernels in ``_impl_numpy``.

Loops are written out so numba can fuse them; results agree with the
numpy versions to rounding.
"""

import numpy as np
import numba as nb


@nb.njit(cache=True)
def polyval_zzbar(coeffs, z):
    nj, nk = coeffs.shape
    out = np.zeros(len(z), dtype=np.complex128)
    for m in range(len(z)):
        zm = z[m]
        zbm = np.conj(zm)
        acc = 0.0 + 0.0j
        for j in range(nj - 1, -1, -1):
            row = 0.0 + 0.0j
            for k in range(nk - 1, -1, -1):
                row = row * zbm + coeffs[j, k]
            acc = acc * zm + row
        out[m] = acc
    return out


@nb.njit(cache=True, parallel=True)
def cauchy_weighted_sum(fvals, nodes, weights, z):
    out = np.empty(len(z), dtype=np.complex128)
    for m in nb.prange(len(z)):
        acc = 0.0 + 0.0j
        zm = z[m]
        for i in range(len(nodes)):
            acc += weights[i] * fvals[i] / (nodes[i] - zm)
        out[m] = acc
    return out


@nb.njit(cache=True, parallel=True)
def disk_second_kernel_sum(fvals, nodes, weights, z):
    out = np.empty(len(z), dtype=np.complex128)
    for m in nb.prange(len(z)):
        acc = 0.0 + 0.0j
        zm = z[m]
        for i in range(len(nodes)):
            acc += weights[i] * np.conj(fvals[i]) / (1.0 - np.conj(nodes[i]) * zm)
        out[m] = zm * acc
    return out


@nb.njit(cache=True, parallel=True)
def schwarz_kernel_matrix(t, z):
    out = np.empty((len(z), len(t)), dtype=np.complex128)
    for m in nb.prange(len(z)):
        zm = z[m]
        for i in range(len(t)):
            zeta = np.exp(1j * t[i])
            out[m, i] = (zeta + zm) / (zeta - zm)
    return out


@nb.njit(cache=True, parallel=True)
def halfplane_schwarz_matrix(t, z):
    out = np.empty((len(z), len(t)), dtype=np.complex128)
    for m in nb.prange(len(z)):
        zm = z[m]
        for i in range(len(t)):
            out[m, i] = 1.0 / (t[i] - zm) - t[i] / (t[i] * t[i] + 1.0)
    return out


@nb.njit(cache=True, parallel=True)
def poisson_line_matrix(t, x, y):
    out = np.empty((len(x), len(t)), dtype=np.float64)
    for m in nb.prange(len(x)):
        for i in range(len(t)):
            dx = x[m] - t[i]
            out[m, i] = y[m] / (dx * dx + y[m] * y[m])
    return out


@nb.njit(cache=True)
def weighted_dot(matrix, vec):
    nm, ni = matrix.shape
    out = np.empty(nm, dtype=np.complex128)
    for m in range(nm):
        acc = 0.0 + 0.0j
        for i in range(ni):
            acc += matrix[m, i] * vec[i]
        out[m] = acc
    return out
