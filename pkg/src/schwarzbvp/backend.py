"""Backend selection for the hot numeric kernels.

Set ``SCHWARZBVP_BACKEND=numpy`` to force the pure-numpy path, or
``SCHWARZBVP_BACKEND=numba`` to require the jitted path (raises if numba
is unavailable).  Default: numba when importable, numpy otherwise.
Both paths compute the same quantities; see benchmarks/backend_bench.py
for a timing comparison.
"""

import os

from . import _impl_numpy

_requested = os.environ.get("SCHWARZBVP_BACKEND", "").strip().lower()

if _requested == "numpy":
    _impl = _impl_numpy
    BACKEND_NAME = "numpy"
elif _requested == "numba":
    from . import _impl_numba as _impl

    BACKEND_NAME = "numba"
else:
    try:
        from . import _impl_numba as _impl

        BACKEND_NAME = "numba"
    except ImportError:  # pragma: no cover - exercised only without numba
        _impl = _impl_numpy
        BACKEND_NAME = "numpy"

polyval_zzbar = _impl.polyval_zzbar
cauchy_weighted_sum = _impl.cauchy_weighted_sum
disk_second_kernel_sum = _impl.disk_second_kernel_sum
schwarz_kernel_matrix = _impl.schwarz_kernel_matrix
halfplane_schwarz_matrix = _impl.halfplane_schwarz_matrix
poisson_line_matrix = _impl.poisson_line_matrix
weighted_dot = _impl.weighted_dot
