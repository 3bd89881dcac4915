"""Named catalog of boundary data and sources for the CLI spec files.

Circle densities are finite trigonometric sums (exact Fourier pairing);
line entries are rational densities with decay metadata; Htg entries are
rational holomorphic functions with poles in the closed lower half-plane
carrying their growth metadata.
"""

import numpy as np

from .distributions import BoundaryDistribution
from .errors import SpecFileError
from .halfplane import HtgFunction


def circle_density(form, params):
    k = int(params.get("k", 1))
    scale = complex(params.get("scale_re", 1.0), params.get("scale_im", 0.0))
    if form == "exp_it":
        return BoundaryDistribution.circle_trig({k: scale})
    if form == "cos":
        return BoundaryDistribution.circle_trig({k: 0.5 * scale, -k: 0.5 * scale})
    if form == "sin":
        return BoundaryDistribution.circle_trig({k: -0.5j * scale, -k: 0.5j * scale})
    if form == "trig":
        modes = {int(m): complex(c[0], c[1]) for m, c in params["modes"].items()}
        return BoundaryDistribution.circle_trig(modes)
    raise SpecFileError("boundary.form", f"unknown circle density '{form}'")


def line_density(form, params):
    scale = complex(params.get("scale_re", 1.0), params.get("scale_im", 0.0))
    if form == "inv_t_plus_i":
        return BoundaryDistribution.line_density(
            lambda t: scale / (t + 1j), decay_order=1.0
        )
    if form == "inv_sq_t_plus_i":
        return BoundaryDistribution.line_density(
            lambda t: scale / (t + 1j) ** 2, decay_order=2.0
        )
    if form == "poisson_sq":
        return BoundaryDistribution.line_density(
            lambda t: scale * (1.0 + t * t) ** -2.0,
            decay_order=4.0,
            real_valued=abs(scale.imag) == 0.0,
        )
    if form == "gauss":
        c = float(params.get("center", 0.0))
        return BoundaryDistribution.line_density(
            lambda t: scale * np.exp(-((t - c) ** 2)),
            decay_order=8.0,
            features=((c, 1.0),),
            real_valued=abs(scale.imag) == 0.0,
        )
    raise SpecFileError("boundary.form", f"unknown line density '{form}'")


def htg_function(form, params):
    scale = complex(params.get("scale_re", 1.0), params.get("scale_im", 0.0))
    if form == "zero":
        return None
    if form == "inv_z_plus_i":
        return HtgFunction(
            BoundaryDistribution.line_density(lambda t: scale / (t + 1j), decay_order=1.0),
            growth_N=1,
            growth_C=1.05 * abs(scale),
            closed_form=lambda z: scale / (z + 1j),
            decay_order=1.0,
            name=f"{scale:.3g}/(z+i)",
        )
    if form == "inv_sq_z_plus_i":
        # Im h(i) = Im(-scale/4) = 0 for real scale: an Htg0 entry
        return HtgFunction(
            BoundaryDistribution.line_density(lambda t: scale / (t + 1j) ** 2, decay_order=2.0),
            growth_N=2,
            growth_C=1.05 * abs(scale),
            closed_form=lambda z: scale / (z + 1j) ** 2,
            decay_order=2.0,
            name=f"{scale:.3g}/(z+i)^2",
        )
    if form == "i_inv_cube_z_plus_i":
        # i/(z+i)^3 at z=i gives i/(2i)^3 = -1/8: real, so Htg0
        return HtgFunction(
            BoundaryDistribution.line_density(
                lambda t: scale * 1j / (t + 1j) ** 3, decay_order=3.0
            ),
            growth_N=3,
            growth_C=1.05 * abs(scale),
            closed_form=lambda z: scale * 1j / (z + 1j) ** 3,
            decay_order=3.0,
            name=f"{scale:.3g}i/(z+i)^3",
        )
    raise SpecFileError("boundary.form", f"unknown htg entry '{form}'")
