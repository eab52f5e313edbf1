"""Dispersion function and spectral data of the BGK equation with affine collision frequency."""

from ._core import *  # noqa: F401,F403
from ._core import QuadratureScheme, make_params


def scheme(a, nodes=200):
    """Quadrature scheme for collision-frequency slope ``a``."""
    return QuadratureScheme(make_params(a), nodes)
