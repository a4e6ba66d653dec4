"""Linear Weingarten cyclic surfaces in Minkowski 3-space.

Curvature from second-order jets, rationalized Weingarten residuals and
their coefficient spectra along the foliation circles, a catalog of example
families, and a command-line verification harness.
"""
__version__ = "0.1.0"

from .lorentz import CausalClass, lorentz_cross, minkowski_dot  # noqa: E402
from .surface import Surface, WeingartenCoeffs, evaluate_grid  # noqa: E402
from .catalog import SurfaceSpec, build_surface  # noqa: E402
from .coeffs import coefficient_scan, extract_harmonics, extract_poly_coeffs  # noqa: E402

__all__ = [
    "CausalClass", "lorentz_cross", "minkowski_dot", "Surface", "WeingartenCoeffs",
    "evaluate_grid", "SurfaceSpec", "build_surface", "coefficient_scan",
    "extract_harmonics", "extract_poly_coeffs",
]
