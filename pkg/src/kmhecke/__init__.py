"""Exact Iwahori-Hecke algebra arithmetic for Kac-Moody root data."""

from .blalgebra import BLAlgebra, BLElt, bl_algebra
from .completed import CompletedElt, completed_mul, t_orbit_series, z_orbit_series
from .errors import KMHeckeError, LengthCapExceeded, MathDomainError
from .heckew import HeckeW, HWElt, hecke_w
from .laurent import LaurentT
from .rootdata import RootDatum, bundled_datum, load_datum
from .suites import SUITES, SuiteConfig, run_suite
from .waf import classify
from .weyl import WeylElt, WeylGroup, weyl_group

__all__ = [
    "BLAlgebra", "BLElt", "bl_algebra", "CompletedElt", "completed_mul", "t_orbit_series",
    "z_orbit_series", "KMHeckeError", "LengthCapExceeded", "MathDomainError", "HeckeW",
    "HWElt", "hecke_w", "LaurentT", "RootDatum", "bundled_datum", "load_datum", "SUITES",
    "SuiteConfig", "run_suite", "classify", "WeylElt", "WeylGroup", "weyl_group",
]
__version__ = "0.1.0"
