"""Positroids, positively oriented matroids and the positive MacPhersonian."""

from .errors import PositroidsError
from .matroid import Matroid, validate_bases, uniform, dual, restrict, contract, direct_sum, connected_components
from .oriented import Chirotope, SignedSet, chirotope_validate, reorient, is_positively_orientable, signed_circuits
from .positroid import PositroidVerdict, is_positroid, da_silva_criterion, grassmann_necklace, indicator_chirotope
from .realization import RationalMatrix, plucker_coordinates, moment_curve_matrix, matroid_of_matrix
from .enumeration import enumerate_matroids, enumerate_positroids, enumerate_poms
from .macphersonian import build_macphersonian_plus
from .poset import Poset, poset_diagnostics, order_complex_euler

__all__ = [
    "PositroidsError",
    "Matroid",
    "validate_bases",
    "uniform",
    "dual",
    "restrict",
    "contract",
    "direct_sum",
    "connected_components",
    "Chirotope",
    "SignedSet",
    "chirotope_validate",
    "reorient",
    "is_positively_orientable",
    "signed_circuits",
    "PositroidVerdict",
    "is_positroid",
    "da_silva_criterion",
    "grassmann_necklace",
    "indicator_chirotope",
    "RationalMatrix",
    "plucker_coordinates",
    "moment_curve_matrix",
    "matroid_of_matrix",
    "enumerate_matroids",
    "enumerate_positroids",
    "enumerate_poms",
    "build_macphersonian_plus",
    "Poset",
    "poset_diagnostics",
    "order_complex_euler",
]

__version__ = "0.1.0"
