"""Covariants of the four-qubit ground form.

Exact polynomial arithmetic over Q(i, sqrt 2), multiple transvectants, a
catalog of 170 fundamental covariants, the Hilbert series of the covariant
algebra and verification of the relations between them.
"""

from .algebra import FieldElem, I, R
from .catalog import Catalog, build_catalog, load_cache, open_catalog, source
from .poly import Poly, ground_form, multidegree, parse, render
from .transvect import transvectant

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "FieldElem",
    "I",
    "Poly",
    "R",
    "build_catalog",
    "ground_form",
    "load_cache",
    "multidegree",
    "open_catalog",
    "parse",
    "render",
    "source",
    "transvectant",
]
