"""Quadratic irrationalities and their periodic continued fractions."""
from torusrank.cfrac.bratteli import bratteli_schedule
from torusrank.cfrac.equivalence import isomorphic_tori, morita_equivalent
from torusrank.cfrac.expansion import (
    convergents,
    evaluate_expansion,
    expand,
    normalize_expansion,
    periodic_quotient,
    reconstruct_verify,
)
from torusrank.cfrac.surd import canonicalize, is_square_free, square_free_decomposition

__all__ = [
    "bratteli_schedule",
    "canonicalize",
    "convergents",
    "evaluate_expansion",
    "expand",
    "is_square_free",
    "isomorphic_tori",
    "morita_equivalent",
    "normalize_expansion",
    "periodic_quotient",
    "reconstruct_verify",
    "square_free_decomposition",
]
