"""Arithmetic complexity estimation from integer family lines."""
from torusrank.complexity.estimator import arithmetic_complexity
from torusrank.complexity.fitting import fit_lines_through_base
from torusrank.complexity.independence import fiber_dimension, independence_dimension
from torusrank.complexity.window import enumerate_window

__all__ = [
    "arithmetic_complexity",
    "enumerate_window",
    "fiber_dimension",
    "fit_lines_through_base",
    "independence_dimension",
]
