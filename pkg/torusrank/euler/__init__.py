"""Symbolic continuants and the Euler equations of a surd family."""
from torusrank.euler.system import (
    build_euler_system,
    euler_report,
    full_system_rank,
    linear_diophantine_form,
    rational_dimension_upper_bound,
    select_branch,
    substitution_residual,
    symbolic_continuants,
)

__all__ = [
    "build_euler_system",
    "euler_report",
    "full_system_rank",
    "linear_diophantine_form",
    "rational_dimension_upper_bound",
    "select_branch",
    "substitution_residual",
    "symbolic_continuants",
]
