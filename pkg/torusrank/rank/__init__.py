"""Rank estimates, dimension groups and the Q-curve table."""
from torusrank.rank.bridge import dimension_group_rank, rank_report
from torusrank.rank.classnumber import class_number_imag_quadratic
from torusrank.rank.curves import cm_curve, eb_expansion_check, explicit_curve, rational_family, theta_of_curve
from torusrank.rank.table1 import TABLE1, load_table1_windows, table1_reproduce

__all__ = [
    "TABLE1",
    "class_number_imag_quadratic",
    "cm_curve",
    "dimension_group_rank",
    "eb_expansion_check",
    "explicit_curve",
    "load_table1_windows",
    "rank_report",
    "rational_family",
    "table1_reproduce",
    "theta_of_curve",
]
