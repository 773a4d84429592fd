"""Partial multiplicity matrices of the Bratteli diagram of a torus."""
from torusrank.models.surd import BratteliMatrix, BratteliSchedule, CFExpansion


def step_matrix(entry: int) -> BratteliMatrix:
    """Rows (entry, 1) and (1, 0)."""
    return BratteliMatrix(rows=((entry, 1), (1, 0)))


def bratteli_schedule(exp: CFExpansion) -> BratteliSchedule:
    """One matrix per continued fraction entry, periodic like the expansion.

    Integer translates of theta give the same torus, so a negative leading
    entry is shifted to 0.
    """
    preperiod = [step_matrix(max(g, 0)) if i == 0 else step_matrix(g)
                 for i, g in enumerate(exp.preperiod)]
    return BratteliSchedule(
        preperiod=preperiod,
        period=[step_matrix(k) for k in exp.period]
    )
