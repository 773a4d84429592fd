"""Rank estimates from the arithmetic complexity of a curve's torus.

For a curve whose torus has modulus theta with expansion of length n,

    rank estimate = c - 1,  rank bound = n - 1,

and for a Q-curve E_CM^(-p,1) the full rank is 2 h_K times the estimate,
with h_K the class number of Q(sqrt(-p)).
"""
import logging
from typing import Optional

from torusrank.cfrac.expansion import periodic_quotient
from torusrank.complexity.estimator import arithmetic_complexity
from torusrank.models.complexity import SearchConfig
from torusrank.models.rank import CMCurve, GeneratorSet, RankReport
from torusrank.rank.classnumber import class_number_imag_quadratic
from torusrank.rank.curves import Curve, theta_of_curve
from torusrank.store.cache import ExpansionCache

logger = logging.getLogger(__name__)


def rank_report(
    desc: Curve,
    cfg: Optional[SearchConfig] = None,
    cache: Optional[ExpansionCache] = None
) -> RankReport:
    """Complexity, rank estimate and rank bound for one curve descriptor."""
    cfg = cfg or SearchConfig()
    theta = theta_of_curve(desc)
    report = arithmetic_complexity(theta, cfg, cache=cache)
    exp = report.expansion

    twist = periodic_quotient(exp, theta.d)
    if twist.key == theta.key:
        twist_report = report
    else:
        twist_report = arithmetic_complexity(twist, cfg, cache=cache)

    class_number = rank_full = None
    if isinstance(desc, CMCurve):
        class_number = class_number_imag_quadratic(desc.p)
        rank_full = 2 * class_number * (report.c - 1)

    logger.info("rank of %s: c=%d n=%d", theta, report.c, exp.n)
    return RankReport(
        curve=desc,
        theta=theta,
        expansion=exp,
        m=exp.m,
        n=exp.n,
        c=report.c,
        rank_estimate=report.c - 1,
        rank_bound=exp.n - 1,
        class_number=class_number,
        rank_full=rank_full,
        twist_n=twist_report.n,
        twist_c=twist_report.c,
        twist_rank_estimate=twist_report.c - 1,
        twist_rank_bound=twist_report.n - 1,
        complexity=report
    )


def dimension_group_rank(gens: GeneratorSet) -> int:
    """Rank s - t + 1 of the dimension group of a circle subgroup."""
    return gens.s - gens.t + 1
