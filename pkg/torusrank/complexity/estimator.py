"""Arithmetic complexity estimate for a real multiplication torus."""
import logging
from typing import Optional

from torusrank.cfrac.expansion import expand
from torusrank.complexity.fitting import fit_lines_through_base
from torusrank.complexity.independence import fiber_dimension, independence_dimension
from torusrank.complexity.window import enumerate_window
from torusrank.errors import TorusRankValidationError
from torusrank.models.complexity import ComplexityReport, SearchConfig, SearchDiagnostics
from torusrank.models.surd import CFExpansion, QuadraticIrrational
from torusrank.store.cache import ExpansionCache

logger = logging.getLogger(__name__)


def is_normal_form(exp: CFExpansion) -> bool:
    """Palindromic period core closed by twice the leading entry."""
    if exp.m != 1:
        return False
    core = exp.period[:-1]
    return core == core[::-1] and exp.period[-1] == 2 * exp.preperiod[0]


def family_config(theta: QuadraticIrrational, cfg: SearchConfig) -> SearchConfig:
    """cfg with the family constants filled from theta.

    Raises:
        TorusRankValidationError: if cfg fixes constants theta does not share
    """
    for name in ("a", "b", "c"):
        fixed = getattr(cfg, name)
        if fixed is not None and fixed != getattr(theta, name):
            raise TorusRankValidationError(
                f"search constant {name}={fixed} does not match the base value {theta}",
                field=name,
                value=str(fixed)
            )
    return cfg.model_copy(update={"a": theta.a, "b": theta.b, "c": theta.c})


def arithmetic_complexity(
    theta: QuadraticIrrational,
    cfg: Optional[SearchConfig] = None,
    cache: Optional[ExpansionCache] = None
) -> ComplexityReport:
    """Estimate c = max(r, 1), clamped to n, from family lines through theta."""
    cfg = family_config(theta, cfg or SearchConfig())
    base = cache.expand(theta) if cache is not None else expand(theta)
    diagnostics = SearchDiagnostics(
        window_max=cfg.window_max,
        window_below_base=theta.D > cfg.window_max,
        normal_form=is_normal_form(base)
    )

    pool = enumerate_window(cfg, base, conjugate=theta.conjugate, cache=cache, diagnostics=diagnostics)
    lines = fit_lines_through_base(cfg, theta, base, pool, diagnostics, cache=cache)

    base_vector = tuple(base.vector()) + (theta.d,)
    members = sorted({member.vector for line in lines for member in line.members})
    r = independence_dimension(base_vector, members)
    n = base.n
    c = min(max(r, 1), n)
    fiber = fiber_dimension(base_vector, members, period_end=n - 1)
    logger.info("complexity of %s: r=%d c=%d over %d lines", theta, r, c, len(lines))

    return ComplexityReport(
        theta=theta,
        expansion=base,
        n=n,
        independence=r,
        c=c,
        fiber_dimension=fiber,
        witness_lines=lines,
        members_used=members,
        diagnostics=diagnostics
    )
