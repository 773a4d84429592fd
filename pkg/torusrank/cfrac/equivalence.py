"""Morita equivalence and isomorphism of tori with real multiplication.

A torus is identified with its modulus theta. Two tori are Morita
equivalent when the continued fractions of their moduli share a tail, and
isomorphic when the moduli agree up to theta -> 1 - theta.
"""
import logging
from typing import Optional, Sequence

from torusrank.cfrac.expansion import expand
from torusrank.cfrac.surd import one_minus
from torusrank.models.surd import CFExpansion, QuadraticIrrational

logger = logging.getLogger(__name__)


def is_rotation(p1: Sequence[int], p2: Sequence[int]) -> bool:
    """True if p2 is a cyclic rotation of p1."""
    if len(p1) != len(p2):
        return False
    doubled = list(p1) + list(p1)
    target = list(p2)
    return any(doubled[i:i + len(p1)] == target for i in range(len(p1)))


def morita_equivalent(
    t1: QuadraticIrrational,
    t2: QuadraticIrrational,
    e1: Optional[CFExpansion] = None,
    e2: Optional[CFExpansion] = None
) -> bool:
    """Tail equivalence via cyclic equality of minimal periods.

    Precomputed expansions may be passed to avoid re-expanding.
    """
    e1 = e1 or expand(t1)
    e2 = e2 or expand(t2)
    result = is_rotation(e1.period, e2.period)
    logger.debug("morita %s ~ %s: %s", t1, t2, result)
    return result


def isomorphic_tori(t1: QuadraticIrrational, t2: QuadraticIrrational) -> bool:
    """True iff t2 = t1 or t2 = 1 - t1 exactly."""
    if t1.d != t2.d:
        return False
    return t2.key == t1.key or t2.key == one_minus(t1).key
