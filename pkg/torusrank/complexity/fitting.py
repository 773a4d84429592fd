"""Fit integer family lines through the base expansion.

Window members are bucketed by their primitive entry direction from the
base, so each bucket is one candidate line entries(t) = base + t*direction.
The radicand x(t) is interpolated through the base and two bucket members;
the fit confirming most members wins. The line is then re-parameterized
t = h*u with the least h making every coefficient of x(h*u) integral.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from torusrank.cfrac.expansion import expand
from torusrank.cfrac.surd import is_square_free
from torusrank.models.complexity import FamilyLine, FamilyMember, SearchConfig, SearchDiagnostics
from torusrank.models.surd import CFExpansion, QuadraticIrrational
from torusrank.store.cache import ExpansionCache

logger = logging.getLogger(__name__)

Candidate = Tuple[int, int, QuadraticIrrational, CFExpansion]


def primitive_direction(delta: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Split a nonzero integer vector into (primitive direction, t).

    The direction's first nonzero component is positive and delta = t * direction.
    """
    g = 0
    for v in delta:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("delta must be nonzero")
    lead = next(v for v in delta if v)
    if lead < 0:
        g = -g
    return tuple(v // g for v in delta), g


def interpolate(x0: int, p1: Tuple[int, int], p2: Tuple[int, int]) -> Tuple[Fraction, Fraction]:
    """(r1, r2) with x(t) = x0 + r1 t + r2 t^2 through (0, x0), p1, p2."""
    (t1, x1), (t2, x2) = p1, p2
    r2 = Fraction((x2 - x0) * t1 - (x1 - x0) * t2, t1 * t2 * (t2 - t1))
    r1 = (Fraction(x1 - x0) - r2 * t1 * t1) / t1
    return r1, r2


def integral_step(r1: Fraction, r2: Fraction) -> int:
    """Least h >= 1 with r1*h and r2*h^2 integral."""
    limit = r1.denominator * r2.denominator
    for h in range(1, limit + 1):
        if (r1 * h).denominator == 1 and (r2 * h * h).denominator == 1:
            return h
    return limit


def _bucket(base_vector: List[int], pool: Sequence[Tuple[QuadraticIrrational, CFExpansion]]) -> Dict[Tuple[int, ...], List[Candidate]]:
    buckets: Dict[Tuple[int, ...], List[Candidate]] = {}
    for theta, exp in pool:
        delta = [v - w for v, w in zip(exp.vector(), base_vector)]
        if not any(delta):
            continue
        direction, t = primitive_direction(delta)
        buckets.setdefault(direction, []).append((t, theta.d, theta, exp))
    return buckets


def _best_fit(x0: int, candidates: List[Candidate], width: int) -> Optional[Tuple[Fraction, Fraction, int]]:
    """Interpolation with the most confirmed candidates; earliest pair wins ties."""
    nearest = sorted(candidates, key=lambda cand: (abs(cand[0]), cand[0]))[:width]
    best = None
    for c1, c2 in combinations(nearest, 2):
        r1, r2 = interpolate(x0, (c1[0], c1[1]), (c2[0], c2[1]))
        hits = sum(1 for t, x, _, _ in candidates if x0 + r1 * t + r2 * t * t == x)
        if best is None or hits > best[2]:
            best = (r1, r2, hits)
    return best


def _expansion(theta: QuadraticIrrational, cache: Optional[ExpansionCache]) -> CFExpansion:
    return cache.expand(theta) if cache is not None else expand(theta)


def _unbroken_run(
    cfg: SearchConfig,
    theta: QuadraticIrrational,
    base: CFExpansion,
    line: FamilyLine,
    span: Tuple[int, int],
    cache: Optional[ExpansionCache]
) -> Tuple[int, int, List[int], int]:
    """Walk out from u = 0 until a square-free in-window x(u) leaves the line.

    Returns (lo, hi, skipped, breaks): the open interval (lo, hi) of
    parameters that stay on the line, the non-square-free parameters inside
    it and how many directions were cut short.
    """
    on_line = {member.t for member in line.members}
    b2 = theta.b * theta.b
    skipped: List[int] = []
    bounds = []
    breaks = 0
    for step, end in ((-1, span[0]), (1, span[1])):
        cut = end + step
        for u in range(step, end + step, step):
            if u in on_line:
                continue
            x = line.radicand_at(u)
            if x < 2 or b2 * x > cfg.window_max:
                continue
            if not is_square_free(x):
                skipped.append(u)
                continue
            point = QuadraticIrrational(a=theta.a, b=theta.b, c=theta.c, d=x, conjugate=theta.conjugate)
            exp = _expansion(point, cache)
            if exp.shape != base.shape or list(exp.vector()) != line.entries_at(u):
                logger.debug("line %s leaves its entries at u=%d (x=%d)", line.direction, u, x)
                cut = u
                breaks += 1
                break
        bounds.append(cut)
    lo, hi = bounds
    return lo, hi, sorted(u for u in skipped if lo < u < hi), breaks


def fit_lines_through_base(
    cfg: SearchConfig,
    theta: QuadraticIrrational,
    base: CFExpansion,
    pool: Sequence[Tuple[QuadraticIrrational, CFExpansion]],
    diagnostics: Optional[SearchDiagnostics] = None,
    cache: Optional[ExpansionCache] = None
) -> List[FamilyLine]:
    """Accepted family lines through the base point, one per entry direction.

    The expansion oracle decides membership: a member must sit on the entry
    line at an integer parameter and have x equal to the fitted radicand.
    Every square-free in-window parameter between the extreme members must
    expand onto the line as well; a line is cut back to the unbroken run
    through u = 0 and dropped if too few members survive.
    """
    base_vector = base.vector()
    x0 = theta.d
    lines: List[FamilyLine] = []
    buckets = _bucket(base_vector, pool)
    tried = 0
    skipped_total = 0
    breaks_total = 0

    for direction in sorted(buckets):
        candidates = buckets[direction]
        if len(candidates) + 1 < cfg.min_line_members:
            continue
        tried += 1
        fit = _best_fit(x0, candidates, cfg.fit_candidates)
        if fit is None:
            continue
        r1, r2, _ = fit
        h = integral_step(r1, r2)
        radicand = (x0, int(r1 * h), int(r2 * h * h))
        entries = [(v, s * h) for v, s in zip(base_vector, direction)]

        members = [FamilyMember(t=0, x=x0, theta=theta, expansion=base)]
        for t, x, member_theta, exp in sorted(candidates, key=lambda cand: cand[0]):
            if t % h == 0 and x0 + r1 * t + r2 * t * t == x:
                members.append(FamilyMember(t=t // h, x=x, theta=member_theta, expansion=exp))
        if len(members) < cfg.min_line_members:
            continue
        members.sort(key=lambda member: member.t)

        line = FamilyLine(direction=list(direction), entries=entries, radicand=radicand, members=members)
        lo, hi, skipped, breaks = _unbroken_run(cfg, theta, base, line, (members[0].t, members[-1].t), cache)
        breaks_total += breaks
        kept = [member for member in members if lo < member.t < hi]
        if len(kept) < cfg.min_line_members:
            logger.debug("dropping line %s: %d members on its unbroken run", list(direction), len(kept))
            continue
        skipped = [u for u in skipped if kept[0].t < u < kept[-1].t]
        skipped_total += len(skipped)

        line = line.model_copy(update={"members": kept, "skipped": skipped})
        logger.info(
            "family line through %s: direction %s, x(u) = %d + %d u + %d u^2, %d members",
            theta, list(direction), *radicand, len(kept)
        )
        lines.append(line)

    if diagnostics is not None:
        diagnostics.directions_tried = tried
        diagnostics.lines_accepted = len(lines)
        diagnostics.skipped_non_square_free = skipped_total
        diagnostics.off_line_breaks = breaks_total
    return lines
