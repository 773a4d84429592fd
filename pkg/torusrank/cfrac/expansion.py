"""Continued fraction expansion of quadratic irrationalities.

The expansion runs the classical integer automaton on states (P, Q) standing
for the complete quotient (P + sqrt(R))/Q:

    a     = floor((P + sqrt(R)) / Q)
    P'    = a*Q - P
    Q'    = (R - P'^2) / Q

with the starting state pre-scaled so that Q divides R - P^2. The first
repeated state closes the period; since the state determines the complete
quotient, the resulting preperiod and period are both minimal.

Usage Examples:
    ```python
    exp = expand(canonicalize(0, 1, 1, 7))
    exp.preperiod, exp.period          # [2], [1, 1, 1, 4]
    table = convergents(exp, 5)
    reconstruct_verify(theta, exp)     # True
    ```
"""
import logging
from fractions import Fraction
from math import isqrt, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from torusrank.cfrac.surd import Surd, canonicalize, from_state, square_free_decomposition
from torusrank.errors import IndexConventionFailure
from torusrank.models.surd import CFExpansion, ConvergentTable, ExpansionState, QuadraticIrrational

logger = logging.getLogger(__name__)

State = Tuple[int, int]


def initial_state(theta: QuadraticIrrational) -> Tuple[int, int, int]:
    """Return (P, Q, R) with theta = (P + sqrt(R))/Q and Q | R - P^2."""
    R = theta.D
    if theta.conjugate:
        P, Q = -theta.a, -theta.c
    else:
        P, Q = theta.a, theta.c
    if (R - P * P) % Q:
        P, R, Q = P * abs(Q), R * Q * Q, Q * abs(Q)
    return P, Q, R


def floor_quotient(P: int, Q: int, root: int) -> int:
    """floor((P + sqrt(R))/Q) given root = isqrt(R) and R not a square."""
    if Q > 0:
        return (P + root) // Q
    return -((P + root) // -Q) - 1


def advance(P: int, Q: int, R: int, a: int) -> State:
    """State of 1/(x - a) for x = (P + sqrt(R))/Q."""
    P_next = a * Q - P
    return P_next, (R - P_next * P_next) // Q


def expand(theta: QuadraticIrrational) -> CFExpansion:
    """Expand theta into its minimal preperiod and minimal period."""
    P, Q, R = initial_state(theta)
    root = isqrt(R)
    seen: Dict[State, int] = {}
    entries: List[int] = []
    states: List[ExpansionState] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(states)
        states.append(ExpansionState(P=P, Q=Q))
        a = floor_quotient(P, Q, root)
        entries.append(a)
        P, Q = advance(P, Q, R, a)
    start = seen[(P, Q)]
    logger.debug("expanded %s: m=%d, period length=%d", theta, start, len(entries) - start)
    return CFExpansion(
        preperiod=entries[:start],
        period=entries[start:],
        states=states,
        radicand=R
    )


def continuants(entries: Sequence[int]) -> Tuple[List[int], List[int]]:
    """A_i and B_i for i = 0..len(entries)-1 from the seeds (0, 1) and (1, 0)."""
    A: List[int] = []
    B: List[int] = []
    a2, a1, b2, b1 = 0, 1, 1, 0
    for k in entries:
        a2, a1 = a1, k * a1 + a2
        b2, b1 = b1, k * b1 + b2
        A.append(a1)
        B.append(b1)
    return A, B


def convergents(exp: CFExpansion, count: int) -> ConvergentTable:
    """The first `count` convergents of the unrolled entry sequence."""
    if count < 1:
        raise ValueError("count must be >= 1")
    entries = exp.entries(count)
    A, B = continuants(entries)
    return ConvergentTable(entries=entries, A=A, B=B)


def _pair(values: List[int], index: int, seeds: Tuple[int, int]) -> int:
    """values[index] with the seeds standing in for indices -2 and -1."""
    if index >= 0:
        return values[index]
    return seeds[index + 2]


def closure_quadruple(period: Sequence[int], n: int) -> Tuple[int, int, int, int]:
    """(A_n, A_{n-1}, B_n, B_{n-1}) for the period unrolled past index n."""
    A, B = continuants([period[i % len(period)] for i in range(n + 1)])
    return (
        _pair(A, n, (0, 1)),
        _pair(A, n - 1, (0, 1)),
        _pair(B, n, (1, 0)),
        _pair(B, n - 1, (1, 0)),
    )


def closure_surd(A_n: int, A_prev: int, B_n: int, B_prev: int) -> Surd:
    """(A_n - B_{n-1} + sqrt((A_n - B_{n-1})^2 + 4 A_{n-1} B_n)) / 2 B_n."""
    t = A_n - B_prev
    return Surd(Fraction(t, 2 * B_n), Fraction(1, 2 * B_n), t * t + 4 * A_prev * B_n)


def fixed_point_holds(omega: Surd, A_n: int, A_prev: int, B_n: int, B_prev: int) -> bool:
    """omega = (A_n omega + A_{n-1})/(B_n omega + B_{n-1}), checked exactly."""
    alpha, beta, delta = omega.alpha, omega.beta, omega.delta
    rational = B_n * (alpha * alpha + beta * beta * delta) + (B_prev - A_n) * alpha - A_prev
    irrational = 2 * B_n * alpha * beta + (B_prev - A_n) * beta
    return rational == 0 and irrational == 0


def anchor_index(omega: Surd, period: Sequence[int]) -> int:
    """First n in [l-1, 2l-1] at which the closure formula reproduces omega.

    Raises:
        IndexConventionFailure: if no index within one period shift works
    """
    l = len(period)
    for n in range(l - 1, 2 * l):
        if closure_surd(*closure_quadruple(period, n)) == omega:
            return n
    raise IndexConventionFailure(repr(omega), l)


def quotient_after(theta: QuadraticIrrational, prefix: Sequence[int]) -> Surd:
    """The complete quotient of theta after removing the given leading entries.

    The entries are forced, not recomputed, so a wrong prefix yields a value
    that fails the closure identities downstream.
    """
    P, Q, R = initial_state(theta)
    for g in prefix:
        P, Q = advance(P, Q, R, g)
    return Surd.quotient(P, R, Q)


def periodic_quotient(exp: CFExpansion, d: Optional[int] = None) -> QuadraticIrrational:
    """The purely periodic complete quotient at the start of the period."""
    if not exp.states:
        return evaluate_expansion([], exp.period)
    state = exp.states[exp.m]
    if d is None:
        d = square_free_decomposition(exp.radicand)[1]
    return from_state(state.P, state.Q, exp.radicand, d)


def reconstruct_verify(theta: QuadraticIrrational, exp: CFExpansion) -> bool:
    """Check the closure identities for the periodic complete quotient.

    The convergent index is anchored on theta's own expansion: the first
    n in [l-1, 2l-1] at which the closure formula reproduces the periodic
    quotient. The same offset is then applied to the period of `exp`, and
    both the closure formula and the fixed-point relation must hold exactly.

    Raises:
        IndexConventionFailure: if theta's own expansion cannot be anchored
    """
    reference = expand(theta)
    omega_ref = quotient_after(theta, reference.preperiod)
    offset = anchor_index(omega_ref, reference.period) - (reference.period_length - 1)

    omega = quotient_after(theta, exp.preperiod)
    n = exp.period_length - 1 + offset
    quad = closure_quadruple(exp.period, n)
    if quad[2] == 0:
        return False
    ok = closure_surd(*quad) == omega and fixed_point_holds(omega, *quad)
    if not ok:
        logger.info("closure identities fail for %s with %s", theta, exp)
    return ok


def _minimal_period(period: Sequence[int]) -> List[int]:
    l = len(period)
    for p in range(1, l + 1):
        if l % p == 0 and all(period[i] == period[i % p] for i in range(l)):
            return list(period[:p])
    return list(period)


def normalize_expansion(preperiod: Sequence[int], period: Sequence[int]) -> CFExpansion:
    """Reduce a hand-written eventually periodic sequence to minimal form."""
    pre = list(preperiod)
    per = _minimal_period(period)
    while pre and pre[-1] == per[-1]:
        per = [pre.pop()] + per[:-1]
    return CFExpansion(preperiod=pre, period=per)


def _to_irrational(alpha: Fraction, beta: Fraction, delta: int) -> QuadraticIrrational:
    f, s = square_free_decomposition(delta)
    beta = beta * f
    L = lcm(alpha.denominator, beta.denominator)
    return canonicalize(
        int(alpha * L),
        int(abs(beta) * L),
        L,
        s,
        conjugate=beta < 0
    )


def evaluate_expansion(preperiod: Sequence[int], period: Sequence[int]) -> QuadraticIrrational:
    """Exact value of [preperiod; (period)].

    The periodic tail is the positive root of B w^2 + (B' - A) w - A' = 0
    where A/B and A'/B' are the last two convergents of one period; the
    preperiod is then applied as a fractional linear map.
    """
    if not period:
        raise ValueError("period must be nonempty")
    A, B = continuants(period)
    A_last, B_last = A[-1], B[-1]
    A_prev = A[-2] if len(A) > 1 else 1
    B_prev = B[-2] if len(B) > 1 else 0
    tail = closure_surd(A_last, A_prev, B_last, B_prev)
    if not preperiod:
        return _to_irrational(tail.alpha, tail.beta, tail.delta)

    P, Q = continuants(preperiod)
    p1, q1 = P[-1], Q[-1]
    p0 = P[-2] if len(P) > 1 else 1
    q0 = Q[-2] if len(Q) > 1 else 0
    # (p1 w + p0)/(q1 w + q0) with w = alpha + beta*sqrt(delta)
    alpha, beta, delta = tail.alpha, tail.beta, tail.delta
    x1, y1 = p1 * alpha + p0, p1 * beta
    x2, y2 = q1 * alpha + q0, q1 * beta
    norm = x2 * x2 - y2 * y2 * delta
    return _to_irrational((x1 * x2 - y1 * y2 * delta) / norm, (y1 * x2 - x1 * y2) / norm, delta)
