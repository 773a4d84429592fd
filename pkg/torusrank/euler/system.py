"""Euler equations for the continued fraction entries of a surd family.

The period closure writes the purely periodic complete quotient as

    (A_n - B_{n-1} + sqrt((A_n - B_{n-1})^2 + 4 A_{n-1} B_n)) / 2 B_n

so a family (a + b sqrt(x))/c whose entries are integer functions of x must
keep A_n - B_{n-1} and 2 B_n fixed (the constants c1, c2) and tie the
discriminant to D = b^2 x. Substituting the continuant recurrence for the
constants turns the discriminant relation into an equation linear in D with
a constant term of +4 or -4.
"""
import logging
from fractions import Fraction
from typing import List, Tuple

from sympy import Matrix, Poly, ZZ

from torusrank.cfrac.expansion import anchor_index, quotient_after
from torusrank.errors import SignUnresolvable
from torusrank.models.euler import EulerReport, EulerSystem
from torusrank.models.polynomial import IntegerPolynomial, make_symbols
from torusrank.models.surd import CFExpansion, QuadraticIrrational

logger = logging.getLogger(__name__)


def entry_variables(m: int, period_length: int) -> List[str]:
    """g1..gm, k1..kl, D."""
    return (
        [f"g{i + 1}" for i in range(m)]
        + [f"k{i + 1}" for i in range(period_length)]
        + ["D"]
    )


def _continuant_polys(m: int, period_length: int, offset: int) -> Tuple[tuple, List[Poly]]:
    names = entry_variables(m, period_length)
    gens = make_symbols(names)
    ks = gens[m:m + period_length]
    n = period_length - 1 + offset

    def const(v: int) -> Poly:
        return Poly(v, *gens, domain=ZZ)

    A = [const(0), const(1)]
    B = [const(1), const(0)]
    for i in range(n + 1):
        k = Poly(ks[i % period_length], *gens, domain=ZZ)
        A.append(k * A[-1] + A[-2])
        B.append(k * B[-1] + B[-2])
    # list index i + 2 holds A_i
    return gens, [A[n + 2], A[n + 1], A[n], B[n + 2], B[n + 1], B[n]]


def symbolic_continuants(m: int, period_length: int, offset: int = 0) -> List[IntegerPolynomial]:
    """A_n, A_{n-1}, A_{n-2}, B_n, B_{n-1}, B_{n-2} over the entry variables.

    n = period_length - 1 + offset, the period unrolled from k1. The
    continuants involve only the k's; the g's and D are carried so every
    polynomial of a system shares one variable list.
    """
    if period_length < 1:
        raise ValueError("period_length must be >= 1")
    _, polys = _continuant_polys(m, period_length, offset)
    return [IntegerPolynomial.from_poly(p) for p in polys]


def build_euler_system(theta: QuadraticIrrational, exp: CFExpansion) -> EulerSystem:
    """Construct the three relations with constants taken at the base point.

    Raises:
        IndexConventionFailure: if the period closure cannot be anchored
    """
    m, l = exp.m, exp.period_length
    omega = quotient_after(theta, exp.preperiod)
    index = anchor_index(omega, exp.period)
    gens, polys = _continuant_polys(m, l, index - (l - 1))
    names = [str(g) for g in gens]
    base_point = list(exp.preperiod) + list(exp.period) + [theta.D]

    continuants = [IntegerPolynomial.from_poly(p) for p in polys]
    A_n, A_1, _, B_n, B_1, _ = (c.evaluate(base_point) for c in continuants)
    c1 = A_n - B_1
    c2 = 2 * B_n
    scale = Fraction(c1 * c1 + 2 * c2 * A_1, theta.D)

    D = Poly(gens[-1], *gens, domain=ZZ)
    equations = [
        polys[0] - polys[4] - c1,
        2 * polys[3] - c2,
        scale.denominator * (c1 * c1 + 2 * c2 * polys[1]) - scale.numerator * D,
    ]
    system = EulerSystem(
        theta=theta,
        m=m,
        period_length=l,
        index=index,
        variables=names,
        continuants=continuants,
        c1=c1,
        c2=c2,
        scale_num=scale.numerator,
        scale_den=scale.denominator,
        equations=[IntegerPolynomial.from_poly(e) for e in equations],
        base_point=base_point,
        pure_surd=theta.is_pure_surd
    )
    logger.debug("euler system for %s: c1=%d c2=%d scale=%s", theta, c1, c2, scale)
    return system


def _rewrite_parts(system: EulerSystem) -> Tuple[tuple, Poly, Poly, Poly, Poly, Poly, Poly]:
    gens = make_symbols(system.variables)
    k_n = Poly(gens[system.variables.index(system.closing_entry)], *gens, domain=ZZ)
    D = Poly(gens[-1], *gens, domain=ZZ)
    _, A_1, A_2, _, B_1, B_2 = (c.to_poly() for c in system.continuants)
    return gens, k_n, D, A_1, A_2, B_1, B_2


def _branch(system: EulerSystem, sign: int) -> Poly:
    """scale_num D - scale_den (k_n^2 A'^2 + 2 (A' A'' + A' B') k_n + (A'' + B')^2 + 4 sign)."""
    _, k_n, D, A_1, A_2, B_1, _ = _rewrite_parts(system)
    core = k_n ** 2 * A_1 ** 2 + 2 * (A_1 * A_2 + A_1 * B_1) * k_n + (A_2 + B_1) ** 2 + 4 * sign
    return system.scale_num * D - system.scale_den * core


def select_branch(system: EulerSystem) -> Tuple[int, IntegerPolynomial]:
    """Return (sign, polynomial) for the branch vanishing at the base point.

    Raises:
        SignUnresolvable: if neither branch vanishes
    """
    values = {}
    for sign in (1, -1):
        poly = IntegerPolynomial.from_poly(_branch(system, sign))
        values[sign] = poly.evaluate(system.base_point)
        if values[sign] == 0:
            return sign, poly
    raise SignUnresolvable(values[1], values[-1])


def linear_diophantine_form(system: EulerSystem) -> IntegerPolynomial:
    """LHS - RHS of the linear equation in D, with its sign branch resolved."""
    return select_branch(system)[1]


def substituted_relation(system: EulerSystem) -> IntegerPolynomial:
    """Third relation with c1, c2 replaced by their continuant rewrites.

    c1 -> k_n A_{n-1} + A_{n-2} - B_{n-1} and c2 -> 2 k_n B_{n-1} + 2 B_{n-2}.
    """
    _, k_n, D, A_1, A_2, B_1, B_2 = _rewrite_parts(system)
    c1 = k_n * A_1 + A_2 - B_1
    c2 = 2 * k_n * B_1 + 2 * B_2
    return IntegerPolynomial.from_poly(system.scale_den * (c1 ** 2 + 2 * c2 * A_1) - system.scale_num * D)


def substitution_residual(system: EulerSystem) -> IntegerPolynomial:
    """Substituted relation plus the selected branch; identically zero."""
    relation = substituted_relation(system).to_poly()
    branch = linear_diophantine_form(system).to_poly()
    return IntegerPolynomial.from_poly(relation + branch)


def _tie(system: EulerSystem) -> List[int]:
    """Gradient of k_l - 2 g_1."""
    row = [0] * len(system.variables)
    row[0] = -2
    row[system.m + system.period_length - 1] = 1
    return row


def jacobian_rank(rows: List[List[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return Matrix(rows).rank()


def rational_dimension_upper_bound(system: EulerSystem) -> int:
    """#variables minus the Jacobian rank of the reduced equation set.

    The set is the selected linear equation, plus the tie k_l = 2 g_1 for a
    pure surd. This bounds the dimension of integer families from above; it
    is not the complexity itself.
    """
    if not system.variables:
        return 0
    rows = [linear_diophantine_form(system).gradient(system.base_point)]
    if system.pure_surd and system.m >= 1:
        rows.append(_tie(system))
    return len(system.variables) - jacobian_rank(rows)


def full_system_rank(system: EulerSystem) -> int:
    """Jacobian rank of all three relations (plus the tie) at the base point."""
    rows = [eq.gradient(system.base_point) for eq in system.equations]
    if system.pure_surd and system.m >= 1:
        rows.append(_tie(system))
    return jacobian_rank(rows)


def euler_report(theta: QuadraticIrrational, exp: CFExpansion) -> EulerReport:
    """Build the system and collect its linear equation and rank diagnostics."""
    system = build_euler_system(theta, exp)
    branch, form = select_branch(system)
    return EulerReport(
        system=system,
        branch=branch,
        linear_form=form,
        substitution_zero=substitution_residual(system).is_zero,
        rational_dimension_upper_bound=rational_dimension_upper_bound(system),
        full_system_rank=full_system_rank(system)
    )
