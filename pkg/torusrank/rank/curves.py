"""Curve descriptors and the modulus of their torus."""
from math import isqrt
from typing import Union

from pydantic import ValidationError

from torusrank.cfrac.expansion import expand, normalize_expansion
from torusrank.cfrac.surd import canonicalize, square_free_decomposition
from torusrank.errors import InvalidCurveDescriptor, PerfectSquareDiscriminant
from torusrank.models.rank import CMCurve, ExplicitCurve, RationalFamilyCurve
from torusrank.models.surd import QuadraticIrrational

Curve = Union[CMCurve, RationalFamilyCurve, ExplicitCurve]


def cm_curve(p: int, f: int = 1) -> CMCurve:
    """Descriptor for the Q-curve E_CM^(-p,f).

    Raises:
        InvalidCurveDescriptor: unless p is a prime congruent to 3 mod 4 and f = 1
    """
    try:
        return CMCurve(p=p, f=f)
    except ValidationError as e:
        raise InvalidCurveDescriptor(e.errors()[0]["msg"], field="p", value=str(p)) from e


def rational_family(b: int) -> RationalFamilyCurve:
    """Descriptor for E_b(Q).

    Raises:
        InvalidCurveDescriptor: if b < 3
    """
    try:
        return RationalFamilyCurve(b=b)
    except ValidationError as e:
        raise InvalidCurveDescriptor(f"b must be >= 3, got {b}", field="b", value=str(b)) from e


def explicit_curve(theta: QuadraticIrrational) -> ExplicitCurve:
    return ExplicitCurve(theta=theta)


def theta_of_curve(desc: Curve) -> QuadraticIrrational:
    """Modulus of the torus attached to a curve descriptor.

    Raises:
        PerfectSquareDiscriminant: if b^2 - 4 is a perfect square
    """
    if isinstance(desc, CMCurve):
        return canonicalize(0, 1, 1, desc.p)
    if isinstance(desc, RationalFamilyCurve):
        disc = desc.b * desc.b - 4
        if disc <= 0 or isqrt(disc) ** 2 == disc:
            raise PerfectSquareDiscriminant(desc.b)
        f, s = square_free_decomposition(disc)
        return canonicalize(desc.b, f, 2, s)
    return desc.theta


def eb_expansion_check(b: int) -> bool:
    """Expansion of (b + sqrt(b^2 - 4))/2 equals [b-1; 1, b-2] in minimal form."""
    exp = expand(theta_of_curve(rational_family(b)))
    expected = normalize_expansion([b - 1], [1, b - 2])
    return exp.preperiod == expected.preperiod and exp.period == expected.period
