"""Canonical quadratic irrationalities and exact surd arithmetic.

Square-freeness is decided by sympy's factorint, which trial-divides small
primes before switching to Pollard methods, so the check stays fast for the
full 64-bit range accepted by the CLI.
"""
import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Tuple

from sympy import factorint

from torusrank.errors import (
    NegativeIrrationalPart,
    NotSquareFree,
    TorusRankValidationError,
    ZeroDenominator,
)
from torusrank.models.surd import QuadraticIrrational

logger = logging.getLogger(__name__)


def square_factor(n: int) -> Optional[int]:
    """Return a prime p with p^2 | n, or None when n is square-free."""
    if n == 0:
        return 0
    for p, e in factorint(abs(n)).items():
        if e >= 2:
            return p
    return None


def is_square_free(n: int) -> bool:
    return n != 0 and square_factor(n) is None


def square_free_decomposition(n: int) -> Tuple[int, int]:
    """Write n > 0 as f^2 * s with s square-free; returns (f, s)."""
    if n <= 0:
        raise ValueError("square_free_decomposition expects a positive integer")
    f, s = 1, 1
    for p, e in factorint(n).items():
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return f, s


def canonicalize(a: int, b: int, c: int, d: int, conjugate: bool = False) -> QuadraticIrrational:
    """Return the canonical QuadraticIrrational for (a + b*sqrt(d))/c.

    Signs are normalized to c > 0 and b > 0 by negating all of a, b, c; a
    negative b that survives that normalization is rejected, since fixing it
    would change the value (pass the conjugate instead).

    Raises:
        ZeroDenominator: if c = 0
        NotSquareFree: if d has a square factor
        NegativeIrrationalPart: if b < 0 after sign normalization
    """
    if c == 0:
        raise ZeroDenominator()
    if b == 0:
        raise TorusRankValidationError("irrational part b must be nonzero", field="b", value="0")
    if d < 2:
        raise TorusRankValidationError("radicand d must be >= 2", field="d", value=str(d))
    factor = square_factor(d)
    if factor is not None:
        raise NotSquareFree(d, factor)

    if c < 0:
        a, b, c = -a, -b, -c
    if b < 0:
        raise NegativeIrrationalPart(a, b, c, d)

    g = gcd(gcd(a, b), c)
    return QuadraticIrrational(a=a // g, b=b // g, c=c // g, d=d, conjugate=conjugate)


def one_minus(theta: QuadraticIrrational) -> QuadraticIrrational:
    """Exact 1 - theta; the irrational part flips to the other branch."""
    g = gcd(gcd(theta.c - theta.a, theta.b), theta.c)
    return QuadraticIrrational(
        a=(theta.c - theta.a) // g,
        b=theta.b // g,
        c=theta.c // g,
        d=theta.d,
        conjugate=not theta.conjugate
    )


def from_state(P: int, Q: int, radicand: int, d: int) -> QuadraticIrrational:
    """Canonical form of (P + sqrt(radicand))/Q where radicand = f^2 * d."""
    f2, rem = divmod(radicand, d)
    f = isqrt(f2)
    if rem or f * f != f2:
        raise ValueError(f"radicand {radicand} is not a square multiple of {d}")
    conjugate = Q < 0
    if conjugate:
        P, Q = -P, -Q
    g = gcd(gcd(P, f), Q)
    return QuadraticIrrational(a=P // g, b=f // g, c=Q // g, d=d, conjugate=conjugate)


class Surd:
    """Exact value alpha + beta*sqrt(delta) with rational alpha, beta and non-square delta > 0.

    Only what the reconstruction identities need: equality without factoring.
    """

    __slots__ = ("alpha", "beta", "delta")

    def __init__(self, alpha: Fraction, beta: Fraction, delta: int):
        self.alpha = Fraction(alpha)
        self.beta = Fraction(beta)
        self.delta = delta

    @classmethod
    def of(cls, theta: QuadraticIrrational) -> "Surd":
        return cls(Fraction(theta.a, theta.c), Fraction(theta.signed_b, theta.c), theta.d)

    @classmethod
    def quotient(cls, P: int, radicand: int, Q: int) -> "Surd":
        """(P + sqrt(radicand))/Q."""
        return cls(Fraction(P, Q), Fraction(1, Q), radicand)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        if self.alpha != other.alpha:
            return False
        if (self.beta > 0) != (other.beta > 0):
            return False
        return self.beta * self.beta * self.delta == other.beta * other.beta * other.delta

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta * self.beta * self.delta, self.beta > 0))

    def __repr__(self) -> str:
        return f"Surd({self.alpha} + {self.beta}*sqrt({self.delta}))"
