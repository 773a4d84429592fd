"""Class numbers of imaginary quadratic fields Q(sqrt(-p)) by reduced forms."""
from math import gcd
from typing import List, Tuple

from sympy import isprime

from torusrank.errors import BadDiscriminant

Form = Tuple[int, int, int]


def reduced_forms(disc: int) -> List[Form]:
    """Reduced primitive positive definite forms (a, b, c) of discriminant disc < 0.

    Reduced means |b| <= a <= c, with b >= 0 when |b| = a or a = c.
    """
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"{disc} is not a negative discriminant")
    forms = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


def class_number_imag_quadratic(p: int) -> int:
    """h(-p) for a prime p congruent to 3 mod 4.

    Raises:
        BadDiscriminant: for any other p
    """
    if p < 3 or p % 4 != 3 or not isprime(p):
        raise BadDiscriminant(p)
    return len(reduced_forms(-p))
