"""Exact arithmetic for noncommutative tori with real multiplication.

Continued fractions of quadratic irrationals, Euler equation systems, the
arithmetic complexity estimate and the rank bridge to elliptic curves.
"""

__version__ = "0.1.0"
