"""Sparse integer polynomials in continued fraction entry variables.

Arithmetic is delegated to sympy's ``Poly`` over ``ZZ``; the model stores the
sparse term list so systems serialize without sympy objects:

    {"variables": ["g1", "k1", "k2", "D"], "terms": [[[0, 2, 2, 0], -1], ...]}
"""
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Poly, ZZ, symbols

Point = Union[Sequence[int], Mapping[str, int]]


def make_symbols(names: Sequence[str]) -> tuple:
    """sympy symbols for the given names, always as a tuple."""
    if not names:
        return ()
    out = symbols(list(names), integer=True)
    return tuple(out)


class IntegerPolynomial(BaseModel):
    """Polynomial with integer coefficients over an ordered variable list.

    Terms are kept sorted by exponent vector, descending lexicographic, and
    never hold a zero coefficient.
    """
    model_config = ConfigDict(frozen=True)

    variables: List[str]
    terms: List[Tuple[Tuple[int, ...], int]]

    @model_validator(mode="after")
    def _check_terms(self) -> "IntegerPolynomial":
        width = len(self.variables)
        for exps, coeff in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficients must not be stored")
            if len(exps) != width or any(e < 0 for e in exps):
                raise ValueError(f"exponent vector {exps} does not match {width} variables")
        return self

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntegerPolynomial":
        terms = [(tuple(int(e) for e in exps), int(c)) for exps, c in poly.terms() if c != 0]
        terms.sort(reverse=True)
        return cls(variables=[str(g) for g in poly.gens], terms=terms)

    @classmethod
    def from_dict(cls, variables: Sequence[str], rep: Dict[Tuple[int, ...], int]) -> "IntegerPolynomial":
        terms = sorted(((tuple(k), int(v)) for k, v in rep.items() if v), reverse=True)
        return cls(variables=list(variables), terms=terms)

    def to_poly(self) -> Poly:
        gens = make_symbols(self.variables)
        if not self.terms:
            return Poly(0, *gens, domain=ZZ)
        return Poly.from_dict({exps: coeff for exps, coeff in self.terms}, *gens, domain=ZZ)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        return max((sum(exps) for exps, _ in self.terms), default=0)

    def _values(self, point: Point) -> List[int]:
        if isinstance(point, Mapping):
            return [int(point[name]) for name in self.variables]
        values = [int(v) for v in point]
        if len(values) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} values, got {len(values)}")
        return values

    def evaluate(self, point: Point) -> int:
        """Exact value at an integer point."""
        values = self._values(point)
        total = 0
        for exps, coeff in self.terms:
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def gradient(self, point: Point) -> List[int]:
        """Exact partial derivatives at an integer point, one per variable."""
        values = self._values(point)
        grad = [0] * len(self.variables)
        for exps, coeff in self.terms:
            for j, ej in enumerate(exps):
                if not ej:
                    continue
                term = coeff * ej
                for i, (v, e) in enumerate(zip(values, exps)):
                    power = e - 1 if i == j else e
                    if power:
                        term *= v ** power
                grad[j] += term
        return grad

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return str(self.to_poly().as_expr())
