"""Data model for the Euler equation system of a quadratic irrationality."""
from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from torusrank.models.polynomial import IntegerPolynomial
from torusrank.models.surd import QuadraticIrrational

CONTINUANT_NAMES = ("A_n", "A_n-1", "A_n-2", "B_n", "B_n-1", "B_n-2")


class EulerSystem(BaseModel):
    """Polynomial relations in the entries of theta's expansion.

    Fields:
        theta: the base value
        m: preperiod length
        period_length: length of the minimal period
        index: anchored convergent index n of the period closure
        variables: g1..gm, k1..kl, D
        continuants: A_n, A_{n-1}, A_{n-2}, B_n, B_{n-1}, B_{n-2} in the k's
        c1, c2: the system constants at the base point
        scale_num, scale_den: reduced ratio of the closure discriminant to D
        equations: A_n - B_{n-1} - c1, 2 B_n - c2,
            scale_den (c1^2 + 2 c2 A_{n-1}) - scale_num D
        base_point: the expansion entries of theta followed by D = b^2 d
        pure_surd: theta is sqrt(d), so the tie k_l = 2 g_1 applies
    """
    model_config = ConfigDict(frozen=True)

    theta: QuadraticIrrational
    m: int = Field(ge=0)
    period_length: int = Field(ge=1)
    index: int = Field(ge=0)
    variables: List[str]
    continuants: List[IntegerPolynomial] = Field(min_length=6, max_length=6)
    c1: int
    c2: int
    scale_num: int = Field(gt=0)
    scale_den: int = Field(gt=0)
    equations: List[IntegerPolynomial] = Field(min_length=3, max_length=3)
    base_point: List[int]
    pure_surd: bool = False

    @model_validator(mode="after")
    def _check_base_point(self) -> "EulerSystem":
        if len(self.base_point) != len(self.variables):
            raise ValueError("base point must assign every variable")
        for i, eq in enumerate(self.equations):
            if eq.evaluate(self.base_point) != 0:
                raise ValueError(f"equation {i + 1} does not vanish at the base point")
        A_n, A_1, A_2, B_n, B_1, B_2 = self.continuant_values()
        k_n = self.base_point[self.m + self.index % self.period_length]
        if self.c1 != k_n * A_1 + A_2 - B_1:
            raise ValueError("c1 disagrees with k_n A_{n-1} + A_{n-2} - B_{n-1}")
        if self.c2 != 2 * k_n * B_1 + 2 * B_2:
            raise ValueError("c2 disagrees with 2 k_n B_{n-1} + 2 B_{n-2}")
        return self

    @property
    def n(self) -> int:
        """Total entry count m + period length."""
        return self.m + self.period_length

    @property
    def scale(self) -> Fraction:
        return Fraction(self.scale_num, self.scale_den)

    @property
    def symbolic_a(self) -> List[IntegerPolynomial]:
        return list(self.continuants[:3])

    @property
    def symbolic_b(self) -> List[IntegerPolynomial]:
        return list(self.continuants[3:])

    @property
    def closing_entry(self) -> str:
        """Name of the variable k_n at the anchored index."""
        return self.variables[self.m + self.index % self.period_length]

    def continuant_values(self) -> List[int]:
        return [p.evaluate(self.base_point) for p in self.continuants]

    def evaluate(self, point: List[int]) -> List[int]:
        """Values of the three relations at a point."""
        return [eq.evaluate(point) for eq in self.equations]


class EulerReport(BaseModel):
    """An Euler system with its linear equation and dimension diagnostics."""
    system: EulerSystem
    branch: int
    linear_form: IntegerPolynomial
    substitution_zero: bool
    rational_dimension_upper_bound: int
    full_system_rank: int
