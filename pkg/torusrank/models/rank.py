"""Data models for curve descriptors, rank reports and the Q-curve table."""
from math import gcd
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime
from typing_extensions import Annotated

from torusrank.models.complexity import ComplexityReport, SearchDiagnostics
from torusrank.models.surd import CFExpansion, QuadraticIrrational


class CMCurve(BaseModel):
    """E_CM^(-p,f); only conductor f = 1 is supported."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cm"] = "cm"
    p: int
    f: int = 1

    @model_validator(mode="after")
    def _check_q_curve(self) -> "CMCurve":
        if not isprime(self.p) or self.p % 4 != 3:
            raise ValueError(f"p = {self.p} must be a prime congruent to 3 mod 4")
        if self.f != 1:
            raise ValueError("only conductor f = 1 is supported")
        return self


class RationalFamilyCurve(BaseModel):
    """E_b(Q): y^2 z = x (x - z) (x - ((b - 2)/(b + 2)) z)."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["rational"] = "rational"
    b: int = Field(ge=3)


class ExplicitCurve(BaseModel):
    """A curve given directly by the modulus of its torus."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["explicit"] = "explicit"
    theta: QuadraticIrrational


CurveDescriptor = Annotated[
    Union[CMCurve, RationalFamilyCurve, ExplicitCurve],
    Field(discriminator="kind")
]


class RankReport(BaseModel):
    """Rank estimate c - 1 and bound n - 1 for one curve.

    The twist fields repeat the computation on the purely periodic complete
    quotient, a Morita equivalent modulus.
    """
    curve: CurveDescriptor
    theta: QuadraticIrrational
    expansion: CFExpansion
    m: int
    n: int
    c: int
    rank_estimate: int
    rank_bound: int
    class_number: Optional[int] = None
    rank_full: Optional[int] = None
    twist_n: int
    twist_c: int
    twist_rank_estimate: int
    twist_rank_bound: int
    complexity: ComplexityReport

    @model_validator(mode="after")
    def _check_rank(self) -> "RankReport":
        if self.rank_estimate != self.c - 1 or self.rank_estimate < 0:
            raise ValueError("rank estimate must equal c - 1 >= 0")
        if self.rank_estimate > self.rank_bound:
            raise ValueError("rank estimate exceeds the bound n - 1")
        if self.twist_rank_estimate > self.twist_rank_bound:
            raise ValueError("twist rank estimate exceeds its bound")
        return self


class RootOfUnity(BaseModel):
    """Generator exp(2 pi i p/q) with 0 < p/q < 1 in lowest terms."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["root"] = "root"
    p: int = Field(gt=0)
    q: int = Field(gt=1)

    @model_validator(mode="after")
    def _check_reduced(self) -> "RootOfUnity":
        if self.p >= self.q or gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} must lie in (0, 1) in lowest terms")
        return self


class IrrationalAngle(BaseModel):
    """Generator exp(2 pi i omega) with omega irrational."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["irrational"] = "irrational"
    omega: QuadraticIrrational


Generator = Annotated[Union[RootOfUnity, IrrationalAngle], Field(discriminator="kind")]


class GeneratorSet(BaseModel):
    """Generators of a finitely generated subgroup of the circle.

    The irrational angles are assumed linearly independent over Q; nothing
    checks it.
    """
    model_config = ConfigDict(frozen=True)

    generators: List[Generator] = Field(min_length=1)

    @property
    def s(self) -> int:
        return len(self.generators)

    @property
    def t(self) -> int:
        return sum(1 for g in self.generators if isinstance(g, RootOfUnity))


class Table1Row(BaseModel):
    """Expected and computed values for one prime of the Q-curve table."""
    p: int
    expected_expansion: CFExpansion
    computed_expansion: CFExpansion
    expected_c: int
    computed_c: int
    expected_rank: int
    computed_rank: int
    window: int
    expansion_match: bool
    c_match: bool
    rank_match: bool
    diagnostics: SearchDiagnostics

    @property
    def match(self) -> bool:
        return self.expansion_match and self.c_match and self.rank_match


class Table1Report(BaseModel):
    rows: List[Table1Row]
    all_match: bool


class Table1Windows(BaseModel):
    """Checked-in per-prime window overrides for the table sweep."""
    overrides: Dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_windows(self) -> "Table1Windows":
        if any(w < 1 for w in self.overrides.values()):
            raise ValueError("window overrides must be positive")
        return self
