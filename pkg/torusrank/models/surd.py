"""Data models for quadratic irrationalities and their continued fractions.

These models are immutable values. Constructors validate the invariants the
rest of the package relies on: canonical sign and gcd normalization for
QuadraticIrrational, minimality of preperiod and period for CFExpansion, and
the recurrence / determinant identities for ConvergentTable.

Usage Examples:
    ```python
    theta = QuadraticIrrational(a=1, b=1, c=2, d=5)      # golden mean
    theta.D                                                # 5
    str(theta)                                             # "(1+sqrt(5))/2"
    ```
"""
from math import gcd, isqrt
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class QuadraticIrrational(BaseModel):
    """Canonical exact value (a + b*sqrt(d))/c, or (a - b*sqrt(d))/c when conjugate.

    Required Fields:
        a (int): rational part numerator
        b (int): coefficient of the square root, always positive
        c (int): denominator, always positive
        d (int): square-free radicand >= 2

    Optional Fields:
        conjugate (bool): the value uses the negative branch of sqrt(d)

    Square-freeness of d is checked by ``canonicalize``; the model itself only
    checks the sign and gcd conventions so cheap copies stay cheap.
    """
    model_config = ConfigDict(frozen=True)

    a: int
    b: int = Field(gt=0)
    c: int = Field(gt=0)
    d: int = Field(ge=2)
    conjugate: bool = False

    @model_validator(mode="after")
    def _check_canonical(self) -> "QuadraticIrrational":
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError("gcd(a, b, c) must be 1")
        root = isqrt(self.d)
        if root * root == self.d:
            raise ValueError("d must not be a perfect square")
        return self

    @property
    def D(self) -> int:
        """The derived radicand b^2 * d."""
        return self.b * self.b * self.d

    @property
    def signed_b(self) -> int:
        """Coefficient of sqrt(d) including the conjugate sign."""
        return -self.b if self.conjugate else self.b

    @property
    def key(self) -> Tuple[int, int, int, int, int]:
        """Stable tuple identifying the value, used as cache key."""
        return (self.a, self.b, self.c, self.d, int(self.conjugate))

    @property
    def is_pure_surd(self) -> bool:
        """True for sqrt(d) itself (a = 0, b = c = 1)."""
        return self.a == 0 and self.b == 1 and self.c == 1 and not self.conjugate

    def value_float(self) -> float:
        """Float approximation for display only."""
        return (self.a + self.signed_b * self.d ** 0.5) / self.c

    def __str__(self) -> str:
        sign = "-" if self.conjugate else "+"
        coeff = "" if self.b == 1 else f"{self.b}*"
        body = f"{self.a}{sign}{coeff}sqrt({self.d})" if self.a else (
            f"{'-' if self.conjugate else ''}{coeff}sqrt({self.d})"
        )
        if self.c == 1:
            return body
        return f"({body})/{self.c}"


class ExpansionState(BaseModel):
    """One (P, Q) state of the expansion automaton, value (P + sqrt(radicand))/Q."""
    model_config = ConfigDict(frozen=True)

    P: int
    Q: int


class CFExpansion(BaseModel):
    """Eventually periodic continued fraction [g_1..g_m; k_1..k_{n-m}].

    Fields:
        preperiod (List[int]): minimal preperiod, only the first entry may be <= 0
        period (List[int]): minimal period, positive entries
        states (List[ExpansionState]): automaton trajectory; states[i] yields
            entry i of the unrolled sequence and states[m] starts the period
        radicand (int): automaton radicand after pre-scaling (0 when unknown,
            e.g. for hand-written expansions)
    """
    model_config = ConfigDict(frozen=True)

    preperiod: List[int] = Field(default_factory=list)
    period: List[int] = Field(min_length=1)
    states: List[ExpansionState] = Field(default_factory=list)
    radicand: int = 0

    @model_validator(mode="after")
    def _check_entries(self) -> "CFExpansion":
        if any(k <= 0 for k in self.period):
            raise ValueError("period entries must be positive")
        if any(g <= 0 for g in self.preperiod[1:]):
            raise ValueError("only the first preperiod entry may be non-positive")
        if self.states and len(self.states) != self.m + self.period_length:
            raise ValueError("states must cover the preperiod and one period")
        return self

    @property
    def m(self) -> int:
        """Preperiod length."""
        return len(self.preperiod)

    @property
    def period_length(self) -> int:
        return len(self.period)

    @property
    def n(self) -> int:
        """Total length: preperiod plus period."""
        return self.m + self.period_length

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.m, self.period_length)

    def entries(self, count: int) -> List[int]:
        """First `count` entries of the unrolled sequence."""
        out = list(self.preperiod[:count])
        i = 0
        while len(out) < count:
            out.append(self.period[i % self.period_length])
            i += 1
        return out

    def vector(self) -> List[int]:
        """Preperiod followed by one period, the coordinate vector of the entries."""
        return list(self.preperiod) + list(self.period)

    def brief(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    def __str__(self) -> str:
        head = ",".join(str(g) for g in self.preperiod)
        tail = ",".join(str(k) for k in self.period)
        return f"[{head}; ({tail})]" if head else f"[({tail})]"


class ConvergentTable(BaseModel):
    """Big-integer convergents A_i/B_i of an unrolled entry sequence.

    Index i = 0 is the first entry; the seeds A_{-2} = 0, A_{-1} = 1,
    B_{-2} = 1, B_{-1} = 0 are implicit.
    """
    model_config = ConfigDict(frozen=True)

    entries: List[int]
    A: List[int]
    B: List[int]

    @model_validator(mode="after")
    def _check_recurrence(self) -> "ConvergentTable":
        if not (len(self.entries) == len(self.A) == len(self.B)):
            raise ValueError("entries, A and B must be aligned")
        a2, a1, b2, b1 = 0, 1, 1, 0
        for i, k in enumerate(self.entries):
            if self.A[i] != k * a1 + a2 or self.B[i] != k * b1 + b2:
                raise ValueError(f"recurrence fails at index {i}")
            a2, a1, b2, b1 = a1, self.A[i], b1, self.B[i]
        return self

    def determinant(self, i: int) -> int:
        """A_i B_{i-1} - A_{i-1} B_i, equal to (-1)^(i-1)."""
        if i < 1:
            raise IndexError("determinant is defined for i >= 1")
        return self.A[i] * self.B[i - 1] - self.A[i - 1] * self.B[i]


class BratteliMatrix(BaseModel):
    """Partial multiplicity matrix with rows (a, 1) and (1, 0)."""
    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, int], Tuple[int, int]]

    @model_validator(mode="after")
    def _check_nonnegative(self) -> "BratteliMatrix":
        if any(v < 0 for row in self.rows for v in row):
            raise ValueError("multiplicities must be nonnegative")
        return self


class BratteliSchedule(BaseModel):
    """Eventually periodic schedule of partial multiplicity matrices."""
    model_config = ConfigDict(frozen=True)

    preperiod: List[BratteliMatrix] = Field(default_factory=list)
    period: List[BratteliMatrix] = Field(min_length=1)

    def steps(self, count: int) -> List[BratteliMatrix]:
        """First `count` matrices of the unrolled schedule."""
        out = list(self.preperiod[:count])
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out
