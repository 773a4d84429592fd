"""Data models for the arithmetic complexity search.

A search scans the family (a + b*sqrt(x))/c over square-free x, keeps the
members whose expansion has the base shape, fits integer polynomial lines
through the base point and measures how many entry coordinates vary
independently along them.
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from torusrank.models.surd import CFExpansion, QuadraticIrrational


class SearchConfig(BaseModel):
    """Parameters of the complexity search.

    Optional Fields:
        window_max (int): largest radicand D' = b^2 x scanned
        entry_degree_max (int): degree of the entry functions, fixed at 1
        radicand_degree_max (int): degree of x(t), fixed at 2
        min_line_members (int): members a line needs, base included
        fit_candidates (int): nearest bucket members tried as interpolation nodes
        workers (int): threads for the window scan, 1 is single-threaded
        chunk_size (int): radicands per scan chunk
        a, b, c (int): family constants, default those of the base value
    """
    model_config = ConfigDict(frozen=True)

    window_max: int = Field(10**6, ge=1)
    entry_degree_max: int = Field(1, ge=1, le=1)
    radicand_degree_max: int = Field(2, ge=2, le=2)
    min_line_members: int = Field(3, ge=3)
    fit_candidates: int = Field(8, ge=2)
    workers: int = Field(4, ge=1)
    chunk_size: int = Field(1 << 16, ge=1024)
    a: Optional[int] = None
    b: Optional[int] = Field(None, gt=0)
    c: Optional[int] = Field(None, gt=0)


class FamilyMember(BaseModel):
    """A point of a family line at integer parameter t."""
    model_config = ConfigDict(frozen=True)

    t: int
    x: int
    theta: QuadraticIrrational
    expansion: CFExpansion

    @property
    def vector(self) -> Tuple[int, ...]:
        """Entries followed by x."""
        return tuple(self.expansion.vector()) + (self.x,)


class FamilyLine(BaseModel):
    """Integer polynomial deformation of the base expansion.

    Fields:
        direction (List[int]): primitive entry direction from the base
        entries (List[Tuple[int, int]]): (constant, slope) of each entry in t
        radicand (Tuple[int, int, int]): x(t) = r0 + r1 t + r2 t^2
        members (List[FamilyMember]): confirmed members, the base at t = 0
        skipped (List[int]): parameters between the extreme members where
            x(t) is not square-free
    """
    model_config = ConfigDict(frozen=True)

    direction: List[int]
    entries: List[Tuple[int, int]]
    radicand: Tuple[int, int, int]
    members: List[FamilyMember]
    skipped: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_members(self) -> "FamilyLine":
        if not self.members:
            raise ValueError("a family line needs at least its base member")
        shape = self.members[0].expansion.shape
        for member in self.members:
            if member.expansion.shape != shape:
                raise ValueError(f"member at t={member.t} has a different shape")
            if list(member.expansion.vector()) != self.entries_at(member.t):
                raise ValueError(f"member at t={member.t} is off the entry line")
            if self.radicand_at(member.t) != member.x:
                raise ValueError(f"member at t={member.t} is off x(t)")
        return self

    def entries_at(self, t: int) -> List[int]:
        return [c0 + c1 * t for c0, c1 in self.entries]

    def radicand_at(self, t: int) -> int:
        r0, r1, r2 = self.radicand
        return r0 + r1 * t + r2 * t * t


class SearchDiagnostics(BaseModel):
    """Counters from one complexity search."""
    window_max: int
    window_below_base: bool = False
    radicands_scanned: int = 0
    square_free: int = 0
    shape_matches: int = 0
    directions_tried: int = 0
    lines_accepted: int = 0
    skipped_non_square_free: int = 0
    off_line_breaks: int = 0
    normal_form: bool = False


class ComplexityReport(BaseModel):
    """Estimated arithmetic complexity with its witnesses.

    Fields:
        theta: the base value
        expansion: its expansion
        n: m plus period length
        independence: independence dimension r over the witness members
        c: max(r, 1) clamped to n
        fiber_dimension: r after dropping x and the final period entry
        witness_lines: accepted family lines
        members_used: member vectors (entries then x), sorted
        diagnostics: search counters
    """
    theta: QuadraticIrrational
    expansion: CFExpansion
    n: int
    independence: int
    c: int
    fiber_dimension: int
    witness_lines: List[FamilyLine] = Field(default_factory=list)
    members_used: List[Tuple[int, ...]] = Field(default_factory=list)
    diagnostics: SearchDiagnostics

    @model_validator(mode="after")
    def _check_bounds(self) -> "ComplexityReport":
        if not 1 <= self.c <= self.n:
            raise ValueError(f"complexity {self.c} outside [1, {self.n}]")
        return self
