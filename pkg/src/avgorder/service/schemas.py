"""Request/response models for the service; the CLI reuses them as its wire format."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..perm import DEFAULT_ELEMENT_CAP, DEFAULT_LATTICE_CAP


class GroupSpec(BaseModel):
    """A group given one of three ways: catalog entry, inline generators, or family."""

    entry: Optional[str] = Field(default=None, description="catalog reference: 'order/index' or a name")
    generators: Optional[list[str]] = Field(default=None, description="disjoint-cycle strings")
    degree: Optional[int] = Field(default=None, description="point count for inline generators")
    family: Optional[str] = Field(default=None, description="family name, see /families registry")
    params: list[int] = Field(default_factory=list)
    catalog_path: Optional[str] = Field(default=None, description="catalog file; defaults to the shipped one")
    max_order: int = DEFAULT_ELEMENT_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP

    @model_validator(mode="after")
    def _exactly_one_source(self):
        sources = [self.entry is not None, self.generators is not None, self.family is not None]
        if sum(sources) != 1:
            raise ValueError("specify exactly one of: entry, generators, family")
        if self.generators is not None and self.degree is None:
            raise ValueError("inline generators need a degree")
        return self


class RationalValue(BaseModel):
    num: int
    den: int
    decimal: str

    @classmethod
    def of(cls, value: Fraction | int) -> "RationalValue":
        frac = Fraction(value)
        return cls(num=frac.numerator, den=frac.denominator, decimal=f"{frac.numerator / frac.denominator:.6f}")

    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


class StatsResponse(BaseModel):
    name: str
    order: int
    degree: int
    spectrum: dict[int, int]
    psi: int
    avg_order: RationalValue
    exponent: int
    element_orders: list[int]


class TwoGroupWitnessModel(BaseModel):
    derived_order: int
    frattini_order: int
    n2: int
    n2_bound: RationalValue


class FrobeniusWitnessModel(BaseModel):
    kernel_order: int
    complement_order: int
    m: int


class ClassifyResponse(BaseModel):
    name: str
    order: int
    avg_order: RationalValue
    comparison: str
    case: str
    supersolvable: bool
    two_group_witnesses: Optional[TwoGroupWitnessModel] = None
    frobenius_witnesses: Optional[FrobeniusWitnessModel] = None


class QuotientCheck(BaseModel):
    normal_order: int
    quotient_avg_order: RationalValue
    strictly_below: bool


class VerifyResponse(BaseModel):
    name: str
    order: int
    avg_order: RationalValue
    comparison: str
    supersolvable: bool
    isomorphic_to_a4: bool
    quotient_checks: list[QuotientCheck]


class BoundReportModel(BaseModel):
    bound_name: str
    lhs: RationalValue
    rhs: RationalValue
    holds: bool
    applicable: bool


class BoundsResponse(BaseModel):
    name: str
    order: int
    reports: list[BoundReportModel]


class FamilyInfo(BaseModel):
    name: str
    params: int
    summary: str


class FamiliesResponse(BaseModel):
    families: list[FamilyInfo]


class CensusRequest(BaseModel):
    catalog_path: Optional[str] = None
    threshold: str = "31/12"
    format: str = "structured"
    jobs: int = 1
    lattice_cap: int = DEFAULT_LATTICE_CAP


class CensusResponse(BaseModel):
    rows: list[dict[str, str]]
    report: str
    violations: int
    ok: bool


class CatalogEntrySummary(BaseModel):
    order: int
    index: int
    name: str
    degree: int


class CatalogResponse(BaseModel):
    path: str
    entries: list[CatalogEntrySummary]


class HealthResponse(BaseModel):
    status: str
    version: str
