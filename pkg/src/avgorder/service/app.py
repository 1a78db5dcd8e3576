"""FastAPI service wrapping the toolkit.

Each endpoint is a thin adapter: resolve the requested group, call the
library, shape the result into a response model.  The CLI calls these
handler functions in-process with the same models, so the two surfaces
cannot drift apart.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..bounds import run_all_checks
from ..catalog import find_entry, load_catalog
from ..census import emit_report, run_census
from ..classify import classify, verify_supersolvability_criterion
from ..errors import CapExceeded, CatalogError, CriterionViolation
from ..families import FAMILIES, build_family
from ..perm import PermGroup, Permutation
from ..stats import avg_order, order_spectrum, psi
from ..structure import exponent
from .schemas import (
    BoundReportModel,
    BoundsResponse,
    CatalogEntrySummary,
    CatalogResponse,
    CensusRequest,
    CensusResponse,
    ClassifyResponse,
    FamiliesResponse,
    FamilyInfo,
    FrobeniusWitnessModel,
    GroupSpec,
    HealthResponse,
    QuotientCheck,
    RationalValue,
    StatsResponse,
    TwoGroupWitnessModel,
    VerifyResponse,
)


def resolve_group(spec: GroupSpec) -> tuple[str, PermGroup]:
    """Build the group a request describes; returns (display name, group)."""
    if spec.entry is not None:
        entries = load_catalog(spec.catalog_path)
        entry = find_entry(entries, spec.entry)
        return entry.name, entry.group()
    if spec.family is not None:
        group = build_family(spec.family, spec.params, max_order=spec.max_order)
        label = spec.family + ("(" + ",".join(map(str, spec.params)) + ")" if spec.params else "")
        return label, group
    gens = [Permutation.parse(text, spec.degree) for text in spec.generators]
    return "inline", PermGroup(gens, max_order=spec.max_order)


def parse_threshold(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"threshold must be an exact rational like 31/12, got {text!r}") from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="avgorder",
        description="Exact element-order statistics and supersolvability checks for small permutation groups.",
        version=__version__,
    )

    @app.exception_handler(ValueError)
    async def _value_error(_, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(CatalogError)
    async def _catalog_error(_, exc: CatalogError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(CapExceeded)
    async def _cap_error(_, exc: CapExceeded):
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.exception_handler(CriterionViolation)
    async def _criterion_error(_, exc: CriterionViolation):
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return health_handler()

    @app.post("/stats", response_model=StatsResponse)
    def stats(spec: GroupSpec) -> StatsResponse:
        return stats_handler(spec)

    @app.post("/classify", response_model=ClassifyResponse)
    def classify_endpoint(spec: GroupSpec) -> ClassifyResponse:
        return classify_handler(spec)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(spec: GroupSpec) -> VerifyResponse:
        return verify_handler(spec)

    @app.post("/bounds", response_model=BoundsResponse)
    def bounds(spec: GroupSpec) -> BoundsResponse:
        return bounds_handler(spec)

    @app.post("/census", response_model=CensusResponse)
    def census(request: CensusRequest) -> CensusResponse:
        return census_handler(request)

    @app.get("/families", response_model=FamiliesResponse)
    def families_registry() -> FamiliesResponse:
        return families_handler()

    @app.get("/catalog", response_model=CatalogResponse)
    def catalog() -> CatalogResponse:
        return catalog_handler()

    return app


# -- handlers (shared by the HTTP surface and the in-process CLI backend) -----


def health_handler() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


def stats_handler(spec: GroupSpec) -> StatsResponse:
    name, group = resolve_group(spec)
    spectrum = order_spectrum(group)
    return StatsResponse(
        name=name,
        order=group.order,
        degree=group.degree,
        spectrum=spectrum.counts,
        psi=psi(group),
        avg_order=RationalValue.of(avg_order(group)),
        exponent=exponent(group),
        element_orders=list(spectrum.distinct_orders),
    )


def classify_handler(spec: GroupSpec) -> ClassifyResponse:
    name, group = resolve_group(spec)
    report = classify(group, spec.lattice_cap)
    response = ClassifyResponse(
        name=name,
        order=group.order,
        avg_order=RationalValue.of(report.o_value),
        comparison=report.comparison,
        case=report.case_tag.value,
        supersolvable=report.supersolvable,
    )
    if report.case_tag.value == "TwoGroupCase":
        response.two_group_witnesses = TwoGroupWitnessModel(
            derived_order=report.witnesses.derived.order,
            frattini_order=report.witnesses.frattini.order,
            n2=report.witnesses.n2,
            n2_bound=RationalValue.of(report.witnesses.n2_bound),
        )
    elif report.case_tag.value == "FrobeniusCase":
        response.frobenius_witnesses = FrobeniusWitnessModel(
            kernel_order=report.witnesses.kernel.order,
            complement_order=report.witnesses.complement.order,
            m=report.witnesses.m,
        )
    return response


def verify_handler(spec: GroupSpec) -> VerifyResponse:
    name, group = resolve_group(spec)
    record = verify_supersolvability_criterion(group)
    checks = []
    for normal in group.normal_subgroups(spec.lattice_cap):
        if normal.is_trivial():
            continue
        o_quotient = avg_order(group.quotient(normal))
        checks.append(
            QuotientCheck(
                normal_order=normal.order,
                quotient_avg_order=RationalValue.of(o_quotient),
                strictly_below=o_quotient < record.o_value,
            )
        )
    return VerifyResponse(
        name=name,
        order=group.order,
        avg_order=RationalValue.of(record.o_value),
        comparison=record.comparison,
        supersolvable=record.supersolvable,
        isomorphic_to_a4=record.isomorphic_to_a4,
        quotient_checks=checks,
    )


def bounds_handler(spec: GroupSpec) -> BoundsResponse:
    name, group = resolve_group(spec)
    reports = [
        BoundReportModel(
            bound_name=r.bound_name,
            lhs=RationalValue.of(r.lhs),
            rhs=RationalValue.of(r.rhs),
            holds=r.holds,
            applicable=r.applicable,
        )
        for r in run_all_checks(group, spec.lattice_cap)
    ]
    return BoundsResponse(name=name, order=group.order, reports=reports)


def census_handler(request: CensusRequest) -> CensusResponse:
    if request.format not in ("table", "csv", "structured"):
        raise ValueError(f"unknown format {request.format!r}")
    threshold = parse_threshold(request.threshold)
    entries = load_catalog(request.catalog_path)
    rows = run_census(entries, threshold=threshold, lattice_cap=request.lattice_cap, jobs=request.jobs)
    violations = sum(1 for r in rows if r.violations)
    return CensusResponse(
        rows=[r.field_strings() for r in rows],
        report=emit_report(rows, request.format),
        violations=violations,
        ok=violations == 0,
    )


def families_handler() -> FamiliesResponse:
    infos = [
        FamilyInfo(name=name, params=arity, summary=summary)
        for name, (_, arity, summary) in sorted(FAMILIES.items())
    ]
    return FamiliesResponse(families=infos)


def catalog_handler() -> CatalogResponse:
    from ..catalog import builtin_catalog_path

    entries = load_catalog()
    return CatalogResponse(
        path=str(builtin_catalog_path()),
        entries=[
            CatalogEntrySummary(order=e.order, index=e.index, name=e.name, degree=e.degree)
            for e in entries
        ],
    )


app = create_app()
