"""Command-line client for the toolkit.

A thin layer over the service: every subcommand builds the same request
models the HTTP endpoints take, runs them either in-process (default) or
against a running server (``--server URL``), and renders the response.
No group theory happens here.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .errors import CapExceeded, CatalogError, CriterionViolation
from .perm import DEFAULT_ELEMENT_CAP, DEFAULT_LATTICE_CAP
from .service import app as _app_module
from .service.app import (
    bounds_handler,
    catalog_handler,
    census_handler,
    classify_handler,
    families_handler,
    stats_handler,
    verify_handler,
)
from .service.schemas import (
    BoundsResponse,
    CatalogResponse,
    CensusRequest,
    CensusResponse,
    ClassifyResponse,
    FamiliesResponse,
    GroupSpec,
    StatsResponse,
    VerifyResponse,
)


class RemoteBackend:
    """Talks to a running service over HTTP with the same models."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def _post(self, path: str, payload, model):
        import httpx

        response = httpx.post(f"{self.base_url}{path}", json=payload.model_dump(), timeout=300.0)
        if response.status_code != 200:
            detail = response.json().get("detail", response.text)
            raise RuntimeError(f"server returned {response.status_code}: {detail}")
        return model.model_validate(response.json())

    def _get(self, path: str, model):
        import httpx

        response = httpx.get(f"{self.base_url}{path}", timeout=60.0)
        if response.status_code != 200:
            raise RuntimeError(f"server returned {response.status_code}: {response.text}")
        return model.model_validate(response.json())

    def stats(self, spec: GroupSpec) -> StatsResponse:
        return self._post("/stats", spec, StatsResponse)

    def classify(self, spec: GroupSpec) -> ClassifyResponse:
        return self._post("/classify", spec, ClassifyResponse)

    def verify(self, spec: GroupSpec) -> VerifyResponse:
        return self._post("/verify", spec, VerifyResponse)

    def bounds(self, spec: GroupSpec) -> BoundsResponse:
        return self._post("/bounds", spec, BoundsResponse)

    def census(self, request: CensusRequest) -> CensusResponse:
        return self._post("/census", request, CensusResponse)

    def families(self) -> FamiliesResponse:
        return self._get("/families", FamiliesResponse)

    def catalog(self) -> CatalogResponse:
        return self._get("/catalog", CatalogResponse)


class LocalBackend:
    """Runs the service handlers in-process."""

    stats = staticmethod(stats_handler)
    classify = staticmethod(classify_handler)
    verify = staticmethod(verify_handler)
    bounds = staticmethod(bounds_handler)
    census = staticmethod(census_handler)
    families = staticmethod(families_handler)
    catalog = staticmethod(catalog_handler)


def _group_spec_args(parser: argparse.ArgumentParser):
    parser.add_argument("entry", nargs="?", help="catalog entry: 'order/index' or a name (e.g. A4)")
    parser.add_argument("--gen", action="append", dest="gens", metavar="CYCLES",
                        help="inline generator in disjoint-cycle form, repeatable")
    parser.add_argument("--degree", type=int, help="degree for inline generators")
    parser.add_argument("--family", help="family name (see 'avgorder families')")
    parser.add_argument("--params", type=int, nargs="*", default=[], help="family parameters")


def _build_spec(args) -> GroupSpec:
    return GroupSpec(
        entry=args.entry,
        generators=args.gens,
        degree=args.degree,
        family=args.family,
        params=args.params,
        catalog_path=args.catalog,
        max_order=args.max_order,
        lattice_cap=args.lattice_cap,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avgorder",
        description="Exact element-order statistics and supersolvability checks for small permutation groups.",
    )
    parser.add_argument("--server", metavar="URL", help="run against an avgorder service instead of in-process")
    parser.add_argument("--catalog", metavar="PATH", help="catalog file (default: the shipped order<=30 catalog)")
    parser.add_argument("--max-order", type=int, default=DEFAULT_ELEMENT_CAP,
                        help="element enumeration cap (default %(default)s)")
    parser.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP,
                        help="subgroup lattice cap (default %(default)s)")
    parser.add_argument("--seedless", action="store_true",
                        help="accepted for compatibility; runs are always deterministic and seedless")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("stats", "order spectrum, psi and average order of a group"),
        ("classify", "place a group in the below-31/12 classification"),
        ("verify", "check the supersolvability criterion and quotient monotonicity"),
        ("bounds", "evaluate all applicable element/subgroup count bounds"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _group_spec_args(p)

    p = sub.add_parser("families", help="list families, or construct one and show its stats")
    p.add_argument("name", nargs="?", help="family name; omit to list the registry")
    p.add_argument("family_params", type=int, nargs="*", help="integer parameters")

    p = sub.add_parser("census", help="run the batch verification over a catalog")
    p.add_argument("--threshold", default="31/12", help="exact rational threshold (default %(default)s)")
    p.add_argument("--format", default="table", choices=["table", "csv", "structured"])
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")

    sub.add_parser("catalog", help="list the catalog entries")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _render_stats(r: StatsResponse) -> str:
    lines = [
        f"group:    {r.name} (order {r.order}, degree {r.degree})",
        "spectrum: " + "  ".join(f"{d}:{r.spectrum[d]}" for d in sorted(r.spectrum)),
        f"psi:      {r.psi}",
        f"o:        {r.avg_order.num}/{r.avg_order.den} = {r.avg_order.decimal}",
        f"exponent: {r.exponent}",
    ]
    return "\n".join(lines)


def _render_classify(r: ClassifyResponse) -> str:
    lines = [
        f"group:         {r.name} (order {r.order})",
        f"o:             {r.avg_order.num}/{r.avg_order.den} = {r.avg_order.decimal}",
        f"vs 31/12:      {r.comparison}",
        f"case:          {r.case}",
        f"supersolvable: {str(r.supersolvable).lower()}",
    ]
    if r.two_group_witnesses:
        w = r.two_group_witnesses
        lines.append(
            f"witnesses:     |G'| = |Frattini| = {w.derived_order}, "
            f"n2 = {w.n2} > {w.n2_bound.num}/{w.n2_bound.den}"
        )
    if r.frobenius_witnesses:
        w = r.frobenius_witnesses
        lines.append(
            f"witnesses:     kernel C_3^{w.m} (order {w.kernel_order}), complement order {w.complement_order}"
        )
    return "\n".join(lines)


def _render_verify(r: VerifyResponse) -> str:
    lines = [
        f"group:           {r.name} (order {r.order})",
        f"o:               {r.avg_order.num}/{r.avg_order.den} = {r.avg_order.decimal}",
        f"vs 31/12:        {r.comparison}",
        f"supersolvable:   {str(r.supersolvable).lower()}",
        f"isomorphic to A4: {str(r.isomorphic_to_a4).lower()}",
    ]
    if r.quotient_checks:
        lines.append("quotient monotonicity (o(G/N) < o(G) for nontrivial normal N):")
        for check in r.quotient_checks:
            mark = "ok" if check.strictly_below else "VIOLATED"
            q = check.quotient_avg_order
            lines.append(f"  |N| = {check.normal_order:<4} o(G/N) = {q.num}/{q.den}  {mark}")
    else:
        lines.append("quotient monotonicity: no nontrivial normal subgroups")
    return "\n".join(lines)


def _render_bounds(r: BoundsResponse) -> str:
    lines = [f"group: {r.name} (order {r.order})"]
    for rep in r.reports:
        if not rep.applicable:
            lines.append(f"  {rep.bound_name:<24} not applicable")
            continue
        def fmt(v):
            return str(v.num) if v.den == 1 else f"{v.num}/{v.den}"
        status = "holds" if rep.holds else "FAILS"
        lines.append(f"  {rep.bound_name:<24} {fmt(rep.lhs)} <= {fmt(rep.rhs)}  {status}")
    return "\n".join(lines)


def _render_catalog(r: CatalogResponse) -> str:
    lines = [f"catalog: {r.path} ({len(r.entries)} entries)"]
    for e in r.entries:
        lines.append(f"  {e.order}/{e.index:<3} {e.name:<12} degree {e.degree}")
    return "\n".join(lines)


def _render_families(r: FamiliesResponse) -> str:
    lines = ["available families:"]
    for f in r.families:
        lines.append(f"  {f.name:<12} ({f.params} parameter{'s' if f.params != 1 else ''}): {f.summary}")
    return "\n".join(lines)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    backend = RemoteBackend(args.server) if args.server else LocalBackend()

    try:
        if args.command in ("stats", "classify", "verify", "bounds"):
            spec = _build_spec(args)
            if args.command == "stats":
                print(_render_stats(backend.stats(spec)))
            elif args.command == "classify":
                print(_render_classify(backend.classify(spec)))
            elif args.command == "verify":
                print(_render_verify(backend.verify(spec)))
            else:
                print(_render_bounds(backend.bounds(spec)))
            return 0

        if args.command == "families":
            if args.name is None:
                print(_render_families(backend.families()))
                return 0
            spec = GroupSpec(
                family=args.name,
                params=args.family_params,
                max_order=args.max_order,
                lattice_cap=args.lattice_cap,
            )
            print(_render_stats(backend.stats(spec)))
            return 0

        if args.command == "census":
            request = CensusRequest(
                catalog_path=args.catalog,
                threshold=args.threshold,
                format=args.format,
                jobs=args.jobs,
                lattice_cap=args.lattice_cap,
            )
            response = backend.census(request)
            print(response.report, end="")
            if not response.ok:
                print(f"{response.violations} violation row(s) found", file=sys.stderr)
                return 2
            return 0

        if args.command == "catalog":
            print(_render_catalog(backend.catalog()))
            return 0

        if args.command == "serve":
            import uvicorn

            uvicorn.run(_app_module.app, host=args.host, port=args.port)
            return 0
    except (CatalogError, CapExceeded, CriterionViolation, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    parser.error(f"unknown command {args.command!r}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
