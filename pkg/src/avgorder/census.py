"""The batch verification runner and its report formats.

A census row is pure data: per-entry failures (caps, violations) are
recorded in the row rather than raised, so a run always finishes.  Rows
are always ordered by (order, index) and runs are fully deterministic,
so two runs over the same catalog emit byte-identical structured reports.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction

from .bounds import run_all_checks
from .catalog import CatalogEntry
from .classify import THRESHOLD, CaseTag, classify, verify_supersolvability_criterion
from .errors import CapExceeded, CriterionViolation
from .perm import DEFAULT_LATTICE_CAP
from .stats import avg_order, psi
from .structure import is_abelian, is_nilpotent, is_solvable, is_supersolvable

SOLVABILITY_THRESHOLD = Fraction(211, 60)

_FIELDS = (
    "order",
    "index",
    "name",
    "psi",
    "o_num",
    "o_den",
    "comparison",
    "case",
    "supersolvable",
    "solvable",
    "nilpotent",
    "abelian",
    "bound_failures",
    "violations",
    "errors",
)


@dataclass(frozen=True)
class CensusRow:
    order: int
    index: int
    name: str
    psi: int
    o_value: Fraction
    comparison: str  # below | equal | above, vs the run's threshold
    case: str  # CaseTag value; NotApplicable unless below a threshold <= 31/12
    supersolvable: bool
    solvable: bool
    nilpotent: bool
    abelian: bool
    bound_failures: tuple[str, ...] = ()
    violations: tuple[str, ...] = ()
    errors: tuple[str, ...] = ()

    def field_strings(self) -> dict[str, str]:
        return {
            "order": str(self.order),
            "index": str(self.index),
            "name": self.name,
            "psi": str(self.psi),
            "o_num": str(self.o_value.numerator),
            "o_den": str(self.o_value.denominator),
            "comparison": self.comparison,
            "case": self.case,
            "supersolvable": _bool_str(self.supersolvable),
            "solvable": _bool_str(self.solvable),
            "nilpotent": _bool_str(self.nilpotent),
            "abelian": _bool_str(self.abelian),
            "bound_failures": _list_str(self.bound_failures),
            "violations": _list_str(self.violations),
            "errors": _list_str(self.errors),
        }

    @classmethod
    def from_field_strings(cls, fields: dict[str, str]) -> "CensusRow":
        return cls(
            order=int(fields["order"]),
            index=int(fields["index"]),
            name=fields["name"],
            psi=int(fields["psi"]),
            o_value=Fraction(int(fields["o_num"]), int(fields["o_den"])),
            comparison=fields["comparison"],
            case=fields["case"],
            supersolvable=_parse_bool(fields["supersolvable"]),
            solvable=_parse_bool(fields["solvable"]),
            nilpotent=_parse_bool(fields["nilpotent"]),
            abelian=_parse_bool(fields["abelian"]),
            bound_failures=_parse_list(fields["bound_failures"]),
            violations=_parse_list(fields["violations"]),
            errors=_parse_list(fields["errors"]),
        )


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def _parse_bool(s: str) -> bool:
    if s not in ("true", "false"):
        raise ValueError(f"expected true/false, got {s!r}")
    return s == "true"


def _list_str(items: tuple[str, ...]) -> str:
    return ";".join(items) if items else "-"


def _parse_list(s: str) -> tuple[str, ...]:
    return () if s == "-" else tuple(s.split(";"))


def census_row(
    entry: CatalogEntry,
    threshold: Fraction = THRESHOLD,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> CensusRow:
    """Evaluate one catalog entry; caps and violations become row data."""
    g = entry.group()
    o = avg_order(g)
    if o < threshold:
        comparison = "below"
    elif o == threshold:
        comparison = "equal"
    else:
        comparison = "above"

    violations: list[str] = []
    errors: list[str] = []
    case = CaseTag.NOT_APPLICABLE.value

    supersolvable = is_supersolvable(g)
    solvable = is_solvable(g)

    # Structural case analysis is tied to the 31/12 criterion; it stays
    # valid for any run threshold at or below it.
    if comparison == "below" and threshold <= THRESHOLD:
        try:
            report = classify(g, lattice_cap)
            case = report.case_tag.value
        except CriterionViolation as exc:
            violations.append(str(exc))
        except CapExceeded as exc:
            errors.append(str(exc))
    if threshold <= THRESHOLD:
        try:
            verify_supersolvability_criterion(g)
        except CriterionViolation as exc:
            violations.append(str(exc))
        except CapExceeded as exc:
            errors.append(str(exc))
    if threshold <= SOLVABILITY_THRESHOLD and comparison == "below" and not solvable:
        violations.append(f"o = {o} below {threshold} but the group is not solvable")

    bound_failures: list[str] = []
    try:
        bound_failures = [r.bound_name for r in run_all_checks(g, lattice_cap) if r.failed()]
    except CapExceeded as exc:
        errors.append(str(exc))

    return CensusRow(
        order=entry.order,
        index=entry.index,
        name=entry.name,
        psi=psi(g),
        o_value=o,
        comparison=comparison,
        case=case,
        supersolvable=supersolvable,
        solvable=solvable,
        nilpotent=is_nilpotent(g),
        abelian=is_abelian(g),
        bound_failures=tuple(bound_failures),
        violations=tuple(violations),
        errors=tuple(errors),
    )


def run_census(
    entries: list[CatalogEntry],
    threshold: Fraction = THRESHOLD,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    jobs: int = 1,
) -> list[CensusRow]:
    """One row per entry, ordered by (order, index) regardless of job count."""
    ordered = sorted(entries, key=lambda e: e.key)
    if jobs <= 1:
        rows = [census_row(e, threshold, lattice_cap) for e in ordered]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda e: census_row(e, threshold, lattice_cap), ordered))
    return rows


def has_violations(rows: list[CensusRow]) -> bool:
    return any(row.violations for row in rows)


# -- report formats ------------------------------------------------------------

FORMATS = ("table", "csv", "structured")


def emit_report(rows: list[CensusRow], format: str = "table") -> str:
    if format == "structured":
        return _emit_structured(rows)
    if format == "csv":
        return _emit_csv(rows)
    if format == "table":
        return _emit_table(rows)
    raise ValueError(f"unknown format {format!r}; choose from {FORMATS}")


def _emit_structured(rows: list[CensusRow]) -> str:
    lines = ["# avgorder census v1", "# fields: " + " ".join(_FIELDS)]
    for row in rows:
        fields = row.field_strings()
        lines.append("row " + " ".join(f"{k}={fields[k]}" for k in _FIELDS))
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> list[CensusRow]:
    """Inverse of the structured format; round-trips losslessly."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith("row "):
            raise ValueError(f"line {lineno}: expected 'row ...', got {line!r}")
        fields = {}
        for token in line[4:].split():
            if "=" not in token:
                raise ValueError(f"line {lineno}: bad token {token!r}")
            key, value = token.split("=", 1)
            fields[key] = value
        missing = set(_FIELDS) - set(fields)
        if missing:
            raise ValueError(f"line {lineno}: missing fields {sorted(missing)}")
        rows.append(CensusRow.from_field_strings(fields))
    return rows


def _emit_csv(rows: list[CensusRow]) -> str:
    lines = [",".join(_FIELDS)]
    for row in rows:
        fields = row.field_strings()
        lines.append(",".join(fields[k] for k in _FIELDS))
    return "\n".join(lines) + "\n"


def _emit_table(rows: list[CensusRow]) -> str:
    headers = ["entry", "name", "psi", "o", "o~", "vs", "case", "ss", "sol", "nil", "ab", "issues"]
    table = [headers]
    for row in rows:
        o = row.o_value
        issues = ";".join(row.bound_failures + row.violations + row.errors) or "-"
        table.append(
            [
                f"{row.order}/{row.index}",
                row.name,
                str(row.psi),
                f"{o.numerator}/{o.denominator}",
                f"{o.numerator / o.denominator:.6f}",
                row.comparison,
                row.case,
                _bool_str(row.supersolvable),
                _bool_str(row.solvable),
                _bool_str(row.nilpotent),
                _bool_str(row.abelian),
                issues,
            ]
        )
    widths = [max(len(line[i]) for line in table) for i in range(len(headers))]
    out = []
    for i, line in enumerate(table):
        out.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
        if i == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
