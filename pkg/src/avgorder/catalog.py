"""The small-group catalog: parsing, loading and validation.

Catalog grammar (text, blank-line-separated blocks, ``#`` comments):

    order/index/name/degree
    (0 1 2)(3 4)             <- one generator per line, disjoint cycles
    ! spectrum 1:1 2:3 3:8   <- optional expected records
    ! abelian true
    ! supersolvable false

Names must not contain whitespace, commas or slashes; ``()`` denotes the
identity generator.  Validation recomputes every entry's order, checks
expected records when present, and asserts pairwise non-isomorphism of
entries sharing an order, so transcription errors cannot load.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import CatalogError
from .perm import DEFAULT_ISO_CAP, PermGroup, Permutation, is_isomorphic
from .stats import order_spectrum
from .structure import is_abelian, is_supersolvable


@dataclass(frozen=True)
class ExpectedRecord:
    spectrum: Optional[dict[int, int]] = None
    abelian: Optional[bool] = None
    supersolvable: Optional[bool] = None

    def is_empty(self) -> bool:
        return self.spectrum is None and self.abelian is None and self.supersolvable is None


@dataclass
class CatalogEntry:
    order: int
    index: int
    name: str
    degree: int
    generators: tuple[str, ...]
    expected: ExpectedRecord = field(default_factory=ExpectedRecord)
    _group: Optional[PermGroup] = field(default=None, repr=False, compare=False)

    def group(self) -> PermGroup:
        if self._group is None:
            gens = [Permutation.parse(text, self.degree) for text in self.generators]
            self._group = PermGroup(gens)
        return self._group

    @property
    def key(self) -> tuple[int, int]:
        return (self.order, self.index)


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Parse catalog text; errors carry the offending line number."""
    entries: list[CatalogEntry] = []
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines() + [""], start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if line:
            block.append((lineno, line))
            continue
        if block:
            entries.append(_parse_block(block))
            block = []
    return entries


def _parse_block(block: list[tuple[int, str]]) -> CatalogEntry:
    lineno, header = block[0]
    parts = header.split("/")
    if len(parts) != 4:
        raise CatalogError(f"line {lineno}: header must be order/index/name/degree, got {header!r}")
    try:
        order, index, degree = int(parts[0]), int(parts[1]), int(parts[3])
    except ValueError as exc:
        raise CatalogError(f"line {lineno}: non-integer field in header {header!r}") from exc
    name = parts[2]
    if not name or any(ch.isspace() for ch in name) or "," in name:
        raise CatalogError(f"line {lineno}: invalid name {name!r}")
    if order < 1 or index < 1 or degree < 1:
        raise CatalogError(f"line {lineno}: order, index and degree must be positive")

    generators: list[str] = []
    spectrum = abelian = supersolvable = None
    for lineno, line in block[1:]:
        if line.startswith("!"):
            fields = line[1:].split()
            if not fields:
                raise CatalogError(f"line {lineno}: empty expected record")
            kind, rest = fields[0], fields[1:]
            if kind == "spectrum":
                try:
                    spectrum = {int(d): int(n) for d, n in (tok.split(":") for tok in rest)}
                except ValueError as exc:
                    raise CatalogError(f"line {lineno}: bad spectrum record") from exc
            elif kind in ("abelian", "supersolvable"):
                if rest not in (["true"], ["false"]):
                    raise CatalogError(f"line {lineno}: {kind} expects true or false")
                value = rest == ["true"]
                if kind == "abelian":
                    abelian = value
                else:
                    supersolvable = value
            else:
                raise CatalogError(f"line {lineno}: unknown expected record {kind!r}")
        else:
            try:
                Permutation.parse(line, degree)
            except ValueError as exc:
                raise CatalogError(f"line {lineno}: bad generator {line!r}: {exc}") from exc
            generators.append(line)
    if not generators:
        raise CatalogError(f"line {block[0][0]}: entry {name!r} has no generators")
    return CatalogEntry(
        order=order,
        index=index,
        name=name,
        degree=degree,
        generators=tuple(generators),
        expected=ExpectedRecord(spectrum, abelian, supersolvable),
    )


def validate_catalog(entries: list[CatalogEntry], iso_cap: int = DEFAULT_ISO_CAP) -> None:
    """Check entry invariants; raise CatalogError naming the offender."""
    seen_keys: dict[tuple[int, int], str] = {}
    for entry in entries:
        if entry.key in seen_keys:
            raise CatalogError(
                f"duplicate key {entry.key}: {seen_keys[entry.key]!r} and {entry.name!r}"
            )
        seen_keys[entry.key] = entry.name
        group = entry.group()
        if group.order != entry.order:
            raise CatalogError(
                f"entry {entry.name!r} claims order {entry.order} but generates order {group.order}"
            )
        exp = entry.expected
        if exp.spectrum is not None and order_spectrum(group).counts != exp.spectrum:
            raise CatalogError(f"entry {entry.name!r} fails its expected spectrum")
        if exp.abelian is not None and is_abelian(group) != exp.abelian:
            raise CatalogError(f"entry {entry.name!r} fails its expected abelian flag")
        if exp.supersolvable is not None and is_supersolvable(group) != exp.supersolvable:
            raise CatalogError(f"entry {entry.name!r} fails its expected supersolvable flag")

    by_order: dict[int, list[CatalogEntry]] = {}
    for entry in entries:
        by_order.setdefault(entry.order, []).append(entry)
    for order, block in sorted(by_order.items()):
        for i, left in enumerate(block):
            for right in block[i + 1 :]:
                if is_isomorphic(left.group(), right.group(), iso_cap):
                    raise CatalogError(
                        f"entries {left.name!r} and {right.name!r} of order {order} are isomorphic"
                    )


def builtin_catalog_path() -> Path:
    return Path(str(resources.files("avgorder").joinpath("data/groups_le30.txt")))


_LOADED: dict[str, list[CatalogEntry]] = {}


def load_catalog(path: Optional[str | Path] = None, iso_cap: int = DEFAULT_ISO_CAP) -> list[CatalogEntry]:
    """Parse and fully validate a catalog file (the shipped one by default).

    Validated catalogs are cached per resolved path; callers receive a
    shared list and must not mutate it.
    """
    resolved = Path(path) if path is not None else builtin_catalog_path()
    cache_key = str(resolved.resolve())
    if cache_key not in _LOADED:
        try:
            text = resolved.read_text()
        except OSError as exc:
            raise CatalogError(f"cannot read catalog {resolved}: {exc}") from exc
        entries = parse_catalog(text)
        validate_catalog(entries, iso_cap)
        entries.sort(key=lambda e: e.key)
        _LOADED[cache_key] = entries
    return _LOADED[cache_key]


def find_entry(entries: list[CatalogEntry], ref: str) -> CatalogEntry:
    """Look up an entry by 'order/index' (e.g. '12/5') or by exact name."""
    ref = ref.strip()
    if "/" in ref:
        parts = ref.split("/")
        if len(parts) == 2:
            try:
                key = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise CatalogError(f"bad entry reference {ref!r}")
            for entry in entries:
                if entry.key == key:
                    return entry
            raise CatalogError(f"no catalog entry {ref!r}")
    matches = [e for e in entries if e.name == ref]
    if not matches:
        raise CatalogError(f"no catalog entry named {ref!r}")
    if len(matches) > 1:
        raise CatalogError(f"ambiguous entry name {ref!r}")
    return matches[0]
