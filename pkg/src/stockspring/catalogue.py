"""
Catalogue ingestion, validation and synthetic generation.

The CSV wire format is fixed:

    do_mm,d_mm,l0_mm,r_n_per_mm,material,ends,price

with ``material`` in {steel, stainless} and ``ends`` in
{closed, closed_ground}.  Bad rows never abort a parse; they land in a
rejection report with a reason.  Every admitted entry is guaranteed to
pass the geometry derivation, whose result is cached on the catalogue.

``generate_synthetic`` builds a reproducible stand-in for a real
manufacturer database: a handful of fixed reference springs (used by the
bundled case studies and their tests) plus seeded random entries over
realistic wire/index/length ranges, priced in proportion to wire mass.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, replace

from .errors import FormatError, GeometryError
from .mechanics import (END_CLOSED_GROUND, END_TYPES, MATERIALS,
                        CatalogueEntry, DerivedGeometry, derive_geometry,
                        entry_fault, get_material, spring_mass)

CSV_FIELDS = ("do_mm", "d_mm", "l0_mm", "r_n_per_mm", "material", "ends", "price")
CSV_HEADER = ",".join(CSV_FIELDS)


@dataclass(frozen=True)
class RejectedRow:
    line: int
    content: str
    reason: str


@dataclass(frozen=True)
class Catalogue:
    """Immutable, validated list of stock springs."""

    entries: tuple[CatalogueEntry, ...]
    geometries: dict[int, DerivedGeometry]
    source: str = "<memory>"
    rejections: tuple[RejectedRow, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def geometry(self, entry: CatalogueEntry) -> DerivedGeometry:
        return self.geometries[entry.id]

    def entry(self, entry_id: int) -> CatalogueEntry:
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise KeyError(f"no entry with id {entry_id}")


def _admit(entry: CatalogueEntry) -> DerivedGeometry:
    """Validate one entry; raises GeometryError with the reason."""
    fault = entry_fault(entry)
    if fault:
        raise GeometryError(fault)
    return derive_geometry(entry, get_material(entry.material))


def build_catalogue(entries, source: str = "<memory>") -> Catalogue:
    """Catalogue from already-constructed entries; invalid ones raise."""
    ordered = sorted(entries, key=lambda e: e.id)
    ids = [e.id for e in ordered]
    if len(set(ids)) != len(ids):
        raise ValueError("catalogue ids must be unique")
    geometries = {e.id: _admit(e) for e in ordered}
    return Catalogue(entries=tuple(ordered), geometries=geometries, source=source)


def parse_catalogue(stream, source: str = "<stream>") -> Catalogue:
    """Parse CSV text or a text stream; bad rows go to the rejection list."""
    if isinstance(stream, (str, bytes)):
        if isinstance(stream, bytes):
            stream = stream.decode("utf-8")
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("catalogue stream is empty; expected header "
                          f"{CSV_HEADER!r}") from None
    if [h.strip() for h in header] != list(CSV_FIELDS):
        raise FormatError(f"bad catalogue header {','.join(header)!r}; "
                          f"expected {CSV_HEADER!r}")

    entries: list[CatalogueEntry] = []
    geometries: dict[int, DerivedGeometry] = {}
    rejections: list[RejectedRow] = []
    for row_no, row in enumerate(reader, start=1):
        raw = ",".join(row)
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(CSV_FIELDS):
            rejections.append(RejectedRow(row_no, raw,
                                          f"expected {len(CSV_FIELDS)} fields, got {len(row)}"))
            continue
        try:
            entry = CatalogueEntry(
                id=row_no,
                Do=float(row[0]), d=float(row[1]), L0=float(row[2]),
                R=float(row[3]), material=row[4].strip(), ends=row[5].strip(),
                price=float(row[6]))
        except ValueError as exc:
            rejections.append(RejectedRow(row_no, raw, f"unparsable number: {exc}"))
            continue
        try:
            geometries[entry.id] = _admit(entry)
        except GeometryError as exc:
            rejections.append(RejectedRow(row_no, raw, str(exc)))
            continue
        entries.append(entry)
    return Catalogue(entries=tuple(entries), geometries=geometries,
                     source=source, rejections=tuple(rejections))


def serialize_catalogue(catalogue: Catalogue) -> str:
    """CSV text that parses back to the same entries."""
    lines = [CSV_HEADER]
    for e in catalogue.entries:
        lines.append(f"{e.Do!r},{e.d!r},{e.L0!r},{e.R!r},"
                     f"{e.material},{e.ends},{e.price!r}")
    return "\n".join(lines) + "\n"


def load_catalogue(path) -> Catalogue:
    with open(path, encoding="utf-8") as fh:
        return parse_catalogue(fh, source=str(path))


def _priced(entry: CatalogueEntry) -> CatalogueEntry:
    """Deterministic price: base plus a wire-mass share."""
    geometry = derive_geometry(entry, get_material(entry.material))
    mass = spring_mass(entry, geometry, get_material(entry.material))
    return replace(entry, price=round(0.4 + 0.05 * mass, 2))


def reference_springs() -> tuple[CatalogueEntry, ...]:
    """The fixed springs every synthetic catalogue starts with.

    Ids 1..6: the clamping-pin manual pick, the two clamping-pin
    reselection results, the two displacement-sensor results and the
    displacement-sensor manual pick.
    """
    raw = (
        CatalogueEntry(1, 36.0, 2.5, 50.0, 3.54, "steel", END_CLOSED_GROUND, 0.0),
        CatalogueEntry(2, 32.0, 2.2, 25.0, 5.78, "steel", END_CLOSED_GROUND, 0.0),
        CatalogueEntry(3, 32.0, 2.2, 32.0, 4.34, "steel", END_CLOSED_GROUND, 0.0),
        CatalogueEntry(4, 11.0, 0.9, 100.0, 0.3, "steel", END_CLOSED_GROUND, 0.0),
        CatalogueEntry(5, 11.0, 1.0, 100.0, 0.374, "stainless", END_CLOSED_GROUND, 0.0),
        CatalogueEntry(6, 12.5, 1.25, 100.0, 0.8, "steel", END_CLOSED_GROUND, 0.0),
    )
    return tuple(_priced(e) for e in raw)


def generate_synthetic(seed: int, count: int) -> Catalogue:
    """Deterministic catalogue of ``count`` springs for a given seed.

    Always contains the reference springs (the five case-study springs,
    plus the sixth manual pick when count allows); the rest are sampled
    over d in [0.2, 8] mm, spring index in [4, 16], L0/D in [1, 10] and
    kept only when the derived geometry is sound.
    """
    if count < 5:
        raise ValueError(f"count must be at least 5, got {count}")
    seeds = reference_springs()
    if count < len(seeds):
        seeds = seeds[:count]
    entries = list(seeds)
    rng = random.Random(seed)
    next_id = len(seeds) + 1
    while len(entries) < count:
        d = round(rng.uniform(0.2, 8.0), 2)
        index = rng.uniform(4.0, 16.0)
        Do = round(d * (index + 1.0), 1)
        D = Do - d
        if D < 3.2 * d:
            continue
        L0 = round(rng.uniform(1.0, 10.0) * D, 1)
        n = rng.uniform(2.5, 15.0)
        material = rng.choice(("steel", "stainless"))
        ends = rng.choice(END_TYPES)
        R = float(f"{MATERIALS[material].G * d ** 4 / (8.0 * D ** 3 * n):.4g}")
        if R <= 0.0 or L0 <= 0.0:
            continue
        candidate = CatalogueEntry(next_id, Do, d, L0, R, material, ends, 0.0)
        if entry_fault(candidate):
            continue
        try:
            entries.append(_priced(candidate))
        except GeometryError:
            continue
        next_id += 1
    return build_catalogue(entries, source=f"synthetic(seed={seed},count={count})")
