"""
The designer's interval-valued requirement sheet.

A sheet holds one [lo, hi] interval per selection criterion plus hard
material/ends filters, the cycle count for the fatigue check, the end
fixation factor for the buckling check, and the search objective.  Any
bound the designer leaves open falls back to 0 (lower) or 10^7 (upper),
so an empty sheet accepts every spring.

Sheets arrive as flat JSON documents with ``<criterion>_min`` /
``<criterion>_max`` keys; ``normalize`` turns such a document into an
immutable ``SpecificationSheet`` and rejects unknown keys outright so a
typo can never silently become a default.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isfinite
from typing import Any, Mapping

from . import mechanics
from .errors import SpecError
from .mechanics import (CatalogueEntry, DerivedGeometry, Material,
                        envelope_volume, min_operating_length)

DEFAULT_LO = 0.0
DEFAULT_HI = 1.0e7

#: Lower default for the one signed criterion (buckling margin), which
#: must stay unconstrained unless the no-buckling check is requested.
UNCONSTRAINED_LO = -1.0e7


class Criterion(enum.Enum):
    """The 23 quantities a spring is judged on."""

    DO = "Do"
    DI = "Di"
    D = "D"
    WIRE = "d"
    L0 = "L0"
    RATE = "R"
    COILS = "n"
    PITCH = "p"
    LS = "Ls"
    MASS = "mass"
    SURGE = "surgeFrequency"
    VOL_L0 = "volAtL0"
    VOL_L2 = "volAtL2"
    PRICE = "price"
    P1 = "P1"
    P2 = "P2"
    L1 = "L1"
    L2 = "L2"
    STROKE = "sh"
    ENERGY = "energy"
    FATIGUE = "fatigueFactor"
    BUCKLING = "bucklingMargin"
    SOLID_RESERVE = "solidReserve"


CRITERIA: tuple[Criterion, ...] = tuple(Criterion)
CRITERION_INDEX: dict[Criterion, int] = {c: i for i, c in enumerate(CRITERIA)}
_BY_NAME: dict[str, Criterion] = {c.value: c for c in CRITERIA}

#: Criteria that expose _min/_max keys on the sheet document.  The three
#: derived safety criteria (fatigue factor, buckling margin, solid-travel
#: reserve) are driven by Ncycles / no_buckling instead.
SHEET_CRITERIA: tuple[Criterion, ...] = tuple(
    c for c in CRITERIA
    if c not in (Criterion.FATIGUE, Criterion.BUCKLING, Criterion.SOLID_RESERVE))

OBJECTIVE_CRITERIA: tuple[Criterion, ...] = (
    Criterion.L2, Criterion.P2, Criterion.MASS, Criterion.ENERGY,
    Criterion.FATIGUE, Criterion.PRICE, Criterion.L0, Criterion.RATE)

MINIMIZE = "minimize"
MAXIMIZE = "maximize"
SENSES = (MINIMIZE, MAXIMIZE)

_SCALAR_KEYS = ("Ncycles", "nu", "no_buckling", "material", "ends",
                "objective", "weights")
_KNOWN_KEYS = frozenset(
    [f"{c.value}_min" for c in SHEET_CRITERIA]
    + [f"{c.value}_max" for c in SHEET_CRITERIA]
    + list(_SCALAR_KEYS))


@dataclass(frozen=True)
class Interval:
    """One criterion's acceptance interval; flags record user-given sides."""

    lo: float = DEFAULT_LO
    hi: float = DEFAULT_HI
    lo_given: bool = False
    hi_given: bool = False

    @property
    def any_given(self) -> bool:
        return self.lo_given or self.hi_given


@dataclass(frozen=True)
class Objective:
    criterion: Criterion = Criterion.L2
    sense: str = MINIMIZE


@dataclass(frozen=True)
class SpecificationSheet:
    """Normalized, immutable requirement sheet."""

    bounds: dict[Criterion, Interval]
    weights: dict[Criterion, float]
    material: str | None = None
    ends: str | None = None
    ncycles: float = DEFAULT_HI
    ncycles_given: bool = False
    nu: float = 1.0
    no_buckling: bool = False
    objective: Objective = field(default_factory=Objective)

    def interval(self, criterion: Criterion) -> Interval:
        return self.bounds[criterion]

    def to_request_dict(self) -> dict[str, Any]:
        """Minimal sheet document: user-given bounds and non-default scalars.

        ``normalize(sheet.to_request_dict())`` reproduces the sheet.
        """
        doc: dict[str, Any] = {}
        for c in SHEET_CRITERIA:
            iv = self.bounds[c]
            if iv.lo_given:
                doc[f"{c.value}_min"] = iv.lo
            if iv.hi_given:
                doc[f"{c.value}_max"] = iv.hi
        if self.ncycles_given:
            doc["Ncycles"] = self.ncycles
        if self.nu != 1.0:
            doc["nu"] = self.nu
        if self.no_buckling:
            doc["no_buckling"] = True
        if self.material is not None:
            doc["material"] = self.material
        if self.ends is not None:
            doc["ends"] = self.ends
        doc["objective"] = {"criterion": self.objective.criterion.value,
                            "sense": self.objective.sense}
        weights = {c.value: w for c, w in self.weights.items() if w != 1.0}
        if weights:
            doc["weights"] = weights
        return doc

    def to_full_dict(self) -> dict[str, Any]:
        """Complete dump with every interval and applied default."""
        return {
            "bounds": {
                c.value: {"lo": iv.lo, "hi": iv.hi,
                          "lo_given": iv.lo_given, "hi_given": iv.hi_given}
                for c, iv in self.bounds.items()},
            "weights": {c.value: w for c, w in self.weights.items()},
            "material": self.material,
            "ends": self.ends,
            "Ncycles": self.ncycles,
            "nu": self.nu,
            "no_buckling": self.no_buckling,
            "objective": {"criterion": self.objective.criterion.value,
                          "sense": self.objective.sense},
        }


def _as_number(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecError(f"{key}: expected a number, got {value!r}")
    v = float(value)
    if not isfinite(v):
        raise SpecError(f"{key}: value must be finite, got {value!r}")
    return v


def normalize(raw: Mapping[str, Any]) -> SpecificationSheet:
    """Validate a sheet document and fill every open bound with defaults.

    Raises SpecError (naming the offending field) on unknown keys,
    non-numeric or negative bounds, inverted intervals, unknown
    material/ends/criterion names, or a bad objective.
    """
    if not isinstance(raw, Mapping):
        raise SpecError(f"sheet document must be a JSON object, got {type(raw).__name__}")
    unknown = sorted(set(raw) - _KNOWN_KEYS)
    if unknown:
        raise SpecError(f"unknown sheet field(s): {', '.join(unknown)}")

    bounds: dict[Criterion, Interval] = {}
    for c in SHEET_CRITERIA:
        lo_key, hi_key = f"{c.value}_min", f"{c.value}_max"
        lo_raw, hi_raw = raw.get(lo_key), raw.get(hi_key)
        lo_given, hi_given = lo_raw is not None, hi_raw is not None
        lo = _as_number(lo_key, lo_raw) if lo_given else DEFAULT_LO
        hi = _as_number(hi_key, hi_raw) if hi_given else DEFAULT_HI
        if lo < 0:
            raise SpecError(f"{lo_key}: bounds must be non-negative, got {lo:.6g}")
        if lo > hi:
            raise SpecError(
                f"{c.value}: lower bound {lo:.6g} exceeds upper bound {hi:.6g}")
        bounds[c] = Interval(lo, hi, lo_given, hi_given)

    ncycles_given = raw.get("Ncycles") is not None
    ncycles = _as_number("Ncycles", raw["Ncycles"]) if ncycles_given else DEFAULT_HI
    if ncycles < 1:
        raise SpecError(f"Ncycles: must be >= 1, got {ncycles:.6g}")

    nu = _as_number("nu", raw["nu"]) if raw.get("nu") is not None else 1.0
    if nu <= 0:
        raise SpecError(f"nu: end fixation factor must be positive, got {nu:.6g}")

    no_buckling = raw.get("no_buckling", False)
    if not isinstance(no_buckling, bool):
        raise SpecError(f"no_buckling: expected true/false, got {no_buckling!r}")

    material = raw.get("material")
    if material is not None and material not in mechanics.MATERIALS:
        raise SpecError(f"material: unknown material {material!r}; "
                        f"known: {sorted(mechanics.MATERIALS)}")
    ends = raw.get("ends")
    if ends is not None and ends not in mechanics.END_TYPES:
        raise SpecError(f"ends: unknown end type {ends!r}; "
                        f"known: {list(mechanics.END_TYPES)}")

    # Fatigue demands kick in once a cycle count is given; the buckling
    # margin is only constrained when the no-buckling box is ticked.
    bounds[Criterion.FATIGUE] = (Interval(1.0, DEFAULT_HI, True, False)
                                 if ncycles_given else Interval())
    bounds[Criterion.BUCKLING] = (Interval(0.0, DEFAULT_HI, True, False)
                                  if no_buckling
                                  else Interval(UNCONSTRAINED_LO, DEFAULT_HI))
    bounds[Criterion.SOLID_RESERVE] = Interval()

    objective = Objective()
    if raw.get("objective") is not None:
        obj_raw = raw["objective"]
        if not isinstance(obj_raw, Mapping):
            raise SpecError("objective: expected {criterion, sense}")
        bad = sorted(set(obj_raw) - {"criterion", "sense"})
        if bad:
            raise SpecError(f"objective: unknown field(s): {', '.join(bad)}")
        crit_name = obj_raw.get("criterion", Criterion.L2.value)
        criterion = _BY_NAME.get(crit_name)
        if criterion is None or criterion not in OBJECTIVE_CRITERIA:
            raise SpecError(
                f"objective.criterion: {crit_name!r} is not selectable; "
                f"choose one of {[c.value for c in OBJECTIVE_CRITERIA]}")
        sense = obj_raw.get("sense", MINIMIZE)
        if sense not in SENSES:
            raise SpecError(f"objective.sense: {sense!r} is not one of {list(SENSES)}")
        objective = Objective(criterion, sense)

    weights = {c: 1.0 for c in CRITERIA}
    if raw.get("weights") is not None:
        w_raw = raw["weights"]
        if not isinstance(w_raw, Mapping):
            raise SpecError("weights: expected an object of criterion -> K")
        for name, value in w_raw.items():
            criterion = _BY_NAME.get(name)
            if criterion is None:
                raise SpecError(f"weights: unknown criterion {name!r}")
            w = _as_number(f"weights.{name}", value)
            if w < 0:
                raise SpecError(f"weights.{name}: must be >= 0, got {w:.6g}")
            weights[criterion] = w

    return SpecificationSheet(bounds=bounds, weights=weights,
                              material=material, ends=ends,
                              ncycles=ncycles, ncycles_given=ncycles_given,
                              nu=nu, no_buckling=no_buckling,
                              objective=objective)


def criterion_values(entry: CatalogueEntry, geometry: DerivedGeometry,
                     L1: float, L2: float, material: Material,
                     ncycles: float, nu: float) -> list[float]:
    """All 23 criterion values at the operating point, in CRITERIA order."""
    P1 = entry.R * (entry.L0 - L1)
    P2 = entry.R * (entry.L0 - L2)
    mass = mechanics.spring_mass(entry, geometry, material)
    buck = mechanics.buckling_length(entry, geometry, material, nu)
    return [
        entry.Do,
        geometry.Di,
        geometry.D,
        entry.d,
        entry.L0,
        entry.R,
        geometry.n,
        geometry.p,
        geometry.Ls,
        mass,
        mechanics.surge_frequency(entry, geometry, material),
        envelope_volume(entry, entry.L0),
        envelope_volume(entry, L2),
        entry.price,
        P1,
        P2,
        L1,
        L2,
        L1 - L2,
        0.5 * entry.R * ((entry.L0 - L2) ** 2 - (entry.L0 - L1) ** 2),
        mechanics.fatigue_life_factor(entry, geometry, material, P1, P2, ncycles),
        L2 - buck,
        L2 - min_operating_length(entry, geometry),
    ]


def criterion_value(criterion: Criterion, entry: CatalogueEntry,
                    geometry: DerivedGeometry, L1: float, L2: float,
                    material: Material, ncycles: float = DEFAULT_HI,
                    nu: float = 1.0) -> float:
    """Value of a single criterion at the operating point (L1, L2)."""
    return criterion_values(entry, geometry, L1, L2, material,
                            ncycles, nu)[CRITERION_INDEX[criterion]]
