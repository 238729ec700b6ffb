"""
Catalogue scan and the two selection analyses.

Every spring that survives the hard material/ends filters gets an
operating point from the solver, all 23 criterion values, crisp marks,
the aggregate Violation and an evaluation score.

The multicriteria analysis simply takes the extremal evaluation score.
The fuzzy analysis runs a sequential tournament: the first spring seeds
the incumbent and every later spring challenges it.  A lower violated-
criteria count (ncv) wins outright; on equal counts the challenger is
graded against the incumbent on requirement match and objective value,
the two gradings are fused through the Mamdani rule grids, and the
incumbent falls only when the "inferior" grade strictly beats the
"superior" one.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import fuzzy as fz
from .catalogue import Catalogue
from .errors import EmptyCatalogueError
from .marks import (MARK_TOLERANCE, OBJECTIVE_FLOOR, count_violations,
                    crisp_mark, evaluation_score, violation)
from .mechanics import CatalogueEntry, DerivedGeometry, get_material
from .sheet import SpecificationSheet, criterion_values
from .solver import OperatingPoint, SheetContext, choose_operating_point

MULTICRITERIA = "multicriteria"
FUZZY = "fuzzy"
METHODS = (MULTICRITERIA, FUZZY)


@dataclass(frozen=True)
class EvaluatedSpring:
    """One catalogue entry fully scored against a requirement sheet."""

    entry: CatalogueEntry
    geometry: DerivedGeometry
    point: OperatingPoint
    values: tuple[float, ...]
    marks: tuple[float, ...]
    violation: float
    ncv: int
    objective_value: float
    score: float
    spec_vector: fz.FuzzyVector | None = None


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one catalogue scan.

    ``ranking`` is best-first: by evaluation score for the multicriteria
    method; for the fuzzy method (which only defines pairwise
    preference) it is the incumbent trail of the scan, most recent
    first.
    """

    method: str
    selected: EvaluatedSpring
    feasible_count: int
    evaluated: int
    ranking: tuple[EvaluatedSpring, ...]


def evaluate_entry(entry: CatalogueEntry, geometry: DerivedGeometry,
                   sheet, need_fuzzy: bool = False) -> EvaluatedSpring:
    """Score one entry: operating point, criterion marks, violation."""
    ctx = sheet if isinstance(sheet, SheetContext) else SheetContext(sheet)
    material = get_material(entry.material)
    point = choose_operating_point(entry, geometry, ctx)
    values = criterion_values(entry, geometry, point.L1, point.L2,
                              material, ctx.ncycles, ctx.nu)
    lo, hi = ctx.lo, ctx.hi
    # Marks below the solver's 1e-9 feasibility tolerance are float
    # dust from a bound-riding operating point, not real violations.
    marks = [m if m >= MARK_TOLERANCE else 0.0
             for m in (crisp_mark(lo[i], hi[i], values[i])
                       for i in range(len(values)))]
    viol = violation(marks, ctx.weights)
    ncv = count_violations(marks)
    objective_value = values[ctx.obj_index]
    score = evaluation_score(objective_value, viol, ctx.sense)

    spec_vector = None
    if need_fuzzy:
        num = [0.0, 0.0, 0.0, 0.0, 0.0]
        den = 0.0
        for i in ctx.included:
            k = ctx.weights[i]
            if k <= 0.0:
                continue
            vec = fz.fuzzy_mark(lo[i], hi[i], values[i])
            den += k
            for g in range(5):
                num[g] += k * vec[g]
        # A sheet with no bound given matches every spring perfectly.
        spec_vector = (tuple(x / den for x in num) if den > 0.0
                       else fz.FULL_MATCH)

    return EvaluatedSpring(entry=entry, geometry=geometry, point=point,
                           values=tuple(values), marks=tuple(marks),
                           violation=viol, ncv=ncv,
                           objective_value=objective_value, score=score,
                           spec_vector=spec_vector)


def tournament_step(incumbent: EvaluatedSpring, tested: EvaluatedSpring,
                    sense: str) -> bool:
    """True when the tested spring replaces the incumbent.

    The spring with fewer violated criteria wins outright.  Otherwise
    the requirement-match vectors combine through the first rule grid,
    the objective comparison through the second, and the incumbent is
    replaced only when inferior strictly outweighs superior.
    """
    if tested.ncv != incumbent.ncv:
        return tested.ncv < incumbent.ncv
    spec_cmp = fz.combine(tested.spec_vector, incumbent.spec_vector,
                          fz.SPEC_RULES)
    mark = fz.objective_mark(max(incumbent.objective_value, OBJECTIVE_FLOOR),
                             max(tested.objective_value, OBJECTIVE_FLOOR),
                             sense)
    obj_cmp = fz.objective_memberships(mark)
    final = fz.combine(obj_cmp, spec_cmp, fz.FINAL_RULES)
    inferior = max(final[0], final[1])
    superior = max(final[3], final[4])
    return inferior > superior


def _hard_filtered(catalogue: Catalogue, sheet: SpecificationSheet):
    entries = [e for e in catalogue.entries
               if (sheet.material is None or e.material == sheet.material)
               and (sheet.ends is None or e.ends == sheet.ends)]
    if not entries:
        raise EmptyCatalogueError(
            "no catalogue entry matches the material/ends filters "
            f"(material={sheet.material!r}, ends={sheet.ends!r})")
    return entries


def search(catalogue: Catalogue, sheet: SpecificationSheet,
           method: str = MULTICRITERIA) -> SearchResult:
    """Scan the catalogue and select the best spring for the sheet."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    ctx = SheetContext(sheet)
    entries = _hard_filtered(catalogue, sheet)
    need_fuzzy = method == FUZZY
    evaluated = [evaluate_entry(e, catalogue.geometry(e), ctx, need_fuzzy)
                 for e in entries]
    feasible_count = sum(1 for ev in evaluated if ev.ncv == 0)

    if method == MULTICRITERIA:
        if ctx.minimize:
            selected = min(evaluated, key=lambda ev: (ev.score, ev.entry.id))
            ranking = sorted(evaluated, key=lambda ev: (ev.score, ev.entry.id))
        else:
            selected = max(evaluated, key=lambda ev: (ev.score, -ev.entry.id))
            ranking = sorted(evaluated, key=lambda ev: (-ev.score, ev.entry.id))
    else:
        incumbent = evaluated[0]
        trail = [incumbent]
        for challenger in evaluated[1:]:
            if tournament_step(incumbent, challenger, ctx.sense):
                incumbent = challenger
                trail.append(challenger)
        selected = incumbent
        ranking = list(reversed(trail))

    return SearchResult(method=method, selected=selected,
                        feasible_count=feasible_count,
                        evaluated=len(evaluated), ranking=tuple(ranking))
