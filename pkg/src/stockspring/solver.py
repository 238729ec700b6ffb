"""
Per-spring operating point selection.

Every requirement expressible through the two operating lengths is
intersected into a feasible region for (L1, L2):

    P1 bounds   ->  L1 in [L0 - P1max/R, L0 - P1min/R]
    P2 bounds   ->  L2 likewise
    vol(L2)     ->  L2 interval (envelope volume is linear in length)
    stroke      ->  L1 - L2 band
    energy      ->  a curved band, handled against the same region
    physics     ->  L2 >= solid length + travel reserve, L1 <= L0

Every selectable objective is monotone (or constant) in each length, so
the optimum sits on a vertex of the region; vertices are enumerated in
closed form and the best feasible one is returned exactly.

Infeasible springs still get a deterministic operating point for
scoring: each user bound is clamped to its nearest attainable value and
the clamped corner with the smallest total constraint mark wins.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import inf, pi, sqrt

from . import mechanics
from .marks import crisp_mark
from .mechanics import (CatalogueEntry, DerivedGeometry, Material,
                        get_material, min_operating_length)
from .sheet import (CRITERIA, CRITERION_INDEX, MINIMIZE, Criterion,
                    SpecificationSheet)

_I_P1 = CRITERION_INDEX[Criterion.P1]
_I_P2 = CRITERION_INDEX[Criterion.P2]
_I_L1 = CRITERION_INDEX[Criterion.L1]
_I_L2 = CRITERION_INDEX[Criterion.L2]
_I_SH = CRITERION_INDEX[Criterion.STROKE]
_I_ENERGY = CRITERION_INDEX[Criterion.ENERGY]
_I_VOL_L2 = CRITERION_INDEX[Criterion.VOL_L2]
_I_FATIGUE = CRITERION_INDEX[Criterion.FATIGUE]
_I_BUCKLING = CRITERION_INDEX[Criterion.BUCKLING]
_I_RESERVE = CRITERION_INDEX[Criterion.SOLID_RESERVE]


class SheetContext:
    """Sheet unpacked into flat arrays for the per-entry hot path."""

    __slots__ = ("sheet", "lo", "hi", "lo_given", "hi_given", "weights",
                 "included", "objective", "obj_index", "sense", "minimize",
                 "ncycles", "nu")

    def __init__(self, sheet: SpecificationSheet):
        self.sheet = sheet
        ivs = [sheet.bounds[c] for c in CRITERIA]
        self.lo = [iv.lo for iv in ivs]
        self.hi = [iv.hi for iv in ivs]
        self.lo_given = [iv.lo_given for iv in ivs]
        self.hi_given = [iv.hi_given for iv in ivs]
        self.weights = [sheet.weights[c] for c in CRITERIA]
        self.included = [i for i, iv in enumerate(ivs) if iv.any_given]
        self.objective = sheet.objective
        self.obj_index = CRITERION_INDEX[sheet.objective.criterion]
        self.sense = sheet.objective.sense
        self.minimize = sheet.objective.sense == MINIMIZE
        self.ncycles = sheet.ncycles
        self.nu = sheet.nu


def _context(sheet) -> SheetContext:
    return sheet if isinstance(sheet, SheetContext) else SheetContext(sheet)


@dataclass(frozen=True)
class FeasibleBox:
    """Interval description of the (L1, L2) region.

    ``l1``/``l2`` already include the physical caps; ``sh`` is the
    stroke band (lower edge never below 0); ``energy`` only binds when
    ``energy_given``.  ``empty`` reports the interval system alone --
    energy can still empty a non-empty box.
    """

    l1: tuple[float, float]
    l2: tuple[float, float]
    sh: tuple[float, float]
    energy: tuple[float, float]
    energy_given: bool
    empty: bool


@dataclass(frozen=True)
class OperatingPoint:
    """Chosen working lengths; always physically attainable."""

    L1: float
    L2: float
    feasible: bool
    box: FeasibleBox


def _user_l1_interval(ctx: SheetContext, L0: float, R: float):
    lo, hi = -inf, inf
    if ctx.lo_given[_I_L1]:
        lo = max(lo, ctx.lo[_I_L1])
    if ctx.hi_given[_I_L1]:
        hi = min(hi, ctx.hi[_I_L1])
    if ctx.hi_given[_I_P1]:
        lo = max(lo, L0 - ctx.hi[_I_P1] / R)
    if ctx.lo_given[_I_P1]:
        hi = min(hi, L0 - ctx.lo[_I_P1] / R)
    return lo, hi


def _user_l2_interval(ctx: SheetContext, entry: CatalogueEntry):
    L0, R = entry.L0, entry.R
    lo, hi = -inf, inf
    if ctx.lo_given[_I_L2]:
        lo = max(lo, ctx.lo[_I_L2])
    if ctx.hi_given[_I_L2]:
        hi = min(hi, ctx.hi[_I_L2])
    if ctx.hi_given[_I_P2]:
        lo = max(lo, L0 - ctx.hi[_I_P2] / R)
    if ctx.lo_given[_I_P2]:
        hi = min(hi, L0 - ctx.lo[_I_P2] / R)
    if ctx.lo_given[_I_VOL_L2] or ctx.hi_given[_I_VOL_L2]:
        per_mm = pi * (entry.Do / 2.0) ** 2 * 1e-3  # cm3 per mm of length
        if ctx.lo_given[_I_VOL_L2]:
            lo = max(lo, ctx.lo[_I_VOL_L2] / per_mm)
        if ctx.hi_given[_I_VOL_L2]:
            hi = min(hi, ctx.hi[_I_VOL_L2] / per_mm)
    return lo, hi


def feasible_box(entry: CatalogueEntry, geometry: DerivedGeometry,
                 sheet) -> FeasibleBox:
    """Intersect user bounds and physical caps into the (L1, L2) region."""
    ctx = _context(sheet)
    L0, R = entry.L0, entry.R
    floor = min_operating_length(entry, geometry)

    u1lo, u1hi = _user_l1_interval(ctx, L0, R)
    a1, b1 = max(floor, u1lo), min(L0, u1hi)
    u2lo, u2hi = _user_l2_interval(ctx, entry)
    a2, b2 = max(floor, u2lo), min(L0, u2hi)

    s_lo = max(0.0, ctx.lo[_I_SH]) if ctx.lo_given[_I_SH] else 0.0
    s_hi = ctx.hi[_I_SH] if ctx.hi_given[_I_SH] else inf

    e_given = ctx.lo_given[_I_ENERGY] or ctx.hi_given[_I_ENERGY]
    e_lo = ctx.lo[_I_ENERGY] if ctx.lo_given[_I_ENERGY] else 0.0
    e_hi = ctx.hi[_I_ENERGY] if ctx.hi_given[_I_ENERGY] else inf

    empty = (a1 > b1 or a2 > b2 or s_lo > s_hi
             or max(a1, a2 + s_lo) > min(b1, b2 + s_hi))
    return FeasibleBox((a1, b1), (a2, b2), (s_lo, s_hi),
                       (e_lo, e_hi), e_given, empty)


def _energy_at(entry: CatalogueEntry, x: float, y: float) -> float:
    return 0.5 * entry.R * ((entry.L0 - y) ** 2 - (entry.L0 - x) ** 2)


def _vertices(entry: CatalogueEntry, box: FeasibleBox):
    """Pairwise intersections of the active constraint boundaries."""
    a1, b1 = box.l1
    a2, b2 = box.l2
    s_lo, s_hi = box.sh
    L0, R = entry.L0, entry.R
    xs = (a1, b1)
    ys = (a2, b2)
    ss = [s_lo] + ([s_hi] if s_hi < inf else [])
    pts = []
    for x in xs:
        for y in ys:
            pts.append((x, y))
        for s in ss:
            pts.append((x, x - s))
    for y in ys:
        for s in ss:
            pts.append((y + s, y))
    if box.energy_given:
        es = [e for e in box.energy if 0.0 < e < inf]
        for e in es:
            two_e = 2.0 * e / R
            for x in xs:
                u = L0 - x
                pts.append((x, L0 - sqrt(u * u + two_e)))
            for y in ys:
                v = L0 - y
                rad = v * v - two_e
                if rad >= 0.0:
                    pts.append((L0 - sqrt(rad), y))
            for s in ss:
                if s > 1e-12:
                    v = (e + 0.5 * R * s * s) / (R * s)
                    pts.append((L0 - v + s, L0 - v))
    return pts


def _passes(entry: CatalogueEntry, box: FeasibleBox, x: float, y: float,
            tol: float) -> bool:
    a1, b1 = box.l1
    a2, b2 = box.l2
    if x < a1 - tol or x > b1 + tol or y < a2 - tol or y > b2 + tol:
        return False
    s = x - y
    if s < box.sh[0] - tol or s > box.sh[1] + tol:
        return False
    if box.energy_given:
        e = _energy_at(entry, x, y)
        e_tol = 1e-9 * max(1.0, abs(e)) + entry.R * entry.L0 * tol
        if e < box.energy[0] - e_tol or e > box.energy[1] + e_tol:
            return False
    return True


def _objective_function(ctx: SheetContext, entry: CatalogueEntry,
                        geometry: DerivedGeometry, material: Material):
    crit = ctx.objective.criterion
    L0, R = entry.L0, entry.R
    if crit is Criterion.L2:
        return lambda x, y: y
    if crit is Criterion.P2:
        return lambda x, y: R * (L0 - y)
    if crit is Criterion.ENERGY:
        return lambda x, y: 0.5 * R * ((L0 - y) ** 2 - (L0 - x) ** 2)
    if crit is Criterion.FATIGUE:
        ncycles = ctx.ncycles
        return lambda x, y: mechanics.fatigue_life_factor(
            entry, geometry, material, R * (L0 - x), R * (L0 - y), ncycles)
    if crit is Criterion.MASS:
        const = mechanics.spring_mass(entry, geometry, material)
    elif crit is Criterion.PRICE:
        const = entry.price
    elif crit is Criterion.L0:
        const = entry.L0
    else:  # Criterion.RATE
        const = entry.R
    return lambda x, y: const


def _pick_best(candidates, fobj, minimize: bool):
    """Extremal objective with the max-L1-then-max-L2 tie break."""
    best = None
    best_v = None
    for x, y in candidates:
        v = fobj(x, y)
        if best is None:
            best, best_v = (x, y), v
            continue
        tie_eps = 1e-12 * max(1.0, abs(best_v))
        if abs(v - best_v) <= tie_eps:
            if (x, y) > best:
                best = (x, y)
        elif (v < best_v) if minimize else (v > best_v):
            best, best_v = (x, y), v
    return best


def _clamp(v: float, lo: float, hi: float) -> float:
    return lo if v < lo else (hi if v > hi else v)


def _clamped_point(ctx: SheetContext, entry: CatalogueEntry,
                   geometry: DerivedGeometry, material: Material,
                   box: FeasibleBox) -> tuple[float, float]:
    """Deterministic least-violating point when the region is empty.

    Candidates are the corners of the user intervals clamped into the
    physical range, plus stroke-repaired variants of each corner; the
    one with the smallest summed mark over the length-dependent criteria
    wins (the remaining criteria do not depend on the point).
    """
    L0, R = entry.L0, entry.R
    floor = min_operating_length(entry, geometry)

    u1lo, u1hi = _user_l1_interval(ctx, L0, R)
    u2lo, u2hi = _user_l2_interval(ctx, entry)
    c1 = {_clamp(u1lo if u1lo > -inf else floor, floor, L0),
          _clamp(u1hi if u1hi < inf else L0, floor, L0)}
    c2 = {_clamp(u2lo if u2lo > -inf else floor, floor, L0),
          _clamp(u2hi if u2hi < inf else L0, floor, L0)}

    s_lo, s_hi = box.sh
    seen = set()
    candidates = []

    def add(x, y):
        y = min(y, x)
        key = (round(x, 9), round(y, 9))
        if key not in seen:
            seen.add(key)
            candidates.append((x, y))

    for x in sorted(c1):
        for y_raw in sorted(c2):
            y = min(y_raw, x)
            add(x, y)
            s = x - y
            target = s_lo if s < s_lo else (s_hi if s > s_hi else None)
            if target is not None and target < inf:
                add(_clamp(y + target, floor, L0), y)
                add(x, _clamp(x - target, floor, L0))

    lo, hi = ctx.lo, ctx.hi
    per_mm = pi * (entry.Do / 2.0) ** 2 * 1e-3
    buckling = mechanics.buckling_length(entry, geometry, material, ctx.nu)

    def total_mark(x, y):
        p1 = R * (L0 - x)
        p2 = R * (L0 - y)
        total = crisp_mark(lo[_I_P1], hi[_I_P1], p1)
        total += crisp_mark(lo[_I_P2], hi[_I_P2], p2)
        total += crisp_mark(lo[_I_L1], hi[_I_L1], x)
        total += crisp_mark(lo[_I_L2], hi[_I_L2], y)
        total += crisp_mark(lo[_I_SH], hi[_I_SH], x - y)
        total += crisp_mark(lo[_I_ENERGY], hi[_I_ENERGY], _energy_at(entry, x, y))
        total += crisp_mark(lo[_I_VOL_L2], hi[_I_VOL_L2], per_mm * y)
        total += crisp_mark(lo[_I_FATIGUE], hi[_I_FATIGUE],
                            mechanics.fatigue_life_factor(
                                entry, geometry, material, p1, p2, ctx.ncycles))
        total += crisp_mark(lo[_I_BUCKLING], hi[_I_BUCKLING], y - buckling)
        total += crisp_mark(lo[_I_RESERVE], hi[_I_RESERVE], y - floor)
        return total

    best = None
    best_m = None
    for x, y in candidates:
        m = total_mark(x, y)
        if best is None or m < best_m - 1e-12 or (
                abs(m - best_m) <= 1e-12 and (x, y) > best):
            best, best_m = (x, y), m
    return best


def choose_operating_point(entry: CatalogueEntry, geometry: DerivedGeometry,
                           sheet) -> OperatingPoint:
    """Optimal (L1, L2) for the sheet objective, or the clamped fallback."""
    ctx = _context(sheet)
    material = get_material(entry.material)
    box = feasible_box(entry, geometry, ctx)
    tol = 1e-9 * max(1.0, entry.L0)

    if not box.empty:
        fobj = _objective_function(ctx, entry, geometry, material)
        feasible = [(x, y) for x, y in _vertices(entry, box)
                    if _passes(entry, box, x, y, tol)]
        if (box.energy_given
                and ctx.objective.criterion is Criterion.FATIGUE
                and not ctx.minimize):
            # Along an energy level curve P2^2 - P1^2 is fixed, so the
            # fatigue demand alpha*P2 - beta*P1 is convex in P1 with an
            # interior minimum (= fatigue maximum) the vertex set would
            # miss; add it in closed form for each active curve.
            material_ = material
            tau_all = material_.shear_allowable(entry.d)
            tau_a0 = material_.amplitude_allowable(entry.d, ctx.ncycles)
            ratio = (tau_all - tau_a0) / (tau_all + tau_a0)  # beta/alpha
            L0, R = entry.L0, entry.R
            for e in (e for e in box.energy if 0.0 < e < inf):
                c = 2.0 * R * e  # P2^2 - P1^2 on the curve
                p1 = sqrt(c) * ratio / sqrt(1.0 - ratio * ratio)
                p2 = sqrt(p1 * p1 + c)
                x, y = L0 - p1 / R, L0 - p2 / R
                if _passes(entry, box, x, y, tol):
                    feasible.append((x, y))
        if feasible:
            x, y = _pick_best(feasible, fobj, ctx.minimize)
            # Vertex arithmetic may overshoot the physical caps by float
            # dust; the returned point must be exactly attainable.
            floor = min_operating_length(entry, geometry)
            x = min(max(x, floor), entry.L0)
            y = min(max(y, floor), x)
            return OperatingPoint(L1=x, L2=y, feasible=True, box=box)

    x, y = _clamped_point(ctx, entry, geometry, material, box)
    return OperatingPoint(L1=x, L2=y, feasible=False, box=box)
