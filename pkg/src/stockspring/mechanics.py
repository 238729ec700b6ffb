"""
Helical compression spring mechanics.

Pure functions covering the classic round-wire relations: coil geometry,
the linear load/length line P = R*(L0 - L), stored energy, mass and
envelope volumes, surge frequency, Wahl-corrected shear stress, a
Goodman-style fatigue margin and the elastic buckling length.

Notation and units (EN flavour):

    Do   mm     outer coil diameter
    Di   mm     inner coil diameter
    D    mm     mean coil diameter (Do - d)
    d    mm     wire diameter
    L0   mm     free length
    Ls   mm     solid length
    L    mm     loaded length
    R    N/mm   axial rate
    P    N      axial load
    n    -      active coils
    nt   -      total coils (n + 2 dead coils)
    C    -      spring index D/d
    G, E N/mm2  shear / elastic modulus
    rho  kg/m3  density

Every function here is a pure function of its arguments and is safe to
call concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isfinite, pi, sqrt

from .errors import GeometryError, RangeError

END_CLOSED = "closed"
END_CLOSED_GROUND = "closed_ground"
END_TYPES = (END_CLOSED, END_CLOSED_GROUND)

#: Dead (inactive) coils for both supported end types: nt = n + 2.
DEAD_COILS = 2.0

#: Fraction of the solid travel kept in reserve.  Operating lengths must
#: stay at or above Ls + SOLID_TRAVEL_RESERVE * (L0 - Ls) so a spring is
#: never driven to solid.
SOLID_TRAVEL_RESERVE = 0.1

#: Spring index below which an entry is considered unmanufacturable.
MIN_SPRING_INDEX = 3.0

#: Cap on the fatigue life factor when the stress cycle vanishes.
FATIGUE_FACTOR_CAP = 1.0e6


@dataclass(frozen=True)
class Material:
    """Spring wire grade: moduli, density and allowable-stress model.

    Tensile strength follows the usual wire-diameter power law
    Rm(d) = A * d**-0.16 with A = tensile_coefficient, so Rm(1 mm) = A.
    The static shear allowable is 0.56 * Rm.  ``endurance_bands`` maps a
    cycle-count ceiling to the fraction of the static allowable that may
    be used as stress amplitude at zero mean stress.
    """

    id: str
    G: float
    E: float
    rho: float
    tensile_coefficient: float
    endurance_bands: tuple[tuple[float, float], ...] = (
        (1.0e5, 0.42),
        (1.0e6, 0.38),
        (float("inf"), 0.35),
    )

    def tensile_strength(self, d: float) -> float:
        """Minimum tensile strength Rm for wire diameter d (N/mm2)."""
        return self.tensile_coefficient * d ** -0.16

    def shear_allowable(self, d: float) -> float:
        """Static allowable shear stress, 0.56 * Rm(d) (N/mm2)."""
        return 0.56 * self.tensile_strength(d)

    def amplitude_allowable(self, d: float, ncycles: float) -> float:
        """Allowable shear amplitude at zero mean stress (N/mm2)."""
        for ceiling, fraction in self.endurance_bands:
            if ncycles <= ceiling:
                return fraction * self.shear_allowable(d)
        return self.endurance_bands[-1][1] * self.shear_allowable(d)


MATERIALS: dict[str, Material] = {
    "steel": Material("steel", G=81500.0, E=206000.0, rho=7850.0,
                      tensile_coefficient=2230.0),
    "stainless": Material("stainless", G=70000.0, E=185000.0, rho=7900.0,
                          tensile_coefficient=1950.0),
}


def get_material(material_id: str) -> Material:
    try:
        return MATERIALS[material_id]
    except KeyError:
        raise KeyError(f"unknown material {material_id!r}; "
                       f"known: {sorted(MATERIALS)}") from None


@dataclass(frozen=True)
class CatalogueEntry:
    """One stock spring as listed in a manufacturer catalogue."""

    id: int
    Do: float
    d: float
    L0: float
    R: float
    material: str
    ends: str
    price: float


def entry_fault(entry: CatalogueEntry) -> str | None:
    """Return a human-readable invariant breach, or None if sound."""
    for name in ("Do", "d", "L0", "R", "price"):
        v = getattr(entry, name)
        if not isinstance(v, (int, float)) or not isfinite(v):
            return f"{name} is not a finite number"
    if entry.d <= 0:
        return "wire diameter d must be positive"
    if entry.Do <= 2 * entry.d:
        return "outer diameter Do must exceed 2*d"
    if entry.L0 <= 0:
        return "free length L0 must be positive"
    if entry.R <= 0:
        return "rate R must be positive"
    if entry.price < 0:
        return "price must be non-negative"
    if entry.material not in MATERIALS:
        return f"unknown material {entry.material!r}"
    if entry.ends not in END_TYPES:
        return f"unknown end type {entry.ends!r}"
    c = (entry.Do - entry.d) / entry.d
    if c < MIN_SPRING_INDEX:
        return f"spring index C = {c:.2f} below {MIN_SPRING_INDEX}"
    return None


@dataclass(frozen=True)
class DerivedGeometry:
    """Coil geometry derived from the four catalogued parameters."""

    D: float
    Di: float
    C: float
    n: float
    nt: float
    p: float
    Ls: float


def derive_geometry(entry: CatalogueEntry, material: Material) -> DerivedGeometry:
    """Derive mean/inner diameter, coil counts, pitch and solid length.

    Active coils follow from the catalogued rate, n = G*d^4 / (8*D^3*R).
    Both supported end types carry two dead coils (nt = n + 2); solid
    length is nt*d for ground ends and (nt + 1)*d for unground closed
    ends.  Pitch is the free-state coil spacing (L0 - Ls)/n + d.

    Raises GeometryError when the entry is physically inconsistent
    (non-positive active coils or a solid length at or above L0).
    """
    D = entry.Do - entry.d
    Di = entry.Do - 2 * entry.d
    C = D / entry.d
    n = material.G * entry.d ** 4 / (8 * D ** 3 * entry.R)
    nt = n + DEAD_COILS
    if entry.ends == END_CLOSED_GROUND:
        Ls = nt * entry.d
    else:
        Ls = (nt + 1) * entry.d
    if n <= 0:
        raise GeometryError(f"entry {entry.id}: derived active coils n = {n:.4g} <= 0")
    if Ls >= entry.L0:
        raise GeometryError(
            f"entry {entry.id}: solid length Ls = {Ls:.4g} mm >= free length "
            f"L0 = {entry.L0:.4g} mm")
    p = (entry.L0 - Ls) / n + entry.d
    return DerivedGeometry(D=D, Di=Di, C=C, n=n, nt=nt, p=p, Ls=Ls)


def _geometry_for(entry: CatalogueEntry,
                  geometry: DerivedGeometry | None) -> DerivedGeometry:
    if geometry is not None:
        return geometry
    return derive_geometry(entry, get_material(entry.material))


def load_at_length(entry: CatalogueEntry, L: float,
                   geometry: DerivedGeometry | None = None) -> float:
    """Axial load at length L on the linear rate line, P = R*(L0 - L)."""
    geometry = _geometry_for(entry, geometry)
    tol = 1e-9 * max(1.0, entry.L0)
    if L < geometry.Ls - tol or L > entry.L0 + tol:
        raise RangeError(
            f"length {L:.6g} mm outside the usable range "
            f"[{geometry.Ls:.6g}, {entry.L0:.6g}] mm")
    return entry.R * (entry.L0 - L)


def length_at_load(entry: CatalogueEntry, P: float,
                   geometry: DerivedGeometry | None = None) -> float:
    """Length at which the spring carries load P (inverse of the rate line)."""
    geometry = _geometry_for(entry, geometry)
    p_solid = entry.R * (entry.L0 - geometry.Ls)
    tol = 1e-9 * max(1.0, p_solid)
    if P < -tol or P > p_solid + tol:
        raise RangeError(
            f"load {P:.6g} N outside the usable range [0, {p_solid:.6g}] N")
    return entry.L0 - P / entry.R


def stored_energy(entry: CatalogueEntry, L1: float, L2: float,
                  geometry: DerivedGeometry | None = None) -> float:
    """Elastic energy released over the stroke from L1 down to L2 (N*mm).

    Closed form of the integral of the rate line:
    E = R/2 * ((L0 - L2)^2 - (L0 - L1)^2).
    """
    geometry = _geometry_for(entry, geometry)
    tol = 1e-9 * max(1.0, entry.L0)
    if not (geometry.Ls - tol <= L2 <= L1 <= entry.L0 + tol):
        raise RangeError(
            f"operating lengths must satisfy Ls <= L2 <= L1 <= L0; "
            f"got L1 = {L1:.6g}, L2 = {L2:.6g}")
    return 0.5 * entry.R * ((entry.L0 - L2) ** 2 - (entry.L0 - L1) ** 2)


def envelope_volume(entry: CatalogueEntry, L: float) -> float:
    """Cylindrical envelope volume pi*(Do/2)^2 * L, in cm3."""
    return pi * (entry.Do / 2.0) ** 2 * L * 1e-3


def spring_mass(entry: CatalogueEntry, geometry: DerivedGeometry,
                material: Material) -> float:
    """Wire mass in grams: section area times coil helix length times rho."""
    wire_volume = (pi * entry.d ** 2 / 4.0) * (pi * geometry.D * geometry.nt)
    return material.rho * wire_volume * 1e-6


def mass_and_volumes(entry: CatalogueEntry, geometry: DerivedGeometry,
                     material: Material, L: float) -> tuple[float, float, float]:
    """Mass (g), envelope volume at L0 and at the given length L (cm3)."""
    return (spring_mass(entry, geometry, material),
            envelope_volume(entry, entry.L0),
            envelope_volume(entry, L))


def surge_frequency(entry: CatalogueEntry, geometry: DerivedGeometry,
                    material: Material) -> float:
    """First natural frequency of longitudinal coil waves (Hz).

    f = 1/2 * sqrt(k / m) with the rate in N/m and m the mass of the
    active coils in kg.
    """
    wire_area = pi * entry.d ** 2 / 4.0
    active_mass = material.rho * wire_area * (pi * geometry.D * geometry.n) * 1e-9
    return 0.5 * sqrt(entry.R * 1e3 / active_mass)


def wahl_factor(C: float) -> float:
    """Wahl stress-correction factor for curvature and direct shear."""
    return (4 * C - 1) / (4 * C - 4) + 0.615 / C


def shear_stress(entry: CatalogueEntry, geometry: DerivedGeometry,
                 P: float) -> float:
    """Wahl-corrected torsional shear stress in the wire at load P (N/mm2)."""
    if P < 0:
        raise ValueError(f"load must be non-negative, got {P:.6g} N")
    return wahl_factor(geometry.C) * 8.0 * P * geometry.D / (pi * entry.d ** 3)


def fatigue_life_factor(entry: CatalogueEntry, geometry: DerivedGeometry,
                        material: Material, P1: float, P2: float,
                        ncycles: float) -> float:
    """Safety factor of the stress cycle (P1, P2) against the fatigue limit.

    The allowable region in the (mean, amplitude) shear-stress plane is
    bounded by a Goodman line from (0, tau_a0) to (tau_allow, 0), where
    tau_allow = 0.56*Rm and tau_a0 is the band allowable for ncycles.
    The factor scales the actual stress point radially onto that line:
    factor > 1 means the cycle lies inside the allowable region.  The
    static case P1 = P2 degenerates to the yield margin tau_allow/tau2.
    """
    if not 0 <= P1 <= P2:
        raise ValueError(f"loads must satisfy 0 <= P1 <= P2; "
                         f"got P1 = {P1:.6g}, P2 = {P2:.6g}")
    if ncycles < 1:
        raise ValueError(f"ncycles must be >= 1, got {ncycles:.6g}")
    tau1 = shear_stress(entry, geometry, P1)
    tau2 = shear_stress(entry, geometry, P2)
    tau_allow = material.shear_allowable(entry.d)
    tau_a0 = material.amplitude_allowable(entry.d, ncycles)
    tau_mean = 0.5 * (tau1 + tau2)
    tau_amp = 0.5 * (tau2 - tau1)
    demand = tau_amp / tau_a0 + tau_mean / tau_allow
    if demand <= 1.0 / FATIGUE_FACTOR_CAP:
        return FATIGUE_FACTOR_CAP
    return min(FATIGUE_FACTOR_CAP, 1.0 / demand)


def buckling_length(entry: CatalogueEntry, geometry: DerivedGeometry,
                    material: Material, nu: float) -> float:
    """Length below which the spring is elastically unstable (mm).

    Standard stability criterion with seating coefficient nu: the
    critical deflection is
    s_K = L0 * 0.5 * (1 - sqrt(1 - (pi*D / (nu*L0))^2 * c1)),
    c1 = (1 - G/E) / (0.5 + G/E), and L_K = L0 - s_K.  A negative
    radicand means the spring cannot buckle at any deflection; the
    returned length is then 0 so any operating point clears the check.
    """
    if nu <= 0:
        raise ValueError(f"end fixation factor nu must be positive, got {nu:.6g}")
    c1 = (1 - material.G / material.E) / (0.5 + material.G / material.E)
    slenderness = pi * geometry.D / (nu * entry.L0)
    radicand = 1.0 - slenderness * slenderness * c1
    if radicand < 0:
        return 0.0
    s_k = 0.5 * entry.L0 * (1.0 - sqrt(radicand))
    return entry.L0 - s_k


def min_operating_length(entry: CatalogueEntry,
                         geometry: DerivedGeometry) -> float:
    """Smallest admissible operating length: Ls plus the travel reserve."""
    return geometry.Ls + SOLID_TRAVEL_RESERVE * (entry.L0 - geometry.Ls)
