"""Stock compression spring selection from interval-valued requirements."""

from .catalogue import (Catalogue, build_catalogue, generate_synthetic,
                        load_catalogue, parse_catalogue, reference_springs,
                        serialize_catalogue)
from .engine import (FUZZY, MULTICRITERIA, EvaluatedSpring, SearchResult,
                     evaluate_entry, search, tournament_step)
from .errors import (DegenerateError, EmptyCatalogueError, FormatError,
                     GeometryError, RangeError, SpecError, StockSpringError)
from .mechanics import (MATERIALS, CatalogueEntry, DerivedGeometry, Material,
                        buckling_length, derive_geometry, fatigue_life_factor,
                        length_at_load, load_at_length, mass_and_volumes,
                        shear_stress, stored_energy, surge_frequency)
from .sheet import (CRITERIA, Criterion, Interval, Objective,
                    SpecificationSheet, criterion_value, normalize)
from .solver import FeasibleBox, OperatingPoint, choose_operating_point, feasible_box

__version__ = "0.1.0"

__all__ = [
    "Catalogue", "CatalogueEntry", "Criterion", "CRITERIA",
    "DegenerateError", "DerivedGeometry", "EmptyCatalogueError",
    "EvaluatedSpring", "FeasibleBox", "FormatError", "FUZZY",
    "GeometryError", "Interval", "MATERIALS", "Material", "MULTICRITERIA",
    "Objective", "OperatingPoint", "RangeError", "SearchResult",
    "SpecificationSheet", "SpecError", "StockSpringError",
    "buckling_length", "build_catalogue", "choose_operating_point",
    "criterion_value", "derive_geometry", "evaluate_entry",
    "fatigue_life_factor", "feasible_box", "generate_synthetic",
    "length_at_load", "load_at_length", "load_catalogue",
    "mass_and_volumes", "normalize", "parse_catalogue",
    "reference_springs", "search", "serialize_catalogue", "shear_stress",
    "stored_energy", "surge_frequency", "tournament_step",
]
