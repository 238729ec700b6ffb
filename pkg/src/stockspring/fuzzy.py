"""
Five-grade fuzzy machinery for the tournament comparison.

Quality vectors grade how well a criterion value sits inside its bounds
(very bad .. very good); comparison vectors grade one spring against
another (very inferior .. very superior).  Rules combine with the
Mamdani connectors: min for a cell activation, max when several cells
feed the same output grade.
"""
from __future__ import annotations

from .errors import DegenerateError
from .sheet import MINIMIZE

QUALITY_GRADES = ("VB", "B", "M", "G", "VG")
COMPARISON_GRADES = ("VI", "I", "E", "S", "VS")
_CMP_INDEX = {g: i for i, g in enumerate(COMPARISON_GRADES)}

#: FuzzyVector: five memberships in [0, 1], ordered as the grade tuples.
FuzzyVector = tuple[float, float, float, float, float]

FULL_MATCH: FuzzyVector = (0.0, 0.0, 0.0, 0.0, 1.0)

#: Grade of the tested spring (rows) against the incumbent (columns),
#: both graded on quality.  Output describes the incumbent: a very bad
#: tested spring against a very good incumbent reads "very superior".
SPEC_RULES: tuple[tuple[str, ...], ...] = (
    ("E", "S", "VS", "VS", "VS"),
    ("I", "E", "S", "VS", "VS"),
    ("VI", "I", "E", "S", "VS"),
    ("VI", "VI", "I", "E", "S"),
    ("VI", "VI", "VI", "I", "E"),
)

#: Final combination of the objective comparison (rows) with the
#: requirement comparison (columns).  Every row is non-decreasing left to
#: right and every column top to bottom, so the grid is monotone in both
#: arguments.
FINAL_RULES: tuple[tuple[str, ...], ...] = (
    ("I", "I", "I", "I", "E"),
    ("I", "I", "I", "E", "S"),
    ("I", "I", "E", "S", "S"),
    ("I", "E", "S", "S", "S"),
    ("E", "S", "S", "S", "S"),
)


def worst_mark(lo: float, hi: float, value: float) -> float:
    """Smaller of the two percentage margins of value to its bounds.

    The margin to an upper bound of zero is -value (the value itself is
    the overshoot); the margin to a non-positive lower bound is +inf
    (that side is unconstrained).  Negative means violated.
    """
    mark_u = -value if hi == 0 else (hi - value) / hi * 100.0
    mark_l = (value - lo) / lo * 100.0 if lo > 0 else float("inf")
    return mark_u if mark_u < mark_l else mark_l


def _tri(x: float, a: float, b: float, c: float) -> float:
    if x <= a or x >= c:
        return 0.0
    return (x - a) / (b - a) if x <= b else (c - x) / (c - b)


def quality_memberships(margin: float) -> FuzzyVector:
    """Grade a percentage margin on the VB..VG scale.

    Piecewise linear: VB saturates at and below 0 and dies at +5;
    B, M, G are triangles on (0,5,15), (5,15,30), (15,30,45); VG rises
    from 30 and saturates at 45.
    """
    vb = 1.0 if margin <= 0 else (0.0 if margin >= 5 else (5 - margin) / 5)
    vg = 0.0 if margin <= 30 else (1.0 if margin >= 45 else (margin - 30) / 15)
    return (vb,
            _tri(margin, 0.0, 5.0, 15.0),
            _tri(margin, 5.0, 15.0, 30.0),
            _tri(margin, 15.0, 30.0, 45.0),
            vg)


def fuzzy_mark(lo: float, hi: float, value: float) -> FuzzyVector:
    """Quality vector of one criterion value against its bounds."""
    return quality_memberships(worst_mark(lo, hi, value))


def aggregate(vectors, weights) -> FuzzyVector:
    """Componentwise weighted mean of quality vectors."""
    den = 0.0
    num = [0.0] * 5
    for vec, k in zip(vectors, weights):
        den += k
        for g in range(5):
            num[g] += k * vec[g]
    if den <= 0:
        raise ValueError("aggregate needs at least one positive weight")
    return tuple(x / den for x in num)


def combine(row: FuzzyVector, col: FuzzyVector,
            table: tuple[tuple[str, ...], ...]) -> FuzzyVector:
    """Mamdani inference over a 5x5 rule grid.

    Each cell fires at min(row_i, col_j); each output grade takes the max
    over the cells labelled with it.
    """
    out = [0.0] * 5
    for i in range(5):
        ri = row[i]
        if ri <= 0.0:
            continue
        row_labels = table[i]
        for j in range(5):
            cj = col[j]
            a = ri if ri < cj else cj
            if a <= 0.0:
                continue
            k = _CMP_INDEX[row_labels[j]]
            if a > out[k]:
                out[k] = a
    return tuple(out)


def objective_mark(obj_top: float, obj_tested: float, sense: str) -> float:
    """Relative objective comparison on a [-200, 200] scale.

    Positive always means the tested spring improves on the incumbent,
    whatever the optimization sense.
    """
    total = obj_top + obj_tested
    if total <= 1e-12:
        raise DegenerateError(
            f"objective comparison degenerate: {obj_top:.6g} + {obj_tested:.6g} ~ 0")
    m = 200.0 * (obj_top - obj_tested) / total
    return m if sense == MINIMIZE else -m


def objective_memberships(mark: float) -> FuzzyVector:
    """Grade an objective mark on the VI..VS scale.

    Positive marks (tested spring better) raise the incumbent-inferior
    grades: VI saturates at +100, I is a triangle on (0, 50, 100), E on
    (-25, 0, 25), S on (-100, -50, 0), VS saturates at -100.
    """
    vi = 0.0 if mark <= 50 else (1.0 if mark >= 100 else (mark - 50) / 50)
    vs = 1.0 if mark <= -100 else (0.0 if mark >= -50 else (-mark - 50) / 50)
    return (vi,
            _tri(mark, 0.0, 50.0, 100.0),
            _tri(mark, -25.0, 0.0, 25.0),
            _tri(mark, -100.0, -50.0, 0.0),
            vs)
