"""
Crisp constraint marks and the violation-weighted evaluation score.

A criterion with value V and bounds [L, U] earns a mark of zero inside
the interval and a relative overshoot outside it:

    V > U:  (V - U) / U,  or V itself when U = 0
    V < L:  (L - V) / L,  or -V when L <= 0 (mirror of the U = 0 rule,
            needed by the signed buckling-margin criterion)

Marks aggregate into a single Violation number as the weighted mean over
the *violated* criteria only, so one small overshoot is not washed out
by the twenty-odd satisfied criteria.
"""
from __future__ import annotations

from math import log

from .sheet import MINIMIZE

#: Weighting applied to Violation inside the evaluation exponent.
VIOLATION_GAIN = 100.0

#: Objective values at or below this are clamped before taking logs.
OBJECTIVE_FLOOR = 1e-12

#: Operating points are only guaranteed to satisfy bounds to 1e-9
#: relative, so marks below this are floating-point dust, not
#: violations.
MARK_TOLERANCE = 1e-9


def crisp_mark(lo: float, hi: float, value: float) -> float:
    """Relative overshoot of value against [lo, hi]; 0 when inside."""
    if value > hi:
        return value if hi == 0 else (value - hi) / hi
    if value < lo:
        return (lo - value) / lo if lo > 0 else -value
    return 0.0


def violation(marks, weights) -> float:
    """Weighted mean mark over the violated criteria; 0 when none."""
    num = 0.0
    den = 0.0
    for m, k in zip(marks, weights):
        if m > 0.0:
            num += k * m
            den += k
    return num / den if den > 0.0 else 0.0


def count_violations(marks) -> int:
    """Number of criteria with a positive mark (ncv)."""
    return sum(1 for m in marks if m > 0.0)


def evaluation_score(objective_value: float, violation_: float,
                     sense: str) -> float:
    """Log-domain evaluation: ln(objective) + a * 100 * violation.

    Equivalent in ordering to objective * exp(a*b*violation) with b = 100
    and a = +1 when minimizing, -1 when maximizing, but immune to the
    overflow the plain exponential hits once violation exceeds ~7.
    Smaller is better when minimizing; larger is better when maximizing.
    """
    a = 1.0 if sense == MINIMIZE else -1.0
    return log(max(objective_value, OBJECTIVE_FLOOR)) + a * VIOLATION_GAIN * violation_
