"""
Serialization shared by the CLI and the HTTP service.

Both front ends call the same engine and the same payload builders, so
a given (sheet, catalogue, method) always renders to the same JSON.
"""
from __future__ import annotations

import json
from typing import Any

from . import fuzzy as fz
from .engine import EvaluatedSpring, SearchResult
from .sheet import CRITERIA, SpecificationSheet


def entry_dict(ev: EvaluatedSpring) -> dict[str, Any]:
    e = ev.entry
    return {"id": e.id, "Do": e.Do, "d": e.d, "L0": e.L0, "R": e.R,
            "material": e.material, "ends": e.ends, "price": e.price}


def operating_point_dict(ev: EvaluatedSpring) -> dict[str, Any]:
    e, p = ev.entry, ev.point
    return {"L1": p.L1, "L2": p.L2,
            "P1": e.R * (e.L0 - p.L1), "P2": e.R * (e.L0 - p.L2),
            "sh": p.L1 - p.L2, "feasible": p.feasible}


def criterion_reports(ev: EvaluatedSpring,
                      sheet: SpecificationSheet) -> list[dict[str, Any]]:
    """Per-criterion rows for one spring: value, bounds, both mark kinds."""
    rows = []
    for i, criterion in enumerate(CRITERIA):
        iv = sheet.bounds[criterion]
        value = ev.values[i]
        wm = fz.worst_mark(iv.lo, iv.hi, value)
        vec = fz.quality_memberships(wm)
        rows.append({
            "criterion": criterion.value,
            "value": value,
            "lo": iv.lo, "hi": iv.hi,
            "lo_given": iv.lo_given, "hi_given": iv.hi_given,
            "crisp_mark": ev.marks[i],
            "worst_mark": None if wm == float("inf") else wm,
            "fuzzy_mark": dict(zip(fz.QUALITY_GRADES, vec)),
        })
    return rows


def spring_summary(ev: EvaluatedSpring) -> dict[str, Any]:
    return {"id": ev.entry.id,
            "objective_value": ev.objective_value,
            "violation": ev.violation,
            "ncv": ev.ncv,
            "score": ev.score,
            "L1": ev.point.L1,
            "L2": ev.point.L2,
            "feasible": ev.point.feasible}


def result_dict(result: SearchResult, sheet: SpecificationSheet,
                top: int = 10, trace: bool = False) -> dict[str, Any]:
    sel = result.selected
    payload = {
        "method": result.method,
        "selected": {
            "entry": entry_dict(sel),
            "operating_point": operating_point_dict(sel),
            "objective_value": sel.objective_value,
            "violation": sel.violation,
            "ncv": sel.ncv,
            "reports": criterion_reports(sel, sheet),
        },
        "feasible_count": result.feasible_count,
        "evaluated": result.evaluated,
        "ranking": [spring_summary(ev) for ev in result.ranking[:top]],
    }
    if trace:
        payload["per_spring"] = [spring_summary(ev) for ev in result.ranking]
    return payload


def search_payload(results: dict[str, SearchResult], sheet: SpecificationSheet,
                   catalogue_source: str, catalogue_size: int,
                   top: int = 10, trace: bool = False) -> dict[str, Any]:
    return {
        "specification": sheet.to_full_dict(),
        "catalogue": {"source": catalogue_source, "entries": catalogue_size},
        "results": {method: result_dict(res, sheet, top=top, trace=trace)
                    for method, res in results.items()},
    }


def stable_json(payload: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"
