/** Canned service payloads for intercepted-response tests. */
import type {
  CriterionReportPayload,
  DefaultsPayload,
  ResultPayload,
  SearchPayload,
  SelectedPayload,
} from "../src/types";

export function makeDefaults(): DefaultsPayload {
  const names = [
    "Do", "Di", "D", "d", "L0", "R", "n", "p", "Ls", "mass",
    "surgeFrequency", "volAtL0", "volAtL2", "price", "P1", "P2",
    "L1", "L2", "sh", "energy", "fatigueFactor", "bucklingMargin",
    "solidReserve",
  ];
  const bounds: DefaultsPayload["bounds"] = {};
  for (const name of names) {
    bounds[name] = { lo: 0, hi: 1e7, lo_given: false, hi_given: false };
  }
  const weights: Record<string, number> = {};
  for (const name of names) weights[name] = 1;
  return {
    bounds,
    weights,
    material: null,
    ends: null,
    Ncycles: 1e7,
    nu: 1,
    no_buckling: false,
    objective: { criterion: "L2", sense: "minimize" },
  };
}

function report(criterion: string, value: number,
                extra: Partial<CriterionReportPayload> = {}): CriterionReportPayload {
  return {
    criterion,
    value,
    lo: 0,
    hi: 1e7,
    lo_given: false,
    hi_given: false,
    crisp_mark: 0,
    worst_mark: 50,
    fuzzy_mark: { VB: 0, B: 0, M: 0, G: 0, VG: 1 },
    ...extra,
  };
}

function selected(id: number, L2: number, violation: number,
                  rate: number, rateMark: number): SelectedPayload {
  return {
    entry: {
      id,
      Do: 32.0,
      d: 2.2,
      L0: id === 2 ? 25.0 : 32.0,
      R: rate,
      material: "steel",
      ends: "closed_ground",
      price: 1.64,
    },
    operating_point: {
      L1: L2 + 11,
      L2,
      P1: 15.0,
      P2: id === 2 ? 78.6 : 62.75,
      sh: 11.0,
      feasible: true,
    },
    objective_value: L2,
    violation,
    ncv: rateMark > 0 ? 1 : 0,
    reports: [
      report("Do", 32.0, { hi: 38.0, hi_given: true }),
      report("Di", 27.6, { lo: 27.0, lo_given: true }),
      report("R", rate, { hi: 5.5, hi_given: true, crisp_mark: rateMark }),
      report("L2", L2),
      report("sh", 11.0, { lo: 11.0, hi: 11.0, lo_given: true, hi_given: true }),
    ],
  };
}

function result(method: string, sel: SelectedPayload): ResultPayload {
  return {
    method,
    selected: sel,
    feasible_count: 7,
    evaluated: 1000,
    ranking: [{
      id: sel.entry.id,
      objective_value: sel.objective_value,
      violation: sel.violation,
      ncv: sel.ncv,
      score: 2.86,
      L1: sel.operating_point.L1,
      L2: sel.operating_point.L2,
      feasible: true,
    }],
  };
}

/** Both-methods payload for the clamping-pin reselection flow. */
export function makeBothMethodsPayload(): SearchPayload {
  return {
    specification: makeDefaults(),
    catalogue: { source: "catalogue.csv", entries: 1000 },
    results: {
      multicriteria: result("multicriteria",
                            selected(2, 11.4, 0.051, 5.78, 0.0509)),
      fuzzy: result("fuzzy", selected(3, 17.54, 0, 4.34, 0)),
    },
  };
}

export function collectPayloadStrings(payload: unknown): Set<string> {
  const out = new Set<string>();
  const walk = (node: unknown): void => {
    if (typeof node === "number") {
      out.add(String(node));
    } else if (typeof node === "string") {
      out.add(node);
    } else if (Array.isArray(node)) {
      node.forEach(walk);
    } else if (node !== null && typeof node === "object") {
      Object.values(node).forEach(walk);
    }
  };
  walk(payload);
  return out;
}
