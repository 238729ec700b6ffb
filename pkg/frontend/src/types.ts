/** Wire types mirroring the engine service's JSON payloads. */

export interface IntervalState {
  lo: number;
  hi: number;
  lo_given: boolean;
  hi_given: boolean;
}

export interface DefaultsPayload {
  bounds: Record<string, IntervalState>;
  weights: Record<string, number>;
  material: string | null;
  ends: string | null;
  Ncycles: number;
  nu: number;
  no_buckling: boolean;
  objective: { criterion: string; sense: string };
}

export interface EntryPayload {
  id: number;
  Do: number;
  d: number;
  L0: number;
  R: number;
  material: string;
  ends: string;
  price: number;
}

export interface OperatingPointPayload {
  L1: number;
  L2: number;
  P1: number;
  P2: number;
  sh: number;
  feasible: boolean;
}

export interface CriterionReportPayload {
  criterion: string;
  value: number;
  lo: number;
  hi: number;
  lo_given: boolean;
  hi_given: boolean;
  crisp_mark: number;
  worst_mark: number | null;
  fuzzy_mark: Record<string, number>;
}

export interface SelectedPayload {
  entry: EntryPayload;
  operating_point: OperatingPointPayload;
  objective_value: number;
  violation: number;
  ncv: number;
  reports: CriterionReportPayload[];
}

export interface SpringSummaryPayload {
  id: number;
  objective_value: number;
  violation: number;
  ncv: number;
  score: number;
  L1: number;
  L2: number;
  feasible: boolean;
}

export interface ResultPayload {
  method: string;
  selected: SelectedPayload;
  feasible_count: number;
  evaluated: number;
  ranking: SpringSummaryPayload[];
}

export interface SearchPayload {
  specification: DefaultsPayload;
  catalogue: { source: string; entries: number };
  results: Record<string, ResultPayload>;
}

/** Flat requirement-sheet document accepted by POST /api/search. */
export type SheetDocument = Record<string, unknown>;

export interface SearchRequestBody {
  specification: SheetDocument;
  method: string;
  top?: number;
}
