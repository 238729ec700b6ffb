/**
 * The requirement-sheet form: one min/max pair per criterion field,
 * grouped into the classic design / operating blocks, plus the
 * objective row and the method selector.  Empty inputs submit as
 * absent so the service applies its own defaults.
 */
import type { DefaultsPayload, SheetDocument } from "./types";

interface FieldSpec {
  name: string;
  label: string;
  unit: string;
}

export const DESIGN_FIELDS: FieldSpec[] = [
  { name: "Do", label: "Do", unit: "mm" },
  { name: "Di", label: "Di", unit: "mm" },
  { name: "D", label: "D", unit: "mm" },
  { name: "d", label: "d", unit: "mm" },
  { name: "L0", label: "L0", unit: "mm" },
  { name: "R", label: "R", unit: "N/mm" },
  { name: "n", label: "number of coils", unit: "" },
  { name: "p", label: "p", unit: "mm" },
  { name: "Ls", label: "Ls", unit: "mm" },
  { name: "volAtL0", label: "Vol (L0)", unit: "cm3" },
  { name: "mass", label: "Mass", unit: "g" },
  { name: "surgeFrequency", label: "Fe", unit: "Hz" },
  { name: "price", label: "Price", unit: "" },
];

export const OPERATING_FIELDS: FieldSpec[] = [
  { name: "P1", label: "P1", unit: "N" },
  { name: "P2", label: "P2", unit: "N" },
  { name: "L1", label: "L1", unit: "mm" },
  { name: "L2", label: "L2", unit: "mm" },
  { name: "sh", label: "sh", unit: "mm" },
  { name: "energy", label: "NRG", unit: "N*mm" },
  { name: "volAtL2", label: "Vol (L2)", unit: "cm3" },
];

export const OBJECTIVE_CHOICES = [
  "L2", "P2", "mass", "energy", "fatigueFactor", "price", "L0", "R",
];

export const METHOD_CHOICES = ["multicriteria", "fuzzy", "both"];

const MATERIAL_CHOICES = ["steel", "stainless"];
const ENDS_CHOICES = ["closed", "closed_ground"];
const DONT_CARE = "Don't care";

function boundInput(name: string, side: "min" | "max", placeholder: string) {
  const input = document.createElement("input");
  input.type = "text";
  input.inputMode = "decimal";
  input.name = `${name}_${side}`;
  input.placeholder = placeholder;
  input.className = "bound";
  return input;
}

function fieldRow(spec: FieldSpec, defaults: DefaultsPayload): HTMLElement {
  const row = document.createElement("div");
  row.className = "field-row";
  row.dataset.criterion = spec.name;
  const label = document.createElement("label");
  label.textContent = spec.unit ? `${spec.label} (${spec.unit})` : spec.label;
  const bounds = defaults.bounds[spec.name];
  row.append(
    label,
    boundInput(spec.name, "min", String(bounds?.lo ?? 0)),
    boundInput(spec.name, "max", String(bounds?.hi ?? 1e7)),
  );
  const error = document.createElement("span");
  error.className = "field-error";
  error.hidden = true;
  row.append(error);
  return row;
}

function pickList(name: string, choices: string[]): HTMLSelectElement {
  const select = document.createElement("select");
  select.name = name;
  for (const choice of [DONT_CARE, ...choices]) {
    const option = document.createElement("option");
    option.value = choice === DONT_CARE ? "" : choice;
    option.textContent = choice;
    select.append(option);
  }
  return select;
}

function labelled(text: string, control: HTMLElement): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "field-row";
  const label = document.createElement("label");
  label.textContent = text;
  wrap.append(label, control);
  return wrap;
}

export function renderSheetForm(
  container: HTMLElement,
  defaults: DefaultsPayload,
): HTMLFormElement {
  const form = document.createElement("form");
  form.className = "sheet-form";
  form.noValidate = true;

  const design = document.createElement("fieldset");
  design.className = "design-block";
  design.innerHTML = "<legend>Design parameters</legend>";
  const designHeader = document.createElement("div");
  designHeader.className = "field-row header";
  designHeader.innerHTML = "<label></label><span>Mini</span><span>Maxi</span>";
  design.append(designHeader);
  for (const spec of DESIGN_FIELDS) design.append(fieldRow(spec, defaults));
  design.append(labelled("Material:", pickList("material", MATERIAL_CHOICES)));
  design.append(labelled("Ends type:", pickList("ends", ENDS_CHOICES)));

  const operating = document.createElement("fieldset");
  operating.className = "operating-block";
  operating.innerHTML = "<legend>Operating parameters</legend>";
  for (const spec of OPERATING_FIELDS) operating.append(fieldRow(spec, defaults));

  const ncycles = document.createElement("input");
  ncycles.type = "text";
  ncycles.inputMode = "decimal";
  ncycles.name = "Ncycles";
  ncycles.placeholder = String(defaults.Ncycles);
  operating.append(labelled("Ncycles", ncycles));

  const nu = document.createElement("input");
  nu.type = "text";
  nu.inputMode = "decimal";
  nu.name = "nu";
  nu.placeholder = String(defaults.nu);
  operating.append(labelled("End fixation factor", nu));

  const noBuckling = document.createElement("input");
  noBuckling.type = "checkbox";
  noBuckling.name = "no_buckling";
  operating.append(labelled("no buckling", noBuckling));

  const objective = document.createElement("fieldset");
  objective.className = "objective-row";
  objective.innerHTML = "<legend>Calculation</legend>";
  const sense = document.createElement("select");
  sense.name = "sense";
  for (const [value, text] of [["minimize", "the smallest"],
                               ["maximize", "the largest"]] as const) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = text;
    sense.append(option);
  }
  const criterion = document.createElement("select");
  criterion.name = "objective_criterion";
  for (const choice of OBJECTIVE_CHOICES) {
    const option = document.createElement("option");
    option.value = choice;
    option.textContent = choice;
    criterion.append(option);
  }
  sense.value = defaults.objective.sense;
  criterion.value = defaults.objective.criterion;
  const method = document.createElement("select");
  method.name = "method";
  for (const choice of METHOD_CHOICES) {
    const option = document.createElement("option");
    option.value = choice;
    option.textContent = choice;
    method.append(option);
  }
  method.value = "both";
  objective.append(labelled("Objective", sense), labelled("", criterion),
                   labelled("Method", method));

  const advanced = document.createElement("details");
  advanced.className = "weights";
  const summary = document.createElement("summary");
  summary.textContent = "Advanced: criterion weights";
  advanced.append(summary);
  for (const spec of [...DESIGN_FIELDS, ...OPERATING_FIELDS]) {
    const weight = document.createElement("input");
    weight.type = "text";
    weight.inputMode = "decimal";
    weight.name = `weight_${spec.name}`;
    weight.placeholder = "1";
    advanced.append(labelled(`K ${spec.label}`, weight));
  }

  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Search";

  form.append(design, operating, objective, advanced, submit);
  container.append(form);
  return form;
}

export interface FormReading {
  document: SheetDocument;
  method: string;
  errors: string[];
}

function numberOrError(raw: string, field: string, errors: string[]): number | null {
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    errors.push(`${field}: not a number`);
    return null;
  }
  return value;
}

/** Collect the sheet document; empty inputs are omitted entirely. */
export function readForm(form: HTMLFormElement): FormReading {
  const doc: SheetDocument = {};
  const errors: string[] = [];

  for (const row of form.querySelectorAll<HTMLElement>("[data-criterion]")) {
    const name = row.dataset.criterion!;
    const minInput = row.querySelector<HTMLInputElement>(`[name="${name}_min"]`);
    const maxInput = row.querySelector<HTMLInputElement>(`[name="${name}_max"]`);
    const errorSpan = row.querySelector<HTMLElement>(".field-error");
    let rowError = "";
    let lo: number | null = null;
    let hi: number | null = null;
    if (minInput && minInput.value.trim() !== "") {
      lo = numberOrError(minInput.value.trim(), `${name}_min`, errors);
      if (lo !== null) doc[`${name}_min`] = lo;
    }
    if (maxInput && maxInput.value.trim() !== "") {
      hi = numberOrError(maxInput.value.trim(), `${name}_max`, errors);
      if (hi !== null) doc[`${name}_max`] = hi;
    }
    if (lo !== null && hi !== null && lo > hi) {
      rowError = `${name}: Mini exceeds Maxi`;
      errors.push(rowError);
    }
    if (errorSpan) {
      errorSpan.textContent = rowError;
      errorSpan.hidden = rowError === "";
      row.classList.toggle("invalid", rowError !== "");
    }
  }

  const scalar = (name: string) =>
    form.querySelector<HTMLInputElement>(`[name="${name}"]`);
  const ncycles = scalar("Ncycles");
  if (ncycles && ncycles.value.trim() !== "") {
    const value = numberOrError(ncycles.value.trim(), "Ncycles", errors);
    if (value !== null) doc["Ncycles"] = value;
  }
  const nu = scalar("nu");
  if (nu && nu.value.trim() !== "") {
    const value = numberOrError(nu.value.trim(), "nu", errors);
    if (value !== null) doc["nu"] = value;
  }
  const noBuckling = scalar("no_buckling");
  if (noBuckling?.checked) doc["no_buckling"] = true;

  for (const name of ["material", "ends"]) {
    const select = form.querySelector<HTMLSelectElement>(`[name="${name}"]`);
    if (select && select.value !== "") doc[name] = select.value;
  }

  const sense = form.querySelector<HTMLSelectElement>('[name="sense"]');
  const criterion = form.querySelector<HTMLSelectElement>(
    '[name="objective_criterion"]');
  doc["objective"] = {
    criterion: criterion?.value ?? "L2",
    sense: sense?.value ?? "minimize",
  };

  const weights: Record<string, number> = {};
  for (const input of form.querySelectorAll<HTMLInputElement>(
      '[name^="weight_"]')) {
    if (input.value.trim() === "") continue;
    const value = numberOrError(input.value.trim(), input.name, errors);
    if (value !== null) weights[input.name.slice("weight_".length)] = value;
  }
  if (Object.keys(weights).length > 0) doc["weights"] = weights;

  const method = form.querySelector<HTMLSelectElement>('[name="method"]');
  return { document: doc, method: method?.value ?? "both", errors };
}
