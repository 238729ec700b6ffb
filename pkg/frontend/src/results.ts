/**
 * Results panel.  Every number shown here is copied verbatim from the
 * service payload (String(value), no arithmetic, no rounding): the
 * engine owns all physics and scoring.
 */
import type { ResultPayload, SearchPayload, SelectedPayload } from "./types";

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function springCard(method: string, result: ResultPayload,
                    previous?: ResultPayload): HTMLElement {
  const sel: SelectedPayload = result.selected;
  const card = el("section", "spring-card");
  card.dataset.method = method;
  card.dataset.entryId = String(sel.entry.id);

  const changed = previous !== undefined
    && previous.selected.entry.id !== sel.entry.id;
  if (changed) card.classList.add("changed");

  const title = el("h3", "card-title",
                   `${method}: spring #${String(sel.entry.id)}`);
  if (changed) {
    title.append(el("span", "diff-badge",
                    ` (was #${String(previous!.selected.entry.id)})`));
  }
  card.append(title);

  const params = el("dl", "entry-params");
  const entryRows: [string, unknown][] = [
    ["Do (mm)", sel.entry.Do], ["d (mm)", sel.entry.d],
    ["L0 (mm)", sel.entry.L0], ["R (N/mm)", sel.entry.R],
    ["material", sel.entry.material], ["ends", sel.entry.ends],
    ["price", sel.entry.price],
  ];
  const op = sel.operating_point;
  const opRows: [string, unknown][] = [
    ["L1 (mm)", op.L1], ["L2 (mm)", op.L2],
    ["P1 (N)", op.P1], ["P2 (N)", op.P2], ["stroke (mm)", op.sh],
  ];
  const scoreRows: [string, unknown][] = [
    ["objective", sel.objective_value],
    ["violation", sel.violation],
    ["violated criteria", sel.ncv],
  ];
  for (const [label, value] of [...entryRows, ...opRows, ...scoreRows]) {
    params.append(el("dt", "param-label", label));
    const dd = el("dd", "param-value", String(value));
    dd.dataset.param = label;
    const before = previous === undefined ? undefined
      : lookupPrevious(previous.selected, label);
    if (before !== undefined && String(before) !== String(value)) {
      dd.classList.add("changed");
      dd.title = `was ${String(before)}`;
    }
    params.append(dd);
  }
  card.append(params);
  if (!op.feasible) {
    card.append(el("p", "infeasible-note",
                   "No operating point satisfies every bound; showing the "
                   + "least-violating one."));
  }

  card.append(criterionTable(sel));
  return card;
}

function lookupPrevious(sel: SelectedPayload, label: string): unknown {
  const entryMap: Record<string, unknown> = {
    "Do (mm)": sel.entry.Do, "d (mm)": sel.entry.d,
    "L0 (mm)": sel.entry.L0, "R (N/mm)": sel.entry.R,
    "material": sel.entry.material, "ends": sel.entry.ends,
    "price": sel.entry.price,
    "L1 (mm)": sel.operating_point.L1, "L2 (mm)": sel.operating_point.L2,
    "P1 (N)": sel.operating_point.P1, "P2 (N)": sel.operating_point.P2,
    "stroke (mm)": sel.operating_point.sh,
    "objective": sel.objective_value, "violation": sel.violation,
    "violated criteria": sel.ncv,
  };
  return entryMap[label];
}

function criterionTable(sel: SelectedPayload): HTMLElement {
  const table = document.createElement("table");
  table.className = "criterion-table";
  const thead = document.createElement("thead");
  const head = document.createElement("tr");
  for (const text of ["criterion", "value", "Mini", "Maxi", "mark"]) {
    head.append(el("th", "", text));
  }
  thead.append(head);
  const tbody = document.createElement("tbody");
  for (const report of sel.reports) {
    const row = document.createElement("tr");
    row.dataset.criterion = report.criterion;
    if (report.crisp_mark > 0) row.classList.add("violated");
    const cells = [
      report.criterion,
      String(report.value),
      report.lo_given ? String(report.lo) : "",
      report.hi_given ? String(report.hi) : "",
      String(report.crisp_mark),
    ];
    for (const text of cells) row.append(el("td", "", text));
    tbody.append(row);
  }
  table.append(thead, tbody);
  return table;
}

export function renderResults(container: HTMLElement, payload: SearchPayload,
                              previous?: SearchPayload): void {
  container.replaceChildren();

  const methods = Object.keys(payload.results);
  const first = payload.results[methods[0]];
  const banner = el("p", "feasible-banner",
                    `${String(first.feasible_count)} of `
                    + `${String(first.evaluated)} springs satisfy every bound`);
  if (first.feasible_count === 0) {
    banner.classList.add("none-feasible");
    banner.textContent = `0 feasible springs of ${String(first.evaluated)}; `
      + "showing the least-violating pick";
  }
  container.append(banner);

  const cards = el("div", methods.length > 1 ? "cards side-by-side" : "cards");
  for (const method of methods) {
    cards.append(springCard(method, payload.results[method],
                            previous?.results[method]));
  }
  container.append(cards);
}

export function renderError(container: HTMLElement, message: string): void {
  container.replaceChildren(el("p", "error-banner", message));
}

export function renderConnectivityProblem(container: HTMLElement): void {
  container.replaceChildren(el(
    "p", "error-banner connectivity",
    "Cannot reach the search service; check that it is running."));
}
