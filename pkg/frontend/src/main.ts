/** Wire the sheet form to the service: submit, cancel, render, diff. */
import { ApiError, fetchDefaults, postSearch } from "./api";
import { readForm, renderSheetForm } from "./form";
import {
  renderConnectivityProblem,
  renderError,
  renderResults,
} from "./results";
import type { SearchPayload } from "./types";

export async function initApp(root: HTMLElement): Promise<void> {
  const formHost = document.createElement("div");
  formHost.id = "form-host";
  const resultsHost = document.createElement("div");
  resultsHost.id = "results-host";
  root.replaceChildren(formHost, resultsHost);

  let defaults;
  try {
    defaults = await fetchDefaults();
  } catch {
    renderConnectivityProblem(resultsHost);
    return;
  }

  const form = renderSheetForm(formHost, defaults);
  let previous: SearchPayload | undefined;
  let inFlight: AbortController | undefined;

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const reading = readForm(form);
    if (reading.errors.length > 0) {
      renderError(resultsHost, reading.errors.join("; "));
      return;
    }
    inFlight?.abort();  // at most one running search
    const controller = new AbortController();
    inFlight = controller;
    try {
      const payload = await postSearch(
        { specification: reading.document, method: reading.method },
        controller.signal,
      );
      if (controller !== inFlight) return;  // superseded meanwhile
      renderResults(resultsHost, payload, previous);
      previous = payload;
    } catch (error) {
      if (controller.signal.aborted) return;
      if (error instanceof ApiError) {
        renderError(resultsHost, error.message);
      } else {
        renderConnectivityProblem(resultsHost);
      }
    }
  });
}

const rootElement = document.getElementById("app");
if (rootElement) {
  void initApp(rootElement);
}
