/** Thin fetch client for the engine service; no local computation. */
import type { DefaultsPayload, SearchPayload, SearchRequestBody } from "./types";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { error?: string };
    if (body.error) message = body.error;
  } catch {
    // keep the status text
  }
  return new ApiError(response.status, message);
}

export async function fetchDefaults(base = ""): Promise<DefaultsPayload> {
  const response = await fetch(`${base}/api/defaults`);
  if (!response.ok) throw await parseError(response);
  return (await response.json()) as DefaultsPayload;
}

export async function postSearch(
  body: SearchRequestBody,
  signal?: AbortSignal,
  base = "",
): Promise<SearchPayload> {
  const response = await fetch(`${base}/api/search`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  if (!response.ok) throw await parseError(response);
  return (await response.json()) as SearchPayload;
}
