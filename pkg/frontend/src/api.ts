/** Thin fetch wrappers around the ledger service endpoints. */

import type { DefaultsResponse, EvaluateResponse, ScenarioDoc } from "./types.js";

interface ErrorBody {
  error?: { type?: string; message?: string };
}

async function parseError(resp: Response): Promise<string> {
  try {
    const body = (await resp.json()) as ErrorBody;
    if (body.error?.message) {
      return body.error.message;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${resp.status}`;
}

export async function fetchDefaults(base = ""): Promise<DefaultsResponse> {
  const resp = await fetch(`${base}/api/v1/defaults`);
  if (!resp.ok) {
    throw new Error(await parseError(resp));
  }
  return (await resp.json()) as DefaultsResponse;
}

export async function evaluateScenario(
  doc: ScenarioDoc,
  base = "",
): Promise<EvaluateResponse> {
  const resp = await fetch(`${base}/api/v1/evaluate`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(doc),
  });
  if (!resp.ok) {
    throw new Error(await parseError(resp));
  }
  return (await resp.json()) as EvaluateResponse;
}
