/**
 * Wire types for the ledger service. Amounts travel as decimal strings
 * end to end; the UI never converts them to numbers.
 */

export interface ScenarioDoc {
  schema_version: number;
  name: string;
  currency: string;
  parameters: Record<string, string>;
  line_items: unknown[];
}

export interface UnitTotals {
  debits: string;
  credits: string;
  net: string;
}

export interface ItemTrace {
  id: string;
  label: string;
  side: "debit" | "credit";
  provenance: string;
  horizon_years: number;
  unit: string;
  amount: string | null;
}

export interface EvaluateResponse {
  scenario: string;
  totals: Record<string, UnitTotals>;
  tbd_items: string[];
  items: ItemTrace[];
  engine_version: string;
}

export interface DefaultsResponse {
  scenario: ScenarioDoc;
  subcalc: unknown;
  engine_version: string;
}

export type EvaluateFn = (doc: ScenarioDoc) => Promise<EvaluateResponse>;
