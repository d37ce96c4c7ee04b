/**
 * DOM glue: loads the default scenario, builds the parameter controls,
 * and repaints results whenever the session changes.
 */

import { evaluateScenario, fetchDefaults } from "./api.js";
import { formatQuantity } from "./format.js";
import { EvaluationSession } from "./session.js";
import type { ItemTrace, UnitTotals } from "./types.js";

interface SliderRange {
  min: string;
  max: string;
  step: string;
}

// fixed ranges keep the engine the only place that touches the numbers
const SLIDER_RANGES: Record<string, SliderRange> = {
  healthcare_reduction_fraction: { min: "0", max: "0.01", step: "0.00025" },
  gdp_gain_fraction: { min: "0", max: "0.01", step: "0.00025" },
  deaths_reduction_fraction: { min: "0", max: "0.05", step: "0.001" },
  jobs_saved_fraction: { min: "0", max: "0.01", step: "0.00025" },
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function mustFind(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function buildParameterControls(session: EvaluationSession, mount: HTMLElement): void {
  for (const [name, value] of Object.entries(session.document.parameters)) {
    const row = el("label", "param-row");
    row.append(el("span", "param-name", name));

    const range = SLIDER_RANGES[name];
    const input = el("input");
    input.value = value;
    const readout = el("span", "param-value", value);
    if (range) {
      input.type = "range";
      input.min = range.min;
      input.max = range.max;
      input.step = range.step;
      input.addEventListener("input", () => {
        readout.textContent = input.value;
        session.setParameter(name, input.value);
      });
    } else {
      input.type = "text";
      input.addEventListener("change", () => {
        readout.textContent = "";
        session.setParameter(name, input.value);
      });
    }
    row.append(input, readout);
    mount.append(row);
  }
}

function renderItems(items: ItemTrace[], mount: HTMLElement): void {
  mount.replaceChildren();
  const table = el("table", "items");
  const head = el("tr");
  for (const title of ["", "Item", "Debit", "Credit"]) {
    head.append(el("th", undefined, title));
  }
  table.append(head);
  for (const item of items) {
    const row = el("tr");
    row.append(el("td", "item-id", item.id));
    row.append(el("td", "item-label", item.label));
    const shown = formatQuantity(item.amount, item.unit);
    row.append(el("td", "amount", item.side === "debit" ? shown : ""));
    row.append(el("td", "amount", item.side === "credit" ? shown : ""));
    table.append(row);
  }
  mount.append(table);
}

function renderTotals(totals: Record<string, UnitTotals>, mount: HTMLElement): void {
  mount.replaceChildren();
  for (const [unit, t] of Object.entries(totals)) {
    const block = el("div", "unit-totals");
    block.append(el("h3", undefined, unit));
    for (const [label, amount] of [
      ["Debits", t.debits],
      ["Credits", t.credits],
      ["Net", t.net],
    ] as const) {
      const line = el("div", label === "Net" ? "total-line net" : "total-line");
      line.append(el("span", undefined, label));
      line.append(el("span", "amount", formatQuantity(amount, unit)));
      block.append(line);
    }
    mount.append(block);
  }
}

function repaint(session: EvaluationSession): void {
  const status = mustFind("status");
  const headline = mustFind("usd-net");
  const result = session.result;

  if (session.error !== null) {
    status.textContent = session.error;
    status.className = "status error";
    headline.textContent = "—";
    return;
  }
  if (result === null) {
    status.textContent = session.pending ? "recomputing…" : "";
    status.className = "status";
    headline.textContent = "…";
    return;
  }
  status.textContent = `engine ${result.engine_version}`;
  status.className = "status";
  const usd = result.totals["USD"];
  headline.textContent = usd ? formatQuantity(usd.net, "USD") : "—";
  renderItems(result.items, mustFind("items"));
  renderTotals(result.totals, mustFind("totals"));
  mustFind("tbd").textContent = result.tbd_items.length
    ? `Not yet quantified: ${result.tbd_items.join(", ")}`
    : "";
}

async function boot(): Promise<void> {
  const defaults = await fetchDefaults();
  const session = new EvaluationSession(
    (doc) => evaluateScenario(doc),
    defaults.scenario,
  );
  mustFind("scenario-name").textContent = defaults.scenario.name;
  buildParameterControls(session, mustFind("parameters"));
  session.subscribe(() => repaint(session));
  await session.refresh();
}

boot().catch((err) => {
  mustFind("status").textContent =
    err instanceof Error ? err.message : String(err);
  mustFind("status").className = "status error";
});
