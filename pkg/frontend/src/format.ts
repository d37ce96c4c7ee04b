/**
 * Display formatting for engine amounts.
 *
 * Everything here is string manipulation: the engine's decimal strings
 * are regrouped for reading, never parsed into floats (the totals can
 * exceed what a double represents exactly).
 */

const DECIMAL_RE = /^-?\d+(\.\d+)?$/;

/** Insert thousands separators into the integer part of a decimal string. */
export function groupThousands(fixedPoint: string): string {
  if (!DECIMAL_RE.test(fixedPoint)) {
    throw new Error(`not a plain decimal string: ${JSON.stringify(fixedPoint)}`);
  }
  let sign = "";
  let rest = fixedPoint;
  if (rest.startsWith("-")) {
    sign = "-";
    rest = rest.slice(1);
  }
  const [intPart, frac] = rest.split(".");
  const grouped = (intPart ?? "").replace(/\B(?=(\d{3})+(?!\d))/g, ",");
  return sign + grouped + (frac !== undefined ? "." + frac : "");
}

/** Mirror the engine's display form: "$883,000,000.00", "23,790 Lives". */
export function formatQuantity(amount: string | null, unit: string): string {
  if (amount === null || unit === "TBD") {
    return "TBD";
  }
  const body = groupThousands(amount);
  if (unit === "USD") {
    return "$" + body;
  }
  if (unit === "Dimensionless") {
    return body;
  }
  return `${body} ${unit}`;
}

export function formatMoney(amount: string): string {
  return formatQuantity(amount, "USD");
}
