import { describe, expect, it } from "vitest";

import { formatMoney, formatQuantity, groupThousands } from "../src/format.js";

describe("groupThousands", () => {
  it("groups the integer part only", () => {
    expect(groupThousands("883000000.00")).toBe("883,000,000.00");
    expect(groupThousands("1423000000.00")).toBe("1,423,000,000.00");
    expect(groupThousands("23790")).toBe("23,790");
    expect(groupThousands("0.05")).toBe("0.05");
  });

  it("keeps the sign and sub-cent digits", () => {
    expect(groupThousands("-75000000.00")).toBe("-75,000,000.00");
    expect(groupThousands("12.3456")).toBe("12.3456");
  });

  it("is lossless beyond double precision", () => {
    expect(groupThousands("90071992547409923.01")).toBe("90,071,992,547,409,923.01");
  });

  it("rejects anything that is not a plain decimal", () => {
    for (const bad of ["1e9", "", "1,000", "NaN", "0x10", "1."]) {
      expect(() => groupThousands(bad)).toThrow();
    }
  });
});

describe("formatQuantity", () => {
  it("prefixes dollars", () => {
    expect(formatMoney("883000000.00")).toBe("$883,000,000.00");
    expect(formatMoney("-0.50")).toBe("$-0.50");
  });

  it("suffixes the other units", () => {
    expect(formatQuantity("23790", "Lives")).toBe("23,790 Lives");
    expect(formatQuantity("66000", "Jobs")).toBe("66,000 Jobs");
    expect(formatQuantity("0.05", "BasisPoints")).toBe("0.05 BasisPoints");
    expect(formatQuantity("3", "Dimensionless")).toBe("3");
  });

  it("renders placeholders as TBD", () => {
    expect(formatQuantity(null, "USD")).toBe("TBD");
    expect(formatQuantity("1", "TBD")).toBe("TBD");
  });
});
