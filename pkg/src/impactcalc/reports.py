"""Ledger report rendering: text tables, CSV, and JSON-friendly dicts."""

from __future__ import annotations

import csv
import io

from .errors import OutOfRange
from .ledger import EvaluatedItem, LedgerReport, Side
from .money import Quantity, Unit, canonical_amount_str, display_quantity

REPORT_FORMATS = ("text", "csv")


def _item_cell(item: EvaluatedItem) -> str:
    return display_quantity(item.quantity)


def render_text(report: LedgerReport) -> str:
    label_width = max([len(i.label) for i in report.items] + [len("Item")])
    lines = [f"Scenario: {report.scenario_name}", ""]
    header = f"{'ID':<4} {'Item':<{label_width}} {'Debit':>22} {'Credit':>22}"
    lines.append(header)
    lines.append("-" * len(header))
    for item in report.items:
        cell = _item_cell(item)
        debit = cell if item.side is Side.DEBIT else ""
        credit = cell if item.side is Side.CREDIT else ""
        lines.append(
            f"{item.id:<4} {item.label:<{label_width}} {debit:>22} {credit:>22}"
        )
    lines.append("")
    for unit, totals in report.totals.items():
        lines.append(f"{unit.value}:")
        lines.append(f"  Debits:  {display_quantity(Quantity(totals.debits, unit))}")
        lines.append(f"  Credits: {display_quantity(Quantity(totals.credits, unit))}")
        lines.append(f"  Net:     {display_quantity(Quantity(totals.net, unit))}")
    if report.tbd_items:
        lines.append("")
        lines.append(
            "Not yet quantified (excluded from totals): "
            + ", ".join(report.tbd_items)
        )
    return "\n".join(lines) + "\n"


def render_csv(report: LedgerReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["row_type", "id", "label", "side", "unit", "amount", "provenance", "horizon_years"]
    )
    for item in report.items:
        if item.quantity.is_tbd:
            unit, amount = "TBD", "TBD"
        else:
            unit = item.quantity.unit.value
            amount = canonical_amount_str(item.quantity.amount, item.quantity.unit)
        writer.writerow(
            [
                "item",
                item.id,
                item.label,
                item.side.value,
                unit,
                amount,
                item.provenance.value,
                item.horizon_years,
            ]
        )
    for unit, totals in report.totals.items():
        for row_type, amount in (
            ("subtotal_debits", totals.debits),
            ("subtotal_credits", totals.credits),
            ("net", totals.net),
        ):
            writer.writerow(
                [
                    row_type,
                    "",
                    "",
                    "",
                    unit.value,
                    canonical_amount_str(amount, unit),
                    "",
                    "",
                ]
            )
    return buf.getvalue()


def render_report(report: LedgerReport, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(report)
    if fmt == "csv":
        return render_csv(report)
    raise OutOfRange(f"unknown report format {fmt!r}; expected one of {REPORT_FORMATS}")


def report_to_dict(report: LedgerReport) -> dict:
    """JSON-friendly report; amounts stay decimal strings end to end."""

    def quantity_fields(q) -> dict:
        if q.is_tbd:
            return {"unit": Unit.TBD.value, "amount": None}
        return {
            "unit": q.unit.value,
            "amount": canonical_amount_str(q.amount, q.unit),
        }

    return {
        "scenario": report.scenario_name,
        "totals": {
            unit.value: {
                "debits": canonical_amount_str(t.debits, unit),
                "credits": canonical_amount_str(t.credits, unit),
                "net": canonical_amount_str(t.net, unit),
            }
            for unit, t in report.totals.items()
        },
        "tbd_items": list(report.tbd_items),
        "items": [
            {
                "id": item.id,
                "label": item.label,
                "side": item.side.value,
                "provenance": item.provenance.value,
                "horizon_years": item.horizon_years,
                **quantity_fields(item.quantity),
            }
            for item in report.items
        ],
    }
