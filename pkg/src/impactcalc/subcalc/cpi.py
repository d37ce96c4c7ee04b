"""Consumer-price-index reweighting: monthly expenditure weights applied
to 12-month category inflation rates.

The index here is a per-month weighted mean of category inflation rates
under a given weight table, which lets an official fixed-base-weight
series be compared against a reweighted one month by month.

Weights are normalized at construction; the 1e-9 tolerance applies only
to that normalization check. Inflation rates are exact decimals in
percent units.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Mapping, Sequence

from ..errors import (
    IncompleteRow,
    InfeasibleAdjustment,
    MissingMonth,
    OutOfRange,
    ParseError,
    SeriesMismatch,
    UnknownCategory,
)
from ..money import CALC_CONTEXT, parse_decimal

ZERO = Decimal(0)
ONE = Decimal(1)
HUNDRED = Decimal(100)
NORMALIZATION_TOLERANCE = Decimal("1e-9")

WeightRow = Mapping[str, Decimal]


def normalize_weights(row: WeightRow) -> dict[str, Decimal]:
    """Scale a weight row so it sums to one; weights must be >= 0 with a
    positive total."""
    total = ZERO
    for category, weight in row.items():
        if weight < ZERO:
            raise OutOfRange(f"weight for {category!r} must be >= 0")
        total += weight
    if total <= ZERO:
        raise OutOfRange("weight row must have a positive total")
    with localcontext(CALC_CONTEXT):
        normalized = {c: w / total for c, w in row.items()}
        deviation = abs(sum(normalized.values()) - ONE)
    if deviation > NORMALIZATION_TOLERANCE:
        raise OutOfRange(f"weights failed to normalize: off by {deviation}")
    return normalized


@dataclass(frozen=True)
class CpiSeries:
    """Per-month expenditure weights and per-month category inflation rates."""

    categories: tuple[str, ...]
    months: tuple[str, ...]
    weights: Mapping[str, WeightRow]
    inflation: Mapping[str, Mapping[str, Decimal]]

    @classmethod
    def build(
        cls,
        categories: Sequence[str],
        months: Sequence[str],
        weights: Mapping[str, WeightRow],
        inflation: Mapping[str, Mapping[str, Decimal]],
    ) -> "CpiSeries":
        """Validate completeness and normalize each month's weights."""
        categories = tuple(categories)
        months = tuple(months)
        if len(set(categories)) != len(categories):
            raise SeriesMismatch("duplicate category ids")
        if len(set(months)) != len(months):
            raise SeriesMismatch("duplicate month stamps")
        norm_weights: dict[str, dict[str, Decimal]] = {}
        full_inflation: dict[str, dict[str, Decimal]] = {}
        for month in months:
            for table_name, table in (("weights", weights), ("inflation", inflation)):
                if month not in table:
                    raise IncompleteRow(f"{table_name} table has no row for {month}")
                row = table[month]
                missing = [c for c in categories if c not in row]
                if missing:
                    raise IncompleteRow(
                        f"{table_name} row {month} missing categories: {', '.join(missing)}"
                    )
                extra = set(row) - set(categories)
                if extra:
                    raise IncompleteRow(
                        f"{table_name} row {month} has unknown categories: "
                        + ", ".join(sorted(extra))
                    )
            norm_weights[month] = normalize_weights(
                {c: weights[month][c] for c in categories}
            )
            full_inflation[month] = {c: inflation[month][c] for c in categories}
        return cls(
            categories=categories,
            months=months,
            weights=norm_weights,
            inflation=full_inflation,
        )


def weighted_inflation(series: CpiSeries, month: str) -> Decimal:
    """Weighted mean of the month's category inflation rates, in percent."""
    if month not in series.weights or month not in series.inflation:
        raise MissingMonth(f"series has no month {month!r}")
    weights = series.weights[month]
    rates = series.inflation[month]
    missing = [c for c in series.categories if c not in weights or c not in rates]
    if missing:
        raise IncompleteRow(f"month {month} missing categories: {', '.join(missing)}")
    with localcontext(CALC_CONTEXT):
        total = ZERO
        for category in series.categories:
            total += weights[category] * rates[category]
        return total


def adjust_weights(base: WeightRow, deltas_pp: Mapping[str, Decimal]) -> dict[str, Decimal]:
    """Apply percentage-point deltas to chosen categories and redistribute
    the residual across the untouched ones in proportion to their base
    weights, so the row re-sums to one.
    """
    with localcontext(CALC_CONTEXT):
        base_total = sum(base.values(), ZERO)
        if abs(base_total - ONE) > NORMALIZATION_TOLERANCE:
            raise OutOfRange(f"base weights must sum to 1, got {base_total}")
        unknown = set(deltas_pp) - set(base)
        if unknown:
            raise UnknownCategory(
                "deltas name categories not in the row: " + ", ".join(sorted(unknown))
            )
        if not deltas_pp:
            return dict(base)
        adjusted: dict[str, Decimal] = {}
        residual = ZERO
        for category, delta_pp in deltas_pp.items():
            new_weight = base[category] + delta_pp / HUNDRED
            if not (ZERO <= new_weight <= ONE):
                raise InfeasibleAdjustment(
                    f"adjusted weight for {category!r} leaves [0, 1]: {new_weight}"
                )
            adjusted[category] = new_weight
            residual -= delta_pp / HUNDRED
        untouched = [c for c in base if c not in deltas_pp]
        if not untouched:
            if residual != ZERO:
                raise InfeasibleAdjustment(
                    "deltas touch every category but do not sum to zero"
                )
            return adjusted
        untouched_mass = sum((base[c] for c in untouched), ZERO)
        target_mass = untouched_mass + residual
        if target_mass < ZERO:
            raise InfeasibleAdjustment(
                "residual exceeds the mass available in unadjusted categories"
            )
        if untouched_mass == ZERO:
            if residual != ZERO:
                raise InfeasibleAdjustment(
                    "unadjusted categories have zero weight; nothing can absorb the residual"
                )
            factor = ONE
        else:
            factor = target_mass / untouched_mass
        result = dict(base)
        result.update(adjusted)
        for category in untouched:
            result[category] = base[category] * factor
        return result


MonthlyPair = tuple[str, Decimal, Decimal]


def compare_indices(official: CpiSeries, covid: CpiSeries) -> list[MonthlyPair]:
    """Per-month (official%, reweighted%) pairs under the two weighting schemes."""
    if set(official.categories) != set(covid.categories):
        raise SeriesMismatch("category sets differ between series")
    if official.months != covid.months:
        raise SeriesMismatch("month ranges differ between series")
    return [
        (month, weighted_inflation(official, month), weighted_inflation(covid, month))
        for month in official.months
    ]


def fixed_weight_series(series: CpiSeries, base_month: str) -> CpiSeries:
    """Official-style series: one month's weights applied to every month."""
    if base_month not in series.weights:
        raise MissingMonth(f"series has no month {base_month!r}")
    base_row = series.weights[base_month]
    return CpiSeries.build(
        categories=series.categories,
        months=series.months,
        weights={m: dict(base_row) for m in series.months},
        inflation={m: dict(series.inflation[m]) for m in series.months},
    )


def _read_table(text: str, what: str) -> tuple[tuple[str, ...], list[str], dict[str, dict[str, Decimal]]]:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError(f"{what} CSV is empty")
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2:
        raise ParseError(f"{what} CSV needs a month column plus category columns")
    categories = tuple(header[1:])
    months: list[str] = []
    table: dict[str, dict[str, Decimal]] = {}
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ParseError(
                f"{what} CSV row has {len(row)} cells, expected {len(header)}",
                line=line_no,
            )
        month = row[0].strip()
        months.append(month)
        table[month] = {
            cat: parse_decimal(cell.strip(), path=f"{what}[{month}][{cat}]")
            for cat, cell in zip(categories, row[1:])
        }
    return categories, months, table


def load_series_csv(weights_csv: str, inflation_csv: str) -> CpiSeries:
    """Build a series from two CSV tables sharing header and month order.

    Header row is the category ids after a leading month column; one row
    per month in both files.
    """
    w_categories, w_months, weights = _read_table(weights_csv, "weights")
    i_categories, i_months, inflation = _read_table(inflation_csv, "inflation")
    if w_categories != i_categories:
        raise SeriesMismatch("weights and inflation CSVs declare different categories")
    if w_months != i_months:
        raise SeriesMismatch("weights and inflation CSVs cover different months")
    return CpiSeries.build(w_categories, w_months, weights, inflation)


def comparison_csv(pairs: Sequence[MonthlyPair]) -> str:
    """Render compare_indices output as CSV text."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["month", "official_pct", "covid_pct"])
    for month, official_pct, covid_pct in pairs:
        writer.writerow([month, str(official_pct), str(covid_pct)])
    return out.getvalue()
