from __future__ import annotations

import random
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import randgen
from impactcalc.errors import (
    IncompleteRow,
    InfeasibleAdjustment,
    MissingMonth,
    OutOfRange,
    SeriesMismatch,
    UnknownCategory,
)
from impactcalc.subcalc.cpi import (
    CpiSeries,
    NORMALIZATION_TOLERANCE,
    adjust_weights,
    compare_indices,
    comparison_csv,
    fixed_weight_series,
    load_series_csv,
    normalize_weights,
    weighted_inflation,
)

D = Decimal


def one_month_series(weights, rates, month="2020-04"):
    cats = sorted(weights)
    return CpiSeries.build(
        categories=cats,
        months=[month],
        weights={month: weights},
        inflation={month: rates},
    )


class TestWeightedInflation:
    def test_uniform_weights_constant_rate(self):
        w = {f"c{i}": D("0.25") for i in range(4)}
        r = {f"c{i}": D("2.0") for i in range(4)}
        assert weighted_inflation(one_month_series(w, r), "2020-04") == D("2.0")

    def test_hand_weighted_mean(self):
        series = one_month_series(
            {"a": D("0.6"), "b": D("0.4")}, {"a": D("2.0"), "b": D("5.0")}
        )
        assert weighted_inflation(series, "2020-04") == D("3.2")

    def test_degenerate_weight_selects_category(self):
        series = one_month_series(
            {"a": D(1), "b": D(0)}, {"a": D("7.25"), "b": D("99")}
        )
        assert weighted_inflation(series, "2020-04") == D("7.25")

    def test_missing_month(self):
        series = one_month_series({"a": D(1)}, {"a": D(1)})
        with pytest.raises(MissingMonth):
            weighted_inflation(series, "2020-05")

    def test_scale_equivariance(self):
        w = {"a": D("0.3"), "b": D("0.7")}
        base = weighted_inflation(one_month_series(w, {"a": D(2), "b": D(4)}), "2020-04")
        tripled = weighted_inflation(one_month_series(w, {"a": D(6), "b": D(12)}), "2020-04")
        assert tripled == base * 3


class TestNormalization:
    def test_normalizes_to_unit_sum(self):
        out = normalize_weights({"a": D(2), "b": D(6)})
        assert out == {"a": D("0.25"), "b": D("0.75")}

    def test_negative_weight_rejected(self):
        with pytest.raises(OutOfRange):
            normalize_weights({"a": D(-1), "b": D(2)})

    def test_zero_total_rejected(self):
        with pytest.raises(OutOfRange):
            normalize_weights({"a": D(0)})

    @given(st.integers(0, 2**32 - 1), st.integers(2, 10))
    @settings(max_examples=80, deadline=None)
    def test_random_rows_resum_within_tolerance(self, seed, n):
        row = randgen.random_weight_row(random.Random(seed), n)
        out = normalize_weights(row)
        assert abs(sum(out.values()) - 1) <= NORMALIZATION_TOLERANCE
        assert all(0 <= w <= 1 for w in out.values())

    @given(st.integers(0, 2**32 - 1), st.integers(2, 8))
    @settings(max_examples=80, deadline=None)
    def test_convexity_bound(self, seed, n):
        rng = random.Random(seed)
        weights = randgen.exact_unit_weight_row(rng, n)
        rates = randgen.random_rates(rng, weights)
        series = one_month_series(weights, rates)
        value = weighted_inflation(series, "2020-04")
        assert min(rates.values()) <= value <= max(rates.values())


class TestAdjustWeights:
    def test_single_delta_redistributes_proportionally(self):
        base = {"A": D("0.2"), "B": D("0.3"), "C": D("0.5")}
        out = adjust_weights(base, {"A": D(5)})
        assert out == {"A": D("0.25"), "B": D("0.28125"), "C": D("0.46875")}

    def test_empty_deltas_identity(self):
        base = {"A": D("0.4"), "B": D("0.6")}
        assert adjust_weights(base, {}) == base

    def test_offsetting_deltas_no_residual(self):
        base = {"A": D("0.5"), "B": D("0.5")}
        out = adjust_weights(base, {"A": D("3.76"), "B": D("-3.76")})
        assert out == {"A": D("0.5376"), "B": D("0.4624")}

    def test_all_zero_deltas_identity(self):
        base = {"A": D("0.25"), "B": D("0.75")}
        assert adjust_weights(base, {"A": D(0), "B": D(0)}) == base

    def test_unknown_category(self):
        with pytest.raises(UnknownCategory):
            adjust_weights({"A": D(1)}, {"Z": D(1)})

    def test_delta_out_of_range(self):
        with pytest.raises(InfeasibleAdjustment):
            adjust_weights({"A": D("0.5"), "B": D("0.5")}, {"A": D(60)})

    def test_residual_with_all_categories_touched(self):
        with pytest.raises(InfeasibleAdjustment):
            adjust_weights({"A": D("0.5"), "B": D("0.5")}, {"A": D(5), "B": D(5)})

    def test_unnormalized_base_rejected(self):
        with pytest.raises(OutOfRange):
            adjust_weights({"A": D("0.5"), "B": D("0.9")}, {"A": D(1)})

    @given(st.integers(0, 2**32 - 1), st.integers(3, 8))
    @settings(max_examples=80, deadline=None)
    def test_outputs_resum_to_one(self, seed, n):
        rng = random.Random(seed)
        base = randgen.exact_unit_weight_row(rng, n)
        touched = sorted(base)[0]
        # headroom-limited delta keeps the adjustment feasible
        room = min(1 - base[touched], base[touched])
        delta_pp = (room * 100) // 2
        sign = 1 if rng.random() < 0.5 else -1
        out = adjust_weights(base, {touched: sign * delta_pp})
        assert abs(sum(out.values()) - 1) <= NORMALIZATION_TOLERANCE
        assert all(0 <= w <= 1 for w in out.values())


class TestCompareIndices:
    def test_identical_weights_identical_pairs(self):
        w = {"a": D("0.5"), "b": D("0.5")}
        r = {"a": D(3), "b": D(1)}
        series = one_month_series(w, r)
        pairs = compare_indices(series, series)
        assert pairs == [("2020-04", D(2), D(2))]

    def test_fixed_vs_shifted_weights(self):
        cats = ["a", "b"]
        months = ["2020-03", "2020-04"]
        weights = {
            "2020-03": {"a": D("0.5"), "b": D("0.5")},
            "2020-04": {"a": D("0.55"), "b": D("0.45")},
        }
        inflation = {
            "2020-03": {"a": D(4), "b": D(0)},
            "2020-04": {"a": D(4), "b": D(0)},
        }
        covid = CpiSeries.build(cats, months, weights, inflation)
        official = fixed_weight_series(covid, "2020-03")
        pairs = compare_indices(official, covid)
        assert pairs[1] == ("2020-04", D("2.0"), D("2.2"))

    def test_single_category(self):
        series = one_month_series({"solo": D(1)}, {"solo": D("1.7")})
        assert compare_indices(series, series) == [("2020-04", D("1.7"), D("1.7"))]

    def test_category_mismatch_rejected(self):
        a = one_month_series({"x": D(1)}, {"x": D(1)})
        b = one_month_series({"y": D(1)}, {"y": D(1)})
        with pytest.raises(SeriesMismatch):
            compare_indices(a, b)


CSV_WEIGHTS = """month,food,energy
2020-03,0.5,0.5
2020-04,0.55,0.45
"""

CSV_INFLATION = """month,food,energy
2020-03,4,0
2020-04,4,0
"""


class TestCsv:
    def test_load_and_compute(self):
        series = load_series_csv(CSV_WEIGHTS, CSV_INFLATION)
        assert series.months == ("2020-03", "2020-04")
        assert weighted_inflation(series, "2020-04") == D("2.2")

    def test_comparison_csv_shape(self):
        series = load_series_csv(CSV_WEIGHTS, CSV_INFLATION)
        official = fixed_weight_series(series, "2020-03")
        text = comparison_csv(compare_indices(official, series))
        lines = text.strip().splitlines()
        assert lines[0] == "month,official_pct,covid_pct"
        assert lines[2] == "2020-04,2.0,2.20"

    def test_mismatched_tables_rejected(self):
        with pytest.raises(SeriesMismatch):
            load_series_csv(CSV_WEIGHTS, "month,food\n2020-03,4\n2020-04,4\n")

    def test_incomplete_row_rejected(self):
        with pytest.raises(IncompleteRow):
            CpiSeries.build(
                categories=["a", "b"],
                months=["2020-01"],
                weights={"2020-01": {"a": D(1)}},
                inflation={"2020-01": {"a": D(1), "b": D(1)}},
            )
