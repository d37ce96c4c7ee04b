from __future__ import annotations

from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from impactcalc.errors import ParseError, UnitMismatch
from impactcalc.money import (
    Quantity,
    Unit,
    canonical_amount_str,
    display_quantity,
    group_thousands,
    parse_decimal,
)


class TestParseDecimal:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("0", Decimal(0)),
            ("75000000.00", Decimal("75000000.00")),
            ("-12.5", Decimal("-12.5")),
            ("0.001", Decimal("0.001")),
            (12, Decimal(12)),
        ],
    )
    def test_accepts_plain_decimals(self, text, expected):
        assert parse_decimal(text) == expected

    @pytest.mark.parametrize(
        "bad",
        ["1e9", "1E9", ".5", "5.", "00.1", "01", "+1", "1_000", "NaN", "Infinity", ""],
    )
    def test_rejects_non_plain_strings(self, bad):
        with pytest.raises(ParseError):
            parse_decimal(bad)

    def test_rejects_floats_and_bools(self):
        with pytest.raises(ParseError):
            parse_decimal(0.1)
        with pytest.raises(ParseError):
            parse_decimal(True)

    def test_error_carries_path(self):
        with pytest.raises(ParseError) as exc:
            parse_decimal("1e9", path="$.parameters.gdp")
        assert "$.parameters.gdp" in str(exc.value)

    @given(
        st.decimals(
            min_value=Decimal(-(10**15)),
            max_value=Decimal(10**15),
            allow_nan=False,
            allow_infinity=False,
            places=6,
        ).map(lambda d: str(d.quantize(Decimal("0.000001"))))
    )
    def test_parse_is_inverse_of_str(self, text):
        # the contract behind byte-identical document round-trips
        assert str(parse_decimal(text)) == text


class TestQuantity:
    def test_same_unit_addition(self):
        a = Quantity.of("2.50", Unit.USD)
        b = Quantity.of("0.50", Unit.USD)
        assert (a + b).amount == Decimal("3.00")
        assert (a - b).amount == Decimal("2.00")

    def test_cross_unit_addition_rejected(self):
        with pytest.raises(UnitMismatch):
            Quantity.of(1, Unit.USD) + Quantity.of(1, Unit.LIVES)

    def test_tbd_never_participates(self):
        with pytest.raises(UnitMismatch):
            Quantity.tbd() + Quantity.of(1, Unit.USD)
        with pytest.raises(UnitMismatch):
            Quantity.of(1, Unit.USD).scaled(Decimal(2)) + Quantity.tbd()

    def test_tbd_carries_no_amount(self):
        assert Quantity.tbd().is_tbd
        with pytest.raises(UnitMismatch):
            Quantity(Decimal(1), Unit.TBD)
        with pytest.raises(UnitMismatch):
            Quantity(None, Unit.USD)

    def test_non_finite_rejected(self):
        with pytest.raises(UnitMismatch):
            Quantity(Decimal("Infinity"), Unit.USD)

    @given(
        st.integers(min_value=-(10**15), max_value=10**15),
        st.integers(min_value=-(10**15), max_value=10**15),
    )
    def test_addition_commutes_exactly(self, x, y):
        a = Quantity(Decimal(x).scaleb(-2), Unit.USD)
        b = Quantity(Decimal(y).scaleb(-2), Unit.USD)
        assert (a + b).amount == (b + a).amount == Decimal(x + y).scaleb(-2)


class TestFormatting:
    @pytest.mark.parametrize(
        "amount, unit, expected",
        [
            ("75000000", Unit.USD, "75000000.00"),
            ("75000000.00", Unit.USD, "75000000.00"),
            ("12.345600", Unit.USD, "12.3456"),
            ("-0.5", Unit.USD, "-0.50"),
            ("23790", Unit.LIVES, "23790"),
            ("0.050", Unit.BASIS_POINTS, "0.05"),
            ("1000000.000", Unit.JOBS, "1000000"),
        ],
    )
    def test_canonical_amount(self, amount, unit, expected):
        assert canonical_amount_str(Decimal(amount), unit) == expected

    def test_never_scientific(self):
        big = Decimal("1e30")
        assert "E" not in canonical_amount_str(big, Unit.USD).upper()

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("883000000.00", "883,000,000.00"),
            ("-75000000.00", "-75,000,000.00"),
            ("999", "999"),
            ("0.05", "0.05"),
        ],
    )
    def test_group_thousands(self, text, expected):
        assert group_thousands(text) == expected

    def test_display_forms(self):
        assert display_quantity(Quantity.of("883000000.00", Unit.USD)) == "$883,000,000.00"
        assert display_quantity(Quantity.of("23790", Unit.LIVES)) == "23,790 Lives"
        assert display_quantity(Quantity.of("0.05", Unit.BASIS_POINTS)) == "0.05 BasisPoints"
        assert display_quantity(Quantity.of("3", Unit.DIMENSIONLESS)) == "3"
        assert display_quantity(Quantity.tbd()) == "TBD"
