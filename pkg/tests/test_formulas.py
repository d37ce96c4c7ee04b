from __future__ import annotations

from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from impactcalc.errors import (
    MissingArgument,
    OutOfRange,
    UnexpectedArgument,
    UnitMismatch,
    UnknownFormula,
)
from impactcalc.formulas import (
    DEFAULT_REGISTRY,
    gdp_gain,
    healthcare_savings,
    inflation_reduction,
    jobs_saved,
    lives_saved,
    product,
)
from impactcalc.money import Unit

D = Decimal


class TestHealthcareSavings:
    def test_published_sample(self):
        result = healthcare_savings(D("50000000000"), D(12), D("0.001"), D("0.10"))
        assert result == D(60_000_000)

    def test_full_conversion_intermediate(self):
        assert healthcare_savings(D("50000000000"), D(12), D("0.001"), D(1)) == D(600_000_000)

    def test_zero_reduction(self):
        assert healthcare_savings(D("1"), D(1), D(0), D(1)) == 0

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(monthly_loss=D(-1), months=D(1), reduction_fraction=D(0), conversion=D(0)),
            dict(monthly_loss=D(1), months=D(0), reduction_fraction=D(0), conversion=D(0)),
            dict(monthly_loss=D(1), months=D("1.5"), reduction_fraction=D(0), conversion=D(0)),
            dict(monthly_loss=D(1), months=D(1), reduction_fraction=D(2), conversion=D(0)),
            dict(monthly_loss=D(1), months=D(1), reduction_fraction=D(0), conversion=D("-0.1")),
        ],
    )
    def test_preconditions(self, kwargs):
        with pytest.raises(OutOfRange):
            healthcare_savings(**kwargs)


class TestGdpGain:
    def test_published_sample(self):
        assert gdp_gain(D("21000000000000"), D("0.04"), D("0.001")) == D(840_000_000)

    def test_full_fraction_intermediate(self):
        assert gdp_gain(D("21000000000000"), D("0.04"), D(1)) == D(840_000_000_000)

    def test_zero_attribution(self):
        assert gdp_gain(D("5"), D(0), D("0.5")) == 0


class TestLivesJobs:
    def test_lives_published_sample(self):
        per_year, total = lives_saved(D(793000), D("0.01"), D(3))
        assert per_year == D(7930)
        assert total == D(23790)

    def test_lives_zero_reduction(self):
        assert lives_saved(D(12345), D(0), D(2)) == (0, 0)

    def test_lives_hand_oracle(self):
        assert lives_saved(D(1_000_000), D("0.005"), D(2)) == (D(5000), D(10000))

    def test_jobs_published_sample(self):
        per_year, total = jobs_saved(D(22_000_000), D("0.001"), D(3))
        assert per_year == D(22000)
        assert total == D(66000)

    def test_jobs_hand_oracle(self):
        assert jobs_saved(D(10_000_000), D("0.002"), D(1)) == (D(20000), D(20000))

    def test_horizon_must_be_integral(self):
        with pytest.raises(OutOfRange):
            lives_saved(D(1), D(0), D("1.5"))
        with pytest.raises(OutOfRange):
            jobs_saved(D(1), D(0), D(0))


class TestInflationReduction:
    def test_published_sample(self):
        assert inflation_reduction(D(50), D("0.001")) == D("0.050")

    def test_zero(self):
        assert inflation_reduction(D(50), D(0)) == 0

    def test_hand_oracle(self):
        assert inflation_reduction(D(100), D("0.5")) == D(50)


class TestProduct:
    def test_multiplies(self):
        assert product((D(2), D(3), D("0.5"))) == D(3)

    def test_empty_rejected(self):
        with pytest.raises(OutOfRange):
            product(())

    @given(st.integers(-1000, 1000), st.integers(-1000, 1000))
    def test_doubling_one_factor_doubles_output(self, a, b):
        base = product((D(a), D(b)))
        assert product((D(a) * 2, D(b))) == base * 2


class TestRegistry:
    def test_golden_formula_names_resolve(self):
        for name in (
            "healthcare_savings",
            "gdp_gain",
            "lives_saved",
            "jobs_saved",
            "inflation_reduction",
            "product",
        ):
            assert name in DEFAULT_REGISTRY
            assert DEFAULT_REGISTRY.spec(name).name == name

    def test_unknown_formula(self):
        with pytest.raises(UnknownFormula):
            DEFAULT_REGISTRY.spec("np_complete_oracle")

    def test_missing_argument(self):
        with pytest.raises(MissingArgument):
            DEFAULT_REGISTRY.evaluate("gdp_gain", {"gdp": D(1)})

    def test_unexpected_argument(self):
        args = {"gdp": D(1), "covid_attribution": D(0), "fraction": D(0), "bogus": D(1)}
        with pytest.raises(UnexpectedArgument):
            DEFAULT_REGISTRY.evaluate("gdp_gain", args)

    def test_registry_units_match_specs(self):
        q = DEFAULT_REGISTRY.evaluate(
            "healthcare_savings",
            {
                "monthly_loss": D("50000000000"),
                "months": D(12),
                "reduction_fraction": D("0.001"),
                "conversion": D("0.10"),
            },
        )
        assert q.unit is Unit.USD
        q = DEFAULT_REGISTRY.evaluate("inflation_reduction", {"bps": D(50), "fraction": D(0)})
        assert q.unit is Unit.BASIS_POINTS

    def test_lives_and_jobs_evaluate_to_horizon_totals(self):
        q = DEFAULT_REGISTRY.evaluate(
            "lives_saved",
            {"total_deaths": D(793000), "reduction_fraction": D("0.01"), "horizon_years": D(3)},
        )
        assert (q.amount, q.unit) == (D(23790), Unit.LIVES)

    def test_product_requires_declared_unit(self):
        with pytest.raises(UnitMismatch):
            DEFAULT_REGISTRY.evaluate("product", {"factors": (D(2), D(3))})
        q = DEFAULT_REGISTRY.evaluate(
            "product", {"factors": (D(2), D(3))}, declared_unit=Unit.USD
        )
        assert (q.amount, q.unit) == (D(6), Unit.USD)

    def test_declared_unit_conflict_rejected(self):
        with pytest.raises(UnitMismatch):
            DEFAULT_REGISTRY.evaluate(
                "gdp_gain",
                {"gdp": D(1), "covid_attribution": D(0), "fraction": D(0)},
                declared_unit=Unit.LIVES,
            )

    @given(
        st.decimals(min_value=0, max_value=10**12, allow_nan=False, places=2),
        st.integers(0, 10000),
    )
    def test_gdp_gain_multilinear(self, gdp, frac_ten_thousandths):
        frac = D(frac_ten_thousandths).scaleb(-4)
        single = gdp_gain(gdp, D("0.04"), frac)
        assert gdp_gain(gdp * 2, D("0.04"), frac) == single * 2
