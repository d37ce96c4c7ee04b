"""The bundled sample scenario: U.S. value creation from an AI pre-screening tool.

Fourteen rows (a)-(n): one literal market-entry cost, three TBD debit
placeholders, derived credits for healthcare savings, GDP gain, lives
saved, jobs saved and inflation reduction, two literal credit rows, and
four TBD credit placeholders. Every assumption is a named scenario
parameter so sweeps and break-even searches can target it directly.
"""

from __future__ import annotations

from decimal import Decimal

from .ledger import (
    DerivedSource,
    LineItem,
    LiteralSource,
    ParamRef,
    Provenance,
    Scenario,
    Side,
    TbdSource,
)
from .money import Quantity, Unit

SAMPLE_SCENARIO_NAME = "us-value-creation-sample"


def _usd(text: str) -> Quantity:
    return Quantity.of(text, Unit.USD)


def sample_scenario() -> Scenario:
    """Build the shipped sample scenario with its published assumptions."""
    parameters = {
        "monthly_healthcare_loss": Decimal("50000000000"),
        "healthcare_months": Decimal("12"),
        "healthcare_reduction_fraction": Decimal("0.001"),
        "healthcare_loss_conversion": Decimal("0.10"),
        "us_gdp": Decimal("21000000000000"),
        "gdp_covid_attribution": Decimal("0.04"),
        "gdp_gain_fraction": Decimal("0.001"),
        "covid_deaths": Decimal("793000"),
        "deaths_reduction_fraction": Decimal("0.01"),
        "deaths_horizon_years": Decimal("3"),
        "us_jobs_lost": Decimal("22000000"),
        "jobs_saved_fraction": Decimal("0.001"),
        "jobs_horizon_years": Decimal("3"),
        "inflation_basis_points": Decimal("50"),
        "inflation_reduction_fraction": Decimal("0.001"),
    }
    items = (
        LineItem(
            id="a",
            label="Cost to bring the AI pre-screening solution to the U.S. market",
            side=Side.DEBIT,
            source=LiteralSource(_usd("75000000.00")),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="b",
            label="Additional future potential through public/private partnership",
            side=Side.DEBIT,
            source=TbdSource(),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="c",
            label="Additional user criterion 1",
            side=Side.DEBIT,
            source=TbdSource(),
            provenance=Provenance.DEFAULT,
        ),
        LineItem(
            id="d",
            label="Additional user criterion 2",
            side=Side.DEBIT,
            source=TbdSource(),
            provenance=Provenance.DEFAULT,
        ),
        LineItem(
            id="e",
            label="Reduction in COVID-related healthcare expenses",
            side=Side.CREDIT,
            source=DerivedSource(
                formula="healthcare_savings",
                args={
                    "monthly_loss": ParamRef("monthly_healthcare_loss"),
                    "months": ParamRef("healthcare_months"),
                    "reduction_fraction": ParamRef("healthcare_reduction_fraction"),
                    "conversion": ParamRef("healthcare_loss_conversion"),
                },
            ),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="f",
            label="Increase in U.S. GDP",
            side=Side.CREDIT,
            source=DerivedSource(
                formula="gdp_gain",
                args={
                    "gdp": ParamRef("us_gdp"),
                    "covid_attribution": ParamRef("gdp_covid_attribution"),
                    "fraction": ParamRef("gdp_gain_fraction"),
                },
            ),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="g",
            label="Reduction in COVID-related deaths",
            side=Side.CREDIT,
            source=DerivedSource(
                formula="lives_saved",
                args={
                    "total_deaths": ParamRef("covid_deaths"),
                    "reduction_fraction": ParamRef("deaths_reduction_fraction"),
                    "horizon_years": ParamRef("deaths_horizon_years"),
                },
            ),
            provenance=Provenance.PUBLISHED,
            horizon_years=3,
        ),
        LineItem(
            id="h",
            label="U.S. jobs saved",
            side=Side.CREDIT,
            source=DerivedSource(
                formula="jobs_saved",
                args={
                    "jobs_lost": ParamRef("us_jobs_lost"),
                    "fraction": ParamRef("jobs_saved_fraction"),
                    "horizon_years": ParamRef("jobs_horizon_years"),
                },
            ),
            provenance=Provenance.PUBLISHED,
            horizon_years=3,
        ),
        LineItem(
            id="i",
            label="Reduction in U.S. PCR testing cost",
            side=Side.CREDIT,
            source=LiteralSource(_usd("8000000.00")),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="j",
            label="Reduction in U.S. school-related expenses and delayed learning",
            side=Side.CREDIT,
            source=LiteralSource(_usd("50000000.00")),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="k",
            label="Reduction in COVID-related U.S. inflation",
            side=Side.CREDIT,
            source=DerivedSource(
                formula="inflation_reduction",
                args={
                    "bps": ParamRef("inflation_basis_points"),
                    "fraction": ParamRef("inflation_reduction_fraction"),
                },
            ),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="l",
            label="Measurable progress returning to pre-COVID normalcy",
            side=Side.CREDIT,
            source=TbdSource(),
            provenance=Provenance.PUBLISHED,
        ),
        LineItem(
            id="m",
            label="Additional user criterion 3",
            side=Side.CREDIT,
            source=TbdSource(),
            provenance=Provenance.DEFAULT,
        ),
        LineItem(
            id="n",
            label="Additional user criterion 4",
            side=Side.CREDIT,
            source=TbdSource(),
            provenance=Provenance.DEFAULT,
        ),
    )
    return Scenario(
        name=SAMPLE_SCENARIO_NAME,
        parameters=parameters,
        line_items=items,
    )
