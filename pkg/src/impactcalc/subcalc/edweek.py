"""School-district COVID cost model: revenue cuts plus incremental
internet, meal, and extended-year costs.

A transparent linear model over user-visible rates; each component is
independent of the others and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext

from ..errors import OutOfRange
from ..money import CALC_CONTEXT

ZERO = Decimal(0)
ONE = Decimal(1)


@dataclass(frozen=True)
class EdweekInput:
    state: str
    enrolled_students: Decimal
    annual_revenue: Decimal
    pct_without_internet: Decimal
    extra_meal_days: Decimal
    meals_per_day_cost: Decimal
    extra_school_days: Decimal
    cost_per_school_day: Decimal
    pct_students_impacted: Decimal
    revenue_cut_y1: Decimal
    revenue_cut_y2: Decimal
    per_student_internet_cost: Decimal

    def validate(self) -> None:
        for name in (
            "enrolled_students",
            "annual_revenue",
            "extra_meal_days",
            "meals_per_day_cost",
            "extra_school_days",
            "cost_per_school_day",
            "per_student_internet_cost",
        ):
            if getattr(self, name) < ZERO:
                raise OutOfRange(f"{name} must be >= 0")
        for name in (
            "pct_without_internet",
            "pct_students_impacted",
            "revenue_cut_y1",
            "revenue_cut_y2",
        ):
            value = getattr(self, name)
            if not (ZERO <= value <= ONE):
                raise OutOfRange(f"{name} must be in [0, 1]")


@dataclass(frozen=True)
class EdweekBreakdown:
    internet: Decimal
    meals: Decimal
    extended_year: Decimal
    revenue_loss_y1: Decimal
    revenue_loss_y2: Decimal
    total_increased_cost: Decimal
    total_revenue_loss: Decimal


def edweek_cost(inputs: EdweekInput) -> EdweekBreakdown:
    """Cost breakdown for one district; totals are exact sums of their parts."""
    inputs.validate()
    with localcontext(CALC_CONTEXT):
        internet = (
            inputs.enrolled_students
            * inputs.pct_without_internet
            * inputs.per_student_internet_cost
        )
        meals = (
            inputs.enrolled_students
            * inputs.pct_students_impacted
            * inputs.extra_meal_days
            * inputs.meals_per_day_cost
        )
        extended_year = inputs.extra_school_days * inputs.cost_per_school_day
        revenue_loss_y1 = inputs.annual_revenue * inputs.revenue_cut_y1
        revenue_loss_y2 = inputs.annual_revenue * inputs.revenue_cut_y2
        return EdweekBreakdown(
            internet=internet,
            meals=meals,
            extended_year=extended_year,
            revenue_loss_y1=revenue_loss_y1,
            revenue_loss_y2=revenue_loss_y2,
            total_increased_cost=internet + meals + extended_year,
            total_revenue_loss=revenue_loss_y1 + revenue_loss_y2,
        )
