from __future__ import annotations

from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from impactcalc.errors import OutOfRange
from impactcalc.subcalc.edweek import EdweekInput, edweek_cost

D = Decimal


def district(**overrides):
    fields = dict(
        state="NY",
        enrolled_students=D(10000),
        annual_revenue=D(100_000_000),
        pct_without_internet=D("0.10"),
        extra_meal_days=D(0),
        meals_per_day_cost=D(0),
        extra_school_days=D(0),
        cost_per_school_day=D(0),
        pct_students_impacted=D(0),
        revenue_cut_y1=D(0),
        revenue_cut_y2=D(0),
        per_student_internet_cost=D(500),
    )
    fields.update(overrides)
    return EdweekInput(**fields)


class TestEdweekCost:
    def test_internet_oracle(self):
        out = edweek_cost(district())
        assert out.internet == D(500_000)

    def test_all_zero_inputs(self):
        out = edweek_cost(
            district(
                pct_without_internet=D(0),
                per_student_internet_cost=D(0),
            )
        )
        assert out.total_increased_cost == 0
        assert out.total_revenue_loss == 0

    def test_revenue_cut_oracle(self):
        out = edweek_cost(district(revenue_cut_y1=D("0.05"), revenue_cut_y2=D("0.10")))
        assert out.revenue_loss_y1 == D(5_000_000)
        assert out.revenue_loss_y2 == D(10_000_000)
        assert out.total_revenue_loss == D(15_000_000)

    def test_meals_and_extended_year(self):
        out = edweek_cost(
            district(
                pct_students_impacted=D("0.5"),
                extra_meal_days=D(20),
                meals_per_day_cost=D(3),
                extra_school_days=D(10),
                cost_per_school_day=D(250_000),
            )
        )
        assert out.meals == D(300_000)  # 10000 x 0.5 x 20 x 3
        assert out.extended_year == D(2_500_000)
        assert out.total_increased_cost == out.internet + out.meals + out.extended_year

    def test_fraction_bounds(self):
        with pytest.raises(OutOfRange):
            edweek_cost(district(pct_without_internet=D("1.01")))
        with pytest.raises(OutOfRange):
            edweek_cost(district(revenue_cut_y2=D("-0.2")))

    def test_negative_amounts_rejected(self):
        with pytest.raises(OutOfRange):
            edweek_cost(district(annual_revenue=D(-1)))

    @given(st.integers(0, 10**6), st.integers(0, 100), st.integers(0, 1000))
    def test_doubling_enrollment_scales_only_per_student_parts(self, students, pct, cost):
        base = district(
            enrolled_students=D(students),
            pct_without_internet=D(pct).scaleb(-2),
            per_student_internet_cost=D(cost),
            pct_students_impacted=D("0.25"),
            extra_meal_days=D(5),
            meals_per_day_cost=D(4),
            revenue_cut_y1=D("0.03"),
        )
        doubled = district(
            enrolled_students=D(students) * 2,
            pct_without_internet=D(pct).scaleb(-2),
            per_student_internet_cost=D(cost),
            pct_students_impacted=D("0.25"),
            extra_meal_days=D(5),
            meals_per_day_cost=D(4),
            revenue_cut_y1=D("0.03"),
        )
        a, b = edweek_cost(base), edweek_cost(doubled)
        assert b.internet == a.internet * 2
        assert b.meals == a.meals * 2
        assert b.extended_year == a.extended_year
        assert b.revenue_loss_y1 == a.revenue_loss_y1
