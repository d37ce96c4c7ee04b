"""Named derivation formulas behind derived line items.

Each credit/debit derivation in the sample value-creation ledger has a
registered formula here. Formula and argument names are part of the
scenario file contract, so renaming one is a breaking schema change.

All formulas are multilinear in each numeric argument and evaluate
exactly under the shared 50-digit decimal context.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Callable, Mapping, NamedTuple, Sequence

from .errors import MissingArgument, OutOfRange, UnexpectedArgument, UnitMismatch, UnknownFormula
from .money import CALC_CONTEXT, Quantity, Unit

ZERO = Decimal(0)
ONE = Decimal(1)


def _check_fraction(name: str, value: Decimal) -> None:
    if not (ZERO <= value <= ONE):
        raise OutOfRange(f"{name} must be in [0, 1], got {value}")


def _check_nonnegative(name: str, value: Decimal) -> None:
    if value < ZERO:
        raise OutOfRange(f"{name} must be >= 0, got {value}")


def _check_count(name: str, value: Decimal, minimum: int = 1) -> None:
    if value < minimum or value != value.to_integral_value():
        raise OutOfRange(f"{name} must be an integer >= {minimum}, got {value}")


def healthcare_savings(
    monthly_loss: Decimal,
    months: Decimal,
    reduction_fraction: Decimal,
    conversion: Decimal,
) -> Decimal:
    """Healthcare expense savings in USD.

    monthly_loss (USD/month) x months x reduction_fraction x conversion,
    where conversion expresses how much of an avoided loss is realized
    as savings (e.g. ten cents per dollar = 0.10).
    """
    _check_nonnegative("monthly_loss", monthly_loss)
    _check_count("months", months)
    _check_fraction("reduction_fraction", reduction_fraction)
    _check_fraction("conversion", conversion)
    with localcontext(CALC_CONTEXT):
        return monthly_loss * months * reduction_fraction * conversion


def gdp_gain(gdp: Decimal, covid_attribution: Decimal, fraction: Decimal) -> Decimal:
    """GDP increase in USD: gdp x covid_attribution x fraction."""
    _check_nonnegative("gdp", gdp)
    _check_fraction("covid_attribution", covid_attribution)
    _check_fraction("fraction", fraction)
    with localcontext(CALC_CONTEXT):
        return gdp * covid_attribution * fraction


class PerYearTotal(NamedTuple):
    per_year: Decimal
    total: Decimal


def lives_saved(
    total_deaths: Decimal, reduction_fraction: Decimal, horizon_years: Decimal
) -> PerYearTotal:
    """Lives saved per year and cumulatively over the horizon."""
    _check_nonnegative("total_deaths", total_deaths)
    _check_fraction("reduction_fraction", reduction_fraction)
    _check_count("horizon_years", horizon_years)
    with localcontext(CALC_CONTEXT):
        per_year = total_deaths * reduction_fraction
        return PerYearTotal(per_year, per_year * horizon_years)


def jobs_saved(
    jobs_lost: Decimal, fraction: Decimal, horizon_years: Decimal
) -> PerYearTotal:
    """Jobs saved per year and cumulatively over the horizon."""
    _check_nonnegative("jobs_lost", jobs_lost)
    _check_fraction("fraction", fraction)
    _check_count("horizon_years", horizon_years)
    with localcontext(CALC_CONTEXT):
        per_year = jobs_lost * fraction
        return PerYearTotal(per_year, per_year * horizon_years)


def inflation_reduction(bps: Decimal, fraction: Decimal) -> Decimal:
    """Inflation reduction in basis points: bps x fraction."""
    _check_nonnegative("bps", bps)
    _check_fraction("fraction", fraction)
    with localcontext(CALC_CONTEXT):
        return bps * fraction


def product(factors: Sequence[Decimal]) -> Decimal:
    """Plain product of decimal factors; the escape hatch for user-authored rows."""
    if len(factors) == 0:
        raise OutOfRange("product requires at least one factor")
    with localcontext(CALC_CONTEXT):
        result = ONE
        for f in factors:
            result *= f
        return result


ArgSpec = tuple[str, Unit]
ResolvedArgs = Mapping[str, "Decimal | tuple[Decimal, ...]"]


@dataclass(frozen=True)
class FormulaSpec:
    """Registry entry: argument names/units and the declared output unit.

    ``output_unit is None`` means the line item must declare the unit
    itself (the generic ``product`` formula).
    """

    name: str
    required_args: tuple[ArgSpec, ...]
    output_unit: Unit | None
    list_args: frozenset[str] = frozenset()

    @property
    def arg_names(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.required_args)


class FormulaRegistry:
    """Immutable-after-construction lookup from formula name to evaluator."""

    def __init__(self) -> None:
        self._specs: dict[str, FormulaSpec] = {}
        self._evaluators: dict[str, Callable[..., Decimal]] = {}
        self._samples: dict[str, dict] = {}

    def register(
        self,
        spec: FormulaSpec,
        evaluator: Callable[..., Decimal],
        sample_args: dict,
    ) -> None:
        if spec.name in self._specs:
            raise ValueError(f"formula {spec.name!r} already registered")
        self._specs[spec.name] = spec
        self._evaluators[spec.name] = evaluator
        self._samples[spec.name] = sample_args

    def __contains__(self, name: str) -> bool:
        return name in self._specs

    def names(self) -> list[str]:
        return sorted(self._specs)

    def spec(self, name: str) -> FormulaSpec:
        try:
            return self._specs[name]
        except KeyError:
            raise UnknownFormula(f"no formula named {name!r}") from None

    def evaluate(
        self, name: str, args: ResolvedArgs, declared_unit: Unit | None = None
    ) -> Quantity:
        """Evaluate a registered formula over fully resolved decimal arguments."""
        spec = self.spec(name)
        for arg_name, _unit in spec.required_args:
            if arg_name not in args:
                raise MissingArgument(f"formula {name!r} requires argument {arg_name!r}")
        extras = set(args) - spec.arg_names
        if extras:
            raise UnexpectedArgument(
                f"formula {name!r} does not take argument(s): {', '.join(sorted(extras))}"
            )
        output_unit = spec.output_unit
        if output_unit is None:
            if declared_unit is None or declared_unit is Unit.TBD:
                raise UnitMismatch(
                    f"formula {name!r} requires the line item to declare an output unit"
                )
            output_unit = declared_unit
        elif declared_unit is not None and declared_unit is not output_unit:
            raise UnitMismatch(
                f"formula {name!r} produces {output_unit.value}, "
                f"item declares {declared_unit.value}"
            )
        value = self._evaluators[name](**{k: args[k] for k in spec.arg_names})
        return Quantity(value, output_unit)

    def self_check(self) -> None:
        """Evaluate every formula on its sample arguments and verify the
        output unit matches its spec. Run at registry construction."""
        for name, spec in self._specs.items():
            declared = Unit.DIMENSIONLESS if spec.output_unit is None else None
            result = self.evaluate(name, self._samples[name], declared)
            expected = spec.output_unit if spec.output_unit is not None else declared
            if result.unit is not expected:
                raise UnitMismatch(
                    f"formula {name!r} returned {result.unit.value}, spec says {expected}"
                )


def _build_default_registry() -> FormulaRegistry:
    reg = FormulaRegistry()
    reg.register(
        FormulaSpec(
            "healthcare_savings",
            (
                ("monthly_loss", Unit.USD),
                ("months", Unit.DIMENSIONLESS),
                ("reduction_fraction", Unit.DIMENSIONLESS),
                ("conversion", Unit.DIMENSIONLESS),
            ),
            Unit.USD,
        ),
        healthcare_savings,
        {
            "monthly_loss": Decimal("50000000000"),
            "months": Decimal(12),
            "reduction_fraction": Decimal("0.001"),
            "conversion": Decimal("0.10"),
        },
    )
    reg.register(
        FormulaSpec(
            "gdp_gain",
            (
                ("gdp", Unit.USD),
                ("covid_attribution", Unit.DIMENSIONLESS),
                ("fraction", Unit.DIMENSIONLESS),
            ),
            Unit.USD,
        ),
        gdp_gain,
        {
            "gdp": Decimal("21000000000000"),
            "covid_attribution": Decimal("0.04"),
            "fraction": Decimal("0.001"),
        },
    )
    reg.register(
        FormulaSpec(
            "lives_saved",
            (
                ("total_deaths", Unit.LIVES),
                ("reduction_fraction", Unit.DIMENSIONLESS),
                ("horizon_years", Unit.DIMENSIONLESS),
            ),
            Unit.LIVES,
        ),
        # The ledger credits the cumulative figure over the item's horizon;
        # the per-year value stays available via lives_saved().
        lambda total_deaths, reduction_fraction, horizon_years: lives_saved(
            total_deaths, reduction_fraction, horizon_years
        ).total,
        {
            "total_deaths": Decimal(793000),
            "reduction_fraction": Decimal("0.01"),
            "horizon_years": Decimal(3),
        },
    )
    reg.register(
        FormulaSpec(
            "jobs_saved",
            (
                ("jobs_lost", Unit.JOBS),
                ("fraction", Unit.DIMENSIONLESS),
                ("horizon_years", Unit.DIMENSIONLESS),
            ),
            Unit.JOBS,
        ),
        lambda jobs_lost, fraction, horizon_years: jobs_saved(
            jobs_lost, fraction, horizon_years
        ).total,
        {
            "jobs_lost": Decimal(22000000),
            "fraction": Decimal("0.001"),
            "horizon_years": Decimal(3),
        },
    )
    reg.register(
        FormulaSpec(
            "inflation_reduction",
            (("bps", Unit.BASIS_POINTS), ("fraction", Unit.DIMENSIONLESS)),
            Unit.BASIS_POINTS,
        ),
        inflation_reduction,
        {"bps": Decimal(50), "fraction": Decimal("0.001")},
    )
    reg.register(
        FormulaSpec(
            "product",
            (("factors", Unit.DIMENSIONLESS),),
            None,
            list_args=frozenset({"factors"}),
        ),
        product,
        {"factors": (Decimal(2), Decimal("0.5"))},
    )
    reg.self_check()
    return reg


DEFAULT_REGISTRY = _build_default_registry()
