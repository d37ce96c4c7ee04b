"""Healthcare-associated infection cost models.

Two calculators: the incidence-based facility savings estimate (cost per
1000 patient days scaled by a reduction fraction) and the per-infection
hospital cost report over the six tracked infection types.

Dollar outputs of the incidence calculator round half-toward-zero to
whole dollars; that is the only place rounding occurs — internal
products stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_DOWN, localcontext
from enum import Enum
from typing import Mapping, Sequence

from ..errors import DuplicateInfectionType, OutOfRange
from ..money import CALC_CONTEXT

ZERO = Decimal(0)
ONE = Decimal(1)

_WHOLE_DOLLAR = Decimal("1")


def _round_half_toward_zero(value: Decimal) -> Decimal:
    return value.quantize(_WHOLE_DOLLAR, rounding=ROUND_HALF_DOWN)


@dataclass(frozen=True)
class ApicInput:
    """Inputs for the incidence-based savings estimate."""

    incidence_per_1000_patient_days: Decimal
    cost_low: Decimal
    cost_high: Decimal
    reduction_fraction: Decimal

    def validate(self) -> None:
        if self.incidence_per_1000_patient_days < ZERO:
            raise OutOfRange("incidence must be >= 0")
        if self.cost_low < ZERO or self.cost_high < ZERO:
            raise OutOfRange("attributable costs must be >= 0")
        if self.cost_low > self.cost_high:
            raise OutOfRange("cost_low must be <= cost_high")
        if not (ZERO <= self.reduction_fraction <= ONE):
            raise OutOfRange("reduction_fraction must be in [0, 1]")


CostRange = tuple[Decimal, Decimal]


def apic_estimated_cost(inputs: ApicInput) -> CostRange:
    """Estimated facility cost per 1000 patient days, (low, high) whole dollars."""
    inputs.validate()
    with localcontext(CALC_CONTEXT):
        low = _round_half_toward_zero(
            inputs.incidence_per_1000_patient_days * inputs.cost_low
        )
        high = _round_half_toward_zero(
            inputs.incidence_per_1000_patient_days * inputs.cost_high
        )
    return (low, high)


def apic_potential_savings(cost_range: CostRange, reduction_fraction: Decimal) -> CostRange:
    """Potential savings: each bound scaled by the reduction, whole dollars."""
    if not (ZERO <= reduction_fraction <= ONE):
        raise OutOfRange("reduction_fraction must be in [0, 1]")
    low, high = cost_range
    if low > high:
        raise OutOfRange("cost range must satisfy low <= high")
    with localcontext(CALC_CONTEXT):
        return (
            _round_half_toward_zero(low * reduction_fraction),
            _round_half_toward_zero(high * reduction_fraction),
        )


class BedSize(Enum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"


class InfectionType(Enum):
    SSI = "SSI"
    VAP = "VAP"
    CAUTI = "CAUTI"
    CLABSI = "CLABSI"
    MRSA = "MRSA"
    CDIFF = "CDIFF"


@dataclass(frozen=True)
class HospitalProfile:
    """Hospital context for the per-infection report.

    Device-patient volumes are carried for report context; they do not
    enter the cost arithmetic.
    """

    bed_size_category: BedSize
    region: str
    teaching: bool
    annual_medical_admissions: int = 0
    annual_surgical_admissions: int = 0
    ventilator_patients: int = 0
    urinary_catheter_patients: int = 0
    central_line_patients: int = 0

    def validate(self) -> None:
        for name in (
            "annual_medical_admissions",
            "annual_surgical_admissions",
            "ventilator_patients",
            "urinary_catheter_patients",
            "central_line_patients",
        ):
            if getattr(self, name) < 0:
                raise OutOfRange(f"{name} must be >= 0")


@dataclass(frozen=True)
class InfectionEntry:
    infection_type: InfectionType
    infections_per_year: Decimal
    excess_cost_per_infection: Decimal
    excess_los_days_per_infection: Decimal

    def validate(self) -> None:
        if (
            self.infections_per_year < ZERO
            or self.excess_cost_per_infection < ZERO
            or self.excess_los_days_per_infection < ZERO
        ):
            raise OutOfRange("infection entry fields must be >= 0")


@dataclass(frozen=True)
class InfectionLine:
    infection_type: InfectionType
    infections_per_year: Decimal
    annual_cost: Decimal
    excess_los_days: Decimal


@dataclass(frozen=True)
class HospitalReport:
    profile: HospitalProfile
    lines: tuple[InfectionLine, ...]
    total_annual_cost: Decimal
    total_excess_los_days: Decimal


def tmit_report(
    profile: HospitalProfile, entries: Sequence[InfectionEntry]
) -> HospitalReport:
    """Per-infection-type annual cost and excess length of stay, with totals.

    Types without an entry report zero; lines always cover all six types
    in a fixed order.
    """
    profile.validate()
    by_type: dict[InfectionType, InfectionEntry] = {}
    for entry in entries:
        entry.validate()
        if entry.infection_type in by_type:
            raise DuplicateInfectionType(
                f"duplicate entry for {entry.infection_type.value}"
            )
        by_type[entry.infection_type] = entry
    lines: list[InfectionLine] = []
    total_cost = ZERO
    total_los = ZERO
    with localcontext(CALC_CONTEXT):
        for itype in InfectionType:
            entry = by_type.get(itype)
            if entry is None:
                lines.append(InfectionLine(itype, ZERO, ZERO, ZERO))
                continue
            cost = entry.infections_per_year * entry.excess_cost_per_infection
            los = entry.infections_per_year * entry.excess_los_days_per_infection
            lines.append(InfectionLine(itype, entry.infections_per_year, cost, los))
            total_cost += cost
            total_los += los
    return HospitalReport(
        profile=profile,
        lines=tuple(lines),
        total_annual_cost=total_cost,
        total_excess_los_days=total_los,
    )


# national defaults are keyed by hospital profile plus infection type;
# the shipped configuration is empty, so lookups fall back to zeros
DefaultsKey = tuple[BedSize, str, bool, InfectionType]


@dataclass(frozen=True)
class HaiDefaults:
    entries: Mapping[DefaultsKey, InfectionEntry] = field(default_factory=dict)

    def lookup(self, profile: HospitalProfile, itype: InfectionType) -> InfectionEntry | None:
        return self.entries.get(
            (profile.bed_size_category, profile.region.lower(), profile.teaching, itype)
        )


def entries_with_defaults(
    profile: HospitalProfile,
    entries: Sequence[InfectionEntry],
    defaults: HaiDefaults,
) -> list[InfectionEntry]:
    """Fill infection types the user did not supply from the defaults table."""
    supplied = {e.infection_type for e in entries}
    merged = list(entries)
    for itype in InfectionType:
        if itype in supplied:
            continue
        default = defaults.lookup(profile, itype)
        if default is not None:
            merged.append(default)
    return merged
