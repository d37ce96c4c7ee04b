"""What-if machinery over scenarios: parameter sweeps, break-even root
finding on the USD net, and tornado ranking.

Every point is an independent evaluation of a scenario copy with one
parameter substituted; the input scenario is never modified.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Sequence

from .errors import NoSignChange, OutOfRange
from .formulas import DEFAULT_REGISTRY, FormulaRegistry
from .ledger import Scenario, compute_ledger
from .money import CALC_CONTEXT

# bisection resolves the parameter to this absolute window when the net
# tolerance has not already been met
PARAM_PRECISION = Decimal("1e-12")


def _usd_net_at(
    scenario: Scenario, param_path: str, value: Decimal, registry: FormulaRegistry
) -> Decimal:
    return compute_ledger(scenario.with_parameter(param_path, value), registry).usd_net


@dataclass(frozen=True)
class SweepPoint:
    param_value: Decimal
    usd_net: Decimal


@dataclass(frozen=True)
class SweepResult:
    param_path: str
    points: tuple[SweepPoint, ...]


def sweep(
    scenario: Scenario,
    param_path: str,
    values: Sequence[Decimal],
    registry: FormulaRegistry = DEFAULT_REGISTRY,
) -> SweepResult:
    """USD net at each requested parameter value, ordered by value."""
    scenario.parameter(param_path)  # raises UnknownParameter
    if not values:
        raise OutOfRange("sweep requires at least one value")
    points = tuple(
        SweepPoint(v, _usd_net_at(scenario, param_path, v, registry))
        for v in sorted(set(values))
    )
    return SweepResult(param_path=param_path, points=points)


def break_even(
    scenario: Scenario,
    param_path: str,
    lo: Decimal,
    hi: Decimal,
    tol: Decimal,
    registry: FormulaRegistry = DEFAULT_REGISTRY,
) -> Decimal:
    """Bisect for the parameter value where the USD net crosses zero.

    Requires a sign change across [lo, hi]. Stops when |net| <= tol or
    the parameter window shrinks below PARAM_PRECISION, whichever binds
    first.
    """
    if lo >= hi:
        raise OutOfRange(f"bracket requires lo < hi, got [{lo}, {hi}]")
    if tol < 0:
        raise OutOfRange("tol must be >= 0")
    f_lo = _usd_net_at(scenario, param_path, lo, registry)
    if f_lo == 0:
        return lo
    f_hi = _usd_net_at(scenario, param_path, hi, registry)
    if f_hi == 0:
        return hi
    if (f_lo < 0) == (f_hi < 0):
        raise NoSignChange(
            f"usd net has the same sign at both ends: net({lo})={f_lo}, net({hi})={f_hi}"
        )
    with localcontext(CALC_CONTEXT):
        while True:
            mid = (lo + hi) / 2
            f_mid = _usd_net_at(scenario, param_path, mid, registry)
            if abs(f_mid) <= tol:
                return mid
            if (f_mid < 0) == (f_lo < 0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
            if hi - lo <= PARAM_PRECISION:
                return (lo + hi) / 2


@dataclass(frozen=True)
class TornadoEntry:
    param_path: str
    net_low: Decimal   # usd net at (1 - delta) x current value
    net_high: Decimal  # usd net at (1 + delta) x current value
    span: Decimal


def tornado(
    scenario: Scenario,
    param_paths: Sequence[str],
    relative_delta: Decimal,
    registry: FormulaRegistry = DEFAULT_REGISTRY,
) -> list[TornadoEntry]:
    """Rank parameters by the USD-net span under a symmetric relative
    perturbation, holding all others fixed. Ties break by name."""
    if relative_delta <= 0:
        raise OutOfRange("relative_delta must be > 0")
    entries: list[TornadoEntry] = []
    seen: set[str] = set()
    with localcontext(CALC_CONTEXT):
        one = Decimal(1)
        for path in param_paths:
            if path in seen:
                continue
            seen.add(path)
            current = scenario.parameter(path)
            net_low = _usd_net_at(
                scenario, path, current * (one - relative_delta), registry
            )
            net_high = _usd_net_at(
                scenario, path, current * (one + relative_delta), registry
            )
            entries.append(
                TornadoEntry(
                    param_path=path,
                    net_low=net_low,
                    net_high=net_high,
                    span=abs(net_high - net_low),
                )
            )
    entries.sort(key=lambda e: (-e.span, e.param_path))
    return entries
