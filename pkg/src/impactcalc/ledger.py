"""Ledger core: line items, scenarios, and credit-minus-debit evaluation.

All values are immutable; every operation is a pure function of its
inputs, so scenarios and reports are safe to share across threads.
Quantities of different units are never added — the report keeps one
entry per distinct unit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from decimal import Decimal
from enum import Enum
from typing import Mapping

from .errors import (
    CalcError,
    InvalidItem,
    MissingArgument,
    UnexpectedArgument,
    UnknownParameter,
    ValidationError,
)
from .formulas import DEFAULT_REGISTRY, FormulaRegistry
from .money import Quantity, Unit

_ID_RE = re.compile(r"^[A-Za-z0-9_.-]+$")
_PARAM_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Side(Enum):
    DEBIT = "debit"
    CREDIT = "credit"


class Provenance(Enum):
    USER = "user"
    PUBLISHED = "published"
    DEFAULT = "default"


@dataclass(frozen=True)
class ParamRef:
    """Reference from a derived item's argument to a named scenario parameter."""

    name: str


# A derived argument is a literal decimal, a parameter reference, or (for
# list-valued arguments such as product factors) a tuple of those.
ArgValue = "Decimal | ParamRef | tuple[Decimal | ParamRef, ...]"


@dataclass(frozen=True)
class LiteralSource:
    quantity: Quantity


@dataclass(frozen=True)
class DerivedSource:
    formula: str
    args: Mapping[str, object] = field(default_factory=dict)
    unit: Unit | None = None  # explicit output unit, required for `product`


@dataclass(frozen=True)
class TbdSource:
    pass


Source = "LiteralSource | DerivedSource | TbdSource"


@dataclass(frozen=True)
class LineItem:
    id: str
    label: str
    side: Side
    source: "LiteralSource | DerivedSource | TbdSource"
    provenance: Provenance
    horizon_years: int = 1

    def validate(self) -> None:
        if not self.id or not _ID_RE.match(self.id):
            raise InvalidItem(f"item id {self.id!r} is not a short stable identifier")
        if not isinstance(self.horizon_years, int) or self.horizon_years < 1:
            raise InvalidItem(f"item {self.id}: horizon_years must be an integer >= 1")
        if isinstance(self.source, LiteralSource):
            if self.source.quantity.is_tbd:
                raise InvalidItem(
                    f"item {self.id}: literal sources carry a concrete quantity; use a TBD source"
                )
        elif isinstance(self.source, DerivedSource):
            if not self.source.formula:
                raise InvalidItem(f"item {self.id}: derived source requires a formula name")
        elif not isinstance(self.source, TbdSource):
            raise InvalidItem(f"item {self.id}: unknown source type {type(self.source).__name__}")


@dataclass(frozen=True)
class Scenario:
    """A named parameter set plus an ordered list of line items."""

    name: str
    parameters: Mapping[str, Decimal]
    line_items: tuple[LineItem, ...]
    currency: str = "USD"

    def parameter(self, name: str) -> Decimal:
        try:
            return self.parameters[name]
        except KeyError:
            raise UnknownParameter(f"scenario has no parameter {name!r}") from None

    def with_parameter(self, name: str, value: Decimal) -> "Scenario":
        if name not in self.parameters:
            raise UnknownParameter(f"scenario has no parameter {name!r}")
        params = dict(self.parameters)
        params[name] = value
        return replace(self, parameters=params)


def validate_scenario(
    scenario: Scenario, registry: FormulaRegistry = DEFAULT_REGISTRY
) -> None:
    """Check scenario invariants: unique ids, well-formed items, resolvable args."""
    if scenario.currency != "USD":
        raise ValidationError(f"currency must be 'USD', got {scenario.currency!r}")
    for pname in scenario.parameters:
        if not _PARAM_RE.match(pname):
            raise ValidationError(f"parameter name {pname!r} is not an identifier")
    seen: set[str] = set()
    for item in scenario.line_items:
        try:
            item.validate()
        except InvalidItem as exc:
            raise ValidationError(str(exc)) from exc
        if item.id in seen:
            raise ValidationError(f"duplicate line item id {item.id!r}")
        seen.add(item.id)
        if isinstance(item.source, DerivedSource):
            try:
                _resolve_args(item.source, scenario.parameters, registry)
            except CalcError as exc:
                raise ValidationError(f"item {item.id}: {exc}") from exc


def _resolve_value(value: object, params: Mapping[str, Decimal], what: str) -> Decimal:
    if isinstance(value, ParamRef):
        if value.name not in params:
            raise MissingArgument(
                f"{what} references unknown scenario parameter {value.name!r}"
            )
        return params[value.name]
    if isinstance(value, Decimal):
        return value
    raise MissingArgument(f"{what} is not a decimal or parameter reference")


def _resolve_args(
    source: DerivedSource,
    params: Mapping[str, Decimal],
    registry: FormulaRegistry,
) -> dict[str, "Decimal | tuple[Decimal, ...]"]:
    """Resolve a derived item's argument map against scenario parameters.

    Item-local arguments win; a formula argument absent from the item's
    map falls back to the scenario parameter of the same name.
    """
    spec = registry.spec(source.formula)
    resolved: dict[str, Decimal | tuple[Decimal, ...]] = {}
    for arg_name, _unit in spec.required_args:
        if arg_name in source.args:
            raw = source.args[arg_name]
        elif arg_name in params:
            raw = params[arg_name]
        else:
            raise MissingArgument(
                f"formula {source.formula!r} argument {arg_name!r} is neither "
                "supplied by the item nor present in scenario parameters"
            )
        what = f"argument {arg_name!r}"
        if arg_name in spec.list_args:
            if not isinstance(raw, (tuple, list)) or len(raw) == 0:
                raise MissingArgument(f"{what} must be a nonempty list")
            resolved[arg_name] = tuple(
                _resolve_value(v, params, f"{what}[{i}]") for i, v in enumerate(raw)
            )
        else:
            resolved[arg_name] = _resolve_value(raw, params, what)
    extras = set(source.args) - spec.arg_names
    if extras:
        raise UnexpectedArgument(
            f"formula {source.formula!r} does not take argument(s): "
            + ", ".join(sorted(extras))
        )
    return resolved


def evaluate_line_item(
    item: LineItem,
    scenario_params: Mapping[str, Decimal],
    registry: FormulaRegistry = DEFAULT_REGISTRY,
) -> Quantity:
    """Evaluate one line item to its Quantity.

    Literal sources return their stored quantity unchanged, TBD sources
    return the TBD marker, and derived sources evaluate their registered
    formula over resolved arguments. Deterministic for identical inputs.
    """
    src = item.source
    if isinstance(src, LiteralSource):
        return src.quantity
    if isinstance(src, TbdSource):
        return Quantity.tbd()
    if isinstance(src, DerivedSource):
        args = _resolve_args(src, scenario_params, registry)
        return registry.evaluate(src.formula, args, src.unit)
    raise InvalidItem(f"item {item.id}: unknown source type")


@dataclass(frozen=True)
class EvaluatedItem:
    """Per-item trace entry carried by the report."""

    id: str
    label: str
    side: Side
    provenance: Provenance
    horizon_years: int
    quantity: Quantity


@dataclass(frozen=True)
class UnitTotals:
    debits: Decimal
    credits: Decimal
    net: Decimal


@dataclass(frozen=True)
class LedgerReport:
    scenario_name: str
    totals: Mapping[Unit, UnitTotals]
    tbd_items: tuple[str, ...]
    items: tuple[EvaluatedItem, ...]

    def net(self, unit: Unit) -> Decimal:
        totals = self.totals.get(unit)
        return totals.net if totals is not None else Decimal(0)

    @property
    def usd_net(self) -> Decimal:
        return self.net(Unit.USD)


def compute_ledger(
    scenario: Scenario, registry: FormulaRegistry = DEFAULT_REGISTRY
) -> LedgerReport:
    """Evaluate every line item and total credits minus debits per unit.

    TBD items are listed separately and never enter a numeric subtotal.
    Sums are exact decimal arithmetic: any item ordering produces
    bit-identical totals.
    """
    debits: dict[Unit, Decimal] = {}
    credits: dict[Unit, Decimal] = {}
    tbd_ids: list[str] = []
    trace: list[EvaluatedItem] = []
    for item in scenario.line_items:
        try:
            quantity = evaluate_line_item(item, scenario.parameters, registry)
        except CalcError as exc:
            raise type(exc)(f"item {item.id}: {exc}") from exc
        trace.append(
            EvaluatedItem(
                id=item.id,
                label=item.label,
                side=item.side,
                provenance=item.provenance,
                horizon_years=item.horizon_years,
                quantity=quantity,
            )
        )
        if quantity.is_tbd:
            tbd_ids.append(item.id)
            continue
        bucket = debits if item.side is Side.DEBIT else credits
        unit = quantity.unit
        if unit in bucket:
            bucket[unit] = (Quantity(bucket[unit], unit) + quantity).amount
        else:
            bucket[unit] = quantity.amount
    totals: dict[Unit, UnitTotals] = {}
    for unit in sorted(set(debits) | set(credits), key=lambda u: u.value):
        d = debits.get(unit, Decimal(0))
        c = credits.get(unit, Decimal(0))
        net = (Quantity(c, unit) - Quantity(d, unit)).amount
        totals[unit] = UnitTotals(debits=d, credits=c, net=net)
    return LedgerReport(
        scenario_name=scenario.name,
        totals=totals,
        tbd_items=tuple(tbd_ids),
        items=tuple(trace),
    )


def upsert_line_item(scenario: Scenario, item: LineItem) -> Scenario:
    """Return a new scenario with `item` replacing its id or appended at the end."""
    item.validate()
    items = list(scenario.line_items)
    for i, existing in enumerate(items):
        if existing.id == item.id:
            items[i] = item
            break
    else:
        items.append(item)
    return replace(scenario, line_items=tuple(items))
