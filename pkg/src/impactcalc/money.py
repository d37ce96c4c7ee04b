"""Exact quantities: a decimal amount paired with a unit.

All amounts are :class:`decimal.Decimal`. Arithmetic runs under a
50-digit context so that realistic ledger values (trillions of dollars
times small fractions) multiply and add without any rounding; binary
floating point never touches a money amount.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Context, Decimal, localcontext
from enum import Enum

from .errors import ParseError, UnitMismatch

# Wide enough that products and sums of realistic inputs stay exact.
CALC_CONTEXT = Context(prec=50)

# Plain fixed-point decimals only: no exponent, no leading zeros, no bare dot.
# Keeps str(Decimal(s)) == s so documents round-trip byte-identically.
_DECIMAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(\.[0-9]+)?$")


class Unit(Enum):
    USD = "USD"
    LIVES = "Lives"
    JOBS = "Jobs"
    BASIS_POINTS = "BasisPoints"
    DIMENSIONLESS = "Dimensionless"
    TBD = "TBD"


def parse_decimal(text: str | int, *, path: str | None = None) -> Decimal:
    """Parse a plain decimal string (or int) into an exact Decimal.

    Floats are deliberately not accepted anywhere in the engine: a JSON
    ``0.1`` has already lost exactness before we ever see it.
    """
    if isinstance(text, bool):
        raise ParseError("expected a decimal string, got a boolean", path=path)
    if isinstance(text, int):
        return Decimal(text)
    if isinstance(text, float):
        raise ParseError(
            "floating-point numbers are not accepted; quote the value as a decimal string",
            path=path,
        )
    if not isinstance(text, str) or not _DECIMAL_RE.match(text):
        raise ParseError(f"not a plain decimal string: {text!r}", path=path)
    return Decimal(text)


@dataclass(frozen=True)
class Quantity:
    """An exact amount with a unit, or the distinguished TBD marker.

    Invariant: ``amount is None`` exactly when ``unit is Unit.TBD``.
    """

    amount: Decimal | None
    unit: Unit

    def __post_init__(self) -> None:
        if self.unit is Unit.TBD:
            if self.amount is not None:
                raise UnitMismatch("a TBD quantity carries no amount")
        else:
            if self.amount is None:
                raise UnitMismatch(f"{self.unit.value} quantity requires an amount")
            if not self.amount.is_finite():
                raise UnitMismatch("quantity amounts must be finite")

    @classmethod
    def of(cls, amount: Decimal | int | str, unit: Unit) -> "Quantity":
        if isinstance(amount, str):
            amount = parse_decimal(amount)
        elif isinstance(amount, int):
            amount = Decimal(amount)
        return cls(amount, unit)

    @classmethod
    def tbd(cls) -> "Quantity":
        return cls(None, Unit.TBD)

    @property
    def is_tbd(self) -> bool:
        return self.unit is Unit.TBD

    def _require_same_unit(self, other: "Quantity") -> None:
        if self.is_tbd or other.is_tbd:
            raise UnitMismatch("TBD quantities never participate in arithmetic")
        if self.unit is not other.unit:
            raise UnitMismatch(
                f"cannot combine {self.unit.value} with {other.unit.value}"
            )

    def __add__(self, other: "Quantity") -> "Quantity":
        self._require_same_unit(other)
        with localcontext(CALC_CONTEXT):
            return Quantity(self.amount + other.amount, self.unit)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._require_same_unit(other)
        with localcontext(CALC_CONTEXT):
            return Quantity(self.amount - other.amount, self.unit)

    def scaled(self, factor: Decimal) -> "Quantity":
        if self.is_tbd:
            raise UnitMismatch("TBD quantities never participate in arithmetic")
        with localcontext(CALC_CONTEXT):
            return Quantity(self.amount * factor, self.unit)


def canonical_amount_str(amount: Decimal, unit: Unit) -> str:
    """Render an amount as a fixed-point string.

    USD keeps at least two fractional digits ("75000000.00"); extra
    precision, when genuinely present, is preserved rather than rounded.
    Never emits scientific notation.
    """
    s = format(amount, "f")
    if "." in s:
        int_part, frac = s.split(".")
        frac = frac.rstrip("0")
    else:
        int_part, frac = s, ""
    if unit is Unit.USD:
        frac = frac.ljust(2, "0")
    return int_part + ("." + frac if frac else "")


def group_thousands(fixed_point: str) -> str:
    """Insert comma separators into the integer part of a fixed-point string."""
    sign = ""
    if fixed_point.startswith("-"):
        sign, fixed_point = "-", fixed_point[1:]
    int_part, _, frac = fixed_point.partition(".")
    grouped = f"{int(int_part):,}"
    return sign + grouped + ("." + frac if frac else "")


def display_quantity(q: Quantity) -> str:
    """Human display form: ``$883,000,000.00`` or ``23,790 Lives``."""
    if q.is_tbd:
        return "TBD"
    body = group_thousands(canonical_amount_str(q.amount, q.unit))
    if q.unit is Unit.USD:
        return "$" + body
    if q.unit is Unit.DIMENSIONLESS:
        return body
    return f"{body} {q.unit.value}"
