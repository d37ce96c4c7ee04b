"""Exception hierarchy for the calculation engine.

Every domain error derives from :class:`CalcError` so callers (CLI, HTTP
service) can map the whole family to a user-facing failure without
catching bare ``Exception``.
"""

from __future__ import annotations


class CalcError(Exception):
    """Base class for all engine errors."""


class UnitMismatch(CalcError):
    """Arithmetic or assignment attempted between incompatible units."""


class UnknownFormula(CalcError):
    """A derived line item names a formula that is not registered."""


class MissingArgument(CalcError):
    """A required formula argument could not be resolved."""


class UnexpectedArgument(CalcError):
    """A derived line item supplies an argument the formula does not take."""


class InvalidItem(CalcError):
    """A line item violates its structural invariants."""


class OutOfRange(CalcError):
    """A numeric input violates a formula's declared range."""


class DuplicateInfectionType(CalcError):
    """Two infection entries carry the same infection type."""


class MissingMonth(CalcError):
    """A requested month is not present in the series."""


class IncompleteRow(CalcError):
    """A weight or inflation row is missing a category cell."""


class InfeasibleAdjustment(CalcError):
    """A weight adjustment cannot produce a valid row summing to one."""


class UnknownCategory(CalcError):
    """An adjustment names a category that is not in the row."""


class SeriesMismatch(CalcError):
    """Two series do not share categories or months."""


class UnknownParameter(CalcError):
    """A parameter path does not resolve to a scenario parameter."""


class NoSignChange(CalcError):
    """The objective has the same sign at both bracket endpoints."""


class ParseError(CalcError):
    """A document is malformed. Carries the offending line or field path."""

    def __init__(self, message: str, *, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if path is not None:
            prefix += f"{path}: "
        super().__init__(prefix + message)


class UnsupportedVersion(CalcError):
    """The document's schema_version is not supported by this engine."""


class ValidationError(CalcError):
    """A document parsed but violates a scenario invariant."""


class ScenarioNotFound(CalcError):
    """The store has no scenario under the requested id."""


class RevisionConflict(CalcError):
    """An update presented a stale revision for an optimistic write."""
