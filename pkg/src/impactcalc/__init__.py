"""impactcalc: deterministic multi-unit cost/benefit calculations.

Exact decimal arithmetic end to end: ledger evaluation, sensitivity
sweeps, break-even root finding, and a set of stand-alone
sub-calculators, exposed as a library, a CLI, and an HTTP service.
"""

__version__ = "0.1.0"

from .analysis import SweepResult, TornadoEntry, break_even, sweep, tornado
from .errors import CalcError
from .formulas import DEFAULT_REGISTRY, FormulaRegistry
from .ledger import (
    DerivedSource,
    LedgerReport,
    LineItem,
    LiteralSource,
    ParamRef,
    Provenance,
    Scenario,
    Side,
    TbdSource,
    compute_ledger,
    evaluate_line_item,
    upsert_line_item,
    validate_scenario,
)
from .money import Quantity, Unit, parse_decimal
from .samples import sample_scenario
from .scenario_io import load_scenario, save_scenario

__all__ = [
    "CalcError",
    "DEFAULT_REGISTRY",
    "DerivedSource",
    "FormulaRegistry",
    "LedgerReport",
    "LineItem",
    "LiteralSource",
    "ParamRef",
    "Provenance",
    "Quantity",
    "Scenario",
    "Side",
    "SweepResult",
    "TbdSource",
    "TornadoEntry",
    "Unit",
    "break_even",
    "compute_ledger",
    "evaluate_line_item",
    "load_scenario",
    "parse_decimal",
    "sample_scenario",
    "save_scenario",
    "sweep",
    "tornado",
    "upsert_line_item",
    "validate_scenario",
    "__version__",
]
