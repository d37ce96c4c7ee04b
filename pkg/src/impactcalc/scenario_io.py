"""Scenario documents: versioned JSON persistence with strict validation.

The document format is the file contract shared by the CLI, the HTTP
service, and the web UI. Amounts and parameters are decimal strings so
no binary floating point can slip in; unknown fields are rejected with
path-qualified errors; `load(save(s))` reproduces the scenario exactly,
including item order, TBD items, and provenance.
"""

from __future__ import annotations

import json
from decimal import Decimal
from typing import Any, Mapping

from .errors import ParseError, UnsupportedVersion
from .formulas import DEFAULT_REGISTRY, FormulaRegistry
from .ledger import (
    DerivedSource,
    LineItem,
    LiteralSource,
    ParamRef,
    Provenance,
    Scenario,
    Side,
    TbdSource,
    validate_scenario,
)
from .money import Quantity, Unit, parse_decimal

SCHEMA_VERSION = 1

_UNIT_VALUES = [u.value for u in Unit]
_SIDE_VALUES = [s.value for s in Side]
_PROVENANCE_VALUES = [p.value for p in Provenance]


def _require_dict(node: Any, path: str) -> dict:
    if not isinstance(node, dict):
        raise ParseError(f"expected an object, got {type(node).__name__}", path=path)
    return node


def _require_str(node: Any, path: str) -> str:
    if not isinstance(node, str):
        raise ParseError(f"expected a string, got {type(node).__name__}", path=path)
    return node


def _require_int(node: Any, path: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise ParseError(f"expected an integer, got {type(node).__name__}", path=path)
    return node


def _reject_unknown(node: Mapping, allowed: set[str], path: str) -> None:
    unknown = set(node) - allowed
    if unknown:
        raise ParseError(
            "unknown field(s): " + ", ".join(sorted(unknown)), path=path
        )


def _parse_enum(node: Any, values: list[str], enum_cls, path: str):
    text = _require_str(node, path)
    if text not in values:
        raise ParseError(
            f"must be one of {', '.join(values)}; got {text!r}", path=path
        )
    return enum_cls(text)


def _arg_value_from_json(node: Any, path: str, allow_list: bool):
    if isinstance(node, dict):
        _reject_unknown(node, {"param"}, path)
        if "param" not in node:
            raise ParseError("parameter reference requires a 'param' field", path=path)
        return ParamRef(_require_str(node["param"], path + ".param"))
    if isinstance(node, list):
        if not allow_list:
            raise ParseError("nested lists are not allowed here", path=path)
        return tuple(
            _arg_value_from_json(v, f"{path}[{i}]", allow_list=False)
            for i, v in enumerate(node)
        )
    return parse_decimal(node, path=path)


def _source_from_json(node: Any, path: str) -> "LiteralSource | DerivedSource | TbdSource":
    obj = _require_dict(node, path)
    kind = _require_str(obj.get("kind"), path + ".kind") if "kind" in obj else None
    if kind is None:
        raise ParseError("source requires a 'kind' field", path=path)
    if kind == "literal":
        _reject_unknown(obj, {"kind", "amount", "unit"}, path)
        if "amount" not in obj or "unit" not in obj:
            raise ParseError("literal source requires 'amount' and 'unit'", path=path)
        unit = _parse_enum(obj["unit"], _UNIT_VALUES, Unit, path + ".unit")
        if unit is Unit.TBD:
            raise ParseError("literal sources cannot use the TBD unit", path=path + ".unit")
        amount = parse_decimal(obj["amount"], path=path + ".amount")
        return LiteralSource(Quantity(amount, unit))
    if kind == "derived":
        _reject_unknown(obj, {"kind", "formula", "args", "unit"}, path)
        if "formula" not in obj:
            raise ParseError("derived source requires a 'formula' field", path=path)
        formula = _require_str(obj["formula"], path + ".formula")
        args_node = obj.get("args", {})
        args_obj = _require_dict(args_node, path + ".args")
        args = {
            _require_str(k, path + ".args"): _arg_value_from_json(
                v, f"{path}.args.{k}", allow_list=True
            )
            for k, v in args_obj.items()
        }
        unit = None
        if "unit" in obj:
            unit = _parse_enum(obj["unit"], _UNIT_VALUES, Unit, path + ".unit")
        return DerivedSource(formula=formula, args=args, unit=unit)
    if kind == "tbd":
        _reject_unknown(obj, {"kind"}, path)
        return TbdSource()
    raise ParseError(
        f"source kind must be 'literal', 'derived', or 'tbd'; got {kind!r}",
        path=path + ".kind",
    )


def _item_from_json(node: Any, path: str) -> LineItem:
    obj = _require_dict(node, path)
    _reject_unknown(
        obj, {"id", "label", "side", "provenance", "horizon_years", "source"}, path
    )
    for required in ("id", "label", "side", "provenance", "source"):
        if required not in obj:
            raise ParseError(f"line item requires field {required!r}", path=path)
    return LineItem(
        id=_require_str(obj["id"], path + ".id"),
        label=_require_str(obj["label"], path + ".label"),
        side=_parse_enum(obj["side"], _SIDE_VALUES, Side, path + ".side"),
        provenance=_parse_enum(
            obj["provenance"], _PROVENANCE_VALUES, Provenance, path + ".provenance"
        ),
        horizon_years=_require_int(obj.get("horizon_years", 1), path + ".horizon_years"),
        source=_source_from_json(obj["source"], path + ".source"),
    )


def scenario_from_dict(
    doc: Any, registry: FormulaRegistry = DEFAULT_REGISTRY
) -> Scenario:
    """Build and validate a Scenario from a parsed document object."""
    obj = _require_dict(doc, "$")
    _reject_unknown(
        obj, {"schema_version", "name", "currency", "parameters", "line_items"}, "$"
    )
    if "schema_version" not in obj:
        raise ParseError("document requires 'schema_version'", path="$")
    version = _require_int(obj["schema_version"], "$.schema_version")
    if version != SCHEMA_VERSION:
        raise UnsupportedVersion(
            f"schema_version {version} is not supported (engine supports {SCHEMA_VERSION})"
        )
    name = _require_str(obj.get("name", ""), "$.name")
    currency = _require_str(obj.get("currency", "USD"), "$.currency")
    params_obj = _require_dict(obj.get("parameters", {}), "$.parameters")
    parameters = {
        _require_str(k, "$.parameters"): parse_decimal(v, path=f"$.parameters.{k}")
        for k, v in params_obj.items()
    }
    items_node = obj.get("line_items", [])
    if not isinstance(items_node, list):
        raise ParseError("line_items must be an array", path="$.line_items")
    items = tuple(
        _item_from_json(item, f"$.line_items[{i}]") for i, item in enumerate(items_node)
    )
    scenario = Scenario(
        name=name, parameters=parameters, line_items=items, currency=currency
    )
    validate_scenario(scenario, registry)
    return scenario


def load_scenario(text: str, registry: FormulaRegistry = DEFAULT_REGISTRY) -> Scenario:
    """Parse document text into a validated Scenario."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    return scenario_from_dict(doc, registry)


def _arg_value_to_json(value: Any) -> Any:
    if isinstance(value, ParamRef):
        return {"param": value.name}
    if isinstance(value, tuple):
        return [_arg_value_to_json(v) for v in value]
    return str(value)


def _source_to_json(source: "LiteralSource | DerivedSource | TbdSource") -> dict:
    if isinstance(source, LiteralSource):
        return {
            "kind": "literal",
            "amount": str(source.quantity.amount),
            "unit": source.quantity.unit.value,
        }
    if isinstance(source, DerivedSource):
        out: dict[str, Any] = {
            "kind": "derived",
            "formula": source.formula,
            "args": {k: _arg_value_to_json(v) for k, v in source.args.items()},
        }
        if source.unit is not None:
            out["unit"] = source.unit.value
        return out
    return {"kind": "tbd"}


def scenario_to_dict(scenario: Scenario) -> dict:
    """Document object for a scenario; field order is part of the format."""
    return {
        "schema_version": SCHEMA_VERSION,
        "name": scenario.name,
        "currency": scenario.currency,
        "parameters": {k: str(v) for k, v in scenario.parameters.items()},
        "line_items": [
            {
                "id": item.id,
                "label": item.label,
                "side": item.side.value,
                "provenance": item.provenance.value,
                "horizon_years": item.horizon_years,
                "source": _source_to_json(item.source),
            }
            for item in scenario.line_items
        ],
    }


def save_scenario(scenario: Scenario) -> str:
    """Serialize to document text; inverse of load_scenario."""
    return json.dumps(scenario_to_dict(scenario), indent=2) + "\n"


_DECIMAL_STRING_SCHEMA = {
    "oneOf": [
        {"type": "string", "pattern": r"^-?(0|[1-9][0-9]*)(\.[0-9]+)?$"},
        {"type": "integer"},
    ]
}

_ARG_VALUE_SCHEMA = {
    "oneOf": [
        _DECIMAL_STRING_SCHEMA,
        {
            "type": "object",
            "properties": {"param": {"type": "string"}},
            "required": ["param"],
            "additionalProperties": False,
        },
        {
            "type": "array",
            "items": {
                "oneOf": [
                    _DECIMAL_STRING_SCHEMA,
                    {
                        "type": "object",
                        "properties": {"param": {"type": "string"}},
                        "required": ["param"],
                        "additionalProperties": False,
                    },
                ]
            },
            "minItems": 1,
        },
    ]
}

# Published schema for the scenario document format (served at /api/v1/schema).
SCENARIO_JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Scenario document",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "currency": {"const": "USD"},
        "parameters": {
            "type": "object",
            "patternProperties": {r"^[A-Za-z_][A-Za-z0-9_]*$": _DECIMAL_STRING_SCHEMA},
            "additionalProperties": False,
        },
        "line_items": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string", "pattern": r"^[A-Za-z0-9_.-]+$"},
                    "label": {"type": "string"},
                    "side": {"enum": _SIDE_VALUES},
                    "provenance": {"enum": _PROVENANCE_VALUES},
                    "horizon_years": {"type": "integer", "minimum": 1},
                    "source": {
                        "oneOf": [
                            {
                                "type": "object",
                                "properties": {
                                    "kind": {"const": "literal"},
                                    "amount": _DECIMAL_STRING_SCHEMA,
                                    "unit": {
                                        "enum": [u for u in _UNIT_VALUES if u != "TBD"]
                                    },
                                },
                                "required": ["kind", "amount", "unit"],
                                "additionalProperties": False,
                            },
                            {
                                "type": "object",
                                "properties": {
                                    "kind": {"const": "derived"},
                                    "formula": {"type": "string"},
                                    "args": {
                                        "type": "object",
                                        "additionalProperties": _ARG_VALUE_SCHEMA,
                                    },
                                    "unit": {"enum": _UNIT_VALUES},
                                },
                                "required": ["kind", "formula"],
                                "additionalProperties": False,
                            },
                            {
                                "type": "object",
                                "properties": {"kind": {"const": "tbd"}},
                                "required": ["kind"],
                                "additionalProperties": False,
                            },
                        ]
                    },
                },
                "required": ["id", "label", "side", "provenance", "source"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["schema_version"],
    "additionalProperties": False,
}
