"""HTTP API exposing evaluation, analysis, and scenario storage.

Request bodies are handled as plain JSON objects rather than typed
models so decimal strings reach the engine untouched; any bare JSON
float is rejected at parse time instead of being silently coerced.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .analysis import break_even, sweep, tornado
from .errors import CalcError, ParseError, RevisionConflict, ScenarioNotFound
from .ledger import compute_ledger
from .money import Unit, canonical_amount_str, parse_decimal
from .reports import report_to_dict
from .samples import sample_scenario
from .scenario_io import SCENARIO_JSON_SCHEMA, scenario_from_dict, scenario_to_dict
from .store import ScenarioStore

ENGINE_VERSION = __version__

_DEFAULTS_PATH = Path(__file__).parent / "data" / "defaults.json"


def _payload(body: dict) -> JSONResponse:
    return JSONResponse({**body, "engine_version": ENGINE_VERSION})


def _error_response(status: int, exc: Exception) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={
            "error": {"type": type(exc).__name__, "message": str(exc)},
            "engine_version": ENGINE_VERSION,
        },
    )


async def _json_body(request: Request) -> dict:
    try:
        body = json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise ParseError(f"request body is not valid JSON: {exc.msg}") from exc
    if not isinstance(body, dict):
        raise ParseError("request body must be a JSON object")
    return body


def _field(body: dict, name: str) -> Any:
    if name not in body:
        raise ParseError(f"request body requires field {name!r}")
    return body[name]


def _usd(amount) -> str:
    return canonical_amount_str(amount, Unit.USD)


def create_app(
    store: ScenarioStore, frontend_dir: str | Path | None = None
) -> FastAPI:
    app = FastAPI(title="impactcalc", version=ENGINE_VERSION)

    @app.middleware("http")
    async def add_engine_version_header(request: Request, call_next):
        response = await call_next(request)
        response.headers["X-Engine-Version"] = ENGINE_VERSION
        return response

    @app.exception_handler(CalcError)
    async def calc_error_handler(request: Request, exc: CalcError):
        if isinstance(exc, ScenarioNotFound):
            return _error_response(404, exc)
        if isinstance(exc, RevisionConflict):
            return _error_response(409, exc)
        return _error_response(400, exc)

    @app.post("/api/v1/evaluate")
    async def evaluate(request: Request):
        scenario = scenario_from_dict(await _json_body(request))
        report = compute_ledger(scenario)
        return _payload(report_to_dict(report))

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request):
        body = await _json_body(request)
        scenario = scenario_from_dict(_field(body, "scenario"))
        param_path = _field(body, "param_path")
        values_node = _field(body, "values")
        if not isinstance(values_node, list):
            raise ParseError("'values' must be an array of decimal strings")
        values = [
            parse_decimal(v, path=f"$.values[{i}]") for i, v in enumerate(values_node)
        ]
        result = sweep(scenario, param_path, values)
        return _payload(
            {
                "param_path": result.param_path,
                "points": [
                    {"param_value": str(p.param_value), "usd_net": _usd(p.usd_net)}
                    for p in result.points
                ],
            }
        )

    @app.post("/api/v1/breakeven")
    async def breakeven_endpoint(request: Request):
        body = await _json_body(request)
        scenario = scenario_from_dict(_field(body, "scenario"))
        param_path = _field(body, "param_path")
        lo = parse_decimal(_field(body, "lo"), path="$.lo")
        hi = parse_decimal(_field(body, "hi"), path="$.hi")
        tol = parse_decimal(_field(body, "tol"), path="$.tol")
        value = break_even(scenario, param_path, lo, hi, tol)
        return _payload({"param_path": param_path, "value": str(value)})

    @app.post("/api/v1/tornado")
    async def tornado_endpoint(request: Request):
        body = await _json_body(request)
        scenario = scenario_from_dict(_field(body, "scenario"))
        param_paths = _field(body, "param_paths")
        if not isinstance(param_paths, list) or not all(
            isinstance(p, str) for p in param_paths
        ):
            raise ParseError("'param_paths' must be an array of parameter names")
        delta = parse_decimal(_field(body, "relative_delta"), path="$.relative_delta")
        entries = tornado(scenario, param_paths, delta)
        return _payload(
            {
                "relative_delta": str(delta),
                "entries": [
                    {
                        "param_path": e.param_path,
                        "net_low": _usd(e.net_low),
                        "net_high": _usd(e.net_high),
                        "span": _usd(e.span),
                    }
                    for e in entries
                ],
            }
        )

    @app.get("/api/v1/scenarios/{scenario_id}")
    async def get_scenario(scenario_id: str):
        stored = store.get(scenario_id)
        return _payload(
            {
                "scenario_id": stored.scenario_id,
                "revision": stored.revision,
                "scenario": stored.document,
            }
        )

    @app.put("/api/v1/scenarios/{scenario_id}")
    async def put_scenario(scenario_id: str, request: Request):
        body = await _json_body(request)
        document = _field(body, "scenario")
        expected = body.get("expected_revision")
        if expected is not None and (
            isinstance(expected, bool) or not isinstance(expected, int)
        ):
            raise ParseError("'expected_revision' must be an integer when present")
        scenario = scenario_from_dict(document)
        stored = store.put(scenario_id, scenario_to_dict(scenario), expected)
        return _payload(
            {"scenario_id": stored.scenario_id, "revision": stored.revision}
        )

    @app.get("/api/v1/scenarios")
    async def list_scenarios():
        return _payload({"scenario_ids": store.list_ids()})

    @app.get("/api/v1/defaults")
    async def defaults():
        subcalc_defaults = json.loads(_DEFAULTS_PATH.read_text())
        return _payload(
            {
                "scenario": scenario_to_dict(sample_scenario()),
                "subcalc": subcalc_defaults,
            }
        )

    @app.get("/api/v1/schema")
    async def schema():
        return _payload({"schema": SCENARIO_JSON_SCHEMA})

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="ui")

    return app
