"""Command line surface for the calculation engine."""

from __future__ import annotations

import csv
import json
import sys
from decimal import Decimal
from pathlib import Path

import click

from . import __version__
from .analysis import break_even, sweep, tornado
from .errors import CalcError, ParseError
from .ledger import compute_ledger
from .money import Unit, canonical_amount_str, group_thousands, parse_decimal
from .reports import REPORT_FORMATS, render_report, report_to_dict
from .samples import sample_scenario
from .scenario_io import load_scenario, save_scenario
from .subcalc.cpi import (
    comparison_csv,
    compare_indices,
    fixed_weight_series,
    load_series_csv,
    weighted_inflation,
)
from .subcalc.edweek import EdweekInput, edweek_cost
from .subcalc.hai import (
    ApicInput,
    BedSize,
    HospitalProfile,
    InfectionEntry,
    InfectionType,
    apic_estimated_cost,
    apic_potential_savings,
    tmit_report,
)

DEFAULT_STORE = "./scenarios"


def _load_file(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise click.ClickException(f"cannot read {path}: {exc}") from exc
    return load_scenario(text)


def _decimal_arg(text: str, name: str) -> Decimal:
    try:
        return parse_decimal(text)
    except ParseError as exc:
        raise click.ClickException(f"{name}: {exc}") from exc


def _dollars(amount: Decimal) -> str:
    return "$" + group_thousands(canonical_amount_str(amount, Unit.USD))


@click.group()
@click.version_option(version=__version__, prog_name="impactcalc")
def main() -> None:
    """Deterministic multi-unit cost/benefit calculations."""


def _run(fn):
    try:
        fn()
    except CalcError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command("eval")
@click.argument("scenario_file", type=click.Path())
def eval_command(scenario_file: str) -> None:
    """Evaluate a scenario document and print the results as JSON."""

    def go():
        scenario = _load_file(scenario_file)
        report = compute_ledger(scenario)
        payload = {**report_to_dict(report), "engine_version": __version__}
        click.echo(json.dumps(payload, indent=2))

    _run(go)


@main.command("report")
@click.argument("scenario_file", type=click.Path())
@click.option(
    "--format", "fmt", type=click.Choice(REPORT_FORMATS), default="text",
    show_default=True, help="Output format.",
)
def report_command(scenario_file: str, fmt: str) -> None:
    """Render a ledger report for a scenario document."""

    def go():
        scenario = _load_file(scenario_file)
        report = compute_ledger(scenario)
        click.echo(render_report(report, fmt), nl=False)

    _run(go)


@main.command("sweep")
@click.argument("scenario_file", type=click.Path())
@click.option("--param", "param_path", required=True, help="Parameter to vary.")
@click.option(
    "--values", "values_text", required=True,
    help="Comma-separated parameter values, e.g. 0.001,0.005,0.01",
)
def sweep_command(scenario_file: str, param_path: str, values_text: str) -> None:
    """Recompute the USD net across parameter values; CSV on stdout."""

    def go():
        scenario = _load_file(scenario_file)
        values = [
            _decimal_arg(chunk.strip(), "--values")
            for chunk in values_text.split(",")
            if chunk.strip()
        ]
        result = sweep(scenario, param_path, values)
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["param_value", "usd_net"])
        for point in result.points:
            writer.writerow(
                [str(point.param_value), canonical_amount_str(point.usd_net, Unit.USD)]
            )

    _run(go)


@main.command("breakeven")
@click.argument("scenario_file", type=click.Path())
@click.option("--param", "param_path", required=True, help="Parameter to solve for.")
@click.option("--lo", required=True, help="Lower bracket bound.")
@click.option("--hi", required=True, help="Upper bracket bound.")
@click.option(
    "--tol", default="1", show_default=True,
    help="Acceptable |USD net| at the root.",
)
def breakeven_command(
    scenario_file: str, param_path: str, lo: str, hi: str, tol: str
) -> None:
    """Find the parameter value where the USD net crosses zero."""

    def go():
        scenario = _load_file(scenario_file)
        value = break_even(
            scenario,
            param_path,
            _decimal_arg(lo, "--lo"),
            _decimal_arg(hi, "--hi"),
            _decimal_arg(tol, "--tol"),
        )
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["param_path", "value"])
        writer.writerow([param_path, str(value)])

    _run(go)


@main.command("tornado")
@click.argument("scenario_file", type=click.Path())
@click.option(
    "--param", "param_paths", required=True, multiple=True,
    help="Parameter to perturb; repeatable.",
)
@click.option(
    "--delta", default="0.1", show_default=True,
    help="Relative perturbation applied to each parameter.",
)
def tornado_command(scenario_file: str, param_paths: tuple[str, ...], delta: str) -> None:
    """Rank parameters by USD net span under a relative perturbation."""

    def go():
        scenario = _load_file(scenario_file)
        entries = tornado(scenario, list(param_paths), _decimal_arg(delta, "--delta"))
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["param_path", "net_low", "net_high", "span"])
        for e in entries:
            writer.writerow(
                [
                    e.param_path,
                    canonical_amount_str(e.net_low, Unit.USD),
                    canonical_amount_str(e.net_high, Unit.USD),
                    canonical_amount_str(e.span, Unit.USD),
                ]
            )

    _run(go)


@main.command("sample")
def sample_command() -> None:
    """Print the bundled US value-creation scenario document."""
    click.echo(save_scenario(sample_scenario()), nl=False)


@main.group("subcalc")
def subcalc_group() -> None:
    """Stand-alone sub-calculators."""


@subcalc_group.command("apic")
@click.option("--incidence", required=True, help="Infections per 1,000 patient days.")
@click.option("--cost-low", required=True, help="Low cost per infection, USD.")
@click.option("--cost-high", required=True, help="High cost per infection, USD.")
@click.option(
    "--reduction", default=None,
    help="Preventable fraction (0..1); adds a savings line when given.",
)
def apic_command(incidence: str, cost_low: str, cost_high: str, reduction: str | None):
    """Annual infection cost per 1,000 patient days, with optional savings."""

    def go():
        frac = _decimal_arg(reduction, "--reduction") if reduction is not None else Decimal(1)
        inputs = ApicInput(
            incidence_per_1000_patient_days=_decimal_arg(incidence, "--incidence"),
            cost_low=_decimal_arg(cost_low, "--cost-low"),
            cost_high=_decimal_arg(cost_high, "--cost-high"),
            reduction_fraction=frac,
        )
        est = apic_estimated_cost(inputs)
        click.echo(f"Estimated annual cost: {_dollars(est[0])} to {_dollars(est[1])}")
        if reduction is not None:
            savings = apic_potential_savings(est, inputs.reduction_fraction)
            click.echo(
                f"Potential savings at {reduction}: "
                f"{_dollars(savings[0])} to {_dollars(savings[1])}"
            )

    _run(go)


def _read_json_file(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise click.ClickException(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"{path}: invalid JSON: {exc.msg}") from exc


@subcalc_group.command("tmit")
@click.option("--profile", "profile_file", required=True, type=click.Path())
@click.option("--entries", "entries_file", required=True, type=click.Path())
def tmit_command(profile_file: str, entries_file: str) -> None:
    """Hospital infection cost table from a profile and per-infection entries."""

    def go():
        prof_raw = _read_json_file(profile_file)
        profile = HospitalProfile(
            bed_size_category=BedSize(prof_raw["bed_size"]),
            region=prof_raw["region"],
            teaching=bool(prof_raw["teaching"]),
            annual_medical_admissions=int(prof_raw.get("annual_medical_admissions", 0)),
            annual_surgical_admissions=int(prof_raw.get("annual_surgical_admissions", 0)),
            ventilator_patients=int(prof_raw.get("ventilator_patients", 0)),
            urinary_catheter_patients=int(prof_raw.get("urinary_catheter_patients", 0)),
            central_line_patients=int(prof_raw.get("central_line_patients", 0)),
        )
        entries = [
            InfectionEntry(
                infection_type=InfectionType(e["infection_type"]),
                infections_per_year=parse_decimal(e["infections_per_year"]),
                excess_cost_per_infection=parse_decimal(e["excess_cost_per_infection"]),
                excess_los_days_per_infection=parse_decimal(
                    e["excess_los_days_per_infection"]
                ),
            )
            for e in _read_json_file(entries_file)
        ]
        result = tmit_report(profile, entries)
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["infection_type", "infections_per_year", "annual_cost", "excess_los_days"]
        )
        for line in result.lines:
            writer.writerow(
                [
                    line.infection_type.value,
                    str(line.infections_per_year),
                    canonical_amount_str(line.annual_cost, Unit.USD),
                    str(line.excess_los_days),
                ]
            )
        writer.writerow(
            [
                "total",
                "",
                canonical_amount_str(result.total_annual_cost, Unit.USD),
                str(result.total_excess_los_days),
            ]
        )

    _run(go)


@subcalc_group.command("edweek")
@click.option("--input", "input_file", required=True, type=click.Path())
def edweek_command(input_file: str) -> None:
    """District reopening cost breakdown from a JSON input file."""

    def go():
        raw = _read_json_file(input_file)
        decimal_fields = {
            k: parse_decimal(v) for k, v in raw.items() if k != "state"
        }
        inputs = EdweekInput(state=raw.get("state", ""), **decimal_fields)
        result = edweek_cost(inputs)
        rows = [
            ("internet_access", result.internet),
            ("additional_meals", result.meals),
            ("extended_school_year", result.extended_year),
            ("total_increased_cost", result.total_increased_cost),
            ("revenue_loss_year_1", result.revenue_loss_y1),
            ("revenue_loss_year_2", result.revenue_loss_y2),
            ("total_revenue_loss", result.total_revenue_loss),
        ]
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["line", "usd"])
        for name, amount in rows:
            writer.writerow([name, canonical_amount_str(amount, Unit.USD)])

    _run(go)


@subcalc_group.command("cpi")
@click.option("--weights", "weights_file", required=True, type=click.Path())
@click.option("--inflation", "inflation_file", required=True, type=click.Path())
@click.option("--month", default=None, help="Limit output to one month.")
@click.option(
    "--base-month", default=None,
    help="Emit a comparison against weights frozen at this month.",
)
def cpi_command(
    weights_file: str, inflation_file: str, month: str | None, base_month: str | None
) -> None:
    """Weighted 12-month inflation from weight and rate tables (CSV in/out)."""

    def go():
        try:
            weights_text = Path(weights_file).read_text()
            inflation_text = Path(inflation_file).read_text()
        except OSError as exc:
            raise click.ClickException(str(exc)) from exc
        series = load_series_csv(weights_text, inflation_text)
        if base_month is not None:
            official = fixed_weight_series(series, base_month)
            pairs = compare_indices(official, series)
            click.echo(comparison_csv(pairs), nl=False)
            return
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["month", "weighted_inflation"])
        months = [month] if month is not None else list(series.months)
        for m in months:
            writer.writerow([m, str(weighted_inflation(series, m))])

    _run(go)


@main.command("serve")
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--store", "store_dir", envvar="IMPACTCALC_STORE", default=DEFAULT_STORE,
    show_default=True, help="Scenario store directory (env: IMPACTCALC_STORE).",
)
@click.option(
    "--frontend", "frontend_dir", default=None, type=click.Path(),
    help="Directory of static UI files to serve at /.",
)
def serve_command(port: int, host: str, store_dir: str, frontend_dir: str | None):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app
    from .store import ScenarioStore

    app = create_app(ScenarioStore(store_dir), frontend_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
