"""
Command-line entry point
"""
import sys
from fractions import Fraction
from functools import wraps
from typing import Optional, Tuple

import click
from loguru import logger
from pydantic import ValidationError

from polycensus.core.config import settings
from polycensus.core.exceptions import (
    BudgetExceededError,
    DimensionMismatchError,
    FieldError,
    InsufficientDataError,
    ParseError,
    PolyCensusError,
    UnknownFormulaError,
    UnknownPropertyError,
)
from polycensus.core.logging import setup_logging
from polycensus.models.enums import OutputFormat
from polycensus.schemas.run_config import RunConfig
from polycensus.services import reporting
from polycensus.services.analysis import analyzer
from polycensus.services.census import census_engine
from polycensus.services.formulas import LeadingExpansion, formula_catalog
from polycensus.services.verification import VerificationSuite, verification_suite
from polycensus.utils.parsing import load_input, parse_degrees, parse_field

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 3

USAGE_ERRORS = (
    FieldError,
    ParseError,
    DimensionMismatchError,
    UnknownPropertyError,
    UnknownFormulaError,
    InsufficientDataError,
)


def handle_errors(func):
    """Map library errors onto exit codes"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BudgetExceededError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_BUDGET)
        except USAGE_ERRORS as e:
            raise click.UsageError(str(e))
        except ValidationError as e:
            raise click.UsageError("; ".join(err["msg"] for err in e.errors()))
        except PolyCensusError as e:
            logger.exception(e)
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_FAILED)
    return wrapper


def dimension_options(func):
    """Shared dimension flags"""
    options = [
        click.option("--field", "field_text", default="2", show_default=True, help="Field size p or p^e"),
        click.option("--m", "m", type=int, help="Inputs / matrix size"),
        click.option("--n", "n", type=int, help="States / determinant degree / code length"),
        click.option("--N", "N", type=int, help="Number of components"),
        click.option("--deg", "deg", help="Comma separated degree list, e.g. 1,1"),
        click.option("--p", "p", type=int, help="Outputs"),
        click.option("--k", "k", type=int, help="Code dimension"),
        click.option("--s", "s", type=int, help="Code degree (state dimension)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def output_options(func):
    options = [
        click.option("--workers", type=int, default=None, help="Worker processes (default: logical cores)"),
        click.option("--out", "out", type=click.Path(dir_okay=False), help="Report file"),
        click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]),
                     default=settings.OUTPUT_FORMAT, show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run_config(subcommand: str, prop: str, options: dict, **extra) -> RunConfig:
    deg = options.pop("deg", None)
    values = {k: v for k, v in options.items() if v is not None}
    values.update({k: v for k, v in extra.items() if v is not None})
    return RunConfig(
        subcommand=subcommand,
        property=prop,
        field=values.pop("field_text"),
        degrees=parse_degrees(deg) if deg else None,
        format=values.pop("fmt", settings.OUTPUT_FORMAT),
        **values,
    )


@click.group()
@click.option("--log-level", default=None, help="Override LOG_LEVEL")
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
def cli(log_level: Optional[str]):
    """
    Exact polynomial-matrix algebra over finite fields and a census engine
    for counting and probability formulas.

    Census properties: scalar-coprime, reachable-pairs, observable-pairs,
    minimal-systems, right-prime-fractions, left-coprime, pairwise-coprime,
    mutual-coprime, parallel-reachable, noncatastrophic.
    """
    setup_logging(log_level)


@cli.command()
@click.option("--field", "fields_text", default="2,3", show_default=True, help="Comma separated fields to check over")
@handle_errors
def verify(fields_text: str):
    """Run every exact formula check and print a table"""
    specs = [parse_field(text.strip()) for text in fields_text.split(",") if text.strip()]
    suite = VerificationSuite(verification_suite.catalog, verification_suite.engine, fields=specs)
    checks = suite.run()
    click.echo(reporting.render_checks(checks), nl=False)
    failed = [c for c in checks if not c.passed]
    for check in failed:
        click.echo(f"FAILED {check.formula} at {check.parameters}", err=True)
    sys.exit(EXIT_FAILED if failed else EXIT_OK)


@cli.command()
@click.argument("property_name", metavar="PROPERTY")
@dimension_options
@output_options
@handle_errors
def census(property_name: str, workers, out, fmt, **dims):
    """Exhaustive census of PROPERTY"""
    config = _run_config("census", property_name, dict(dims, fmt=fmt), workers=workers, out=out)
    spec = parse_field(config.field)
    result = census_engine.exact_probability(config.property, spec, workers=config.workers, **config.dims())
    text = reporting.write_report([result], config.out, config.format)
    if not config.out:
        click.echo(text, nl=False)
    click.echo(reporting.summary_line(result), err=bool(not config.out))


@cli.command()
@click.argument("property_name", metavar="PROPERTY")
@dimension_options
@click.option("--trials", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=settings.DEFAULT_SEED, show_default=True)
@output_options
@handle_errors
def mc(property_name: str, trials: int, seed: int, workers, out, fmt, **dims):
    """Monte Carlo estimate of PROPERTY"""
    config = _run_config("mc", property_name, dict(dims, fmt=fmt), workers=workers, out=out,
                         trials=trials, seed=seed)
    spec = parse_field(config.field)
    estimate = census_engine.mc_estimate(
        config.property, config.trials, seed=config.seed, spec=spec, workers=config.workers, **config.dims()
    )
    text = reporting.write_report([estimate], config.out, config.format)
    if not config.out:
        click.echo(text, nl=False)
    click.echo(reporting.summary_line(estimate), err=bool(not config.out))


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def analyze(path: str):
    """Report canonical forms and structural properties of a JSON input file"""
    for line in analyzer.analyze(load_input(path)):
        click.echo(line)


@cli.command()
@click.argument("name", required=False)
@click.option("--field", "field_text", default="2", show_default=True)
@click.option("--m", type=int)
@click.option("--n", type=int)
@click.option("--N", "N", type=int)
@click.option("--p", type=int)
@click.option("--k", type=int)
@click.option("--j", type=int)
@click.option("--deg", help="Comma separated degrees")
@click.option("--kappa", multiple=True, help="Row degree profile, e.g. 1,0 (repeat per matrix)")
@click.option("--mutual", help="Mutual coprimeness probability for the parallel product, e.g. 1/2")
@handle_errors
def formula(name: Optional[str], field_text: str, deg, kappa, mutual, **dims):
    """Evaluate a catalog formula; without NAME, list the catalog"""
    if name is None:
        for key in formula_catalog.names():
            entry = formula_catalog.get(key)
            click.echo(f"{entry.name:<26} {entry.kind.value:<10} {entry.label:<24} ({', '.join(entry.params)})")
        return
    spec = parse_field(field_text)
    values = {k: v for k, v in dims.items() if v is not None}
    if deg:
        values["degrees"] = parse_degrees(deg)
    if kappa:
        values["kappa"] = tuple(parse_degrees(k) for k in kappa)
    if mutual:
        values["mutual"] = Fraction(mutual)
    value = formula_catalog.evaluate(name, spec, **values)
    if isinstance(value, LeadingExpansion):
        click.echo(f"{value} ~ {value.value(spec.t)}")
    else:
        click.echo(str(value))


@cli.command()
@click.argument("property_name", metavar="PROPERTY")
@click.option("--fields", "fields_text", default="2,3,5", show_default=True, help="Comma separated field sizes")
@dimension_options
@click.option("--trials", type=int, default=None, help="Sample instead of enumerating")
@click.option("--seed", type=int, default=settings.DEFAULT_SEED, show_default=True)
@click.option("--tolerance", type=float, default=None)
@click.option("--workers", type=int, default=None)
@handle_errors
def fit(property_name: str, fields_text: str, trials, seed, tolerance, workers, **dims):
    """Scaled defect (1 - P) q^k of PROPERTY across field sizes"""
    dims.pop("field_text", None)
    config = _run_config("fit", property_name, dict(dims, field_text=fields_text.split(",")[0]),
                         trials=trials, seed=seed, tolerance=tolerance, workers=workers)
    specs = [parse_field(text.strip()) for text in fields_text.split(",") if text.strip()]
    result = census_engine.asymptotic_coefficient_fit(
        config.property, specs, trials=config.trials, seed=config.seed,
        tolerance=config.tolerance, workers=config.workers, **config.dims()
    )
    click.echo(reporting.render_fit(result), nl=False)
    sys.exit(EXIT_OK if result.passed else EXIT_FAILED)


def main(argv: Optional[Tuple[str, ...]] = None):
    cli.main(args=argv, prog_name=settings.APP_NAME)


if __name__ == "__main__":
    main()
