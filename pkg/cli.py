#!/usr/bin/env python3
"""
q-congruence toolkit CLI
Command-line interface for verifying q-series identities and partition congruences.
"""

import asyncio
import sys
from pathlib import Path
from typing import List, Optional

import click
from rich.console import Console
from rich.table import Table

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from qc_toolkit import __version__
from qc_toolkit.core import congruence, etaspec, oracle
from qc_toolkit.core.registry import Registry
from qc_toolkit.core.ring import ZZ, ModularRing
from qc_toolkit.core.runner import VerificationRunner
from qc_toolkit.core.qfactory import GeneratingFunctionId
from qc_toolkit.errors import QSeriesError
from qc_toolkit.models.schemas import (CheckReport, OutputFormat, ProgressionCongruence, Provenance, RunConfig,
                                       Suite, Verdict, VerificationRun)
from qc_toolkit.storage.file_storage import ReportStorage
from qc_toolkit.templates.reports import report_renderer
from qc_toolkit.utils.config import config
from qc_toolkit.utils.logger import Logger, get_logger

# Setup logger
logger = get_logger(__name__)

VERDICT_STYLE = {
    Verdict.VERIFIED: "green",
    Verdict.COUNTEREXAMPLE: "red",
    Verdict.ERROR: "bold red",
}


def parse_primes(text: Optional[str]) -> List[int]:
    """'5,7,11,13' -> [5, 7, 11, 13]."""
    if not text:
        return list(config.get('verification.theorems.primes', [5, 7, 11, 13]))
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ValueError(f"Cannot read primes from {text!r}; expected e.g. 5,7,11,13")


def fail(message: str) -> None:
    """Report an engine or usage error and exit with status 1."""
    click.echo(f"❌ {message}", err=True)
    sys.exit(1)


def report_table(reports: List[CheckReport], title: str) -> Table:
    table = Table(title=title, show_lines=False)
    table.add_column("id", overflow="fold")
    table.add_column("verdict")
    table.add_column("order", justify="right")
    table.add_column("instances", justify="right")
    table.add_column("ms", justify="right")
    for r in reports:
        label = f"{r.id} (open)" if r.conjectural else r.id
        table.add_row(label, f"[{VERDICT_STYLE[r.verdict]}]{r.verdict.value}[/]",
                      str(r.order), str(r.instances), str(r.millis))
    return table


def echo_report(report: CheckReport) -> None:
    click.echo(f"{report.id}: {report.verdict.value} (order {report.order}, {report.instances} instances)")
    click.echo(f"  {report.description}")
    if report.counterexample:
        ce = report.counterexample
        where = f" at q^{ce.exponent}" if ce.exponent is not None else ""
        expected = f", expected {ce.expected}" if ce.expected is not None else ""
        click.echo(f"  first failure: index {ce.index}{where}, value {ce.value}{expected}")
    for note in report.notes:
        click.echo(f"  - {note}")


@click.group()
@click.option('--config', '-c', 'config_path', help='Path to config file')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
def main(config_path: Optional[str], verbose: bool):
    """q-congruence toolkit - q-series identities and partition congruences"""
    if config_path:
        config.config_path = config_path
        config.load_config()
    if verbose:
        Logger.set_level('DEBUG')


@main.command()
@click.argument('suite', type=click.Choice([s.value for s in Suite]))
@click.option('--order', '-n', type=int, help='Truncation order for every check')
@click.option('--primes', help='Comma-separated primes for the theorem families')
@click.option('--alpha-max', type=int, default=None, help='Largest alpha in the theorem families')
@click.option('--json', 'json_path', help='Write the reports as a JSON array')
@click.option('--jobs', '-j', type=int, default=None, help='Checks run in parallel')
@click.option('--report', 'report_path', help='Write a markdown summary')
@click.option('--archive/--no-archive', default=False, help='Archive the run under storage.file.base_path')
def verify(suite: str, order: Optional[int], primes: Optional[str], alpha_max: Optional[int],
           json_path: Optional[str], jobs: Optional[int], report_path: Optional[str], archive: bool):
    """Run a verification suite; exit 0 pass, 2 only open claims fail, 1 otherwise"""
    try:
        run_config = RunConfig(
            command='verify',
            order=order,
            primes=parse_primes(primes),
            alpha_max=alpha_max or config.get_int('verification.theorems.alpha_max', 2),
            jobs=jobs or config.get_int('concurrent.max_workers', 4),
            output_format=OutputFormat.JSON if json_path else OutputFormat.TEXT,
            output_path=json_path,
            report_path=report_path,
        )
    except ValueError as e:
        fail(str(e))

    console = Console()

    def progress(report: CheckReport) -> None:
        if not report.passed:
            console.print(f"[{VERDICT_STYLE[report.verdict]}]✗ {report.id}: {report.verdict.value}[/]")

    async def _verify() -> VerificationRun:
        runner = VerificationRunner(Registry(run_config), jobs=run_config.jobs)
        run = await runner.run_suite(Suite(suite), progress)
        storage = ReportStorage()
        if json_path:
            await storage.write_reports(run.reports, json_path)
        if report_path:
            await storage.write_text(report_renderer.render_run(run), report_path)
        if archive:
            await storage.save_run(run)
        return run

    try:
        run = asyncio.run(_verify())
    except Exception as e:
        logger.error(f"Suite {suite} aborted: {e}")
        fail(f"Verification error: {e}")

    console.print(report_table(run.reports, f"suite: {suite}"))
    summary = run.summary()
    click.echo(f"📊 {summary['total']} checks: " + ", ".join(
        f"{summary[v.value]} {v.value}" for v in Verdict))
    sys.exit(run.exit_code())


@main.command()
@click.argument('spec')
@click.option('--order', '-n', type=int, default=None, help='Number of coefficients')
@click.option('--mod', 'modulus', type=int, default=None, help='Reduce coefficients mod M')
def expand(spec: str, order: Optional[int], modulus: Optional[int]):
    """Print n, coefficient pairs of a named series or eta quotient like "f3^3/(f1*f2)" """
    try:
        run_config = RunConfig(command='expand', order=order or config.get_int('cli.expand_order', 20),
                               modulus=modulus)
        ring = ModularRing(modulus) if modulus else ZZ
        label, series = etaspec.expand(spec, config.cap_order(run_config.order), ring)
    except (QSeriesError, ValueError) as e:
        fail(str(e))

    click.echo(f"# {label} to O(q^{series.order}){f' mod {modulus}' if modulus else ''}")
    for n, c in enumerate(series.coefficients()):
        click.echo(f"{n}\t{c}")


@main.command()
@click.argument('family')
@click.argument('A', type=int)
@click.argument('B', type=int)
@click.argument('m', type=int)
@click.option('--order', '-n', type=int, default=None, help='Scan exponents below this order')
def scan(family: str, a: int, b: int, m: int, order: Optional[int]):
    """Check coeff(A n + B) = 0 (mod m) on a generating function

    Exits 0 when the progression vanishes to the scanned order and 1 on a
    counterexample or an error; an ad-hoc claim is not an open conjecture,
    so the exit code 2 of verify does not apply.
    """
    try:
        if not 0 <= b < a:
            raise ValueError(f"Need 0 <= B < A, got A={a}, B={b}")
        claim = ProgressionCongruence(GeneratingFunctionId.parse(family).label, a, b, m, Provenance("ad hoc"))
        if order is None:
            order = congruence.default_order(
                claim,
                config.get_int('verification.scan.min_instances', 64),
                config.get_int('verification.scan.min_order', 50000))
        run_config = RunConfig(command='scan', order=order, modulus=m)
        report = congruence.scan(claim.family, a, b, m, config.cap_order(run_config.order))
    except (QSeriesError, ValueError) as e:
        fail(str(e))

    echo_report(report)
    sys.exit(VerificationRun(reports=[report]).exit_code())


@main.command('oracle')
@click.argument('family')
@click.option('--max', 'limit', type=int, default=None, help='Largest n to enumerate')
@click.option('--show', is_flag=True, help='Print the oracle table')
def oracle_command(family: str, limit: Optional[int], show: bool):
    """Cross-check a generating function against a combinatorial count"""
    try:
        gf_id = GeneratingFunctionId.parse(family)
        limit = limit if limit is not None else config.get_int('verification.oracle.tcore_limit', 40)
        if show:
            table = oracle.table_for(gf_id, limit)
            for n, value in enumerate(table.values):
                click.echo(f"{n}\t{value}")
        report = oracle.cross_validate(gf_id, limit)
    except (QSeriesError, ValueError) as e:
        fail(str(e))

    echo_report(report)
    sys.exit(VerificationRun(reports=[report]).exit_code())


@main.command()
def version():
    """Show version information"""
    click.echo(f"q-congruence toolkit v{__version__}")
    click.echo(f"Config: {config.config_path}")


if __name__ == '__main__':
    main()
