"""
hopfcyclic CLI Tool
"""

import logging
import time
from pathlib import Path
from typing import Callable, Optional

import typer
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from . import __version__
from .config import EngineConfig
from .duality import PAIRINGS, connes_hat, pairing_check, tau_compare
from .exceptions import (
    ConfigurationError,
    DimensionGuard,
    HopfCyclicError,
    KindMismatch,
    MissingInverse,
    ParseError,
    PrerequisiteMissing,
    SingularMap,
)
from .families import build_family, family_spec
from .fixtures import BUILTINS, builtin
from .functors import compare_with_formulas, realize
from .hopfdata import HopfAlgebroidPresentation, antipode_order, validate, validate_coefficient, validate_datum
from .models import CheckRecord, Report
from .paracyc import ParaComplex, check_laws, is_strictly_cyclic, t_order_probe
from .serializer import load_presentation, read_complex, save_complex, shipped_files, write_document

app = typer.Typer(
    name="hcyc",
    help="Para-(co)cyclic modules of Hopf algebroids, checked exactly",
    context_settings={"help_option_names": ["-h", "--help"]},
)
dualize_app = typer.Typer(help="Connes duality, the tau comparison and pairings")
app.add_typer(dualize_app, name="dualize")

console = Console()


def _create_config(debug: bool = False, output_format: Optional[str] = None) -> EngineConfig:
    """Environment configuration with command line overrides"""
    config = EngineConfig.from_env()
    if output_format:
        config.output_format = output_format
    config.debug = config.debug or debug
    if config.debug:
        config.log_level = "DEBUG"
    try:
        config.validate_limits()
    except ValueError as e:
        console.print(f"[red]Configuration error: {ConfigurationError(str(e))}[/red]")
        raise typer.Exit(1)
    logging.basicConfig(level=getattr(logging, config.log_level.upper(), logging.INFO))
    return config


def _execute(title: str, job: Callable[[], Report], debug: bool) -> Report:
    """Run ``job`` under a spinner; errors are printed and turned into exit status 1."""
    try:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
            transient=True,
        ) as progress:
            progress.add_task(title, total=None)
            return job()
    except ParseError as e:
        console.print(f"[red]Parse error: {e}[/red]")
    except KindMismatch as e:
        console.print(f"[red]Kind mismatch: {e}[/red]")
    except PrerequisiteMissing as e:
        console.print(f"[red]Missing prerequisite: {e}[/red]")
    except MissingInverse as e:
        console.print(f"[red]Missing inverse: {e}[/red]")
    except SingularMap as e:
        console.print(f"[red]Singular map: {e}[/red]")
    except DimensionGuard as e:
        console.print(f"[red]Dimension guard: {e}[/red]")
    except ConfigurationError as e:
        console.print(f"[red]Configuration error: {e}[/red]")
    except HopfCyclicError as e:
        console.print(f"[red]Error: {e}[/red]")
    except Exception as e:
        console.print(f"[red]Unknown error: {e}[/red]")
    if debug:
        console.print_exception()
    raise typer.Exit(1)


def _finish(report: Report, config: EngineConfig, report_path: Optional[Path], verbose: bool = False) -> None:
    """Print the report, write it on request, and exit 1 on any failed check."""
    _show_report(report, verbose)
    if report_path:
        fmt = "yaml" if report_path.suffix.lower() in (".yaml", ".yml") else config.output_format
        write_document(report.model_dump(mode="json", exclude_none=True), report_path, fmt)
        console.print(f"Report: {report_path}")
    if not report.ok:
        raise typer.Exit(1)


def _show_report(report: Report, verbose: bool) -> None:
    rows = report.checks if verbose else report.failures()
    if rows:
        table = Table(title="Failed checks" if not verbose else "Checks")
        table.add_column("Check", style="cyan")
        table.add_column("Degree", style="magenta")
        table.add_column("Result")
        table.add_column("Witness", style="yellow")
        for record in rows:
            table.add_row(record.name, "" if record.degree is None else str(record.degree),
                          "[green]pass[/green]" if record.passed else "[red]FAIL[/red]",
                          record.witness or record.detail or "")
        console.print(table)
    summary = report.summary
    colour = "green" if report.ok else "red"
    mark = "✓" if report.ok else "✗"
    console.print(f"[{colour}]{mark} {summary.passed}/{summary.total} checks passed[/{colour}]"
                  f" ({report.timing_seconds:.2f}s)")
    for key, value in report.metadata.items():
        console.print(f"{key}: {value}")


def _complex_report(command: str, c: ParaComplex, config: EngineConfig) -> Report:
    report = Report(command=command, metadata={"provenance": c.provenance, "dims": c.dims})
    report.extend(check_laws(c))
    orders = t_order_probe(c, config.order_cap)
    report.metadata["t_orders"] = {str(n): k for n, k in orders.items()}
    report.metadata["strictly_cyclic"] = is_strictly_cyclic(c)
    return report


def _timed(job: Callable[[], Report]) -> Callable[[], Report]:
    def run() -> Report:
        start = time.perf_counter()
        report = job()
        report.timing_seconds = report.timing_seconds or time.perf_counter() - start
        return report
    return run


# Commands


@app.command("validate")
def validate_command(
    input_file: str = typer.Argument(..., help="Presentation file or builtin:<name>"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write the report (JSON or YAML)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="List every check"),
    debug: bool = typer.Option(False, "--debug", help="Debug mode"),
):
    """Check every axiom of a presentation and of the data it declares"""
    config = _create_config(debug)

    def job() -> Report:
        loaded = load_presentation(input_file)
        H = loaded.presentation
        report = Report(command=f"validate {input_file}", metadata={"presentation": H.name})
        report.extend(validate(H))
        for name, datum in loaded.datums.items():
            report.extend(validate_datum(datum, H), prefix=name)
        for name, coefficient in loaded.coefficients.items():
            report.extend(validate_coefficient(coefficient, H), prefix=name)
        if isinstance(H, HopfAlgebroidPresentation) and H.is_hopf_algebra:
            report.metadata["antipode_order"] = antipode_order(H)
        return report

    _finish(_execute("Validating...", _timed(job), config.debug), config, report_path, verbose)


@app.command("build")
def build_command(
    input_file: str = typer.Argument(..., help="Presentation file or builtin:<name>"),
    family: str = typer.Option(..., "--family", help="Family A1..A8 or B1..B8"),
    datum: Optional[str] = typer.Option(None, "--datum", help="Declared datum or construction"),
    coeff: Optional[str] = typer.Option(None, "--coeff", help="Declared coefficient or construction"),
    degree: Optional[int] = typer.Option(None, "--degree", help="Top degree N"),
    dump: Optional[Path] = typer.Option(None, "--dump", help="Write the operator matrices"),
    generic: bool = typer.Option(False, "--generic", help="Also compare with the functor tower"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write the report (JSON or YAML)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="List every check"),
    debug: bool = typer.Option(False, "--debug", help="Debug mode"),
):
    """Build a family's complex and check its relations"""
    config = _create_config(debug)
    top = config.max_degree if degree is None else degree

    def job() -> Report:
        loaded = load_presentation(input_file)
        spec = family_spec(family)
        d = loaded.datum(datum, spec.datum_kind)
        c = loaded.coefficient(coeff, spec.coefficient_kind)
        complex_ = build_family(family, loaded.presentation, d, c, top, config)
        report = _complex_report(f"build {input_file} --family {family} --degree {top}", complex_, config)
        if generic:
            real = realize(family, loaded.presentation, d, c, config)
            report.extend(compare_with_formulas(real, complex_), prefix="functor tower")
        if dump:
            save_complex(complex_, dump, config.output_format)
            report.metadata["dump"] = str(dump)
        return report

    _finish(_execute(f"Building {family}...", _timed(job), config.debug), config, report_path, verbose)


@app.command("check")
def check_command(
    dumped: Path = typer.Argument(..., help="Dumped complex"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write the report (JSON or YAML)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="List every check"),
    debug: bool = typer.Option(False, "--debug", help="Debug mode"),
):
    """Re-check the relations of a dumped complex"""
    config = _create_config(debug)

    def job() -> Report:
        return _complex_report(f"check {dumped}", read_complex(dumped), config)

    _finish(_execute("Checking...", _timed(job), config.debug), config, report_path, verbose)


@dualize_app.command("hat")
def hat_command(
    dumped: Path = typer.Argument(..., help="Dumped complex with invertible cyclic operators"),
    dump: Optional[Path] = typer.Option(None, "--dump", help="Write the dual complex"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write the report (JSON or YAML)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="List every check"),
    debug: bool = typer.Option(False, "--debug", help="Debug mode"),
):
    """Connes dual of a dumped complex"""
    config = _create_config(debug)

    def job() -> Report:
        c = read_complex(dumped)
        dual = connes_hat(c)
        report = _complex_report(f"dualize hat {dumped}", dual, config)
        report.add(CheckRecord(name="dual of dual is the input", passed=connes_hat(dual).equals(c)))
        if dump:
            save_complex(dual, dump, config.output_format)
            report.metadata["dump"] = str(dump)
        return report

    _finish(_execute("Dualizing...", _timed(job), config.debug), config, report_path, verbose)


@dualize_app.command("tau")
def tau_command(
    input_file: str = typer.Argument(..., help="Presentation file or builtin:<name>"),
    family: str = typer.Option("A1", "--family", help="Family A1..A8 or B1..B8"),
    datum: Optional[str] = typer.Option(None, "--datum", help="Declared datum or construction"),
    coeff: Optional[str] = typer.Option(None, "--coeff", help="Declared coefficient or construction"),
    degree: int = typer.Option(2, "--degree", help="Top degree N"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write the report (JSON or YAML)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="List every check"),
    debug: bool = typer.Option(False, "--debug", help="Debug mode"),
):
    """Compare the lifted triangle with the dual complex through tau"""
    config = _create_config(debug)

    def job() -> Report:
        loaded = load_presentation(input_file)
        spec = family_spec(family)
        d = loaded.datum(datum, spec.datum_kind)
        c = loaded.coefficient(coeff, spec.coefficient_kind)
        return tau_compare(family, loaded.presentation, d, c, degree, config)

    _finish(_execute(f"Comparing {family} through tau...", job, config.debug), config, report_path, verbose)


@dualize_app.command("pairing")
def pairing_command(
    name: str = typer.Argument(..., help=f"Pairing: {', '.join(PAIRINGS)}"),
    input_file: str = typer.Argument(..., help="Presentation file or builtin:<name>"),
    datum: Optional[str] = typer.Option(None, "--datum", help="Declared datum or construction"),
    coeff: Optional[str] = typer.Option(None, "--coeff", help="Declared coefficient or construction"),
    degree: int = typer.Option(2, "--degree", help="Top degree N"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Write the report (JSON or YAML)"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="List every check"),
    debug: bool = typer.Option(False, "--debug", help="Debug mode"),
):
    """Check that the dual of a family is isomorphic to its partner"""
    config = _create_config(debug)

    def job() -> Report:
        if name not in PAIRINGS:
            raise KindMismatch(f"Unknown pairing: {name}", expected=", ".join(PAIRINGS), actual=name)
        loaded = load_presentation(input_file)
        spec = family_spec(PAIRINGS[name].source)
        d = loaded.datum(datum, spec.datum_kind)
        c = loaded.coefficient(coeff, spec.coefficient_kind)
        return pairing_check(name, loaded.presentation, d, c, degree, config)

    _finish(_execute(f"Checking pairing {name}...", job, config.debug), config, report_path, verbose)


@app.command("fixtures")
def fixtures_command():
    """List the shipped presentations"""
    table = Table(title="Shipped Presentations")
    table.add_column("Reference", style="cyan")
    table.add_column("Name", style="magenta")
    table.add_column("Dimension", style="green")
    table.add_column("Field")
    table.add_column("Base")
    for key in BUILTINS:
        H = builtin(key)
        base = "k" if H.is_hopf_algebra else H.left.base.name
        table.add_row(f"builtin:{key}", H.name, str(H.space.dim), H.field.describe(), base)
    for path in shipped_files():
        H = load_presentation(f"data:{path.stem}").presentation
        base = "k" if H.left.base.is_ground else H.left.base.name
        table.add_row(f"data:{path.stem}", H.name, str(H.space.dim), H.field.describe(), base)
    console.print(table)


@app.command("version")
def version():
    """Show version information"""
    console.print(f"hopfcyclic v{__version__}")


def main():
    """Main function"""
    app()


if __name__ == "__main__":
    main()
