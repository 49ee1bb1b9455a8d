"""
CLI interface for Weakly Directed Walks.

Commands:
    wdw count    - Brute-force counts next to series coefficients for one class
    wdw gf       - Coefficients of a generating function
    wdw mu       - Certified bracket of the growth constant
    wdw moments  - Mean and variance constants of the number of irreducible factors
    wdw zeros    - Complex zeros of G_k and their distance to the boundary curve
    wdw sample   - Boltzmann sampling of weakly directed bridges
    wdw check    - Cross-check every series against the oracle

Exit codes: 0 success, 1 failed cross-check, 2 invalid input, 3 no convergence.
"""

from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from weakly_directed_walks import __version__

app = typer.Typer(
    name="wdw",
    help="Weakly Directed Walks - exact enumeration, certified asymptotics and sampling.",
    add_completion=False,
    rich_markup_mode="rich",
)

console = Console()
err_console = Console(stderr=True)

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_NO_CONVERGENCE = 3


@dataclass
class CliState:
    verbose: bool = False
    timestamp: bool = True


def _state(ctx: typer.Context) -> CliState:
    if isinstance(ctx.obj, CliState):
        return ctx.obj
    return CliState()


def _status(ctx: typer.Context) -> Optional[Callable[[str], None]]:
    """Progress callback for --verbose, printed dimmed on stderr."""
    if not _state(ctx).verbose:
        return None
    return lambda message: err_console.print(f"[dim]{message}[/dim]")


@contextmanager
def _handle_errors() -> Iterator[None]:
    """Map domain exceptions onto exit codes."""
    from weakly_directed_walks.analysis.asymptotics import ConvergenceError

    try:
        yield
    except ConvergenceError as e:
        err_console.print(f"[red]No convergence: {e}[/red]")
        raise typer.Exit(EXIT_NO_CONVERGENCE)
    except ValueError as e:
        err_console.print(f"[red]Invalid input: {e}[/red]")
        raise typer.Exit(EXIT_INVALID)


def _meta(ctx: typer.Context, command: str, **extra: object) -> dict[str, object]:
    from weakly_directed_walks.report.emitters import metadata

    return metadata(command, timestamp=_state(ctx).timestamp, **extra)


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"[bold blue]Weakly Directed Walks[/bold blue] v{__version__}")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    verbose: bool = typer.Option(False, "--verbose", help="Print progress messages"),
    no_timestamp: bool = typer.Option(
        False, "--no-timestamp", help="Leave the timestamp out of JSON output"
    ),
) -> None:
    """
    Weakly Directed Walks - generating functions of weakly directed walks.

    Series are exact; growth constants come as certified intervals.
    """
    ctx.obj = CliState(verbose=verbose, timestamp=not no_timestamp)
    if ctx.invoked_subcommand is None:
        console.print(ctx.get_help())
        raise typer.Exit()


def _counts_table(title: str, rows: list[dict[str, object]]) -> Table:
    table = Table(title=title)
    table.add_column("n", style="cyan", justify="right")
    table.add_column("Class", style="white")
    table.add_column("Series", justify="right")
    table.add_column("Oracle", justify="right")
    table.add_column("Match", justify="center")
    for row in rows:
        mark = "[green]yes[/green]" if row["match"] else "[bold red]NO[/bold red]"
        table.add_row(
            str(row["n"]), str(row["class"]), str(row["coefficient"]), str(row["oracle"]), mark
        )
    return table


@app.command()
def count(
    ctx: typer.Context,
    class_name: str = typer.Option("W", "--class", "-c", help="Count class (see 'wdw check')"),
    max_n: int = typer.Option(10, "--max-n", "-n", help="Largest walk length"),
    csv_path: Optional[Path] = typer.Option(None, "--csv", help="Write the table as CSV"),
    json_output: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
) -> None:
    """
    Count walks of one class by brute force.

    Every count is shown next to the series coefficient of the same length.
    """
    from weakly_directed_walks.oracle.cross_check import CountRow, get_count_class
    from weakly_directed_walks.oracle.enumerator import WalkEnumerator
    from weakly_directed_walks.report.emitters import counts_frame, to_csv, to_json, write_text

    with _handle_errors():
        count_class = get_count_class(class_name)
        enumerator = WalkEnumerator(on_status=_status(ctx))
        oracle = count_class.oracle_counts(enumerator, max_n)
        series = count_class.coefficients(max_n)
    rows = [
        CountRow(n, count_class.name, count_class.model, c, o).to_dict()
        for n, (c, o) in enumerate(zip(series, oracle))
    ]
    write_text(to_csv(counts_frame(rows)), csv_path)
    if json_output:
        typer.echo(to_json({"rows": rows}, _meta(ctx, "count", max_n=max_n)))
    else:
        console.print(_counts_table(f"{count_class.name}: {count_class.description}", rows))
    if any(not r["match"] for r in rows):
        raise typer.Exit(EXIT_MISMATCH)


@app.command()
def gf(
    ctx: typer.Context,
    series: str = typer.Option("W", "--series", "-s", help="Series name (W, Wbar, I, B, T, P, ...)"),
    order: Optional[int] = typer.Option(None, "--order", "-o", help="Truncation order"),
    model: Optional[str] = typer.Option(
        None, "--model", "-m", help="horizontal or diagonal (selects I/W variants)"
    ),
    json_output: bool = typer.Option(False, "--json", help="Print JSON"),
) -> None:
    """
    Print the coefficients of a generating function.
    """
    from weakly_directed_walks.config.settings import settings
    from weakly_directed_walks.lattice.models import Model
    from weakly_directed_walks.oracle.cross_check import get_count_class
    from weakly_directed_walks.report.emitters import to_json

    with _handle_errors():
        name = series
        if model is not None and Model(model) is Model.DIAGONAL and series in ("I", "W"):
            name = f"{series}_diag"
        order = settings.COEFFICIENT_ORDER if order is None else order
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        count_class = get_count_class(name)
        coefficients = count_class.coefficients(order)
    if json_output:
        payload = {
            "series": count_class.name,
            "model": count_class.model.value,
            "order": order,
            "coefficients": coefficients,
        }
        typer.echo(to_json(payload, _meta(ctx, "gf")))
    else:
        typer.echo(", ".join(str(c) for c in coefficients))


@app.command()
def mu(
    ctx: typer.Context,
    model: str = typer.Option("horizontal", "--model", "-m", help="horizontal or diagonal"),
    truncation: Optional[int] = typer.Option(
        None, "--truncation", "-t", help="Truncation order n (default: WDW_TRUNCATION or config)"
    ),
    json_output: bool = typer.Option(False, "--json", help="Print JSON"),
) -> None:
    """
    Certified interval for the growth constant mu = 1/rho.
    """
    from weakly_directed_walks.analysis.asymptotics import bracket_rho
    from weakly_directed_walks.config.settings import settings
    from weakly_directed_walks.lattice.models import Model
    from weakly_directed_walks.report.emitters import to_json

    with _handle_errors():
        chosen = Model(model)
        n = settings.TRUNCATION_ORDER if truncation is None else truncation
        rho = bracket_rho(chosen, n, on_status=_status(ctx))
        growth = rho.reciprocal()
    if json_output:
        payload = {"model": chosen.value, "truncation": n, "rho": rho.to_dict(), "mu": growth.to_dict()}
        typer.echo(to_json(payload, _meta(ctx, "mu")))
        return
    table = Table(show_header=False, box=None)
    table.add_column("Quantity", style="cyan")
    table.add_column("Interval", style="white")
    table.add_row("rho", str(rho))
    table.add_row("mu", str(growth))
    table.add_row("width(mu)", f"{float(growth.width):.3e}")
    console.print(Panel(table, title=f"[bold]{chosen.value} model, n = {n}[/bold]", border_style="blue"))


@app.command()
def moments(
    ctx: typer.Context,
    model: str = typer.Option("horizontal", "--model", "-m", help="horizontal or diagonal"),
    truncation: Optional[int] = typer.Option(None, "--truncation", "-t", help="Truncation order n"),
    json_output: bool = typer.Option(False, "--json", help="Print JSON"),
) -> None:
    """
    Mean and variance constants of the number of irreducible factors.
    """
    from weakly_directed_walks.analysis.asymptotics import factor_moments
    from weakly_directed_walks.config.settings import settings
    from weakly_directed_walks.lattice.models import Model
    from weakly_directed_walks.report.emitters import to_json

    with _handle_errors():
        chosen = Model(model)
        n = settings.TRUNCATION_ORDER if truncation is None else truncation
        result = factor_moments(chosen, n, on_status=_status(ctx))
    if json_output:
        payload = {"model": chosen.value, "truncation": n, **result.to_dict()}
        typer.echo(to_json(payload, _meta(ctx, "moments")))
        return
    table = Table(show_header=False, box=None)
    table.add_column("Quantity", style="cyan")
    table.add_column("Interval", style="white")
    table.add_row("rho", str(result.rho))
    table.add_row("m", str(result.mean))
    table.add_row("s^2", str(result.variance))
    console.print(Panel(table, title=f"[bold]{chosen.value} model, n = {n}[/bold]", border_style="blue"))


@app.command()
def zeros(
    ctx: typer.Context,
    k: int = typer.Option(20, "--k", "-k", help="Index of the denominator G_k"),
    family: str = typer.Option("horizontal-NES", "--family", "-f", help="Bridge family"),
    csv_path: Optional[Path] = typer.Option(
        None,
        "--csv",
        help="Write roots as CSV (k,re,im,residual); residual is |G_k| at the multi-precision root",
    ),
    svg_path: Optional[Path] = typer.Option(None, "--svg", help="Write the zero portrait as SVG"),
    json_output: bool = typer.Option(False, "--json", help="Print JSON"),
) -> None:
    """
    Complex zeros of G_k.

    For the horizontal family (k >= 5) the distance of the non-real zeros to
    the boundary curve is reported as well. Residuals are measured at the
    multi-precision roots; re and im are their double-precision roundings.
    """
    from weakly_directed_walks.analysis.zeros import (
        AberthSolver,
        boundary_curve,
        gk_roots,
        root_distance_report,
    )
    from weakly_directed_walks.lattice.models import HORIZONTAL_NES, BridgeFamily
    from weakly_directed_walks.report.emitters import to_csv, to_json, write_text, zeros_frame
    from weakly_directed_walks.report.svg import write_svg, zeros_svg

    with _handle_errors():
        chosen = BridgeFamily.parse(family)
        solver = AberthSolver(on_status=_status(ctx))
        roots = gk_roots(k, chosen, solver)
        report = None
        if chosen == HORIZONTAL_NES and k >= 5:
            report = root_distance_report(k, roots=roots)
    write_text(to_csv(zeros_frame(roots.rows())), csv_path)
    if svg_path is not None:
        write_svg(zeros_svg(roots, boundary_curve()), svg_path)
    if json_output:
        payload = {
            "k": k,
            "family": chosen.name,
            "degree": roots.degree,
            "residual": roots.residual,
            "roots": roots.rows(),
            "distance": report.to_dict() if report else None,
        }
        typer.echo(to_json(payload, _meta(ctx, "zeros")))
        return
    table = Table(show_header=False, box=None)
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="white")
    table.add_row("degree", str(roots.degree))
    table.add_row("non-real roots", str(len(roots.non_real())))
    table.add_row("worst residual", f"{roots.residual:.3e}")
    if report:
        table.add_row("max distance", f"{report.max_distance:.4f}")
        table.add_row("mean distance", f"{report.mean_distance:.4f}")
    console.print(Panel(table, title=f"[bold]Zeros of G_{k} ({chosen.name})[/bold]", border_style="blue"))


@app.command()
def sample(
    ctx: typer.Context,
    n: int = typer.Option(100, "--n", "-n", help="Target length"),
    epsilon: Optional[float] = typer.Option(None, "--epsilon", "-e", help="Relative length window"),
    seed: int = typer.Option(0, "--seed", help="Random seed"),
    count: int = typer.Option(1, "--count", "-c", help="Number of walks"),
    output_format: str = typer.Option("json", "--format", help="json or svg"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Output file"),
    truncation: Optional[int] = typer.Option(None, "--truncation", "-t", help="Truncation for tuning"),
    json_output: bool = typer.Option(False, "--json", help="Same as --format json"),
) -> None:
    """
    Sample weakly directed bridges with length near n.
    """
    from weakly_directed_walks.report.emitters import to_json, write_text
    from weakly_directed_walks.report.svg import to_string, walk_svg
    from weakly_directed_walks.sampler.boltzmann import BoltzmannSampler, tune

    with _handle_errors():
        if json_output:
            output_format = "json"
        if output_format not in ("json", "svg"):
            raise ValueError(f"format must be json or svg, got {output_format!r}")
        if count < 1:
            raise ValueError(f"count must be >= 1, got {count}")
        config = tune(n, epsilon=epsilon, seed=seed, order=truncation, on_status=_status(ctx))
        sampler = BoltzmannSampler(config, on_status=_status(ctx))
        samples = [sampler.sample_in_window() for _ in range(count)]

    if output_format == "svg":
        documents = [to_string(walk_svg(s.walk)) for s in samples]
        if output is None:
            for document in documents:
                typer.echo(document)
        elif len(documents) == 1:
            write_text(documents[0], output)
        else:
            for i, document in enumerate(documents, 1):
                write_text(document, output.with_name(f"{output.stem}-{i}{output.suffix}"))
        return

    records = [sampler.record(s).model_dump() for s in samples]
    meta = _meta(
        ctx,
        "sample",
        target_n=n,
        epsilon=config.epsilon,
        redraws=sampler.counters.redraws,
    )
    text = to_json({"samples": records}, meta)
    if output is None:
        typer.echo(text)
    else:
        write_text(text, output)


@app.command()
def check(
    ctx: typer.Context,
    max_n: int = typer.Option(12, "--max-n", "-n", help="Largest walk length"),
    classes: Optional[list[str]] = typer.Option(None, "--class", "-c", help="Restrict to classes"),
    skip_theorems: bool = typer.Option(
        False, "--skip-theorems", help="Only compare coefficients"
    ),
    csv_path: Optional[Path] = typer.Option(None, "--csv", help="Write the table as CSV"),
    json_output: bool = typer.Option(False, "--json", help="Print JSON"),
) -> None:
    """
    Cross-check every generating function against brute-force counts.

    Exits with code 1 if any coefficient or theorem check fails.
    """
    from weakly_directed_walks.oracle.cross_check import COUNT_CLASSES, CrossChecker
    from weakly_directed_walks.report.emitters import counts_frame, to_csv, to_json, write_text

    with _handle_errors():
        checker = CrossChecker(on_status=_status(ctx))
        result = checker.run(max_n, names=classes, theorems=not skip_theorems)
    rows = [r.to_dict() for r in result.rows]
    write_text(to_csv(counts_frame(rows)), csv_path)
    if json_output:
        payload = {
            "valid": result.valid,
            "rows": rows,
            "issues": [
                {"code": i.code, "severity": i.severity.value, "message": i.message}
                for i in result.issues
            ],
        }
        meta = _meta(ctx, "check", max_n=max_n, classes=classes or list(COUNT_CLASSES))
        typer.echo(to_json(payload, meta))
    else:
        table = Table(title=f"Series vs oracle, n <= {max_n}")
        table.add_column("Class", style="cyan")
        table.add_column("Model")
        table.add_column(f"a_{max_n}", justify="right")
        table.add_column("Mismatches", justify="right")
        for name in classes or list(COUNT_CLASSES):
            own = [r for r in rows if r["class"] == name]
            bad = sum(1 for r in own if not r["match"])
            table.add_row(
                name,
                str(own[-1]["model"]),
                str(own[-1]["coefficient"]),
                f"[bold red]{bad}[/bold red]" if bad else "[green]0[/green]",
            )
        console.print(table)
        for issue in result.issues:
            colour = "red" if issue.severity.value == "error" else "dim"
            console.print(f"[{colour}]{issue.code}: {issue.message}[/{colour}]")
        if result.valid:
            console.print(f"[bold green]All {len(rows)} coefficients match.[/bold green]")
    if not result.valid:
        raise typer.Exit(EXIT_MISMATCH)


if __name__ == "__main__":
    app()
