from typing import Annotated

import typer
from rich.table import Table

from commands.dependencies import console, handleErrors
from scenarios.loader import checkRun, loadScenario, runChecks

router = typer.Typer()

@router.command("check")
def check(
    scenario: Annotated[str, typer.Argument(help="Scenario file, or the name of a built-in scenario")],
    as_json: Annotated[bool, typer.Option("--json", help="Print results as JSON")] = False,
    timings: Annotated[bool, typer.Option("--timings", help="Include elapsed time per check")] = False,
):
    """
    Run every check of a scenario. Exit code 1 if one fails.
    """
    with handleErrors():
        loaded = loadScenario(scenario)
        results, exit_code = runChecks(loaded)
    run = checkRun(loaded, results)

    if as_json:
        typer.echo(run.toJson(timings))
        raise typer.Exit(exit_code)

    table = Table(title=f"{run.scenario}: {run.passed}/{len(results)} passed")
    table.add_column("#", justify="right")
    table.add_column("model")
    table.add_column("world")
    table.add_column("check")
    table.add_column("expected")
    table.add_column("actual")
    table.add_column("")
    if timings:
        table.add_column("ms", justify="right")

    for r in results:
        row = [
            str(r.index),
            r.model,
            r.world or "(all)",
            r.formula or ("bisimilar" if " ~ " in r.model else "well-formed"),
            str(r.expected),
            "error" if r.actual is None else str(r.actual),
            "[green]pass[/green]" if r.passed else "[red]FAIL[/red]",
        ]
        if timings:
            row.append(f"{r.elapsed_ms:.2f}")
        table.add_row(*row)
    console.print(table)

    for r in results:
        if r.detail:
            console.print(f"[dim]#{r.index}: {r.detail}[/dim]", highlight=False)
    raise typer.Exit(exit_code)
