from typing import Annotated

import typer

from commands.dependencies import EXIT_FAILED, console, handleErrors
from scenarios.loader import loadScenario, resolveModel
from utilities.dynamic import DynamicModel, validate as validateModel
from utilities.exceptions import ScenarioValidationError

router = typer.Typer()

@router.command("validate")
def validate(
    scenario: Annotated[str, typer.Argument(help="Scenario file, or the name of a built-in scenario")],
    model: Annotated[str, typer.Argument(help="Dynamic model reference, e.g. D or D+")],
    as_json: Annotated[bool, typer.Option("--json", help="Print the report as JSON")] = False,
):
    """
    Print the C1/C2 report of a dynamic model. Exit code 1 if it lists a violation.
    """
    with handleErrors():
        loaded = loadScenario(scenario)
        resolved = resolveModel(loaded, model)
        if not isinstance(resolved, DynamicModel):
            raise ScenarioValidationError("Not a dynamic model", witness=model)
        report = validateModel(resolved)

    if as_json:
        typer.echo(report.model_dump_json(indent=2))
    elif report.ok:
        console.print(f"[green]{model} is a well-formed dynamic model[/green]")
    else:
        for violation in report.violations:
            console.print(f"[red]{violation}[/red]", highlight=False)
    if not report.ok:
        raise typer.Exit(EXIT_FAILED)
