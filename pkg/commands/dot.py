from pathlib import Path
from typing import Annotated, Optional

import typer

from commands.dependencies import console, handleErrors
from scenarios.loader import loadScenario, resolveModel
from utilities.dot import actionDot, dynamicDot, epistemicDot, writeDot
from utilities.dynamic import DynamicModel

router = typer.Typer()

@router.command("dot")
def dot(
    scenario: Annotated[str, typer.Argument(help="Scenario file, or the name of a built-in scenario")],
    model: Annotated[str, typer.Argument(help="Model reference: a model or action model name, M^A, D+, ...")],
    output: Annotated[Optional[Path], typer.Option("-o", "--output", help="File to write. Prints to stdout if omitted.")] = None,
):
    """
    Export a model as GraphViz DOT.
    """
    with handleErrors():
        loaded = loadScenario(scenario)
        if model in loaded.action_models:
            text = actionDot(loaded.action_models[model])
        else:
            resolved = resolveModel(loaded, model)
            text = dynamicDot(resolved, model) if isinstance(resolved, DynamicModel) else epistemicDot(resolved, model)

        if output is None:
            typer.echo(text, nl=False)
        else:
            writeDot(text, output)
            console.print(f"Wrote {output}", highlight=False)
