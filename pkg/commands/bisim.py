from typing import Annotated

import typer

from commands.dependencies import EXIT_FAILED, handleErrors
from scenarios.loader import loadScenario, resolveModel
from utilities.dynamic import DynamicModel, epistemicPart
from utilities.kripke import bisimilar
from utilities.parser import parseWorldRef

router = typer.Typer()

@router.command("bisim")
def bisim(
    scenario: Annotated[str, typer.Argument(help="Scenario file, or the name of a built-in scenario")],
    first_model: Annotated[str, typer.Argument(metavar="M1")],
    first_world: Annotated[str, typer.Argument(metavar="W1")],
    second_model: Annotated[str, typer.Argument(metavar="M2")],
    second_world: Annotated[str, typer.Argument(metavar="W2")],
):
    """
    Decide whether two pointed models are bisimilar. Dynamic models are compared by their epistemic part.
    """
    with handleErrors():
        loaded = loadScenario(scenario)
        models = []
        for ref in (first_model, second_model):
            model = resolveModel(loaded, ref)
            models.append(epistemicPart(model) if isinstance(model, DynamicModel) else model)
        result = bisimilar(models[0], parseWorldRef(first_world), models[1], parseWorldRef(second_world))

    typer.echo("true" if result else "false")
    if not result:
        raise typer.Exit(EXIT_FAILED)
