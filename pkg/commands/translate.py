from typing import Annotated, Optional

import typer

from commands.dependencies import console, handleErrors
from scenarios.loader import loadScenario
from utilities.formula import actionDepth, weight
from utilities.parser import parseFormula, renderFormula
from utilities.reduction import translate as reduceFormula

router = typer.Typer()

@router.command("translate")
def translate(
    formula: Annotated[str, typer.Argument(help="Formula of L_DL+, e.g. \"[sp] K_b p\"")],
    sig: Annotated[str, typer.Option("--sig", help="Scenario supplying agents, actions and preconditions")],
    dynamic: Annotated[Optional[str], typer.Option("--dynamic", help="Use the action set of this dynamic model")] = None,
    measures: Annotated[bool, typer.Option("--measures", help="Also print action depth and weight")] = False,
):
    """
    Print the update-free formula equivalent to a dynamic formula.
    """
    with handleErrors():
        loaded = loadScenario(sig)
        signature = loaded.sig
        if dynamic is not None:
            if dynamic not in loaded.dynamic:
                raise typer.BadParameter(f"No dynamic model named {dynamic}", param_hint="--dynamic")
            signature = loaded.dynamic[dynamic].sig
        phi = parseFormula(formula, signature)
        result = reduceFormula(phi, signature)

    typer.echo(renderFormula(result))
    if measures:
        console.print(f"[dim]d={actionDepth(phi)} w={weight(phi)} -> w={weight(result)}[/dim]", highlight=False)
