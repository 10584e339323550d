from pathlib import Path
from typing import Annotated, Optional

import typer
from rich.table import Table

from commands.dependencies import EXIT_FAILED, console, handleErrors
from configs.config_fuzz import FuzzDefault
from utilities.randommodels import RandomModelParams
from utilities.reduction import AXIOMS, SOUND_SCHEMAS, getSchema, soundnessFuzz

router = typer.Typer()

@router.command("fuzz")
def fuzz(
    trials: Annotated[int, typer.Option("--trials", min=1, help="Number of random models")] = FuzzDefault.TRIALS,
    seed: Annotated[int, typer.Option("--seed", help="Seed of the first trial")] = FuzzDefault.SEED,
    schemas: Annotated[Optional[str], typer.Option("--schemas", help="Comma-separated schema ids, e.g. 10e,7a,control")] = None,
    max_worlds: Annotated[int, typer.Option("--max-worlds", min=1)] = FuzzDefault.MAX_WORLDS,
    agents: Annotated[int, typer.Option("--agents", min=1)] = FuzzDefault.AGENTS,
    props: Annotated[int, typer.Option("--props", min=1)] = FuzzDefault.PROPS,
    actions: Annotated[int, typer.Option("--actions", min=1)] = FuzzDefault.ACTIONS,
    report: Annotated[Optional[Path], typer.Option("--report", help="Write one line per failure to this file")] = None,
):
    """
    Check axiom schema instances on random dynamic models. Exit code 1 if a sound schema fails.
    """
    ids = [s.strip() for s in schemas.split(",") if s.strip()] if schemas else list(SOUND_SCHEMAS)
    params = RandomModelParams(world_count=max_worlds, agent_count=agents, prop_count=props, action_count=actions, seed=seed)

    with handleErrors():
        for schema_id in ids:
            getSchema(schema_id)
        result = soundnessFuzz(ids, trials, params, seed)

    table = Table(title=f"{trials} trials from seed {seed}")
    table.add_column("schema")
    table.add_column("statement")
    table.add_column("failures", justify="right")
    for schema_id in result.schemas:
        count = len(result.failuresFor(schema_id))
        colour = "red" if count and AXIOMS[schema_id].sound else "green"
        table.add_row(schema_id, AXIOMS[schema_id].description, f"[{colour}]{count}[/{colour}]")
    console.print(table)

    if report is not None:
        report.write_text(result.text(), encoding="utf-8")
    else:
        for failure in result.failures[:10]:
            console.print(failure.line(), highlight=False, markup=False)

    if any(AXIOMS[f.schema_id].sound for f in result.failures):
        raise typer.Exit(EXIT_FAILED)
