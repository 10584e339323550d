import logging
from typing import Annotated

import typer
from rich.console import Console
from rich.logging import RichHandler

from commands import bisim, check, dot, fuzz, translate, validate
from configs.config_app import DEBUG, LOG_LEVEL

app = typer.Typer(name="epikit", help="Model checker for epistemic, action and dynamic models.", no_args_is_help=True)

@app.callback()
def setup(verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at DEBUG level")] = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose or DEBUG else LOG_LEVEL,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)],
        force=True,
    )

app.add_typer(check.router)
app.add_typer(dot.router)
app.add_typer(translate.router)
app.add_typer(fuzz.router)
app.add_typer(bisim.router)
app.add_typer(validate.router)

if __name__ == "__main__":
    app()
