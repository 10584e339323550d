from contextlib import contextmanager
import logging

import typer
from rich.console import Console

from utilities.exceptions import EpikitError, FormulaSyntaxError, ScenarioValidationError

console = Console()
error_console = Console(stderr=True)

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_ERROR = 2

@contextmanager
def handleErrors():
    """
    Turn library errors into a red message and exit code 2.
    """
    try:
        yield
    except EpikitError as e:
        logger.debug("Command failed", exc_info=True)
        error_console.print(f"[bold red]{type(e).__name__}[/bold red]: {e}", markup=True, highlight=False)
        if isinstance(e, FormulaSyntaxError):
            error_console.print(f"  {e.text}\n  {' ' * (e.column - 1)}^", markup=False, highlight=False)
        if isinstance(e, ScenarioValidationError) and e.__cause__ is not None:
            error_console.print(f"  caused by {type(e.__cause__).__name__}", highlight=False)
        raise typer.Exit(EXIT_ERROR)
