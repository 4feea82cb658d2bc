# app/utils/decorators.py
"""
Decoratori per i comandi della CLI.
"""
import logging
from functools import wraps
from typing import Any, Callable, TypeVar, cast

import click

from app.errors import SolitonError

log = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

# codici di uscita
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2


def cli_errors(f: F) -> F:
    """
    Converte gli errori di dominio in exit code 2.

    Il messaggio va su stderr nella forma "<ClasseErrore>: <messaggio>";
    le eccezioni di click (uso errato, exit esplicito) passano invariate.
    """

    @wraps(f)
    def decorated_function(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except (SolitonError, ValueError) as e:
            log.debug("Comando %s interrotto: %r", f.__name__, e)
            click.echo(f"{type(e).__name__}: {e}", err=True)
            raise SystemExit(EXIT_INVALID_INPUT)

    return cast(F, decorated_function)
