import click
import pytest

from app.errors import UnknownFamily
from app.utils.decorators import EXIT_INVALID_INPUT, cli_errors


@cli_errors
def failing(exc):
    raise exc


@pytest.mark.parametrize(
    "exc, prefix",
    [
        (UnknownFamily("sg.case9.tanh.plus"), "UnknownFamily: "),
        (ValueError("griglia non valida"), "ValueError: griglia non valida"),
    ],
)
def test_domain_errors_exit_2(capsys, exc, prefix):
    with pytest.raises(SystemExit) as excinfo:
        failing(exc)
    assert excinfo.value.code == EXIT_INVALID_INPUT
    captured = capsys.readouterr()
    assert captured.err.startswith(prefix)
    assert captured.out == ""


def test_other_errors_pass_through():
    with pytest.raises(KeyError):
        failing(KeyError("x"))
    with pytest.raises(click.UsageError):
        failing(click.UsageError("uso errato"))


def test_wraps_preserves_name():
    assert failing.__name__ == "failing"
