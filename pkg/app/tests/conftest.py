import os
import sys
from fractions import Fraction as F

import pytest

# --- Correzione del Path ---
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

# --- Import principali ---
from click.testing import CliRunner  # noqa: E402

from app.models.family import FamilyId, FamilyInputs  # noqa: E402
from app.models.materials import SET_A, SET_B, derive_parameters  # noqa: E402
from app.verify import default_inputs  # noqa: E402
from app_factory import create_app  # noqa: E402
from commands import CliState, cli  # noqa: E402


# --- Fixture per App (scope 'session') ---
@pytest.fixture(scope="session")
def app():
    """
    Fixture che crea il contesto applicativo per l'intera sessione di test.
    """
    return create_app(is_testing=True)


# --- Materiali ---


@pytest.fixture(scope="session")
def material_a():
    """Parametri derivati del set A (grafici 2D)."""
    return derive_parameters(SET_A)


@pytest.fixture(scope="session")
def material_b():
    """Parametri derivati del set B (superfici 3D)."""
    return derive_parameters(SET_B)


@pytest.fixture
def inputs_for(material_a):
    """
    Factory: input di default della famiglia, con sostituzioni puntuali.

    Esempio: inputs_for("sg.case1.tanh.plus", mu=F(1, 2))
    """

    def _create(family, **changes):
        fid = FamilyId.parse(family) if isinstance(family, str) else family
        base = default_inputs(fid, material_a)
        return base.with_values(**changes) if changes else base

    return _create


@pytest.fixture
def case1_inputs(material_a):
    return FamilyInputs(material=material_a, mu=F(1, 4))


# --- Fixture CLI ---


@pytest.fixture
def runner():
    """Fixture per il CLI Runner."""
    return CliRunner()


@pytest.fixture
def invoke(app, runner):
    """
    Invoca la CLI con il contesto di test già creato.
    Restituisce il Result di click.
    """

    def _invoke(*args):
        return runner.invoke(cli, list(args), obj=CliState(app=app))

    return _invoke


@pytest.fixture
def write_config(tmp_path):
    """Scrive un file di configurazione JSON e ne restituisce il percorso."""
    import json

    def _write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write
