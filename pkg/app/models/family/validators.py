# app/models/family/validators.py

"""
Validazione degli input di una famiglia.

Funzioni pure che sollevano `ConstraintViolated` nominando il predicato
violato. I gate dei Set ausiliari stanno in `app.catalog.auxiliary`.
"""

from typing import Iterable

from app.errors import ConstraintViolated
from app.models.family.inputs import INPUT_FIELDS, FamilyInputs


def validate_required(inputs: FamilyInputs, names: Iterable[str]) -> None:
    """
    Controlla che i parametri liberi dichiarati siano presenti.

    Args:
        inputs: Input della famiglia.
        names: Chiavi JSON dei parametri liberi (es. "lambda", "Q0").

    Raises:
        ConstraintViolated: Alla prima chiave mancante.
    """
    for name in names:
        if getattr(inputs, INPUT_FIELDS[name]) is None:
            raise ConstraintViolated(f"{name} richiesto", "parametro libero della famiglia")


def validate_denominator_pair(inputs: FamilyInputs) -> None:
    if inputs.Q0 == 0 and inputs.Q1 == 0:
        raise ConstraintViolated("Q0 != 0 or Q1 != 0", "denominatore dell'ansatz nullo")


def validate_real(name: str, value: object) -> None:
    """I parametri del Set ausiliario entrano nei gate: devono essere reali."""
    if isinstance(value, complex):
        raise ConstraintViolated(f"{name} reale", f"ricevuto {value!r}")
