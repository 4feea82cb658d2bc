# app/models/materials/validators.py

"""
Validazione delle costanti del materiale.

Funzioni pure: ricevono un valore già convertito in `Fraction`, lo
restituiscono invariato se valido, altrimenti sollevano `InvalidConstants`
con il nome del campo. Nessun vincolo di segno sui nu (possono essere
negativi o nulli).
"""

from fractions import Fraction

from app.errors import InvalidConstants


def validate_positive(field: str, value: Fraction) -> Fraction:
    if value <= 0:
        raise InvalidConstants(field, f"deve essere > 0 (ricevuto {value})")
    return value


def validate_nonzero(field: str, value: Fraction) -> Fraction:
    if value == 0:
        raise InvalidConstants(field, "deve essere diverso da 0")
    return value


def validate_lame_pair(lambda1: Fraction, mu1: Fraction) -> None:
    """
    Controlla la coppia di Lamé.

    Raises:
        InvalidConstants: Se mu1 <= 0 o se lambda1 + mu1 = 0 (denominatore di n1).
    """
    validate_positive("mu1", mu1)
    if lambda1 + mu1 == 0:
        raise InvalidConstants("lambda1", "lambda1 + mu1 = 0 annulla il denominatore di n1")
