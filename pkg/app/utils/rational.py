from fractions import Fraction
from numbers import Rational
from typing import Union

from app.errors import InvalidConstants

RationalLike = Union[Fraction, int, str, float]


def to_fraction(value: RationalLike, field: str = "value") -> Fraction:
    """
    Converte un valore in `Fraction` senza perdita di precisione.

    Accetta interi, stringhe "p/q" o decimali ("1.50") e float (passando
    dalla loro repr, così 2.5 diventa 5/2 e non l'approssimazione binaria).

    Args:
        value: Valore grezzo (tipicamente letto da JSON).
        field: Nome del campo, riportato nell'errore.

    Returns:
        Fraction: Valore razionale esatto.

    Raises:
        InvalidConstants: Se il valore è vuoto, booleano o non interpretabile.
    """
    if value is None or isinstance(value, bool):
        raise InvalidConstants(field, f"valore non valido: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        text = str(value).strip()
        if not text:
            raise InvalidConstants(field, "valore vuoto")
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InvalidConstants(field, f"valore non razionale: {value!r}") from e


def format_fraction(value: Fraction) -> str:
    """Rende un razionale come "p" oppure "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float, digits: int = 17) -> str:
    """Formato deterministico a `digits` cifre significative."""
    return f"{value:.{digits}g}"
