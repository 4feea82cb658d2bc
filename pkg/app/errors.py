# app/errors.py
"""
Gerarchia delle eccezioni del dominio.

Tutte le eccezioni derivano da `SolitonError`, così la CLI può distinguere
gli errori di input (exit code 2) dai crash imprevisti. Dove ha senso
ereditano anche dall'eccezione built-in equivalente (ValueError,
ArithmeticError, KeyError) per restare compatibili con il codice chiamante
che intercetta i tipi standard.
"""

from typing import Iterable, Optional


class SolitonError(Exception):
    """Radice di tutte le eccezioni del pacchetto."""


# --- Materiali ---


class InvalidConstants(SolitonError, ValueError):
    """Una costante del materiale viola un vincolo. `field` nomina il campo."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        super().__init__(f"{field}: {message}")


class ZeroPoissonRatio(InvalidConstants):
    """n1 = 0 rende indefinito il termine kappa6/n1."""

    def __init__(self) -> None:
        super().__init__("lambda1", "lambda1 = 0 annulla n1 (termine kappa6/n1 indefinito)")


# --- Jet ---


class JetError(SolitonError, ArithmeticError):
    """Errore aritmetico nel kernel dei jet."""


class DivisionNearPole(JetError):
    def __init__(self, value: complex, floor: float) -> None:
        self.value = value
        self.floor = floor
        super().__init__(f"divisore {value!r} sotto la soglia di polo {floor:g}")


class DomainError(JetError, ValueError):
    def __init__(self, function: str, value: complex) -> None:
        self.function = function
        self.value = value
        super().__init__(f"{function}: valore {value!r} fuori dominio")


# --- Catalogo ---


class UnknownFamily(SolitonError, KeyError):
    def __str__(self) -> str:
        return f"famiglia sconosciuta: {self.args[0]}"


class ConstraintViolated(SolitonError, ValueError):
    """Il predicato di validità della famiglia non è soddisfatto."""

    def __init__(self, predicate: str, detail: str = "") -> None:
        self.predicate = predicate
        text = f"vincolo violato: {predicate}"
        super().__init__(f"{text} ({detail})" if detail else text)


class GateViolated(ConstraintViolated):
    """Condizione di attivazione di un Set dell'equazione ausiliaria non rispettata."""


class DegenerateDenominator(SolitonError, ZeroDivisionError):
    def __init__(self, expression: str, value: Optional[complex] = None) -> None:
        self.expression = expression
        text = f"denominatore degenere: {expression} = 0"
        if value is not None:
            text += f" (valore {value!r})"
        super().__init__(text)


class SingularPoint(SolitonError, ArithmeticError):
    """Punto troppo vicino a una singolarità della soluzione."""

    def __init__(self, xi: complex, reason: str = "") -> None:
        self.xi = xi
        text = f"punto singolare in xi={xi!r}"
        super().__init__(f"{text}: {reason}" if reason else text)


# --- CAS ---


class IncompleteAssignment(SolitonError, KeyError):
    def __init__(self, missing: Iterable[str]) -> None:
        self.missing = sorted(missing)
        super().__init__(self.missing)

    def __str__(self) -> str:
        return f"assegnazione incompleta, mancano: {', '.join(self.missing)}"


class UnsupportedOrder(SolitonError, ValueError):
    def __init__(self, m: int, cap: int) -> None:
        self.m = m
        super().__init__(f"M={m} non supportato (ammessi 1..{cap})")


# --- Figure ---


class UnknownPreset(SolitonError, KeyError):
    def __str__(self) -> str:
        return f"preset sconosciuto: {self.args[0]}"
