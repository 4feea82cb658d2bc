# app/models/materials/stats.py

"""
Parametri derivati del materiale di Murnaghan.

Come per le statistiche delle altre entità, le formule sono funzioni pure
iniettate nella classe `MaterialConstants` come `cached_property` dal
decoratore `add_derived_properties`: il modello base resta una semplice
definizione dei campi, i calcoli vivono qui.

Tutta l'aritmetica è razionale esatta (`Fraction`), nessun arrotondamento.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Callable, Dict

if TYPE_CHECKING:
    from app.models.materials.base import MaterialConstants


def n1(self: MaterialConstants) -> Fraction:
    """Rapporto di Poisson n1 = lambda1 / (2(lambda1 + mu1))."""
    return self.lambda1 / (2 * (self.lambda1 + self.mu1))


def kappa1(self: MaterialConstants) -> Fraction:
    return 2 * (
        self.lambda1
        + self.mu1
        + 2 * self.nu1
        + Fraction(4, 3) * self.nu2
        + Fraction(1, 3) * self.nu4
    )


def kappa3(self: MaterialConstants) -> Fraction:
    return self.lambda1 + 2 * self.nu1 + 4 * self.nu2


def kappa5(self: MaterialConstants) -> Fraction:
    return self.lambda1 + 2 * self.nu1 + 2 * self.nu2


def kappa6(self: MaterialConstants) -> Fraction:
    return (
        self.lambda1 / 2
        + self.mu1
        + self.nu1
        + Fraction(1, 3) * self.nu2
        + Fraction(1, 3) * self.nu4
    )


def c1(self: MaterialConstants) -> Fraction:
    p = self.n1
    return 2 * (self.lambda1 + self.mu1) * p**2 - 2 * self.lambda1 * p + self.lambda1 / 2 + self.mu1


def c2(self: MaterialConstants) -> Fraction:
    # richiede n1 != 0, garantito da derive_parameters
    p = self.n1
    return -self.kappa1 * p**2 + self.kappa3 * p - self.kappa5 + self.kappa6 / p


def beta1(self: MaterialConstants) -> Fraction:
    return self.rho * self.c**2 / self.mu1


def alpha1(self: MaterialConstants) -> Fraction:
    return 2 * self.c1 / (self.beta1 * self.mu1)


def alpha2(self: MaterialConstants) -> Fraction:
    return self.c2 / (self.beta1 * self.mu1)


DERIVED_FORMULAS: Dict[str, Callable[..., Fraction]] = {
    "n1": n1,
    "kappa1": kappa1,
    "kappa3": kappa3,
    "kappa5": kappa5,
    "kappa6": kappa6,
    "c1": c1,
    "c2": c2,
    "beta1": beta1,
    "alpha1": alpha1,
    "alpha2": alpha2,
}


def add_derived_properties(cls: type) -> type:
    """
    Decoratore: inietta ogni formula come `cached_property` sulla classe.

    `functools.cached_property` scrive direttamente nel `__dict__`
    dell'istanza, quindi funziona anche su dataclass frozen (senza slots).
    """
    for name, formula in DERIVED_FORMULAS.items():
        prop = cached_property(formula)
        setattr(cls, name, prop)
        prop.__set_name__(cls, name)
    return cls
