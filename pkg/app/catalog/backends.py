# app/catalog/backends.py

"""
Backend numerici per le formule dei coefficienti.

Le formule dei casi sono scritte una sola volta e ricevono un backend che
fornisce radici, unità immaginaria e test di nullità:

- `ComplexBackend`: doppia precisione complessa (valutazione e verifica).
- `SymbolicBackend`: sympy, per la forma esatta con input razionali o
  simbolici (usata dai test e dal controllo dei sistemi algebrici).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import sympy as sp

from app.models.materials.base import DerivedParameters


@dataclass(frozen=True)
class FormulaParams:
    """Parametri del materiale già convertiti nel tipo numerico del backend."""

    n1: Any
    beta1: Any
    alpha1: Any
    alpha2: Any
    delta: Any
    epsilon: Any


class ComplexBackend:
    name = "complex"
    I = 1j
    # soglia relativa per dichiarare nullo un denominatore
    zero_tolerance = 1e-13

    def num(self, value: Any) -> complex:
        if isinstance(value, Fraction):
            return complex(float(value))
        return complex(value)

    def sqrt(self, value: Any) -> complex:
        return cmath.sqrt(complex(value))

    def root4(self, value: Any) -> complex:
        return cmath.sqrt(cmath.sqrt(complex(value)))

    def is_zero(self, value: Any, scale: float = 1.0) -> bool:
        return abs(complex(value)) <= self.zero_tolerance * max(1.0, abs(scale))

    def params(self, dp: DerivedParameters) -> FormulaParams:
        return FormulaParams(
            n1=self.num(dp.n1),
            beta1=self.num(dp.beta1),
            alpha1=self.num(dp.alpha1),
            alpha2=self.num(dp.alpha2),
            delta=self.num(dp.delta),
            epsilon=self.num(dp.epsilon),
        )


class SymbolicBackend:
    name = "symbolic"
    I = sp.I

    def num(self, value: Any) -> sp.Expr:
        if isinstance(value, Fraction):
            return sp.Rational(value.numerator, value.denominator)
        return sp.sympify(value)

    def sqrt(self, value: Any) -> sp.Expr:
        return sp.sqrt(value)

    def root4(self, value: Any) -> sp.Expr:
        return sp.root(value, 4)

    def is_zero(self, value: Any, scale: float = 1.0) -> bool:
        # con parametri simbolici la nullità non è decidibile qui: solo lo zero esatto
        return bool(sp.simplify(value) == 0) if sp.sympify(value).is_number else False

    def params(self, dp: DerivedParameters) -> FormulaParams:
        return FormulaParams(
            n1=self.num(dp.n1),
            beta1=self.num(dp.beta1),
            alpha1=self.num(dp.alpha1),
            alpha2=self.num(dp.alpha2),
            delta=self.num(dp.delta),
            epsilon=self.num(dp.epsilon),
        )

    @staticmethod
    def symbols() -> FormulaParams:
        """Parametri del materiale come simboli opachi."""
        n1, beta1, alpha1, alpha2, delta, epsilon = sp.symbols(
            "n1 beta1 alpha1 alpha2 delta epsilon", nonzero=True
        )
        return FormulaParams(n1, beta1, alpha1, alpha2, delta, epsilon)


COMPLEX = ComplexBackend()
SYMBOLIC = SymbolicBackend()
