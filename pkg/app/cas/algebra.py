# app/cas/algebra.py

"""
Le due algebre differenziali chiuse usate per rigenerare i sistemi.

TrigElement: A(c) + s*B(c) con c = cos w, s = sin w, s^2 = 1 - c^2 e
w' = sin w. Derivazione:

    d/dxi [A + s*B] = -(1 - c^2)*A'(c) + s*[c*B(c) - (1 - c^2)*B'(c)]

EElement: n(E) / Q(E)^k con E = exp(-phi) e E' = -(E^2 + tau*E + sigma).
Derivazione:

    d/dxi [n / Q^k] = (n'*Q - k*n*Q') * E' / Q^(k+1)

I coefficienti sono espressioni sympy esatte (razionali o simboliche).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Union

import sympy as sp

c = sp.Symbol("c")
E = sp.Symbol("E")

Scalar = Union[int, sp.Expr]


def _poly(expr: Any, gen: sp.Symbol) -> sp.Poly:
    return sp.Poly(sp.expand(expr), gen)


# --- Algebra trigonometrica ---


@dataclass(frozen=True)
class TrigElement:
    A: sp.Poly
    B: sp.Poly

    @classmethod
    def of(cls, A: Any = 0, B: Any = 0) -> TrigElement:
        return cls(_poly(A, c), _poly(B, c))

    @classmethod
    def cos(cls) -> TrigElement:
        return cls.of(c, 0)

    @classmethod
    def sin(cls) -> TrigElement:
        return cls.of(0, 1)

    def _lift(self, other: Union[TrigElement, Scalar]) -> TrigElement:
        return other if isinstance(other, TrigElement) else TrigElement.of(other, 0)

    def __add__(self, other: Union[TrigElement, Scalar]) -> TrigElement:
        o = self._lift(other)
        return TrigElement(self.A + o.A, self.B + o.B)

    __radd__ = __add__

    def __neg__(self) -> TrigElement:
        return TrigElement(-self.A, -self.B)

    def __sub__(self, other: Union[TrigElement, Scalar]) -> TrigElement:
        return self + (-self._lift(other))

    def __rsub__(self, other: Union[TrigElement, Scalar]) -> TrigElement:
        return self._lift(other) - self

    def __mul__(self, other: Union[TrigElement, Scalar]) -> TrigElement:
        o = self._lift(other)
        one_minus_c2 = _poly(1 - c**2, c)
        return TrigElement(
            self.A * o.A + one_minus_c2 * self.B * o.B,
            self.A * o.B + o.A * self.B,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TrigElement:
        result = TrigElement.of(1, 0)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> TrigElement:
        one_minus_c2 = _poly(1 - c**2, c)
        return TrigElement(
            -one_minus_c2 * self.A.diff(c),
            _poly(c, c) * self.B - one_minus_c2 * self.B.diff(c),
        )

    def is_zero(self) -> bool:
        return self.A.is_zero and self.B.is_zero

    def evaluate(self, xi: float, subs: Any = None) -> complex:
        """
        Valore numerico con c = -tanh(xi), s = sech(xi).

        È la coppia coerente con w' = sin w (c' = -s^2, s' = c*s).
        """
        cv = -math.tanh(xi)
        sv = 1 / math.cosh(xi)
        a = self.A.as_expr().subs(subs or {}).subs(c, cv)
        b = self.B.as_expr().subs(subs or {}).subs(c, cv)
        return complex(sp.N(a + sv * b))


# --- Algebra esponenziale ---


@dataclass(frozen=True)
class EElement:
    """n(E) / Q(E)^k, con Q condiviso e (tau, sigma) fissati."""

    n: sp.Poly
    Q: sp.Poly
    k: int
    tau: Any
    sigma: Any

    @classmethod
    def of(cls, n: Any, Q: Any, k: int, tau: Any, sigma: Any) -> EElement:
        return cls(_poly(n, E), _poly(Q, E), k, sp.sympify(tau), sp.sympify(sigma))

    @property
    def E_prime(self) -> sp.Poly:
        return _poly(-(E**2 + self.tau * E + self.sigma), E)

    def _same_base(self, other: EElement) -> None:
        if self.Q != other.Q or self.tau != other.tau or self.sigma != other.sigma:
            raise ValueError("elementi con denominatore o parametri diversi")

    def lift(self, k: int) -> EElement:
        """Stesso valore riscritto su Q^k (k >= self.k)."""
        if k < self.k:
            raise ValueError(f"impossibile abbassare la potenza da {self.k} a {k}")
        return EElement(self.n * self.Q ** (k - self.k), self.Q, k, self.tau, self.sigma)

    def __add__(self, other: EElement) -> EElement:
        self._same_base(other)
        k = max(self.k, other.k)
        return EElement(self.lift(k).n + other.lift(k).n, self.Q, k, self.tau, self.sigma)

    def scale(self, factor: Scalar) -> EElement:
        return EElement(self.n * _poly(factor, E), self.Q, self.k, self.tau, self.sigma)

    def __mul__(self, other: EElement) -> EElement:
        self._same_base(other)
        return EElement(self.n * other.n, self.Q, self.k + other.k, self.tau, self.sigma)

    def derivative(self) -> EElement:
        n, Q = self.n, self.Q
        top = (n.diff(E) * Q - self.k * n * Q.diff(E)) * self.E_prime
        return EElement(top, Q, self.k + 1, self.tau, self.sigma)

    def as_expr(self) -> sp.Expr:
        return self.n.as_expr() / self.Q.as_expr() ** self.k

    def evaluate(self, E_value: complex, subs: Any = None) -> complex:
        return complex(sp.N(self.as_expr().subs(subs or {}).subs(E, E_value)))
