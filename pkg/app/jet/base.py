# app/jet/base.py

"""
Jet di ordine 4: sviluppo di Taylor troncato di una funzione complessa
della coordinata d'onda xi.

I coefficienti seguono la convenzione di Taylor
[f, f', f''/2!, f'''/3!, f''''/4!]; la derivata k-esima si estrae come
k! * c[k]. Tutti i prodotti vengono troncati al grado 4.
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar
from enum import Enum
from math import factorial
from typing import Iterator, List, Sequence, Union

import numpy as np

from app.errors import DivisionNearPole

ORDER = 4
SIZE = ORDER + 1
DEFAULT_POLE_FLOOR = 1e-12

_pole_floor: ContextVar[float] = ContextVar("pole_floor", default=DEFAULT_POLE_FLOOR)

Scalar = Union[int, float, complex, np.number]


def current_pole_floor() -> float:
    return _pole_floor.get()


@contextlib.contextmanager
def pole_floor(value: float) -> Iterator[float]:
    """Imposta temporaneamente la soglia di polo per il contesto corrente."""
    token = _pole_floor.set(value)
    try:
        yield value
    finally:
        _pole_floor.reset(token)


class JetOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class Jet:
    """Sviluppo di Taylor troncato all'ordine 4, a coefficienti complessi."""

    __slots__ = ("c",)
    # gli operatori numpy devono cedere il passo ai metodi riflessi del Jet
    __array_ufunc__ = None

    def __init__(self, coefficients: Sequence[Scalar]) -> None:
        given = np.asarray(coefficients, dtype=complex).ravel()
        if given.size > SIZE:
            raise ValueError(f"un Jet ha al massimo {SIZE} coefficienti")
        self.c = np.zeros(SIZE, dtype=complex)
        self.c[: given.size] = given

    # --- Costruttori ---

    @classmethod
    def constant(cls, value: Scalar) -> Jet:
        return cls([value])

    @classmethod
    def variable(cls, x0: Scalar) -> Jet:
        """Jet della variabile indipendente nel punto x0."""
        return cls([x0, 1])

    # --- Accesso ---

    @property
    def value(self) -> complex:
        return complex(self.c[0])

    def derivative(self, k: int) -> complex:
        if not 0 <= k <= ORDER:
            raise ValueError(f"ordine di derivata {k} fuori da 0..{ORDER}")
        return complex(factorial(k) * self.c[k])

    def derivatives(self) -> List[complex]:
        return [self.derivative(k) for k in range(SIZE)]

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.c)))

    def allclose(self, other: Union[Jet, Sequence[Scalar]], atol: float = 1e-12) -> bool:
        theirs = other.c if isinstance(other, Jet) else Jet(other).c
        return bool(np.all(np.abs(self.c - theirs) <= atol))

    def __repr__(self) -> str:
        inner = ", ".join(f"{z:.6g}" for z in self.c)
        return f"Jet([{inner}])"

    # --- Aritmetica ---

    @staticmethod
    def _coerce(other: Union[Jet, Scalar]) -> Jet:
        return other if isinstance(other, Jet) else Jet.constant(other)

    def __neg__(self) -> Jet:
        return Jet(-self.c)

    def __pos__(self) -> Jet:
        return self

    def __add__(self, other: Union[Jet, Scalar]) -> Jet:
        return Jet(self.c + self._coerce(other).c)

    __radd__ = __add__

    def __sub__(self, other: Union[Jet, Scalar]) -> Jet:
        return Jet(self.c - self._coerce(other).c)

    def __rsub__(self, other: Union[Jet, Scalar]) -> Jet:
        return Jet(self._coerce(other).c - self.c)

    def __mul__(self, other: Union[Jet, Scalar]) -> Jet:
        if not isinstance(other, Jet):
            return Jet(self.c * complex(other))
        return Jet(np.convolve(self.c, other.c)[:SIZE])

    __rmul__ = __mul__

    def __truediv__(self, other: Union[Jet, Scalar]) -> Jet:
        return _divide(self, self._coerce(other))

    def __rtruediv__(self, other: Union[Jet, Scalar]) -> Jet:
        return _divide(self._coerce(other), self)

    def __pow__(self, n: int) -> Jet:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Jet.constant(1)
        for _ in range(n):
            result = result * self
        return result


def _divide(a: Jet, b: Jet) -> Jet:
    """c_k = (a_k - sum_{j>=1} b_j c_{k-j}) / b_0, con controllo del polo."""
    b0 = b.c[0]
    floor = current_pole_floor()
    if not abs(b0) > floor:
        raise DivisionNearPole(complex(b0), floor)
    out = np.zeros(SIZE, dtype=complex)
    for k in range(SIZE):
        acc = a.c[k] - np.dot(b.c[1 : k + 1], out[k - 1 :: -1][:k]) if k else a.c[0]
        out[k] = acc / b0
    return Jet(out)


def jet_arith(a: Jet, b: Jet, op: Union[JetOp, str]) -> Jet:
    """
    Operazione aritmetica troncata tra due jet.

    Raises:
        DivisionNearPole: Per `div` con |b_0| sotto la soglia di polo.
    """
    op = JetOp(op)
    if op is JetOp.ADD:
        return a + b
    if op is JetOp.SUB:
        return a - b
    if op is JetOp.MUL:
        return a * b
    return a / b
