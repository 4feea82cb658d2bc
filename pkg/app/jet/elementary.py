# app/jet/elementary.py

"""
Funzioni elementari sui jet e loro controparti vettoriali.

Le composizioni usano le ricorrenze delle derivate: se f' = g(f) * a',
allora f_k = (1/k) * sum_{j=1..k} j * a_j * g_{k-j}, dove g_{k-j} dipende
solo da coefficienti di f già calcolati.

Le funzioni `exp`, `tanh`, `coth`, ... in fondo al modulo accettano sia un
`Jet` sia un array numpy: le formule delle famiglie sono scritte una volta
sola e valutate punto per punto (jet) o su griglie intere (array, con i
punti singolari mascherati a NaN).
"""

from typing import Callable, Dict, Union

import numpy as np

from app.errors import DomainError
from app.jet.base import ORDER, SIZE, Jet, current_pole_floor

ArrayOrJet = Union[Jet, np.ndarray]


# --- Valori puntuali stabili (scalari o array) ---


def stable_sech(z: np.ndarray) -> np.ndarray:
    """sech(z) = 2e^{-z}/(1+e^{-2z}) per Re z >= 0, per parità altrimenti."""
    with np.errstate(over="ignore", invalid="ignore"):
        sgn = np.where(np.real(z) >= 0, 1.0, -1.0)
        w = np.exp(-sgn * z)
        return 2 * w / (1 + w * w)


def stable_csch(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        sgn = np.where(np.real(z) >= 0, 1.0, -1.0)
        w = np.exp(-sgn * z)
        return sgn * 2 * w / (1 - w * w)


# --- Ricorrenze ---


def _integrate(a: Jet, f0: complex, factor: Callable[[np.ndarray], np.ndarray]) -> Jet:
    """Risolve f' = g(f) a' coefficiente per coefficiente."""
    f = np.zeros(SIZE, dtype=complex)
    f[0] = f0
    for k in range(1, SIZE):
        g = factor(f)
        f[k] = sum(j * a.c[j] * g[k - j] for j in range(1, k + 1)) / k
    return Jet(f)


def _square(f: np.ndarray) -> np.ndarray:
    return np.convolve(f, f)[:SIZE]


def jet_exp(a: Jet) -> Jet:
    return _integrate(a, np.exp(a.c[0]), lambda f: f)


def jet_log(a: Jet) -> Jet:
    a0 = a.c[0]
    if a0.imag == 0 and a0.real <= 0:
        raise DomainError("ln", complex(a0))
    out = np.zeros(SIZE, dtype=complex)
    out[0] = np.log(a0)
    for k in range(1, SIZE):
        acc = sum(j * out[j] * a.c[k - j] for j in range(1, k))
        out[k] = (a.c[k] - acc / k) / a0
    return Jet(out)


def jet_sqrt(a: Jet) -> Jet:
    a0 = a.c[0]
    if a0.imag == 0 and a0.real <= 0:
        raise DomainError("sqrt", complex(a0))
    out = np.zeros(SIZE, dtype=complex)
    out[0] = np.sqrt(a0)
    for k in range(1, SIZE):
        acc = sum(out[j] * out[k - j] for j in range(1, k))
        out[k] = (a.c[k] - acc) / (2 * out[0])
    return Jet(out)


def jet_tanh(a: Jet) -> Jet:
    return _integrate(a, np.tanh(a.c[0]), lambda f: np.eye(1, SIZE, 0)[0] - _square(f))


def jet_coth(a: Jet) -> Jet:
    floor = current_pole_floor()
    t0 = np.tanh(a.c[0])
    if not abs(t0) > floor:
        raise DomainError("coth", complex(a.c[0]))
    return _integrate(a, 1 / t0, lambda f: np.eye(1, SIZE, 0)[0] - _square(f))


def jet_tan(a: Jet) -> Jet:
    floor = current_pole_floor()
    if not abs(np.cos(a.c[0])) > floor:
        raise DomainError("tan", complex(a.c[0]))
    return _integrate(a, np.tan(a.c[0]), lambda f: np.eye(1, SIZE, 0)[0] + _square(f))


def jet_sech(a: Jet) -> Jet:
    # s' = -s * tanh(a) * a'
    t = jet_tanh(a).c
    return _integrate(a, stable_sech(a.c[0]), lambda f: -np.convolve(f, t)[:SIZE])


def jet_csch(a: Jet) -> Jet:
    # h' = -h * coth(a) * a'
    floor = current_pole_floor()
    if not abs(np.sinh(a.c[0])) > floor:
        raise DomainError("csch", complex(a.c[0]))
    ct = jet_coth(a).c
    return _integrate(a, stable_csch(a.c[0]), lambda f: -np.convolve(f, ct)[:SIZE])


ELEMENTARY: Dict[str, Callable[[Jet], Jet]] = {
    "exp": jet_exp,
    "ln": jet_log,
    "sqrt": jet_sqrt,
    "tanh": jet_tanh,
    "coth": jet_coth,
    "sech": jet_sech,
    "csch": jet_csch,
    "tan": jet_tan,
}


def jet_elementary(name: str, a: Jet) -> Jet:
    """
    Composizione di una funzione elementare con un jet.

    Raises:
        DomainError: Se il valore di `a` cade fuori dal dominio (o su un polo).
        KeyError: Se `name` non è una funzione supportata.
    """
    try:
        function = ELEMENTARY[name]
    except KeyError:
        raise KeyError(f"funzione elementare non supportata: {name}") from None
    return function(a)


# --- Dispatch Jet / array ---


def _masked(values: np.ndarray, bad: np.ndarray) -> np.ndarray:
    return np.where(bad, np.nan + 0j, values)


def exp(x: ArrayOrJet) -> ArrayOrJet:
    if isinstance(x, Jet):
        return jet_exp(x)
    with np.errstate(over="ignore", invalid="ignore"):
        return np.exp(x)


def tanh(x: ArrayOrJet) -> ArrayOrJet:
    if isinstance(x, Jet):
        return jet_tanh(x)
    return np.tanh(x)


def sech(x: ArrayOrJet) -> ArrayOrJet:
    if isinstance(x, Jet):
        return jet_sech(x)
    return stable_sech(x)


def coth(x: ArrayOrJet) -> ArrayOrJet:
    if isinstance(x, Jet):
        return jet_coth(x)
    t = np.tanh(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        return _masked(1 / t, ~(np.abs(t) > current_pole_floor()))


def csch(x: ArrayOrJet) -> ArrayOrJet:
    if isinstance(x, Jet):
        return jet_csch(x)
    with np.errstate(over="ignore", invalid="ignore"):
        bad = ~(np.abs(np.sinh(x)) > current_pole_floor())
    return _masked(stable_csch(x), bad)


def tan(x: ArrayOrJet) -> ArrayOrJet:
    if isinstance(x, Jet):
        return jet_tan(x)
    with np.errstate(over="ignore", invalid="ignore"):
        bad = ~(np.abs(np.cos(x)) > current_pole_floor())
        return _masked(np.tan(x), bad)


def divide(a: ArrayOrJet, b: ArrayOrJet) -> ArrayOrJet:
    """Divisione con soglia di polo: eccezione sui jet, NaN sugli array."""
    if isinstance(a, Jet) or isinstance(b, Jet):
        return a / b
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return _masked(a / b, ~(np.abs(b) > current_pole_floor()))


__all__ = [
    "ORDER",
    "jet_elementary",
    "stable_sech",
    "stable_csch",
    "exp",
    "tanh",
    "sech",
    "coth",
    "csch",
    "tan",
    "divide",
]
