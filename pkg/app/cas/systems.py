# app/cas/systems.py

"""
Rigenerazione dei sistemi algebrici sovradeterminati.

L'ansatz viene sostituito nell'ODE di lavoro

    (n1^2*mu^2*delta/2)*(1/beta1 - lambda^2)*u'' + 3*alpha2*epsilon*u^2
        + (lambda^2 - alpha1)*u = 0

con le derivate calcolate nell'algebra chiusa del metodo; le equazioni
sono i coefficienti (non identicamente nulli) delle potenze di c (e di s)
oppure di E. Nessuna risoluzione: il sistema serve a verificare i casi
pubblicati (`candidates`).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import sympy as sp

from app.cas.algebra import E, EElement, TrigElement, c
from app.catalog.backends import SymbolicBackend
from app.errors import UnsupportedOrder
from app.models.family.base import Method

log = logging.getLogger(__name__)

# simboli condivisi con le assegnazioni pubblicate
lam, mu, tau, sigma = sp.symbols("lambda mu tau sigma")
MATERIAL = SymbolicBackend.symbols()


class AuxVariant(str, Enum):
    FULL = "full"
    SIGMA0 = "sigma0"
    DISCRIM0 = "discrim0"
    BOTH0 = "both0"

    def tau_sigma(self) -> Tuple[sp.Expr, sp.Expr]:
        if self is AuxVariant.FULL:
            return tau, sigma
        if self is AuxVariant.SIGMA0:
            return tau, sp.Integer(0)
        if self is AuxVariant.DISCRIM0:
            return tau, tau**2 / 4
        return sp.Integer(0), sp.Integer(0)


@dataclass(frozen=True)
class BalanceResult:
    N: int
    M: Optional[int] = None


def balance(kind: Method, M: Optional[int] = None) -> BalanceResult:
    """
    Principio di bilanciamento tra u'' e u^2.

    Raises:
        ValueError: Per MEFM con M < 1.
    """
    if kind is Method.SINE_GORDON:
        return BalanceResult(N=2)
    M = 1 if M is None else M
    if M < 1:
        raise ValueError(f"M deve essere >= 1 (ricevuto {M})")
    return BalanceResult(N=M + 2, M=M)


def theorem1_counts(M: int) -> Tuple[int, int]:
    """Conteggi pubblicati: (M + 7 equazioni, 2*(M + 3) incognite)."""
    if M < 1:
        raise ValueError(f"M deve essere >= 1 (ricevuto {M})")
    return M + 7, 2 * (M + 3)


@dataclass(frozen=True)
class AlgebraicSystem:
    kind: Method
    equations: Tuple[sp.Expr, ...]
    unknowns: Tuple[sp.Symbol, ...]
    M: Optional[int] = None
    aux: Optional[AuxVariant] = None
    labels: Tuple[str, ...] = ()

    @property
    def counts(self) -> Tuple[int, int]:
        return len(self.equations), len(self.unknowns)

    def to_json(self) -> List[Dict[str, str]]:
        """Ogni equazione come mappa esponenti-delle-incognite -> coefficiente."""
        out: List[Dict[str, str]] = []
        for eq in self.equations:
            poly = sp.Poly(eq, *self.unknowns)
            out.append(
                {
                    ",".join(str(e) for e in monom): str(sp.factor(coeff))
                    for monom, coeff in poly.terms()
                }
            )
        return out


def _ode_coefficients() -> Tuple[sp.Expr, sp.Expr, sp.Expr]:
    m = MATERIAL
    a = m.n1**2 * mu**2 * m.delta / 2 * (1 / m.beta1 - lam**2)
    return a, 3 * m.alpha2 * m.epsilon, lam**2 - m.alpha1


@lru_cache(maxsize=None)
def build_sg_system() -> AlgebraicSystem:
    """Sistema dell'ansatz sine-Gordon con N = 2: 9 equazioni, 7 incognite."""
    A0, A1, A2, B1, B2 = sp.symbols("A0 A1 A2 B1 B2")
    cos_w, sin_w = TrigElement.cos(), TrigElement.sin()
    u = A0 + A1 * cos_w + B1 * sin_w + cos_w * (A2 * cos_w + B2 * sin_w)
    a, nl, lin = _ode_coefficients()
    ode = a * u.derivative().derivative() + nl * u * u + lin * u

    equations: List[sp.Expr] = []
    labels: List[str] = []
    for name, part in (("c", ode.A), ("s*c", ode.B)):
        for (deg,), coeff in sorted(part.terms()):
            expr = sp.expand(coeff)
            if expr != 0:
                equations.append(expr)
                labels.append(f"{name}^{deg}")
    system = AlgebraicSystem(
        kind=Method.SINE_GORDON,
        equations=tuple(equations),
        unknowns=(A0, A1, A2, B1, B2, lam, mu),
        labels=tuple(labels),
    )
    log.debug("Sistema sine-Gordon: %d equazioni", len(equations))
    return system


def mefm_unknowns(M: int) -> Tuple[Tuple[sp.Symbol, ...], Tuple[sp.Symbol, ...]]:
    P = sp.symbols(f"P0:{M + 3}")
    Q = sp.symbols(f"Q0:{M + 1}")
    return tuple(P), tuple(Q)


@lru_cache(maxsize=None)
def build_mefm_system(M: int, aux: AuxVariant = AuxVariant.FULL, cap: int = 8) -> AlgebraicSystem:
    """
    Sistema dell'ansatz quoziente con N = M + 2, dopo aver moltiplicato per Q^3.

    Raises:
        UnsupportedOrder: Se M è fuori da 1..cap.
    """
    if not 1 <= M <= cap:
        raise UnsupportedOrder(M, cap)
    P, Q = mefm_unknowns(M)
    t, s = aux.tau_sigma()
    num = sum(p * E**i for i, p in enumerate(P))
    den = sum(q * E**i for i, q in enumerate(Q))
    u = EElement.of(num, den, 1, t, s)
    a, nl, lin = _ode_coefficients()

    k = 3
    ode = u.derivative().derivative().scale(a).lift(k)
    ode = ode + (u * u).scale(nl).lift(k)
    ode = ode + u.scale(lin).lift(k)

    equations: List[sp.Expr] = []
    labels: List[str] = []
    for (deg,), coeff in sorted(ode.n.terms()):
        expr = sp.expand(coeff)
        if expr != 0:
            equations.append(expr)
            labels.append(f"E^{deg}")
    system = AlgebraicSystem(
        kind=Method.MEFM,
        equations=tuple(equations),
        unknowns=(*P, *Q, lam, mu),
        M=M,
        aux=aux,
        labels=tuple(labels),
    )
    log.debug("Sistema MEFM M=%d %s: %d equazioni", M, aux.value, len(equations))
    return system


__all__ = [
    "AlgebraicSystem",
    "AuxVariant",
    "BalanceResult",
    "E",
    "MATERIAL",
    "balance",
    "build_mefm_system",
    "build_sg_system",
    "c",
    "lam",
    "mefm_unknowns",
    "mu",
    "sigma",
    "tau",
    "theorem1_counts",
]
