# app/catalog/mefm.py

"""
Famiglie del metodo della funzione esponenziale modificata (casi 7-15).

Ansatz con M=1, N=3:

    u = (P0 + P1*E + P2*E^2 + P3*E^3) / (Q0 + Q1*E),   E = 1/y(xi)

con y soluzione chiusa dell'equazione ausiliaria (vedi `auxiliary`).
Le formule sono scritte una volta sola e valutate con il backend
complesso o con quello simbolico.
"""

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from app.catalog.auxiliary import AuxSet, InnerFactor, aux_reciprocal
from app.catalog.backends import FormulaParams
from app.errors import DegenerateDenominator
from app.jet.base import Jet
from app.jet.elementary import ArrayOrJet, divide

# tolleranza relativa del resto per considerare esatta la divisione P/Q
REDUCTION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MefmResult:
    values: Dict[str, Any]
    lam: Any
    mu: Any
    Lambda: Optional[Any] = None


def _require(bk: Any, value: Any, expression: str) -> None:
    if bk.is_zero(value):
        raise DegenerateDenominator(expression, value if bk.name == "complex" else None)


def _lambda_poly(Q0: Any, Q1: Any, tau: Any, sigma: Any) -> Any:
    return (
        -12 * Q0**4
        + 24 * Q0**3 * Q1 * tau
        + 24 * Q1**3 * Q0 * sigma * tau
        - 12 * Q0**2 * Q1**2 * tau**2
        - 24 * Q0**2 * Q1**2 * sigma
        - 8 * Q1**4 * tau**2 * sigma
        + 4 * Q1**4 * sigma**2
        + Q1**4 * tau**4
    )


def mefm_coefficients(
    case_no: int, sign: int, free: Mapping[str, Any], m: FormulaParams, bk: Any
) -> MefmResult:
    """
    Coefficienti P0..P3, Q0, Q1 e la coppia (lambda, mu) di un caso MEFM.

    Args:
        case_no: Caso 7..15.
        sign: +1 / -1, applicato al parametro dipendente del caso (casi 11-12:
            a lambda e a mu).
        free: Parametri liberi già nel tipo del backend (chiavi "mu", "lambda",
            "tau", "sigma", "Q0", "Q1"); sigma vale 0 per i casi 13-15.
        m: Parametri del materiale.
        bk: Backend.

    Raises:
        DegenerateDenominator: Se si annulla un denominatore delle formule.
    """
    tau = free.get("tau", 0)
    sigma = free.get("sigma", 0)
    Q1 = free["Q1"]
    K = m.alpha1 * m.beta1 - 1
    den = m.alpha2 * m.beta1 * m.epsilon
    a2e = m.alpha2 * m.epsilon
    _require(bk, a2e, "alpha2*epsilon")
    Delta = tau**2 - 4 * sigma

    if case_no in (7, 8):
        Q0 = free["Q0"]
        lam = free["lambda"]
        L = lam**2 - m.alpha1
        _require(bk, Delta, "tau^2 - 4*sigma")
        _require(bk, lam**2 * m.beta1 - 1, "lambda^2*beta1 - 1")
        mu = (
            sign
            * bk.sqrt(2)
            * bk.sqrt(m.beta1)
            * bk.sqrt(L)
            / (m.n1 * bk.sqrt(m.delta) * bk.sqrt(lam**2 * m.beta1 - 1) * bk.sqrt(Delta))
        )
        if case_no == 7:
            k = 2 * L / (a2e * Delta)
            values = {
                "P0": k * sigma * Q0,
                "P1": k * (Q0 * tau + Q1 * sigma),
                "P2": k * (Q0 + Q1 * tau),
                "P3": k * Q1,
            }
        else:
            k = -2 * L / (a2e * Delta)
            values = {
                "P0": k * Q0 * (tau**2 + 2 * sigma) / 6,
                "P1": k * ((tau**2 + 2 * sigma) * Q1 + 6 * tau * Q0) / 6,
                "P2": k * (Q0 + Q1 * tau),
                "P3": k * Q1,
            }
            mu = bk.I * mu
        values.update(Q0=Q0, Q1=Q1)
        return MefmResult(values, lam, mu)

    if case_no in (9, 10):
        mu = free["mu"]
        D = m.delta * m.n1**2 * mu**2
        W = 2 + D * Delta
        _require(bk, W, "2 + delta*n1^2*mu^2*(tau^2 - 4*sigma)")
        _require(bk, Q1, "Q1")
        _require(bk, den, "alpha2*beta1*epsilon")
        root = bk.sqrt(Delta)
        if case_no == 9:
            P0 = D * Q1 * root * K * (Delta + root * tau) / (6 * den * W)
            Q0 = (tau + root) * Q1 / 2
        else:
            P0 = D * Q1 * root * K * (-Delta + root * tau) / (6 * den * W)
            Q0 = (tau - root) * Q1 / 2
        values = {
            "P0": P0,
            "P1": D * Q1 * K * Delta / (3 * den * W),
            "P2": 0,
            "P3": 0,
            "Q0": Q0,
            "Q1": Q1,
        }
        lam = sign * bk.sqrt(2 * m.alpha1 * m.beta1 + D * Delta) / (bk.sqrt(m.beta1) * bk.sqrt(W))
        return MefmResult(values, lam, mu)

    if case_no in (11, 12):
        Q0 = free["Q0"]
        _require(bk, den, "alpha2*beta1*epsilon")
        Lam = _lambda_poly(Q0, Q1, tau, sigma)
        _require(bk, Lam, "Lambda")
        sq = bk.sqrt(Lam)
        lam = sign * bk.sqrt(2) * bk.sqrt(m.alpha1 * m.beta1 + 1) / (2 * bk.sqrt(m.beta1))
        mu = sign * bk.sqrt(2) * Q1 / (bk.sqrt(m.delta) * m.n1 * bk.root4(Lam))
        if case_no == 11:
            inner = (
                -12 * Q0**5
                + 24 * Q1 * tau * Q0**4
                + (-24 * Q1**2 * sigma + 6 * sq - 12 * Q1**2 * tau**2) * Q0**3
                + (-12 * Q1 * tau * sq + 24 * sigma * tau * Q1**3) * Q0**2
                + (
                    5 * Q1**2 * tau**2 * sq
                    + 10 * Q1**2 * sigma * sq
                    + 4 * Q1**4 * sigma**2
                    + Q1**4 * tau**4
                    - 8 * Q1**4 * tau**2 * sigma
                )
                * Q0
                - 6 * Q1**3 * sigma * tau * sq
            )
            P0 = K * inner / (12 * den * Lam)
            P1 = Q1 * K * (sq - Q1**2 * tau**2 - 2 * Q1**2 * sigma + 6 * Q0 * Q1 * tau - 6 * Q0**2) / (
                12 * den * sq
            )
            mu = bk.I * mu
        else:
            inner = (
                12 * Q0**5
                - 24 * Q1 * tau * Q0**4
                + (24 * Q1**2 * sigma + 6 * sq + 12 * Q1**2 * tau**2) * Q0**3
                + (-12 * Q1 * tau * sq - 24 * sigma * tau * Q1**3) * Q0**2
                + (
                    5 * Q1**2 * tau**2 * sq
                    + 10 * Q1**2 * sigma * sq
                    - 4 * Q1**4 * sigma**2
                    - Q1**4 * tau**4
                    + 8 * Q1**4 * tau**2 * sigma
                )
                * Q0
                - 6 * Q1**3 * sigma * tau * sq
            )
            P0 = -K * inner / (12 * den * Lam)
            P1 = Q1 * K * (sq + Q1**2 * tau**2 + 2 * Q1**2 * sigma - 6 * Q0 * Q1 * tau + 6 * Q0**2) / (
                12 * den * sq
            )
        values = {"P0": P0, "P1": P1, "P2": 0, "P3": 0, "Q0": Q0, "Q1": Q1}
        return MefmResult(values, lam, mu, Lambda=Lam)

    if case_no in (13, 14):
        Q0 = free["Q0"]
        mu = free["mu"]
        _require(bk, den, "alpha2*beta1*epsilon")
        D = m.delta * m.n1**2 * mu**2
        if case_no == 13:
            _require(bk, D * tau**2 - 2, "delta*n1^2*mu^2*tau^2 - 2")
            a = -2 * D * K / (den * (D * tau**2 - 2))
            values = {
                "P0": 0,
                "P1": a * tau * Q0,
                "P2": a * (Q0 + tau * Q1),
                "P3": a * Q1,
            }
            lam_sq = (2 * m.alpha1 * m.beta1 - D * tau**2) / (m.beta1 * (2 - D * tau**2))
        else:
            _require(bk, D * tau**2 + 2, "delta*n1^2*mu^2*tau^2 + 2")
            b = 2 * D * K / (den * (D * tau**2 + 2))
            values = {
                "P0": b * tau**2 * Q0 / 6,
                "P1": b * (tau * Q0 + tau**2 * Q1 / 6),
                "P2": b * (Q0 + Q1 * tau),
                "P3": b * Q1,
            }
            lam_sq = (2 * m.alpha1 * m.beta1 + D * tau**2) / (m.beta1 * (D * tau**2 + 2))
        values.update(Q0=Q0, Q1=Q1)
        return MefmResult(values, sign * bk.sqrt(lam_sq), mu)

    if case_no == 15:
        Q0 = free["Q0"]
        lam = sign * free["lambda"]
        c = (m.alpha1 - lam**2) / (3 * a2e)
        values = {"P0": Q0 * c, "P1": Q1 * c, "P2": 0, "P3": 0, "Q0": Q0, "Q1": Q1}
        return MefmResult(values, lam, free["mu"])

    raise ValueError(f"caso MEFM inesistente: {case_no}")


def mu_from_lambda(lam: complex, tau: complex, sigma: complex, m: FormulaParams, bk: Any) -> Any:
    """
    Inverte la relazione di dispersione dei casi 9-10: mu dato lambda.

    mu^2 = 2*beta1*(alpha1 - lambda^2) / (delta*n1^2*Delta*(lambda^2*beta1 - 1))
    """
    Delta = tau**2 - 4 * sigma
    den = m.delta * m.n1**2 * Delta * (lam**2 * m.beta1 - 1)
    _require(bk, den, "delta*n1^2*(tau^2 - 4*sigma)*(lambda^2*beta1 - 1)")
    return bk.sqrt(2 * m.beta1 * (m.alpha1 - lam**2) / den)


# --- Valutazione ---


@dataclass(frozen=True)
class ReducedQuotient:
    """
    Quoziente P(E)/Q(E) dopo la cancellazione dei fattori comuni.

    Se Q divide P (entro la tolleranza) resta solo il polinomio quoziente
    e `denominator` è None.
    """

    numerator: Tuple[complex, ...]
    denominator: Optional[Tuple[complex, ...]]

    @property
    def is_constant(self) -> bool:
        return self.denominator is None and len(self.numerator) == 1


def _trim(coeffs: Sequence[complex]) -> np.ndarray:
    return P.polytrim(np.asarray(coeffs, dtype=complex))


def reduce_quotient(values: Mapping[str, complex]) -> ReducedQuotient:
    """
    Semplifica numericamente P/Q con la divisione polinomiale.

    Raises:
        DegenerateDenominator: Se Q0 = Q1 = 0.
    """
    num = _trim([values[f"P{i}"] for i in range(4)])
    den = _trim([values["Q0"], values["Q1"]])
    if not np.any(np.abs(den) > 0):
        raise DegenerateDenominator("Q0 + Q1*E")
    quo, rem = P.polydiv(num, den)
    scale = float(np.max(np.abs(num))) if num.size else 0.0
    if float(np.max(np.abs(rem))) <= REDUCTION_TOLERANCE * max(scale, 1e-300):
        quo = _trim(quo)
        return ReducedQuotient(tuple(complex(z) for z in quo), None)
    return ReducedQuotient(tuple(complex(z) for z in num), tuple(complex(z) for z in den))


def _horner(coeffs: Sequence[complex], E: ArrayOrJet) -> ArrayOrJet:
    acc: Any = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * E + c
    return acc


def _constant_like(value: complex, xi: ArrayOrJet) -> ArrayOrJet:
    if isinstance(xi, Jet):
        return Jet.constant(value)
    return np.full(np.shape(xi), value, dtype=complex)


def mefm_profile(
    reduced: ReducedQuotient,
    aux: AuxSet,
    tau: complex,
    sigma: complex,
    e: complex,
    xi: ArrayOrJet,
    factor: InnerFactor = InnerFactor.HALF,
) -> ArrayOrJet:
    """u(xi) per jet o array; le soluzioni costanti non valutano E."""
    if reduced.is_constant:
        return _constant_like(reduced.numerator[0], xi)
    E = aux_reciprocal(aux, tau, sigma, e, xi, factor)
    num = _horner(reduced.numerator, E)
    if reduced.denominator is None:
        return num
    return divide(num, _horner(reduced.denominator, E))
