# app/catalog/sine_gordon.py

"""
Famiglie del metodo sine-Gordon esteso (casi 1-6).

Ansatz con N=2: u = A0 + A1*T + B1*S + T*(A2*T + B2*S), dove
(T, S) = (tanh xi, sech xi) per la variante TANH e
(T, S) = (coth xi, i*csch xi) per la variante COTH. Le due coppie
soddisfano le stesse relazioni (T' = S^2, S' = -T*S, S^2 = 1 - T^2),
quindi i coefficienti sono identici per le due varianti.

Con D = delta*n1^2*mu^2, K = alpha1*beta1 - 1, den = alpha2*beta1*epsilon.
"""

from typing import Any, Dict, Tuple

from app.catalog.backends import FormulaParams
from app.errors import DegenerateDenominator
from app.jet.elementary import ArrayOrJet, coth, csch, divide, sech, tanh
from app.models.family.base import Variant


def _require(bk: Any, value: Any, expression: str) -> None:
    if bk.is_zero(value):
        raise DegenerateDenominator(expression, value if bk.name == "complex" else None)


def sg_coefficients(case_no: int, mu: Any, m: FormulaParams, bk: Any) -> Tuple[Dict[str, Any], Any]:
    """
    Coefficienti (A0, A1, A2, B1, B2) e lambda^2 di un caso sine-Gordon.

    Args:
        case_no: Caso 1..6.
        mu: Numero d'onda (libero), nel tipo del backend.
        m: Parametri del materiale nel tipo del backend.
        bk: Backend numerico o simbolico.

    Returns:
        (coefficienti, lambda^2): il segno di lambda è applicato dal chiamante.

    Raises:
        DegenerateDenominator: Se si annulla il denominatore del caso.
    """
    D = m.delta * m.n1**2 * mu**2
    K = m.alpha1 * m.beta1 - 1
    den = m.alpha2 * m.beta1 * m.epsilon
    _require(bk, den, "alpha2*beta1*epsilon")

    if case_no == 1:
        W = 1 + 2 * D
        _require(bk, W, "1 + 2*delta*n1^2*mu^2")
        A2 = D * K / (den * W)
        A0 = -A2 / 3
        lam_sq = (m.alpha1 * m.beta1 + 2 * D) / (m.beta1 * W)
        B2 = 0
    elif case_no == 2:
        W = 2 * D - 1
        _require(bk, W, "-1 + 2*delta*n1^2*mu^2")
        A2 = -D * K / (den * W)
        A0 = -A2
        lam_sq = (2 * D - m.alpha1 * m.beta1) / (m.beta1 * W)
        B2 = 0
    elif case_no in (3, 4):
        W = D - 2
        _require(bk, W, "delta*n1^2*mu^2 - 2")
        A2 = -D * K / (den * W)
        A0 = -A2
        lam_sq = (D - 2 * m.alpha1 * m.beta1) / (m.beta1 * W)
        B2 = (-1 if case_no == 3 else 1) * bk.I * A2
    elif case_no in (5, 6):
        W = D + 2
        _require(bk, W, "delta*n1^2*mu^2 + 2")
        A2 = D * K / (den * W)
        A0 = -2 * A2 / 3
        lam_sq = (2 * m.alpha1 * m.beta1 + D) / (m.beta1 * W)
        B2 = (1 if case_no == 5 else -1) * bk.I * A2
    else:
        raise ValueError(f"caso sine-Gordon inesistente: {case_no}")

    return {"A0": A0, "A1": 0, "A2": A2, "B1": 0, "B2": B2}, lam_sq


def coth_pole_cancels(coefficients: Dict[str, complex]) -> bool:
    """True se B2 = +i*A2: nella variante COTH il polo in xi = 0 è eliminabile."""
    A2, B2 = complex(coefficients["A2"]), complex(coefficients["B2"])
    return A2 != 0 and abs(B2 - 1j * A2) <= 1e-12 * abs(A2)


def sg_profile(coefficients: Dict[str, complex], variant: Variant, xi: ArrayOrJet) -> ArrayOrJet:
    """
    u(xi) dall'ansatz, per jet o array.

    Con (coth, i*csch) e B2 = +i*A2 i due termini divergono in xi = 0 e si
    cancellano: si valuta la forma equivalente A0 + A2*cosh/(cosh + 1).
    """
    c = coefficients
    if variant is Variant.TANH:
        T, S = tanh(xi), sech(xi)
    elif coth_pole_cancels(c):
        return c["A0"] + divide(c["A2"], 1 + sech(xi))
    else:
        T, S = coth(xi), 1j * csch(xi)
    return c["A0"] + c["A1"] * T + c["B1"] * S + T * (c["A2"] * T + c["B2"] * S)
