# app/catalog/auxiliary.py

"""
Soluzioni chiuse dell'equazione ausiliaria del metodo MEFM.

Con y = exp(phi) l'equazione phi' = exp(-phi) + sigma*exp(phi) + tau diventa
y' = 1 + tau*y + sigma*y^2; l'ansatz usa E = exp(-phi) = 1/y.

Set 1: sigma != 0, Delta > 0  (tanh)
Set 2: sigma != 0, Delta < 0  (tan)
Set 3: sigma = 0, tau != 0    (esponenziale)
Set 4: sigma != 0, tau != 0, Delta = 0 (razionale)
Set 5: sigma = tau = 0        (razionale)

con Delta = tau^2 - 4*sigma.
"""

import cmath
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from app.errors import GateViolated
from app.jet.elementary import ArrayOrJet, divide, exp, tan, tanh


class AuxSet(str, Enum):
    SET1 = "set1"
    SET2 = "set2"
    SET3 = "set3"
    SET4 = "set4"
    SET5 = "set5"


class InnerFactor(str, Enum):
    """Fattore dentro tanh/tan per i Set 1-2: radice/2 oppure radice/sigma."""

    HALF = "half"
    PRINTED = "printed"


def discriminant(tau: Any, sigma: Any) -> Any:
    return tau * tau - 4 * sigma


def check_gate(aux: AuxSet, tau: Fraction, sigma: Fraction) -> None:
    """
    Verifica la condizione di attivazione del Set.

    Raises:
        GateViolated: Con il predicato violato.
    """
    delta = discriminant(tau, sigma)
    if aux is AuxSet.SET1:
        if sigma == 0:
            raise GateViolated("sigma != 0", f"sigma = {sigma}")
        if not delta > 0:
            raise GateViolated("tau^2 - 4*sigma > 0", f"tau^2 - 4*sigma = {delta}")
    elif aux is AuxSet.SET2:
        if sigma == 0:
            raise GateViolated("sigma != 0", f"sigma = {sigma}")
        if not delta < 0:
            raise GateViolated("tau^2 - 4*sigma < 0", f"tau^2 - 4*sigma = {delta}")
    elif aux is AuxSet.SET3:
        if sigma != 0:
            raise GateViolated("sigma = 0", f"sigma = {sigma}")
        if tau == 0:
            raise GateViolated("tau != 0", "tau = 0")
    elif aux is AuxSet.SET4:
        if sigma == 0 or tau == 0:
            raise GateViolated("sigma != 0 and tau != 0", f"tau = {tau}, sigma = {sigma}")
        if delta != 0:
            raise GateViolated("tau^2 - 4*sigma = 0", f"tau^2 - 4*sigma = {delta}")
    elif aux is AuxSet.SET5:
        if sigma != 0 or tau != 0:
            raise GateViolated("sigma = tau = 0", f"tau = {tau}, sigma = {sigma}")


def inner_factor(aux: AuxSet, tau: complex, sigma: complex, factor: InnerFactor) -> complex:
    """k tale che l'argomento di tanh/tan sia k*(xi + e)."""
    if aux is AuxSet.SET1:
        root = cmath.sqrt(discriminant(tau, sigma))
    else:
        root = cmath.sqrt(-discriminant(tau, sigma))
    return root / 2 if factor is InnerFactor.HALF else root / sigma


def aux_solution(
    aux: AuxSet,
    tau: complex,
    sigma: complex,
    e: complex,
    xi: ArrayOrJet,
    factor: InnerFactor = InnerFactor.HALF,
) -> ArrayOrJet:
    """
    y(xi) = exp(phi(xi)) del Set richiesto, per jet o array.

    Il gate non è controllato qui: i chiamanti passano da `check_gate`.
    """
    z = xi + e
    if aux is AuxSet.SET1:
        root = cmath.sqrt(discriminant(tau, sigma))
        k = inner_factor(aux, tau, sigma, factor)
        return -(root / (2 * sigma)) * tanh(k * z) - tau / (2 * sigma)
    if aux is AuxSet.SET2:
        root = cmath.sqrt(-discriminant(tau, sigma))
        k = inner_factor(aux, tau, sigma, factor)
        return (root / (2 * sigma)) * tan(k * z) - tau / (2 * sigma)
    if aux is AuxSet.SET3:
        return (exp(tau * z) - 1) * (1 / tau)
    if aux is AuxSet.SET4:
        return divide(-(2 * tau * z + 4), tau * tau * z)
    return z


def aux_reciprocal(
    aux: AuxSet,
    tau: complex,
    sigma: complex,
    e: complex,
    xi: ArrayOrJet,
    factor: InnerFactor = InnerFactor.HALF,
) -> ArrayOrJet:
    """
    E(xi) = 1/y(xi), per jet o array.

    Nel Set 2 i poli di tan sono zeri di E: con P = exp(2i*k*z) si usa
    E = 2*sigma*(P + 1) / ((-i*r - tau)*P + (i*r - tau)), regolare dove y diverge.
    """
    if aux is AuxSet.SET2:
        root = cmath.sqrt(-discriminant(tau, sigma))
        k = inner_factor(aux, tau, sigma, factor)
        w = exp(2j * k * (xi + e))
        return divide(2 * sigma * (w + 1), (-1j * root - tau) * w + (1j * root - tau))
    return divide(1, aux_solution(aux, tau, sigma, e, xi, factor))


def aux_set_for(sigma: Optional[Fraction], tau: Optional[Fraction]) -> AuxSet:
    """Set selezionato dai valori di (tau, sigma)."""
    sigma = sigma or Fraction(0)
    tau = tau or Fraction(0)
    delta = discriminant(tau, sigma)
    if sigma == 0:
        return AuxSet.SET3 if tau != 0 else AuxSet.SET5
    if delta > 0:
        return AuxSet.SET1
    if delta < 0:
        return AuxSet.SET2
    return AuxSet.SET4
