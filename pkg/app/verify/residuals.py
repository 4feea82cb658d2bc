# app/verify/residuals.py

"""
Residui puntuali: equazione del moto, ODE ridotta e ODE ausiliarie.

Le derivate arrivano dai jet in xi; per l'equazione alle derivate parziali
si usa d/dx = mu * d/dxi e d/dt = -lambda*mu * d/dxi.
"""

import logging
from typing import List, Union

from app.catalog.auxiliary import AuxSet, InnerFactor, aux_solution, check_gate
from app.catalog.backends import COMPLEX
from app.catalog.registry import SolitonFamily, build, jet_at, resolve
from app.errors import JetError, SingularPoint
from app.jet.base import Jet, current_pole_floor
from app.models.family.base import FamilyId
from app.models.family.inputs import FamilyInputs
from app.utils.rational import to_fraction

log = logging.getLogger(__name__)

# soglia della normalizzazione relativa
NORM_FLOOR = 1e-300


def relative(terms: List[complex]) -> complex:
    """Somma dei termini divisa per il modulo del termine più grande."""
    scale = max([abs(term) for term in terms] + [NORM_FLOOR])
    return sum(terms) / scale


# --- 1. Equazione del moto ---


def pde_terms(built: SolitonFamily, jet: Jet) -> List[complex]:
    """
    I cinque termini di
    Phi_tt - a1*Phi_xx - (n1^2*delta/2)*Phi_ttxx + (n1^2*delta/(2*b1))*Phi_xxxx
    + 6*a2*eps*(Phi_x^2 + Phi*Phi_xx).
    """
    m = COMPLEX.params(built.inputs.material)
    lam, mu = built.lam, built.mu
    u0, u1, u2, u4 = jet.value, jet.derivative(1), jet.derivative(2), jet.derivative(4)
    half = m.n1**2 * m.delta / 2
    return [
        lam**2 * mu**2 * u2,
        -m.alpha1 * mu**2 * u2,
        -half * lam**2 * mu**4 * u4,
        half / m.beta1 * mu**4 * u4,
        6 * m.alpha2 * m.epsilon * mu**2 * (u1 * u1 + u0 * u2),
    ]


def pde_residual_at(built: SolitonFamily, x: float, t: float) -> complex:
    xi = complex(built.xi(x, t))
    return relative(pde_terms(built, jet_at(built, xi)))


def pde_residual(
    family: Union[FamilyId, str], inputs: FamilyInputs, x: float, t: float
) -> complex:
    """
    Residuo relativo dell'equazione del moto in (x, t).

    Raises:
        SingularPoint: Punto non ammissibile.
    """
    return pde_residual_at(build(resolve(family), inputs), x, t)


# --- 2. ODE ridotta ---


def ode_terms(built: SolitonFamily, jet: Jet) -> List[complex]:
    """(n1^2*mu^2*delta/2)(1/b1 - lambda^2)*u'' , 3*a2*eps*u^2 , (lambda^2 - a1)*u."""
    m = COMPLEX.params(built.inputs.material)
    lam, mu = built.lam, built.mu
    a = m.n1**2 * mu**2 * m.delta / 2 * (1 / m.beta1 - lam**2)
    u0 = jet.value
    return [
        a * jet.derivative(2),
        3 * m.alpha2 * m.epsilon * u0 * u0,
        (lam**2 - m.alpha1) * u0,
    ]


def ode_residual_at(built: SolitonFamily, xi: complex, relative_norm: bool = False) -> complex:
    terms = ode_terms(built, jet_at(built, xi))
    return relative(terms) if relative_norm else sum(terms)


def ode_residual(family: Union[FamilyId, str], inputs: FamilyInputs, xi: float) -> complex:
    """
    Residuo assoluto dell'ODE ridotta in xi.

    Raises:
        SingularPoint: Punto non ammissibile.
    """
    return ode_residual_at(build(resolve(family), inputs), complex(xi))


def printed_ode_residual_at(built: SolitonFamily, xi: complex) -> complex:
    """Residuo relativo dell'ODE ridotta per la forma chiusa stampata."""
    try:
        jet = built.printed(Jet.variable(xi))
    except JetError as e:
        raise SingularPoint(xi, str(e)) from e
    assert isinstance(jet, Jet)
    if not jet.is_finite():
        raise SingularPoint(xi, "jet non finito")
    return relative(ode_terms(built, jet))


# --- 3. ODE ausiliarie ---


def aux_residual(
    set_id: Union[AuxSet, str],
    tau: object,
    sigma: object,
    e: object,
    xi: float,
    factor: InnerFactor = InnerFactor.HALF,
) -> float:
    """
    |phi'(xi) - (exp(-phi) + sigma*exp(phi) + tau)| con y = exp(phi).

    Per y = exp(phi) si ha phi' = y'/y, quindi il residuo è
    |y'/y - 1/y - sigma*y - tau|.

    Args:
        set_id: Set ausiliario.
        tau, sigma, e: Parametri del Set (razionali o numeri).
        xi: Punto di valutazione.
        factor: Fattore interno dei Set 1-2.

    Raises:
        GateViolated: Se (tau, sigma) non rispettano il gate del Set.
        SingularPoint: Se y è nullo o non finito in xi.
    """
    aux = AuxSet(set_id)
    tau_q = to_fraction(tau, "tau")  # type: ignore[arg-type]
    sigma_q = to_fraction(sigma, "sigma")  # type: ignore[arg-type]
    check_gate(aux, tau_q, sigma_q)
    tau_c, sigma_c = complex(float(tau_q)), complex(float(sigma_q))
    e_c = complex(float(to_fraction(e, "e")))  # type: ignore[arg-type]
    point = complex(xi)
    try:
        y = aux_solution(aux, tau_c, sigma_c, e_c, Jet.variable(point), factor)
    except JetError as exc:
        raise SingularPoint(point, str(exc)) from exc
    assert isinstance(y, Jet)
    if not y.is_finite() or abs(y.value) <= current_pole_floor():
        raise SingularPoint(point, "y nullo o non finito")
    y0, y1 = y.value, y.derivative(1)
    return abs(y1 / y0 - 1 / y0 - sigma_c * y0 - tau_c)
