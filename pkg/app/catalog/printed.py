# app/catalog/printed.py

"""
Forme chiuse semplificate, così come sono state pubblicate.

Servono solo come confronto: la valutazione del catalogo passa dall'ansatz
con i coefficienti del caso. Il residuo ODE di queste forme viene riportato
nelle note della verifica, così un errore di stampa resta visibile senza
invalidare la famiglia.

Tutte le funzioni ricevono xi = mu*(x - lambda*t) (jet o array) e un
dizionario di scalari complessi preparato dal registro.
"""

import cmath
from typing import Callable, Dict, Mapping, Tuple

from app.jet.elementary import ArrayOrJet, coth, csch, divide, exp, sech, tan, tanh
from app.models.family.base import FamilyId, Method, Variant

Scalars = Mapping[str, complex]
PrintedForm = Callable[[Scalars, ArrayOrJet], ArrayOrJet]

# --- Sine-Gordon: A2 * (a*T^2 + b*T*X + c), X = sech oppure csch ---

_SG_BRACKETS: Dict[Tuple[int, Variant], Tuple[complex, complex, complex]] = {
    (1, Variant.TANH): (1 / 3, 0, -1 / 3),
    (1, Variant.COTH): (1 / 3, 0, -1 / 3),
    (2, Variant.TANH): (1, 0, -1),
    (2, Variant.COTH): (1, 0, -1),
    (3, Variant.TANH): (1, -1j, -1),
    (3, Variant.COTH): (-1, 1, 1),
    (4, Variant.TANH): (1, 1j, -1),
    (4, Variant.COTH): (1, -1, -1),
    (5, Variant.TANH): (1, 1j, -2 / 3),
    (5, Variant.COTH): (1, -1, -2 / 3),
    (6, Variant.TANH): (1, -1j, -2 / 3),
    (6, Variant.COTH): (1, 1, -2 / 3),
}


def _sg_form(case_no: int, variant: Variant) -> PrintedForm:
    a, b, c = _SG_BRACKETS[(case_no, variant)]

    def form(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
        if variant is Variant.TANH:
            T, X = tanh(xi), sech(xi)
        else:
            T, X = coth(xi), csch(xi)
        return s["A2"] * (a * T * T + b * T * X + c)

    return form


# --- MEFM ---


def _case7_tanh(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau, sigma, Q0, Q1, Delta = s["tau"], s["sigma"], s["Q0"], s["Q1"], s["Delta"]
    r = cmath.sqrt(Delta)
    T = tanh(r / 2 * (xi + s["e"]))
    pref = 2 * sigma * s["L"] / (s["a2e"] * Delta)
    num = (Q0 * r**3 * T + Delta * (tau * Q0 - 2 * sigma * Q1)) * (T * T - 1)
    den = (r * T + tau) ** 2 * (Q0 * r * T + tau * Q0 - 2 * sigma * Q1)
    return pref * divide(num, den)


def _case7_tan(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau, sigma, Q0, Q1, Delta = s["tau"], s["sigma"], s["Q0"], s["Q1"], s["Delta"]
    q = cmath.sqrt(-Delta)
    T = tan(q / 2 * (xi + s["e"]))
    pref = -2 * sigma * s["L"] / (s["a2e"] * Delta)
    num = -Q0 * q**3 * T * T * T + (Q0 * q * T + (T * T + 1) * (tau * Q0 - 2 * sigma * Q1)) * Delta
    den = (q * T + tau) ** 2 * (Q0 * q * T + tau * Q0 - 2 * sigma * Q1)
    return pref * divide(num, den)


def _case8_tanh(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau, sigma, Q0, Q1, Delta = s["tau"], s["sigma"], s["Q0"], s["Q1"], s["Delta"]
    r = cmath.sqrt(Delta)
    T = tanh(r / 2 * (xi + s["e"]))
    den = s["a2e"] * Delta * (r * T + tau) ** 2 * (Q0 * r * T + Q0 * tau - 2 * Q1 * sigma)
    odd = (
        r**3
        / 3
        * (Q0 * (tau**2 + 2 * sigma) * T * T - 6 * Q0 * sigma + 3 * Q0 * tau**2 - 4 * Q1 * sigma * tau)
        * T
    )
    quad = Q0 * tau**3 - 2 / 3 * Q1 * tau**2 * sigma - 2 * Q0 * sigma * tau - 4 / 3 * Q1 * sigma**2
    even = Delta * (quad * T * T + (tau**2 - 6 * sigma) * (Q0 * tau - 2 * Q1 * sigma) / 3)
    return -s["L"] * divide(odd + even, den)


def _case8_tan(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau, sigma, Q0, Q1, Delta = s["tau"], s["sigma"], s["Q0"], s["Q1"], s["Delta"]
    q = cmath.sqrt(-Delta)
    T = tan(q / 2 * (xi + s["e"]))
    den = s["a2e"] * Delta * (q * T + tau) ** 2 * (Q0 * q * T + Q0 * tau - 2 * Q1 * sigma)
    cubic = -(q**3) / 3 * (tau**2 + 2 * sigma) * T * T * T
    linear = Delta * (Q0 * tau**2 - 4 / 3 * Q1 * tau * sigma - 2 * Q0 * sigma) * q * T
    quad = Q0 * tau**3 - 2 / 3 * Q1 * tau**2 * sigma - 2 * Q0 * tau * sigma - 4 / 3 * Q1 * sigma**2
    even = Delta * (quad * T * T - (tau**2 - 6 * sigma) * (Q0 * tau - 2 * Q1 * sigma) / 3)
    return -s["L"] * divide(cubic + linear + even, den)


def _case9_tanh(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau, sigma, Delta = s["tau"], s["sigma"], s["Delta"]
    r = cmath.sqrt(Delta)
    # argomento senza costante di integrazione
    T = tanh(r / 2 * xi)
    g = tau**2 + r * tau - 4 * sigma
    num = (tau**4 - 8 * tau**2 * sigma + r**3 * tau + 16 * sigma**2) * T + Delta * g
    return s["pref9"] * divide(num, (T + 1) * g)


def _case10_tanh(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau, sigma, Delta = s["tau"], s["sigma"], s["Delta"]
    r = cmath.sqrt(Delta)
    T = tanh(r / 2 * xi)
    g = tau**2 - r * tau - 4 * sigma
    num = (-(tau**4) + 8 * tau**2 * sigma + r**3 * tau - 16 * sigma**2) * T + Delta * g
    return -s["pref9"] * divide(num, (T - 1) * g)


def _case9_rational(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    return s["pref9"] * s["Delta"] + 0 * xi


def _case11_form(trig: str) -> PrintedForm:
    def form(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
        tau, sigma, Delta = s["tau"], s["sigma"], s["Delta"]
        # la costante e compare fuori dal fattore di scala
        if trig == "tanh":
            r = cmath.sqrt(Delta)
            y = -(r / (2 * sigma)) * tanh(r / 2 * xi + s["e"]) - tau / (2 * sigma)
        else:
            q = cmath.sqrt(-Delta)
            y = -(q / (2 * sigma)) * tan(q / 2 * xi + s["e"]) - tau / (2 * sigma)
        E = divide(1, y)
        return divide(s["P0"] + s["P1"] * E, s["Q0"] + s["Q1"] * E)

    return form


def _case13_exp(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau = s["tau"]
    X = exp(tau * (xi + s["e"]))
    D, K = s["D"], s["K"]
    pref = -2 * D * tau**2 * K / (s["den"] * (D * tau**2 - 2))
    return pref * divide(X, (X - 1) * (X - 1))


def _case14_exp(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    tau = s["tau"]
    X = exp(tau * (xi + s["e"]))
    D, K = s["D"], s["K"]
    pref = K * D * tau**2 / (3 * s["den"] * (D * tau**2 + 2))
    return pref * divide(X * X + 4 * X + 1, (X - 1) * (X - 1))


def _case15_rational(s: Scalars, xi: ArrayOrJet) -> ArrayOrJet:
    return -s["L"] / (3 * s["a2e"]) + 0 * xi


_MEFM_FORMS: Dict[Tuple[int, Variant], PrintedForm] = {
    (7, Variant.TANH): _case7_tanh,
    (7, Variant.TAN): _case7_tan,
    (8, Variant.TANH): _case8_tanh,
    (8, Variant.TAN): _case8_tan,
    (9, Variant.TANH): _case9_tanh,
    (9, Variant.RATIONAL): _case9_rational,
    (10, Variant.TANH): _case10_tanh,
    (10, Variant.RATIONAL): _case9_rational,
    (11, Variant.TANH): _case11_form("tanh"),
    (11, Variant.TAN): _case11_form("tan"),
    (12, Variant.TANH): _case11_form("tanh"),
    (12, Variant.TAN): _case11_form("tan"),
    (13, Variant.EXP): _case13_exp,
    (14, Variant.EXP): _case14_exp,
    (15, Variant.RATIONAL): _case15_rational,
}


def printed_form(family: FamilyId) -> PrintedForm:
    """Forma stampata della famiglia (stessa per i due rami: il ramo è in xi)."""
    if family.method is Method.SINE_GORDON:
        return _sg_form(family.case_no, family.variant)
    return _MEFM_FORMS[(family.case_no, family.variant)]
