# app/verify/identities.py

"""
Controlli di identità indipendenti dai singoli residui.

- forme esponenziali di sech e tanh per la soluzione di w' = sin(w);
- sech^2 + tanh^2 = 1 sui jet (tutte le derivate);
- invarianza per traslazione d'onda Phi(x + lambda*d, t + d) = Phi(x, t);
- indipendenza del caso 13 dalla scelta di (Q0, Q1);
- valore costante delle varianti razionali dei casi 9 e 10.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from app.catalog.registry import SolitonFamily, build, resolve
from app.catalog.singularities import nearest_distance
from app.jet.base import Jet
from app.jet.elementary import sech, tanh
from app.models.family.base import FamilyId
from app.models.materials import SET_A, derive_parameters
from app.verify.presets import default_inputs

log = logging.getLogger(__name__)

INVARIANCE_FAMILIES: Tuple[str, ...] = (
    "sg.case1.tanh.plus",
    "sg.case2.coth.minus",
    "sg.case5.tanh.plus",
    "mefm.case7.tanh.plus",
    "mefm.case13.exp.plus",
)
INVARIANCE_SHIFT = 0.7
INVARIANCE_TOLERANCE = 1e-10
GAUGE_TOLERANCE = 1e-12
GAUGE_PAIRS: Tuple[Tuple[F, F], ...] = ((F(2), F(2)), (F(1), F(3)), (F(-1, 2), F(5)))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    max_error: float
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_error": self.max_error,
            "detail": self.detail,
        }


def _check(name: str, errors: Sequence[float], tolerance: float, detail: str = "") -> IdentityCheck:
    worst = float(max(errors)) if len(errors) else 0.0
    passed = bool(len(errors)) and worst <= tolerance
    log.debug("identità %s: max errore %.3e", name, worst)
    return IdentityCheck(name, passed, worst, detail)


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a))


# --- 1. Identità esponenziali ---


def exponential_identities(p_values: Sequence[float] = (1.0, 2.5)) -> List[IdentityCheck]:
    """
    sin(w) = 2p*e^xi / (p^2*e^(2xi) + 1) = sech(xi + ln p)
    cos(w) = (p^2*e^(2xi) - 1) / (p^2*e^(2xi) + 1) = tanh(xi + ln p)
    """
    xi = np.linspace(-5.0, 5.0, 101)
    sech_err: List[float] = []
    tanh_err: List[float] = []
    for p in p_values:
        ex = np.exp(xi)
        shifted = xi + np.log(p)
        sin_w = 2 * p * ex / (p**2 * ex**2 + 1)
        cos_w = (p**2 * ex**2 - 1) / (p**2 * ex**2 + 1)
        sech_err.extend(np.abs(sin_w - sech(shifted.astype(complex))).tolist())
        tanh_err.extend(np.abs(cos_w - tanh(shifted.astype(complex))).tolist())
    return [
        _check("sech_esponenziale", sech_err, 1e-14),
        _check("tanh_esponenziale", tanh_err, 1e-14),
    ]


def pythagorean_identity(points: int = 20) -> IdentityCheck:
    """sech^2 + tanh^2 = 1, verificata sul jet completo."""
    errors = []
    one = Jet.constant(1)
    for x0 in np.linspace(-3.0, 3.0, points):
        z = Jet.variable(complex(x0))
        s, t = sech(z), tanh(z)
        total = s * s + t * t
        assert isinstance(total, Jet)
        errors.append(float(np.max(np.abs(total.c - one.c))))
    return _check("sech2_piu_tanh2", errors, 1e-13)


# --- 2. Invarianza e gauge ---


def _value(built: SolitonFamily, x: complex, t: complex) -> complex:
    xi = np.array([built.xi(x, t)], dtype=complex)
    with np.errstate(all="ignore"):
        return complex(np.asarray(built.profile(xi))[0])


def traveling_invariance(
    families: Sequence[str] = INVARIANCE_FAMILIES,
    shift: float = INVARIANCE_SHIFT,
    points: int = 20,
) -> IdentityCheck:
    errors = []
    for name in families:
        family = resolve(name)
        built = build(family, default_inputs(family))
        loci = built.singularities()
        for x in np.linspace(-4.0, 4.0, points):
            if nearest_distance(loci, complex(built.xi(x, 1.0))) < 1e-2:
                continue
            here = _value(built, x, 1.0)
            moved = _value(built, x + built.lam * shift, 1.0 + shift)
            errors.append(_rel(here, moved))
    return _check(
        "invarianza_traslazione",
        errors,
        INVARIANCE_TOLERANCE,
        f"{len(families)} famiglie, spostamento {shift}",
    )


def case13_gauge(points: int = 20) -> IdentityCheck:
    """Il profilo del caso 13 non dipende da (Q0, Q1)."""
    family = FamilyId.parse("mefm.case13.exp.plus")
    base = default_inputs(family)
    profiles = []
    xi = np.linspace(0.1, 3.0, points).astype(complex)
    for q0, q1 in GAUGE_PAIRS:
        built = build(family, base.with_values(Q0=q0, Q1=q1))
        profiles.append(np.asarray(built.profile(xi), dtype=complex))
    reference = profiles[0]
    errors = [
        float(np.max(np.abs(other - reference) / np.maximum(1.0, np.abs(reference))))
        for other in profiles[1:]
    ]
    return _check("gauge_caso13", errors, GAUGE_TOLERANCE, f"coppie {len(GAUGE_PAIRS)}")


# --- 3. Varianti razionali dei casi 9-10 ---


def rational_constant_value(mu: F = F(1, 4), tau: F = F(5, 2), sigma: F = F(5, 2)) -> F:
    """D*Delta*(a1*b1 - 1) / (3*a2*b1*eps*W), W = 2 + D*Delta, in forma esatta."""
    m = derive_parameters(SET_A)
    D = m.delta * m.n1**2 * mu**2
    Delta = tau**2 - 4 * sigma
    W = 2 + D * Delta
    return D * Delta * (m.alpha1 * m.beta1 - 1) / (3 * m.alpha2 * m.beta1 * m.epsilon * W)


def rational_constants(points: int = 20) -> IdentityCheck:
    expected = complex(float(rational_constant_value()))
    errors = []
    xi = np.linspace(-3.0, 3.0, points).astype(complex)
    for name in ("mefm.case9.rational.plus", "mefm.case10.rational.plus"):
        family = resolve(name)
        built = build(family, default_inputs(family))
        values = np.broadcast_to(np.asarray(built.profile(xi), dtype=complex), xi.shape)
        errors.extend(abs(v - expected) / abs(expected) for v in values)
    return _check("costante_razionale_casi_9_10", errors, 1e-12, f"atteso {expected.real:.6e}")


def identity_suite() -> List[IdentityCheck]:
    """Esegue tutti i controlli; nessuno solleva eccezioni per un esito negativo."""
    checks = exponential_identities()
    checks.append(pythagorean_identity())
    checks.append(traveling_invariance())
    checks.append(case13_gauge())
    checks.append(rational_constants())
    for check in checks:
        log.info("identità %s: %s", check.name, "ok" if check.passed else "FALLITA")
    return checks
