# app/cas/candidates.py

"""
Controllo delle assegnazioni pubblicate contro i sistemi rigenerati.

Le assegnazioni vengono dalle stesse formule del catalogo valutate con il
backend simbolico (parametri del materiale, mu, lambda, tau, sigma, Q0, Q1
lasciati simbolici). Il residuo di ogni equazione viene ridotto in forma
esatta; se i radicali impediscono di decidere, si ricorre a una
valutazione numerica ad alta precisione in punti casuali.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Union

import sympy as sp

from app.cas.systems import MATERIAL, AlgebraicSystem, AuxVariant, lam, mu, sigma, tau
from app.catalog.backends import SYMBOLIC
from app.catalog.mefm import mefm_coefficients
from app.catalog.sine_gordon import sg_coefficients
from app.errors import IncompleteAssignment, UnknownFamily
from app.models.family.base import Branch, Method

log = logging.getLogger(__name__)

Q0, Q1 = sp.symbols("Q0 Q1")

# cifre e soglia del controllo numerico di riserva
NUMERIC_DIGITS = 50
NUMERIC_THRESHOLD = sp.Float("1e-30")
NUMERIC_SAMPLES = 3


class Verdict(str, Enum):
    ZERO = "zero"
    ZERO_NUMERIC = "zero_numeric"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class EquationResidual:
    index: int
    label: str
    residual: sp.Expr
    verdict: Verdict

    @property
    def vanishes(self) -> bool:
        return self.verdict is not Verdict.NONZERO

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "label": self.label,
            "verdict": self.verdict.value,
            "residual": "0" if self.verdict is Verdict.ZERO else str(self.residual),
        }


# --- Assegnazioni pubblicate ---


def aux_for_case(case_no: int) -> AuxVariant:
    """Variante dell'equazione ausiliaria in cui vive un caso MEFM."""
    return AuxVariant.SIGMA0 if case_no in (13, 14, 15) else AuxVariant.FULL


def published_assignment(
    method: Method, case_no: int, branch: Branch = Branch.PLUS
) -> Dict[sp.Symbol, sp.Expr]:
    """
    Assegnazione incognita -> espressione esatta di un caso pubblicato.

    Raises:
        UnknownFamily: Se il caso non esiste per il metodo.
    """
    m = MATERIAL
    if method is Method.SINE_GORDON:
        if not 1 <= case_no <= 6:
            raise UnknownFamily(f"{method.value}.case{case_no}")
        values, lam_sq = sg_coefficients(case_no, mu, m, SYMBOLIC)
        out = {sp.Symbol(k): sp.sympify(v) for k, v in values.items()}
        out[lam] = branch.sign * sp.sqrt(lam_sq)
        out[mu] = mu
        return out

    if not 7 <= case_no <= 15:
        raise UnknownFamily(f"{method.value}.case{case_no}")
    free: Dict[str, Any] = {"mu": mu, "lambda": lam, "tau": tau, "Q0": Q0, "Q1": Q1}
    free["sigma"] = 0 if case_no in (13, 14, 15) else sigma
    result = mefm_coefficients(case_no, branch.sign, free, m, SYMBOLIC)
    out = {sp.Symbol(k): sp.sympify(v) for k, v in result.values.items()}
    out[lam] = sp.sympify(result.lam)
    out[mu] = sp.sympify(result.mu)
    return out


# --- Controllo ---


def _has_radicals(expr: sp.Expr) -> bool:
    return any(not p.exp.is_Integer for p in expr.atoms(sp.Pow))


def _reduce(expr: sp.Expr) -> sp.Expr:
    expr = sp.together(sp.expand(expr))
    num = sp.expand(sp.numer(expr))
    if num == 0 or not _has_radicals(num):
        return num
    return sp.simplify(num)


def _numeric_zero(expr: sp.Expr, seed: int) -> bool:
    rng = random.Random(seed)
    symbols = sorted(expr.free_symbols, key=str)
    for _ in range(NUMERIC_SAMPLES):
        point = {s: sp.Rational(rng.randint(5, 30), 10) for s in symbols}
        value = sp.N(expr.subs(point), NUMERIC_DIGITS)
        if not value.is_number or abs(complex(value)) > NUMERIC_THRESHOLD:
            return False
    return True


def check_candidate(
    system: AlgebraicSystem,
    assignment: Mapping[Union[str, sp.Symbol], Any],
    seed: int = 0,
) -> List[EquationResidual]:
    """
    Residuo di ogni equazione del sistema dopo la sostituzione.

    Args:
        system: Sistema generato da `build_sg_system` o `build_mefm_system`.
        assignment: Incognita (simbolo o nome) -> espressione; i simboli
            liberi (mu, tau, sigma, Q0, Q1, ...) possono restare simbolici.
        seed: Seme del controllo numerico di riserva.

    Returns:
        Una voce per equazione, nell'ordine del sistema.

    Raises:
        IncompleteAssignment: Se manca qualche incognita.
    """
    subs = {sp.Symbol(k) if isinstance(k, str) else k: sp.sympify(v) for k, v in assignment.items()}
    missing = [str(u) for u in system.unknowns if u not in subs]
    if missing:
        raise IncompleteAssignment(missing)

    results: List[EquationResidual] = []
    for index, eq in enumerate(system.equations):
        label = system.labels[index] if index < len(system.labels) else str(index)
        residual = _reduce(eq.xreplace(subs))
        if residual == 0:
            verdict = Verdict.ZERO
        elif _numeric_zero(residual, seed + index):
            verdict = Verdict.ZERO_NUMERIC
        else:
            verdict = Verdict.NONZERO
        results.append(EquationResidual(index, label, residual, verdict))
    log.debug(
        "Controllo candidato: %d/%d equazioni annullate",
        sum(r.vanishes for r in results),
        len(results),
    )
    return results


def all_vanish(results: List[EquationResidual]) -> bool:
    return all(r.vanishes for r in results)
