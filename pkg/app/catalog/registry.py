# app/catalog/registry.py

"""
Registro delle famiglie di soluzioni.

Il registro è una tabella immutabile di `FamilySpec` (metodo, caso,
variante, classificazione, parametri liberi, vincoli). `build` costruisce
una `SolitonFamily` a partire dagli input: controlla i parametri richiesti
e i gate, calcola i coefficienti con il backend complesso e prepara il
profilo u(xi), valutabile su array (griglie) o su jet (verifica).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from app.catalog.auxiliary import AuxSet, InnerFactor, check_gate
from app.catalog.backends import COMPLEX
from app.catalog.mefm import ReducedQuotient, mefm_coefficients, mefm_profile, reduce_quotient
from app.catalog.printed import printed_form
from app.catalog.sine_gordon import coth_pole_cancels, sg_coefficients, sg_profile
from app.catalog.singularities import (
    Locus,
    LocusKind,
    aux_infinity_loci,
    aux_level_loci,
    nearest_distance,
    sg_coth_loci,
    sg_tanh_loci,
)
from app.errors import JetError, SingularPoint, UnknownFamily
from app.jet.base import Jet, current_pole_floor
from app.jet.elementary import ArrayOrJet
from app.models.family import (
    INPUT_FIELDS,
    Branch,
    Classification,
    CoefficientSet,
    FamilyId,
    FamilyInputs,
    Method,
    Variant,
    validate_denominator_pair,
    validate_real,
    validate_required,
)

log = logging.getLogger(__name__)

SG = Method.SINE_GORDON
MEFM = Method.MEFM


@dataclass(frozen=True)
class FamilySpec:
    method: Method
    case_no: int
    variant: Variant
    classification: Classification
    free: Tuple[str, ...]
    constraint: str
    aux: Optional[AuxSet] = None

    @property
    def key(self) -> Tuple[Method, int, Variant]:
        return (self.method, self.case_no, self.variant)


# --- 1. Tabella delle famiglie ---

_SG_DENOMINATORS = {
    1: "1 + 2*delta*n1^2*mu^2 != 0",
    2: "2*delta*n1^2*mu^2 - 1 != 0",
    3: "delta*n1^2*mu^2 - 2 != 0",
    4: "delta*n1^2*mu^2 - 2 != 0",
    5: "delta*n1^2*mu^2 + 2 != 0",
    6: "delta*n1^2*mu^2 + 2 != 0",
}

_GATES = {
    AuxSet.SET1: "sigma != 0, tau^2 - 4*sigma > 0",
    AuxSet.SET2: "sigma != 0, tau^2 - 4*sigma < 0",
    AuxSet.SET3: "sigma = 0, tau != 0",
}

_MEFM_FREE = {
    7: ("lambda", "tau", "sigma", "e", "Q0", "Q1"),
    8: ("lambda", "tau", "sigma", "e", "Q0", "Q1"),
    9: ("mu", "tau", "sigma", "e", "Q1"),
    10: ("mu", "tau", "sigma", "e", "Q1"),
    11: ("tau", "sigma", "e", "Q0", "Q1"),
    12: ("tau", "sigma", "e", "Q0", "Q1"),
    13: ("mu", "tau", "e", "Q0", "Q1"),
    14: ("mu", "tau", "e", "Q0", "Q1"),
    15: ("lambda", "mu", "tau", "e", "Q0", "Q1"),
}

_MEFM_EXTRA = {
    7: "lambda^2*beta1 != 1",
    8: "lambda^2*beta1 != 1",
    9: "Q1 != 0, 2 + delta*n1^2*mu^2*(tau^2 - 4*sigma) != 0",
    10: "Q1 != 0, 2 + delta*n1^2*mu^2*(tau^2 - 4*sigma) != 0",
    11: "Lambda != 0",
    12: "Lambda != 0",
    13: "delta*n1^2*mu^2*tau^2 != 2",
    14: "delta*n1^2*mu^2*tau^2 != -2",
    15: "",
}

_MEFM_VARIANTS: Dict[int, Tuple[Tuple[Variant, AuxSet], ...]] = {
    7: ((Variant.TANH, AuxSet.SET1), (Variant.TAN, AuxSet.SET2)),
    8: ((Variant.TANH, AuxSet.SET1), (Variant.TAN, AuxSet.SET2)),
    9: ((Variant.TANH, AuxSet.SET1), (Variant.RATIONAL, AuxSet.SET2)),
    10: ((Variant.TANH, AuxSet.SET1), (Variant.RATIONAL, AuxSet.SET2)),
    11: ((Variant.TANH, AuxSet.SET1), (Variant.TAN, AuxSet.SET2)),
    12: ((Variant.TANH, AuxSet.SET1), (Variant.TAN, AuxSet.SET2)),
    13: ((Variant.EXP, AuxSet.SET3),),
    14: ((Variant.EXP, AuxSet.SET3),),
    15: ((Variant.RATIONAL, AuxSet.SET3),),
}

_MEFM_CLASS = {
    Variant.TANH: Classification.SOLITON_LIKE,
    Variant.TAN: Classification.SINGULAR_PERIODIC,
    Variant.EXP: Classification.EXPONENTIAL,
    Variant.RATIONAL: Classification.RATIONAL,
}


def _build_specs() -> Dict[Tuple[Method, int, Variant], FamilySpec]:
    specs: List[FamilySpec] = []
    for case_no in range(1, 7):
        compound = case_no >= 3
        specs.append(
            FamilySpec(
                SG,
                case_no,
                Variant.TANH,
                (
                    Classification.COMPOUND_TOPOLOGICAL_NONTOPOLOGICAL
                    if compound
                    else Classification.TOPOLOGICAL
                ),
                ("mu",),
                _SG_DENOMINATORS[case_no],
            )
        )
        specs.append(
            FamilySpec(
                SG,
                case_no,
                Variant.COTH,
                Classification.COMPOUND_SINGULAR if compound else Classification.SINGULAR,
                ("mu",),
                _SG_DENOMINATORS[case_no],
            )
        )
    for case_no, variants in _MEFM_VARIANTS.items():
        for variant, aux in variants:
            constraint = ", ".join(c for c in (_GATES[aux], _MEFM_EXTRA[case_no]) if c)
            specs.append(
                FamilySpec(
                    MEFM,
                    case_no,
                    variant,
                    _MEFM_CLASS[variant],
                    _MEFM_FREE[case_no],
                    constraint,
                    aux,
                )
            )
    return {spec.key: spec for spec in specs}


REGISTRY: Dict[Tuple[Method, int, Variant], FamilySpec] = _build_specs()


def spec_for(family: FamilyId) -> FamilySpec:
    """
    Raises:
        UnknownFamily: Se la combinazione (metodo, caso, variante) non è pubblicata.
    """
    try:
        return REGISTRY[(family.method, family.case_no, family.variant)]
    except KeyError:
        raise UnknownFamily(str(family)) from None


def resolve(family: Union[FamilyId, str]) -> FamilyId:
    """Accetta un `FamilyId` o la sua forma stringa e verifica che sia nel registro."""
    fid = FamilyId.parse(family) if isinstance(family, str) else family
    spec_for(fid)
    return fid


@dataclass(frozen=True)
class FamilyEntry:
    family: FamilyId
    classification: Classification
    free: Tuple[str, ...]
    constraint: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": str(self.family),
            "classification": self.classification.value,
            "free": list(self.free),
            "constraint": self.constraint,
        }


def list_families() -> List[FamilyEntry]:
    """Tutte le combinazioni pubblicate, per entrambi i rami, in ordine canonico."""
    entries = [
        FamilyEntry(
            FamilyId(spec.method, spec.case_no, spec.variant, branch),
            spec.classification,
            spec.free,
            spec.constraint,
        )
        for spec in REGISTRY.values()
        for branch in Branch
    ]
    return sorted(entries, key=lambda entry: entry.family.sort_key())


# --- 2. Costruzione ---


def _c(value: Any) -> complex:
    if isinstance(value, Fraction):
        return complex(float(value))
    return complex(value)


@dataclass(frozen=True, eq=False)
class SolitonFamily:
    """Famiglia costruita: coefficienti, profilo e luoghi singolari."""

    family: FamilyId
    spec: FamilySpec
    inputs: FamilyInputs
    coefficients: CoefficientSet
    scalars: Dict[str, complex]
    factor: InnerFactor
    reduced: Optional[ReducedQuotient] = None

    @property
    def lam(self) -> complex:
        return complex(self.coefficients.lam)

    @property
    def mu(self) -> complex:
        return complex(self.coefficients.mu)

    @property
    def is_constant(self) -> bool:
        return self.reduced is not None and self.reduced.is_constant

    def xi(self, x: Any, t: Any) -> Any:
        return self.mu * (x - self.lam * t)

    def profile(self, xi: ArrayOrJet) -> ArrayOrJet:
        """u(xi) dall'ansatz."""
        if self.family.method is SG:
            return sg_profile(self.coefficients.values, self.family.variant, xi)
        s = self.scalars
        assert self.spec.aux is not None and self.reduced is not None
        return mefm_profile(self.reduced, self.spec.aux, s["tau"], s["sigma"], s["e"], xi, self.factor)

    def printed(self, xi: ArrayOrJet) -> ArrayOrJet:
        """u(xi) dalla forma chiusa stampata."""
        return printed_form(self.family)(self.scalars, xi)

    def singularities(self) -> List[Locus]:
        return _loci(self)


def _scalars(
    family: FamilyId, inputs: FamilyInputs, coefficients: CoefficientSet
) -> Dict[str, complex]:
    m = COMPLEX.params(inputs.material)
    tau = _c(inputs.tau or 0)
    sigma = 0j if family.case_no in (13, 14, 15) else _c(inputs.sigma or 0)
    mu, lam = complex(coefficients.mu), complex(coefficients.lam)
    D = m.delta * m.n1**2 * mu**2
    K = m.alpha1 * m.beta1 - 1
    den = m.alpha2 * m.beta1 * m.epsilon
    Delta = tau**2 - 4 * sigma
    W = 2 + D * Delta
    s = {
        "tau": tau,
        "sigma": sigma,
        "e": _c(inputs.e or 0),
        "D": D,
        "K": K,
        "den": den,
        "a2e": m.alpha2 * m.epsilon,
        "L": lam**2 - m.alpha1,
        "Delta": Delta,
    }
    # prefattore comune delle forme dei casi 9-10
    s["pref9"] = D * K / (3 * den * W) if abs(den * W) > 0 else 0j
    for name, value in coefficients.values.items():
        s[name] = complex(value)
    return s


def _validate(spec: FamilySpec, inputs: FamilyInputs) -> None:
    validate_required(inputs, spec.free)
    if spec.method is SG:
        return
    validate_real("tau", inputs.tau)
    if "sigma" in spec.free:
        validate_real("sigma", inputs.sigma)
    if "Q0" in spec.free:
        validate_denominator_pair(inputs)
    assert spec.aux is not None
    sigma = inputs.sigma if "sigma" in spec.free else Fraction(0)
    check_gate(spec.aux, Fraction(inputs.tau), Fraction(sigma))  # type: ignore[arg-type]


@lru_cache(maxsize=512)
def build(
    family: FamilyId, inputs: FamilyInputs, factor: InnerFactor = InnerFactor.HALF
) -> SolitonFamily:
    """
    Costruisce la famiglia con gli input dati.

    Args:
        family: Identificativo (il ramo fissa il segno del parametro dipendente).
        inputs: Parametri liberi e materiale.
        factor: Fattore interno dei Set 1-2 (solo per i confronti sul Set ausiliario).

    Returns:
        SolitonFamily: Pronta per la valutazione.

    Raises:
        UnknownFamily: Combinazione non pubblicata.
        ConstraintViolated: Parametro mancante o gate violato.
        DegenerateDenominator: Denominatore nullo nelle formule del caso.
    """
    spec = spec_for(family)
    _validate(spec, inputs)
    m = COMPLEX.params(inputs.material)
    sign = family.branch.sign

    if family.method is SG:
        values, lam_sq = sg_coefficients(family.case_no, _c(inputs.mu), m, COMPLEX)
        coefficients = CoefficientSet(
            values={k: complex(v) for k, v in values.items()},
            lam=sign * COMPLEX.sqrt(lam_sq),
            mu=_c(inputs.mu),
        )
        reduced = None
    else:
        free = {
            key: _c(getattr(inputs, INPUT_FIELDS[key]))
            for key in spec.free
            if key != "e"
        }
        result = mefm_coefficients(family.case_no, sign, free, m, COMPLEX)
        coefficients = CoefficientSet(
            values={k: complex(v) for k, v in result.values.items()},
            lam=complex(result.lam),
            mu=complex(result.mu),
            Lambda=None if result.Lambda is None else complex(result.Lambda),
        )
        reduced = reduce_quotient(coefficients.values)

    built = SolitonFamily(
        family=family,
        spec=spec,
        inputs=inputs,
        coefficients=coefficients,
        scalars=_scalars(family, inputs, coefficients),
        factor=factor,
        reduced=reduced,
    )
    log.debug("Famiglia %s costruita (lambda=%s, mu=%s)", family, built.lam, built.mu)
    return built


# --- 3. Luoghi singolari ---


def _loci(built: SolitonFamily) -> List[Locus]:
    family = built.family
    if family.method is SG:
        if family.variant is Variant.TANH:
            return sg_tanh_loci()
        return sg_coth_loci(coth_pole_cancels(built.coefficients.values))

    loci: List[Locus] = []
    if family.case_no in (9, 10) and family.variant is Variant.TANH:
        edge = "-1" if family.case_no == 9 else "+1"
        loci.append(
            Locus(
                LocusKind.ASYMPTOTIC,
                0j,
                None,
                f"denominatore della forma stampata nullo per tanh(xi7) -> {edge}",
            )
        )
    reduced = built.reduced
    if reduced is None or reduced.is_constant:
        return loci

    s = built.scalars
    aux = built.spec.aux
    assert aux is not None
    deg_num = len(reduced.numerator) - 1
    deg_den = 0 if reduced.denominator is None else len(reduced.denominator) - 1
    if deg_num > deg_den:
        loci += aux_level_loci(aux, s["tau"], s["sigma"], s["e"], 0j, "zero di y (polo di E)", built.factor)
    if reduced.denominator is not None and deg_den >= 1:
        q0, q1 = reduced.denominator[0], reduced.denominator[1]
        note = "zero di Q0 + Q1*E"
        if abs(q0) > 0:
            loci += aux_level_loci(aux, s["tau"], s["sigma"], s["e"], -q1 / q0, note, built.factor)
        else:
            loci += aux_infinity_loci(aux, s["tau"], s["sigma"], s["e"], note, built.factor)
    return loci


# --- 4. Operazioni pubbliche ---


def coefficient_set(family: Union[FamilyId, str], inputs: FamilyInputs) -> CoefficientSet:
    return build(resolve(family), inputs).coefficients


def singularities(family: Union[FamilyId, str], inputs: FamilyInputs) -> List[Locus]:
    return build(resolve(family), inputs).singularities()


def _check_point(built: SolitonFamily, xi: complex) -> None:
    floor = current_pole_floor()
    if nearest_distance(built.singularities(), xi) <= floor:
        raise SingularPoint(xi, f"entro la soglia di polo {floor:g}")


def evaluate(family: Union[FamilyId, str], inputs: FamilyInputs, x: float, t: float) -> complex:
    """
    Phi(x, t) in doppia precisione complessa.

    Raises:
        SingularPoint: Punto su (o entro la soglia da) un luogo singolare.
    """
    built = build(resolve(family), inputs)
    xi = complex(built.xi(x, t))
    _check_point(built, xi)
    value = complex(built.profile(np.array([xi], dtype=complex))[0])
    if not np.isfinite(value):
        raise SingularPoint(xi, "valore non finito")
    return value


def evaluate_jet(family: Union[FamilyId, str], inputs: FamilyInputs, x: float, t: float) -> Jet:
    """Jet di ordine 4 di u(xi) in xi = mu*(x - lambda*t)."""
    built = build(resolve(family), inputs)
    return jet_at(built, complex(built.xi(x, t)))


def jet_at(built: SolitonFamily, xi: complex) -> Jet:
    """
    Raises:
        SingularPoint: Se il punto è vicino a un polo o il kernel dei jet fallisce.
    """
    _check_point(built, xi)
    try:
        jet = built.profile(Jet.variable(xi))
    except JetError as e:
        raise SingularPoint(xi, str(e)) from e
    assert isinstance(jet, Jet)
    if not jet.is_finite():
        raise SingularPoint(xi, "jet non finito")
    return jet


def evaluate_grid(
    family: Union[FamilyId, str], inputs: FamilyInputs, x: np.ndarray, t: Any
) -> np.ndarray:
    """
    Valutazione vettoriale; i punti vicini ai poli diventano NaN.

    `x` e `t` vengono combinati con il broadcasting di numpy.
    """
    built = build(resolve(family), inputs)
    xi = built.xi(np.asarray(x, dtype=float), np.asarray(t, dtype=float)).astype(complex)
    with np.errstate(all="ignore"):
        values = np.asarray(built.profile(xi), dtype=complex)
    values = np.broadcast_to(values, xi.shape).copy()
    values[~np.isfinite(values)] = complex(np.nan, np.nan)
    return values
