# app/figures/presets.py

"""
Configurazioni dei grafici di riferimento (fig1..fig11).

Ogni preset produce solo dati: curve 2D con un parametro variato oppure
superfici 3D su una griglia quadrata.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as F
from typing import Dict, List, Optional, Tuple

from app.catalog.auxiliary import check_gate
from app.catalog.backends import COMPLEX
from app.catalog.mefm import mu_from_lambda
from app.catalog.registry import REGISTRY, spec_for
from app.errors import GateViolated, UnknownPreset
from app.models.family.base import FamilyId, Method
from app.models.family.inputs import INPUT_FIELDS, FamilyInputs
from app.models.materials import MATERIAL_SETS, derive_parameters


class OutputKind(str, Enum):
    CURVE_2D = "curve_2d"
    SURFACE_3D = "surface_3d"


@dataclass(frozen=True)
class FigurePreset:
    id: str
    kind: OutputKind
    families: Tuple[str, ...]
    material: str
    fixed: Dict[str, F]
    x_range: Tuple[float, float]
    # 2D: istante fisso; 3D: intervallo dei tempi
    t: Optional[float] = None
    t_range: Optional[Tuple[float, float]] = None
    sweep: Optional[Tuple[str, Tuple[F, ...]]] = None
    description: str = ""

    def sweep_values(self) -> List[Optional[F]]:
        if self.sweep is None:
            return [None]
        return list(self.sweep[1])


@dataclass(frozen=True)
class PresetPanel:
    """Una famiglia del preset con gli input già risolti."""

    requested: FamilyId
    family: FamilyId
    inputs: FamilyInputs
    swept: Optional[F] = None
    notes: List[str] = field(default_factory=list)


MU_SWEEP = ("mu", (F(1, 4), F(1, 2), F(3, 4), F(1), F(5, 4)))
LAMBDA_SWEEP = ("lambda", (F(1), F(2), F(3), F(4), F(5)))

_SG_2D = dict(material="A", fixed={}, x_range=(-5.0, 5.0), t=1.0, sweep=MU_SWEEP)
_SG_3D = dict(material="B", fixed={"mu": F(9, 4)}, x_range=(-15.0, 15.0), t_range=(-15.0, 15.0))
_MEFM_2D = dict(
    material="A",
    fixed={"tau": F(5, 2), "sigma": F(5, 2), "e": F(2), "Q0": F(2), "Q1": F(2)},
    x_range=(0.0, 10.0),
    t=1.5,
    sweep=LAMBDA_SWEEP,
)
_MEFM_3D = dict(
    material="B",
    fixed={
        "tau": F(5, 4),
        "sigma": F(9, 4),
        "e": F(5),
        "Q0": F(2),
        "Q1": F(3),
        "lambda": F(2),
    },
    x_range=(-15.0, 15.0),
    t_range=(-15.0, 15.0),
)

PRESETS: Dict[str, FigurePreset] = {
    p.id: p
    for p in (
        FigurePreset(
            "fig1",
            OutputKind.CURVE_2D,
            ("sg.case4.tanh.plus",),
            description="soliton composto, parte reale e immaginaria, mu variato",
            **_SG_2D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig2",
            OutputKind.CURVE_2D,
            ("sg.case5.coth.plus", "sg.case5.coth.minus"),
            description="soliton singolare composto, rami positivo e negativo",
            **_SG_2D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig3",
            OutputKind.SURFACE_3D,
            ("sg.case2.tanh.plus", "sg.case2.coth.plus"),
            description="soliton topologico e singolare, parte reale",
            **_SG_3D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig4",
            OutputKind.SURFACE_3D,
            ("sg.case6.tanh.plus",),
            description="soliton composto, parte reale e immaginaria",
            **_SG_3D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig5",
            OutputKind.CURVE_2D,
            ("mefm.case7.tanh.plus",),
            description="soluzione di tipo soliton, lambda variato",
            **_MEFM_2D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig6",
            OutputKind.CURVE_2D,
            ("mefm.case9.tanh.plus", "mefm.case10.tanh.plus"),
            description="parte immaginaria dei casi 9 e 10, lambda variato",
            **_MEFM_2D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig7",
            OutputKind.SURFACE_3D,
            ("mefm.case7.tan.plus",),
            description="onda periodica singolare",
            **_MEFM_3D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig8",
            OutputKind.SURFACE_3D,
            ("mefm.case9.tanh.minus",),
            description="caso 9, ramo negativo",
            **_MEFM_3D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig9",
            OutputKind.SURFACE_3D,
            ("mefm.case9.tanh.plus",),
            description="caso 9, ramo positivo",
            **_MEFM_3D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig10",
            OutputKind.SURFACE_3D,
            ("mefm.case10.tanh.minus",),
            description="caso 10, ramo negativo",
            **_MEFM_3D,  # type: ignore[arg-type]
        ),
        FigurePreset(
            "fig11",
            OutputKind.SURFACE_3D,
            ("mefm.case10.tanh.plus",),
            description="caso 10, ramo positivo",
            **_MEFM_3D,  # type: ignore[arg-type]
        ),
    )
}


def get_preset(preset_id: str) -> FigurePreset:
    """
    Raises:
        UnknownPreset: Se l'identificativo non esiste.
    """
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise UnknownPreset(preset_id) from None


def _gate_consistent(requested: FamilyId, values: Dict[str, F]) -> Tuple[FamilyId, List[str]]:
    """
    Se (tau, sigma) violano il gate della variante richiesta, sceglie la
    variante dello stesso caso il cui gate è rispettato.
    """
    spec = spec_for(requested)
    if spec.aux is None:
        return requested, []
    tau, sigma = values.get("tau", F(0)), values.get("sigma", F(0))
    try:
        check_gate(spec.aux, tau, sigma)
        return requested, []
    except GateViolated as e:
        violation = str(e)
    for (method, case_no, variant), other in REGISTRY.items():
        if method is not requested.method or case_no != requested.case_no:
            continue
        if other.aux is None or other.aux is spec.aux:
            continue
        try:
            check_gate(other.aux, tau, sigma)
        except GateViolated:
            continue
        emitted = FamilyId(method, case_no, variant, requested.branch)
        note = f"gate di {requested} violato ({violation}); emessa la variante {emitted}"
        return emitted, [note]
    raise GateViolated(violation)


def resolve_panels(preset: FigurePreset) -> List[PresetPanel]:
    """
    Risolve famiglie e input di ogni pannello del preset.

    Per i casi 9-10 il preset varia lambda: mu si ottiene invertendo la
    relazione di dispersione.
    """
    material = derive_parameters(MATERIAL_SETS[preset.material])
    panels: List[PresetPanel] = []
    for name in preset.families:
        requested = FamilyId.parse(name)
        for swept in preset.sweep_values():
            values: Dict[str, object] = dict(preset.fixed)
            if preset.sweep is not None:
                values[preset.sweep[0]] = swept
            family, notes = _gate_consistent(requested, values)  # type: ignore[arg-type]
            spec = spec_for(family)
            if family.method is Method.MEFM and family.case_no in (9, 10):
                lam = values["lambda"]
                sigma = values.get("sigma", F(0))
                mu = complex(
                    mu_from_lambda(
                        complex(float(lam)),  # type: ignore[arg-type]
                        complex(float(values["tau"])),  # type: ignore[arg-type]
                        complex(float(sigma)),  # type: ignore[arg-type]
                        COMPLEX.params(material),
                        COMPLEX,
                    )
                )
                # mu^2 reale e positivo: si conserva il valore reale
                values["mu"] = mu.real if mu.imag == 0 else mu
                notes = notes + [f"mu da lambda={lam}: {values['mu']}"]
            data = {INPUT_FIELDS[k]: values[k] for k in spec.free if k in values}
            inputs = FamilyInputs(material=material, **data)  # type: ignore[arg-type]
            panels.append(PresetPanel(requested, family, inputs, swept, notes))
    return panels
