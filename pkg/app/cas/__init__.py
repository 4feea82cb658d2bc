from .algebra import EElement, TrigElement
from .candidates import (
    EquationResidual,
    Verdict,
    all_vanish,
    aux_for_case,
    check_candidate,
    published_assignment,
)
from .systems import (
    AlgebraicSystem,
    AuxVariant,
    BalanceResult,
    balance,
    build_mefm_system,
    build_sg_system,
    theorem1_counts,
)

__all__ = [
    "AlgebraicSystem",
    "AuxVariant",
    "BalanceResult",
    "EElement",
    "EquationResidual",
    "TrigElement",
    "Verdict",
    "all_vanish",
    "aux_for_case",
    "balance",
    "build_mefm_system",
    "build_sg_system",
    "check_candidate",
    "published_assignment",
    "theorem1_counts",
]
