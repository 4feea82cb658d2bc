# app/verify/reports.py

"""
Tipi dei risultati di verifica: griglia di campionamento e report.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from app.models.family.base import FamilyId

_GRID_PATTERN = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")

# quota minima di punti valutabili per un PASS
MIN_COVERAGE = 0.9


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FLAGGED_ERRATUM = "FLAGGED_ERRATUM"


@dataclass(frozen=True)
class GridSpec:
    """
    Punti di verifica: griglia (x, t) per l'equazione alle derivate parziali
    e campioni casuali di xi per l'ODE.
    """

    x_range: Tuple[float, float] = (-5.0, 5.0)
    t_range: Tuple[float, float] = (0.0, 2.0)
    nx: int = 10
    nt: int = 5
    xi_count: int = 50
    xi_range: float = 3.0
    seed: int = 0
    tolerance: float = 1e-9
    erratum_threshold: float = 1e-6
    pole_floor: float = 1e-12
    exclusion_radius: float = 1e-2

    def __post_init__(self) -> None:
        errors = []
        for name in ("x_range", "t_range"):
            lo, hi = getattr(self, name)
            if not (math.isfinite(lo) and math.isfinite(hi)):
                errors.append(f"{name} deve essere finito")
        for name in ("nx", "nt"):
            if getattr(self, name) < 1:
                errors.append(f"{name} deve essere >= 1")
        if self.xi_count < 0:
            errors.append("xi_count deve essere >= 0")
        for name in ("tolerance", "pole_floor", "xi_range"):
            if not getattr(self, name) > 0:
                errors.append(f"{name} deve essere > 0")
        if errors:
            raise ValueError("GridSpec non valida: " + "; ".join(errors))

    @staticmethod
    def parse_counts(text: str) -> Tuple[int, int]:
        """ "NXxNT" -> (nx, nt)."""
        match = _GRID_PATTERN.match(text)
        if not match:
            raise ValueError(f"griglia non valida: {text!r} (atteso NXxNT, es. 10x5)")
        return int(match.group(1)), int(match.group(2))

    def with_values(self, **changes: Any) -> GridSpec:
        return replace(self, **changes)

    @property
    def requested(self) -> int:
        return self.nx * self.nt + self.xi_count


@dataclass(frozen=True)
class ResidualReport:
    family: FamilyId
    points_sampled: int
    points_skipped_near_singularity: int
    max_abs_pde_residual: float
    max_abs_ode_residual: float
    status: Status
    notes: str = ""
    printed_ode_residual: Optional[float] = None

    @property
    def coverage(self) -> float:
        if not self.points_sampled:
            return 0.0
        return 1 - self.points_skipped_near_singularity / self.points_sampled

    def to_dict(self) -> Dict[str, Any]:
        def num(value: Optional[float]) -> Any:
            if value is None or not math.isfinite(value):
                return None if value is None else str(value)
            return value

        return {
            "family": str(self.family),
            "points_sampled": self.points_sampled,
            "points_skipped_near_singularity": self.points_skipped_near_singularity,
            "max_abs_pde_residual": num(self.max_abs_pde_residual),
            "max_abs_ode_residual": num(self.max_abs_ode_residual),
            "printed_ode_residual": num(self.printed_ode_residual),
            "status": self.status.value,
            "notes": self.notes,
        }


def classify(
    pde: float, ode: float, coverage: float, tolerance: float, erratum_threshold: float
) -> Status:
    """
    PASS se entrambi i residui sono sotto la tolleranza e la copertura è
    almeno del 90%; FLAGGED_ERRATUM se un residuo supera
    max(tolleranza, soglia di erratum); FAIL altrimenti.
    """
    if math.isnan(pde) or math.isnan(ode):
        return Status.FAIL
    worst = max(pde, ode)
    if worst > max(tolerance, erratum_threshold):
        return Status.FLAGGED_ERRATUM
    if worst < tolerance and coverage >= MIN_COVERAGE:
        return Status.PASS
    return Status.FAIL
