# app/verify/runner.py

"""
Verifica dell'intero catalogo.

Per ogni voce del registro: residuo dell'equazione del moto sulla griglia
(x, t), residuo dell'ODE ridotta su campioni casuali di xi e, nelle note,
il residuo della forma chiusa stampata.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

import numpy as np

from app.catalog.registry import SolitonFamily, build, list_families
from app.catalog.singularities import nearest_distance
from app.errors import SolitonError, SingularPoint
from app.jet.base import pole_floor
from app.models.family.base import FamilyId
from app.models.family.inputs import FamilyInputs
from app.verify.presets import default_inputs
from app.verify.reports import MIN_COVERAGE, GridSpec, ResidualReport, Status, classify
from app.verify.residuals import ode_residual_at, pde_residual_at, printed_ode_residual_at

log = logging.getLogger(__name__)

InputsFor = Callable[[FamilyId], FamilyInputs]


@dataclass
class _Sweep:
    """Accumulatore di un tipo di residuo."""

    label: str
    worst: float = 0.0
    evaluated: int = 0
    skipped: int = 0
    first_failure: Optional[str] = None

    def record(self, residual: complex, where: str, tolerance: float) -> None:
        value = abs(residual)
        if math.isnan(value):
            value = math.inf
        self.evaluated += 1
        self.worst = max(self.worst, value)
        if value >= tolerance and self.first_failure is None:
            self.first_failure = f"{self.label} {value:.3e} in {where}"


def grid_points(grid: GridSpec) -> List[Tuple[float, float]]:
    xs = np.linspace(grid.x_range[0], grid.x_range[1], grid.nx)
    ts = np.linspace(grid.t_range[0], grid.t_range[1], grid.nt)
    return [(float(x), float(t)) for x in xs for t in ts]


def xi_samples(grid: GridSpec) -> np.ndarray:
    rng = np.random.default_rng(grid.seed)
    return rng.uniform(-grid.xi_range, grid.xi_range, grid.xi_count)


def _admissible(built: SolitonFamily, xi: complex, grid: GridSpec) -> bool:
    return nearest_distance(built.singularities(), xi) > grid.exclusion_radius


def _pde_sweep(built: SolitonFamily, grid: GridSpec) -> _Sweep:
    sweep = _Sweep("pde")
    for x, t in grid_points(grid):
        xi = complex(built.xi(x, t))
        if not _admissible(built, xi, grid):
            sweep.skipped += 1
            continue
        try:
            residual = pde_residual_at(built, x, t)
        except SingularPoint as e:
            log.debug("%s: punto (%g, %g) saltato: %s", built.family, x, t, e)
            sweep.skipped += 1
            continue
        sweep.record(residual, f"(x={x:g}, t={t:g})", grid.tolerance)
    return sweep


def _ode_sweep(
    built: SolitonFamily, samples: Iterable[float], grid: GridSpec, printed: bool = False
) -> _Sweep:
    sweep = _Sweep("ode stampata" if printed else "ode")
    for value in samples:
        xi = complex(value)
        if not _admissible(built, xi, grid):
            sweep.skipped += 1
            continue
        try:
            if printed:
                residual = printed_ode_residual_at(built, xi)
            else:
                residual = ode_residual_at(built, xi, relative_norm=True)
        except SingularPoint as e:
            log.debug("%s: xi=%s saltato: %s", built.family, xi, e)
            sweep.skipped += 1
            continue
        sweep.record(residual, f"xi={value:.6g}", grid.tolerance)
    return sweep


def verify_family(
    family: FamilyId, inputs: FamilyInputs, grid: Optional[GridSpec] = None
) -> ResidualReport:
    """
    Verifica una famiglia con gli input dati.

    Gli errori di costruzione (gate, denominatori nulli) non interrompono la
    verifica: la famiglia viene riportata FAIL con il motivo nelle note.
    """
    grid = grid or GridSpec()
    try:
        built = build(family, inputs)
    except SolitonError as e:
        log.warning("%s: costruzione fallita: %s", family, e)
        return ResidualReport(
            family=family,
            points_sampled=grid.requested,
            points_skipped_near_singularity=grid.requested,
            max_abs_pde_residual=math.nan,
            max_abs_ode_residual=math.nan,
            status=Status.FAIL,
            notes=f"{type(e).__name__}: {e}",
        )

    samples = xi_samples(grid)
    with pole_floor(grid.pole_floor):
        pde = _pde_sweep(built, grid)
        ode = _ode_sweep(built, samples, grid)
        printed = _ode_sweep(built, samples, grid, printed=True)

    skipped = pde.skipped + ode.skipped
    report_coverage = 1 - skipped / grid.requested if grid.requested else 0.0
    # senza punti valutati il massimo non è definito
    pde_max = pde.worst if pde.evaluated else math.nan
    ode_max = ode.worst if ode.evaluated else math.nan
    status = classify(pde_max, ode_max, report_coverage, grid.tolerance, grid.erratum_threshold)

    notes = []
    if status is not Status.PASS:
        failure = pde.first_failure or ode.first_failure
        if failure:
            notes.append(f"primo punto fuori tolleranza: {failure}")
        if report_coverage < MIN_COVERAGE:
            notes.append(f"copertura {report_coverage:.0%}")
    printed_max = printed.worst if printed.evaluated else None
    if printed_max is not None:
        notes.append(f"forma stampata: max residuo ODE {printed_max:.3e}")
    if built.is_constant:
        notes.append("profilo costante")

    report = ResidualReport(
        family=family,
        points_sampled=grid.requested,
        points_skipped_near_singularity=skipped,
        max_abs_pde_residual=pde_max,
        max_abs_ode_residual=ode_max,
        status=status,
        notes="; ".join(notes),
        printed_ode_residual=printed_max,
    )
    log.info(
        "%s: %s (pde=%.3e, ode=%.3e, saltati=%d)",
        family,
        status.value,
        pde_max,
        ode_max,
        skipped,
    )
    return report


def verify_catalog(
    grid: Optional[GridSpec] = None,
    inputs_for: InputsFor = default_inputs,
    families: Optional[Iterable[FamilyId]] = None,
) -> List[ResidualReport]:
    """
    Un report per ogni voce del registro, nell'ordine del registro.

    Args:
        grid: Punti e tolleranze; default GridSpec().
        inputs_for: Input per famiglia (default: `default_inputs`).
        families: Sottoinsieme da verificare; default tutto il registro.

    Returns:
        List[ResidualReport]: Deterministica a parità di griglia e seed.
    """
    grid = grid or GridSpec()
    selected = list(families) if families is not None else [e.family for e in list_families()]
    log.info("Verifica di %d famiglie (tolleranza %g)", len(selected), grid.tolerance)
    return [verify_family(family, inputs_for(family), grid) for family in selected]
