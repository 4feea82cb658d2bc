# app/figures/writer.py

"""
Scrittura dei dataset dei preset: CSV (o JSON) per pannello e un manifest.

I punti singolari sono emessi come celle vuote (null in JSON) e contati nel
manifest insieme alle statistiche del residuo sulla griglia emessa.
"""

import csv
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from app.catalog.registry import build, evaluate_grid
from app.catalog.singularities import nearest_distance
from app.errors import SingularPoint
from app.figures.presets import FigurePreset, OutputKind, PresetPanel, resolve_panels
from app.jet.base import pole_floor
from app.utils.rational import format_float
from app.verify.residuals import pde_residual_at

log = logging.getLogger(__name__)

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class GridSettings:
    curve_points: int = 1001
    surface_points: int = 201
    curve_stride: int = 10
    surface_stride: int = 20
    digits: int = 17
    pole_floor: float = 1e-12
    exclusion_radius: float = 1e-2


def _cell(value: float, digits: int) -> str:
    return "" if math.isnan(value) else format_float(value, digits)


def _json_cell(value: float) -> Optional[float]:
    return None if math.isnan(value) else float(value)


def _file_name(preset: FigurePreset, panel: PresetPanel, fmt: str) -> str:
    name = f"{preset.id}_{str(panel.family).replace('.', '-')}"
    if preset.sweep is not None and panel.swept is not None:
        name += f"_{preset.sweep[0]}-{float(panel.swept):g}"
    return f"{name}.{fmt}"


def _residual_stats(
    panel: PresetPanel, points: Iterable[Sequence[float]], settings: GridSettings
) -> Dict[str, Any]:
    """Residuo relativo dell'equazione del moto su un sottoinsieme della griglia."""
    built = build(panel.family, panel.inputs)
    loci = built.singularities()
    worst, evaluated, skipped = 0.0, 0, 0
    with pole_floor(settings.pole_floor):
        for x, t in points:
            if nearest_distance(loci, complex(built.xi(x, t))) <= settings.exclusion_radius:
                skipped += 1
                continue
            try:
                value = abs(pde_residual_at(built, x, t))
            except SingularPoint:
                skipped += 1
                continue
            evaluated += 1
            worst = max(worst, value if math.isfinite(value) else math.inf)
    return {
        "max_rel_pde_residual": worst if evaluated else None,
        "points_evaluated": evaluated,
        "points_skipped": skipped,
    }


def _write_csv(path: Path, header: List[str], rows: Iterable[List[str]]) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _emit_curve(
    preset: FigurePreset, panel: PresetPanel, out: Path, fmt: str, settings: GridSettings
) -> Dict[str, Any]:
    assert preset.t is not None
    x = np.linspace(preset.x_range[0], preset.x_range[1], settings.curve_points)
    values = evaluate_grid(panel.family, panel.inputs, x, preset.t)
    path = out / _file_name(preset, panel, fmt)
    if fmt == "csv":
        _write_csv(
            path,
            ["x", "re", "im"],
            (
                [format_float(float(xv), settings.digits)]
                + [_cell(v.real, settings.digits), _cell(v.imag, settings.digits)]
                for xv, v in zip(x, values)
            ),
        )
    else:
        payload = {
            "x": [float(v) for v in x],
            "re": [_json_cell(v.real) for v in values],
            "im": [_json_cell(v.imag) for v in values],
        }
        path.write_text(json.dumps(payload, sort_keys=True) + "\n", encoding="utf-8")
    sample = [(float(xv), preset.t) for xv in x[:: settings.curve_stride]]
    return {
        "file": path.name,
        "rows": int(x.size),
        "masked": int(np.count_nonzero(np.isnan(values))),
        "residual": _residual_stats(panel, sample, settings),
    }


def _emit_surface(
    preset: FigurePreset, panel: PresetPanel, out: Path, fmt: str, settings: GridSettings
) -> Dict[str, Any]:
    assert preset.t_range is not None
    n = settings.surface_points
    x = np.linspace(preset.x_range[0], preset.x_range[1], n)
    t = np.linspace(preset.t_range[0], preset.t_range[1], n)
    X, T = np.meshgrid(x, t, indexing="ij")
    values = evaluate_grid(panel.family, panel.inputs, X, T)
    path = out / _file_name(preset, panel, fmt)
    if fmt == "csv":
        _write_csv(
            path,
            ["x", "t", "re", "im"],
            (
                [
                    format_float(float(X[i, j]), settings.digits),
                    format_float(float(T[i, j]), settings.digits),
                    _cell(values[i, j].real, settings.digits),
                    _cell(values[i, j].imag, settings.digits),
                ]
                for i in range(n)
                for j in range(n)
            ),
        )
    else:
        payload = {
            "x": [float(v) for v in x],
            "t": [float(v) for v in t],
            "re": [[_json_cell(v.real) for v in row] for row in values],
            "im": [[_json_cell(v.imag) for v in row] for row in values],
        }
        path.write_text(json.dumps(payload, sort_keys=True) + "\n", encoding="utf-8")
    s = settings.surface_stride
    sample = [
        (float(X[i, j]), float(T[i, j])) for i in range(0, n, s) for j in range(0, n, s)
    ]
    return {
        "file": path.name,
        "rows": n * n,
        "masked": int(np.count_nonzero(np.isnan(values))),
        "residual": _residual_stats(panel, sample, settings),
    }


def emit_preset(
    preset: FigurePreset,
    out: Path,
    fmt: str = "csv",
    settings: Optional[GridSettings] = None,
) -> Path:
    """
    Scrive i dataset del preset in `out` e restituisce il percorso del manifest.

    Args:
        preset: Preset da emettere.
        out: Cartella di destinazione (creata se manca).
        fmt: "csv" oppure "json".
        settings: Densità della griglia e passo di campionamento del residuo.

    Raises:
        ValueError: Formato non supportato.
    """
    if fmt not in FORMATS:
        raise ValueError(f"formato non supportato: {fmt!r} (ammessi: {', '.join(FORMATS)})")
    settings = settings or GridSettings()
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    for panel in resolve_panels(preset):
        if preset.kind is OutputKind.CURVE_2D:
            emitted = _emit_curve(preset, panel, out, fmt, settings)
        else:
            emitted = _emit_surface(preset, panel, out, fmt, settings)
        emitted.update(
            {
                "requested_family": str(panel.requested),
                "family": str(panel.family),
                "inputs": panel.inputs.to_dict(),
                "notes": panel.notes,
            }
        )
        if preset.sweep is not None and panel.swept is not None:
            emitted["swept"] = {preset.sweep[0]: str(panel.swept)}
        log.info("Dataset scritto: %s", out / emitted["file"])
        entries.append(emitted)

    manifest = {
        "preset": preset.id,
        "kind": preset.kind.value,
        "description": preset.description,
        "material": preset.material,
        "format": fmt,
        "x_range": list(preset.x_range),
        "t": preset.t,
        "t_range": None if preset.t_range is None else list(preset.t_range),
        "datasets": entries,
    }
    path = out / f"{preset.id}_manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    log.info("Manifest scritto: %s", path)
    return path
