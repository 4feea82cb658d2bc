from .presets import PRESETS, FigurePreset, OutputKind, PresetPanel, get_preset, resolve_panels
from .writer import FORMATS, GridSettings, emit_preset

__all__ = [
    "FORMATS",
    "PRESETS",
    "FigurePreset",
    "GridSettings",
    "OutputKind",
    "PresetPanel",
    "emit_preset",
    "get_preset",
    "resolve_panels",
]
