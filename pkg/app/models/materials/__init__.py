from .base import DerivedParameters, MaterialConstants, derive_parameters
from .presets import MATERIAL_SETS, SET_A, SET_B

__all__ = [
    "DerivedParameters",
    "MaterialConstants",
    "derive_parameters",
    "MATERIAL_SETS",
    "SET_A",
    "SET_B",
]
