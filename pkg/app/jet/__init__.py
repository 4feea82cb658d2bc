from .base import DEFAULT_POLE_FLOOR, ORDER, Jet, JetOp, current_pole_floor, jet_arith, pole_floor
from .elementary import ELEMENTARY, jet_elementary

__all__ = [
    "DEFAULT_POLE_FLOOR",
    "ELEMENTARY",
    "ORDER",
    "Jet",
    "JetOp",
    "current_pole_floor",
    "jet_arith",
    "jet_elementary",
    "pole_floor",
]
