# app/models/materials/presets.py
"""Set di costanti usati dalle figure di riferimento e dai test."""

from fractions import Fraction as F
from typing import Dict

from app.models.materials.base import MaterialConstants

# Set A: grafici 2D
SET_A = MaterialConstants(
    lambda1=F(3, 2),
    mu1=F(5, 2),
    nu1=F(2),
    nu2=F(3),
    nu4=F(5),
    rho=F(3),
    c=F(4),
    delta=F(5, 2),
    epsilon=F(7, 2),
)

# Set B: superfici 3D
SET_B = MaterialConstants(
    lambda1=F(3, 4),
    mu1=F(5, 4),
    nu1=F(1),
    nu2=F(2),
    nu4=F(4),
    rho=F(5, 2),
    c=F(7, 2),
    delta=F(1),
    epsilon=F(2),
)

MATERIAL_SETS: Dict[str, MaterialConstants] = {"A": SET_A, "B": SET_B}
