# app/verify/presets.py

"""Input di default della verifica, uno per famiglia."""

from fractions import Fraction as F
from typing import Dict, Optional

from app.catalog.auxiliary import AuxSet
from app.catalog.registry import spec_for
from app.models.family.base import FamilyId, Method
from app.models.family.inputs import INPUT_FIELDS, FamilyInputs
from app.models.materials import SET_A, DerivedParameters, derive_parameters

# (tau, sigma) per Set ausiliario
AUX_DEFAULTS: Dict[AuxSet, Dict[str, F]] = {
    AuxSet.SET1: {"tau": F(3), "sigma": F(1)},
    AuxSet.SET2: {"tau": F(5, 2), "sigma": F(5, 2)},
    AuxSet.SET3: {"tau": F(5, 2), "sigma": F(0)},
}

FREE_DEFAULTS: Dict[str, F] = {
    "mu": F(1, 4),
    "lambda": F(2),
    "e": F(1, 2),
    "Q0": F(2),
    "Q1": F(2),
}


def default_inputs(
    family: FamilyId, material: Optional[DerivedParameters] = None
) -> FamilyInputs:
    """
    Input di default: materiale A, mu = 1/4, lambda = 2, e = 1/2, Q0 = Q1 = 2
    e (tau, sigma) scelti per rispettare il gate del Set della famiglia.
    """
    spec = spec_for(family)
    material = material or derive_parameters(SET_A)
    values = dict(FREE_DEFAULTS)
    if family.method is Method.MEFM:
        assert spec.aux is not None
        values.update(AUX_DEFAULTS[spec.aux])
    data = {INPUT_FIELDS[name]: values[name] for name in spec.free}
    return FamilyInputs(material=material, **data)
