# app/models/family/inputs.py

"""
Input e coefficienti di una famiglia.

`FamilyInputs` raccoglie i parametri liberi (solo quelli dichiarati liberi
dalla famiglia vengono letti); `CoefficientSet` è il risultato della
costruzione: coefficienti dell'ansatz più la coppia (lambda, mu) con il
ramo di segno già applicato.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Union

from app.models.materials.base import DerivedParameters
from app.utils.rational import to_fraction

Number = Union[Fraction, int, float, complex]

# chiave JSON -> attributo
INPUT_FIELDS: Dict[str, str] = {
    "mu": "mu",
    "lambda": "lam",
    "tau": "tau",
    "sigma": "sigma",
    "e": "e",
    "Q0": "Q0",
    "Q1": "Q1",
}


@dataclass(frozen=True)
class FamilyInputs:
    material: DerivedParameters
    mu: Optional[Number] = None
    lam: Optional[Number] = None
    tau: Optional[Number] = None
    sigma: Optional[Number] = None
    e: Optional[Number] = None
    Q0: Optional[Number] = None
    Q1: Optional[Number] = None

    @classmethod
    def from_mapping(cls, material: DerivedParameters, data: Mapping[str, Any]) -> FamilyInputs:
        """Legge gli input da JSON; i valori restano razionali esatti."""
        values: Dict[str, Any] = {}
        for key, attr in INPUT_FIELDS.items():
            if data.get(key) is not None:
                values[attr] = to_fraction(data[key], key)
        return cls(material=material, **values)

    def with_values(self, **changes: Any) -> FamilyInputs:
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Optional[str]]:
        out: Dict[str, Optional[str]] = {}
        for key, attr in INPUT_FIELDS.items():
            value = getattr(self, attr)
            out[key] = None if value is None else str(value)
        return out


@dataclass(frozen=True)
class CoefficientSet:
    """
    Coefficienti costruiti per una famiglia.

    `values` contiene A0, A1, A2, B1, B2 (sine-Gordon) oppure P0..P3, Q0, Q1
    (MEFM). `Lambda` è valorizzato solo per i casi 11 e 12.
    """

    values: Dict[str, complex]
    lam: complex
    mu: complex
    Lambda: Optional[complex] = None
    extras: Dict[str, complex] = field(default_factory=dict)

    def __getitem__(self, name: str) -> complex:
        return self.values[name]

    def to_dict(self) -> Dict[str, Any]:
        def enc(z: complex) -> Dict[str, float]:
            z = complex(z)
            return {"re": z.real, "im": z.imag}

        out: Dict[str, Any] = {k: enc(v) for k, v in self.values.items()}
        out["lambda"] = enc(self.lam)
        out["mu"] = enc(self.mu)
        if self.Lambda is not None:
            out["Lambda"] = enc(self.Lambda)
        for k, v in self.extras.items():
            out[k] = enc(v)
        return out
