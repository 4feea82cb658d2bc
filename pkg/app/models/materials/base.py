# app/models/materials/base.py

"""
Modello delle costanti fisiche del materiale (asta cilindrica di Murnaghan).

`MaterialConstants` contiene solo i nove input razionali e i vincoli di
base; i parametri derivati (n1, kappa, c1, c2, beta1, alpha1, alpha2) sono
iniettati da `stats.add_derived_properties`. `derive_parameters` li
raccoglie in un `DerivedParameters` immutabile, che è l'oggetto consumato
dal resto del pacchetto.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Any, Dict, Mapping

from app.errors import InvalidConstants, ZeroPoissonRatio
from app.models.materials.stats import add_derived_properties
from app.models.materials.validators import (
    validate_lame_pair,
    validate_nonzero,
    validate_positive,
)
from app.utils.rational import format_fraction, to_fraction


@add_derived_properties
@dataclass(frozen=True)
class MaterialConstants:
    """
    Costanti del materiale, tutte razionali esatte.

    Attributi:
    - lambda1, mu1: coefficienti di Lamé.
    - nu1, nu2, nu4: costanti costitutive di Murnaghan (segno libero).
    - rho, c: densità e velocità caratteristica.
    - delta, epsilon: piccoli parametri del modello.
    """

    lambda1: Fraction
    mu1: Fraction
    nu1: Fraction
    nu2: Fraction
    nu4: Fraction
    rho: Fraction
    c: Fraction
    delta: Fraction
    epsilon: Fraction

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, f.name, to_fraction(value, f.name))
        validate_lame_pair(self.lambda1, self.mu1)
        validate_positive("rho", self.rho)
        validate_nonzero("c", self.c)
        validate_nonzero("delta", self.delta)
        validate_nonzero("epsilon", self.epsilon)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> MaterialConstants:
        """
        Costruisce le costanti da un oggetto JSON.

        Raises:
            InvalidConstants: Campo mancante, sconosciuto o non razionale.
        """
        names = [f.name for f in fields(cls)]
        unknown = sorted(set(data) - set(names))
        if unknown:
            raise InvalidConstants(unknown[0], "campo sconosciuto")
        missing = [n for n in names if n not in data]
        if missing:
            raise InvalidConstants(missing[0], "campo obbligatorio mancante")
        return cls(**{n: to_fraction(data[n], n) for n in names})

    def to_dict(self) -> Dict[str, str]:
        return {k: format_fraction(v) for k, v in asdict(self).items()}


@dataclass(frozen=True)
class DerivedParameters:
    """
    Parametri derivati esatti.

    delta ed epsilon sono riportati dalle costanti perché compaiono in tutte
    le formule dei coefficienti insieme ai dieci parametri derivati.
    """

    n1: Fraction
    beta1: Fraction
    alpha1: Fraction
    alpha2: Fraction
    c1: Fraction
    c2: Fraction
    kappa1: Fraction
    kappa3: Fraction
    kappa5: Fraction
    kappa6: Fraction
    delta: Fraction
    epsilon: Fraction

    def to_dict(self) -> Dict[str, str]:
        return {k: format_fraction(v) for k, v in asdict(self).items()}

    def to_decimal_dict(self) -> Dict[str, float]:
        return {k: float(v) for k, v in asdict(self).items()}


def derive_parameters(mc: MaterialConstants) -> DerivedParameters:
    """
    Calcola i parametri derivati in aritmetica razionale esatta.

    Raises:
        ZeroPoissonRatio: Se lambda1 = 0 (n1 = 0, kappa6/n1 indefinito).
    """
    if mc.n1 == 0:
        raise ZeroPoissonRatio()
    return DerivedParameters(
        n1=mc.n1,
        beta1=mc.beta1,
        alpha1=mc.alpha1,
        alpha2=mc.alpha2,
        c1=mc.c1,
        c2=mc.c2,
        kappa1=mc.kappa1,
        kappa3=mc.kappa3,
        kappa5=mc.kappa5,
        kappa6=mc.kappa6,
        delta=mc.delta,
        epsilon=mc.epsilon,
    )
