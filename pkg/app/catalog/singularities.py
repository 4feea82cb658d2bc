# app/catalog/singularities.py

"""
Luoghi singolari delle famiglie, espressi nella variabile xi.

Un luogo è un punto xi0 oppure una famiglia periodica xi0 + n*period.
`distance` restituisce la distanza del punto più vicino, così la verifica
può escludere un intorno dei poli prima di valutare i jet.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from app.catalog.auxiliary import AuxSet, InnerFactor, inner_factor


class LocusKind(str, Enum):
    POLE = "pole"
    # il denominatore della forma stampata tende a zero solo all'infinito
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class Locus:
    kind: LocusKind
    xi0: complex
    period: Optional[complex] = None
    note: str = ""

    def distance(self, xi: complex) -> float:
        if self.kind is LocusKind.ASYMPTOTIC:
            return math.inf
        offset = complex(xi) - self.xi0
        if not self.period:
            return abs(offset)
        p = self.period
        n = round((offset * p.conjugate()).real / abs(p) ** 2)
        return min(abs(offset - k * p) for k in (n - 1, n, n + 1))

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "kind": self.kind.value,
            "xi0": {"re": self.xi0.real, "im": self.xi0.imag},
            "note": self.note,
        }
        if self.period is not None:
            out["period"] = {"re": self.period.real, "im": self.period.imag}
        return out


def nearest_distance(loci: Sequence[Locus], xi: complex) -> float:
    """Distanza dal luogo più vicino (inf se non ce ne sono)."""
    return min((locus.distance(xi) for locus in loci), default=math.inf)


def sg_coth_loci(origin_removable: bool = False) -> List[Locus]:
    if origin_removable:
        # cosh/(cosh + 1): restano solo i poli in xi = i*pi*(2n + 1)
        return [Locus(LocusKind.POLE, 1j * math.pi, 2j * math.pi, "polo di cosh/(cosh + 1)")]
    # coth e csch hanno poli in xi = i*pi*n
    return [Locus(LocusKind.POLE, 0j, 1j * math.pi, "polo di coth/csch")]


def sg_tanh_loci() -> List[Locus]:
    return [Locus(LocusKind.POLE, 0.5j * math.pi, 1j * math.pi, "poli complessi di tanh/sech")]


def aux_level_loci(
    aux: AuxSet,
    tau: complex,
    sigma: complex,
    e: complex,
    level: complex,
    note: str,
    factor: InnerFactor = InnerFactor.HALF,
) -> List[Locus]:
    """
    Punti in cui y(xi) = level, con y la soluzione chiusa del Set.

    Sono i poli di E = 1/y (level = 0) oppure gli zeri del denominatore
    Q0 + Q1*E (level = -Q1/Q0).
    """
    if aux in (AuxSet.SET1, AuxSet.SET2):
        k = inner_factor(aux, tau, sigma, factor)
        if aux is AuxSet.SET1:
            root = cmath.sqrt(tau * tau - 4 * sigma)
            arg = -(2 * sigma * level + tau) / root
            if abs(arg * arg - 1) == 0:
                return []
            return [Locus(LocusKind.POLE, cmath.atanh(arg) / k - e, 1j * math.pi / k, note)]
        root = cmath.sqrt(4 * sigma - tau * tau)
        arg = (2 * sigma * level + tau) / root
        if abs(arg * arg + 1) == 0:
            return []
        return [Locus(LocusKind.POLE, cmath.atan(arg) / k - e, math.pi / k, note)]
    if aux is AuxSet.SET3:
        X = 1 + tau * level
        if X == 0:
            return []
        return [Locus(LocusKind.POLE, cmath.log(X) / tau - e, 2j * math.pi / tau, note)]
    if aux is AuxSet.SET4:
        # y = -2/tau - 4/(tau^2 z): y = level per z = -4/(tau^2 (level + 2/tau))
        shift = level + 2 / tau
        if shift == 0:
            return []
        return [Locus(LocusKind.POLE, -4 / (tau * tau * shift) - e, None, note)]
    return [Locus(LocusKind.POLE, level - e, None, note)]


def aux_infinity_loci(
    aux: AuxSet,
    tau: complex,
    sigma: complex,
    e: complex,
    note: str,
    factor: InnerFactor = InnerFactor.HALF,
) -> List[Locus]:
    """Punti in cui y(xi) diverge (E = 0)."""
    if aux is AuxSet.SET1:
        k = inner_factor(aux, tau, sigma, factor)
        return [Locus(LocusKind.POLE, 0.5j * math.pi / k - e, 1j * math.pi / k, note)]
    if aux is AuxSet.SET2:
        k = inner_factor(aux, tau, sigma, factor)
        return [Locus(LocusKind.POLE, 0.5 * math.pi / k - e, math.pi / k, note)]
    if aux is AuxSet.SET4:
        return [Locus(LocusKind.POLE, -e, None, note)]
    return []
