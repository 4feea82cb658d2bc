# app/models/family/base.py

"""
Identità e classificazione delle famiglie di soluzioni.

Una famiglia è identificata da (metodo, caso, variante, ramo) e si
serializza come stringa puntata, es. "sg.case1.tanh.plus" oppure
"mefm.case13.exp.minus". L'ordinamento canonico segue l'ordine di
dichiarazione degli enum (prima sine-Gordon, poi MEFM).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from app.errors import UnknownFamily


class Method(str, Enum):
    SINE_GORDON = "sg"
    MEFM = "mefm"


class Variant(str, Enum):
    TANH = "tanh"
    COTH = "coth"
    TAN = "tan"
    EXP = "exp"
    RATIONAL = "rational"


class Branch(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> int:
        return 1 if self is Branch.PLUS else -1


class Classification(str, Enum):
    TOPOLOGICAL = "topological"
    SINGULAR = "singular"
    COMPOUND_TOPOLOGICAL_NONTOPOLOGICAL = "compound_topological_nontopological"
    COMPOUND_SINGULAR = "compound_singular"
    SOLITON_LIKE = "soliton_like"
    SINGULAR_PERIODIC = "singular_periodic"
    EXPONENTIAL = "exponential"
    RATIONAL = "rational"


_ID_PATTERN = re.compile(r"^(sg|mefm)\.case(\d+)\.([a-z]+)\.(plus|minus)$")


def _position(member: Enum) -> int:
    return list(type(member)).index(member)


@dataclass(frozen=True)
class FamilyId:
    method: Method
    case_no: int
    variant: Variant
    branch: Branch

    def __str__(self) -> str:
        return f"{self.method.value}.case{self.case_no}.{self.variant.value}.{self.branch.value}"

    @property
    def stem(self) -> str:
        """Identificativo senza ramo, es. "mefm.case13.exp"."""
        return f"{self.method.value}.case{self.case_no}.{self.variant.value}"

    def sort_key(self) -> Tuple[int, int, int, int]:
        return (
            _position(self.method),
            self.case_no,
            _position(self.variant),
            _position(self.branch),
        )

    def with_branch(self, branch: Branch) -> FamilyId:
        return FamilyId(self.method, self.case_no, self.variant, branch)

    @classmethod
    def parse(cls, text: str) -> FamilyId:
        """
        Interpreta la forma stringa di un identificativo.

        Raises:
            UnknownFamily: Se la stringa non rispetta il formato.
        """
        match = _ID_PATTERN.match(text.strip().lower())
        if not match:
            raise UnknownFamily(text)
        method, case_no, variant, branch = match.groups()
        try:
            return cls(Method(method), int(case_no), Variant(variant), Branch(branch))
        except ValueError as e:
            raise UnknownFamily(text) from e
