# app/models/__init__.py
"""
Package dei modelli di dominio.

Esporta le costanti del materiale e gli identificativi/input delle famiglie
per un facile accesso.

IMPORTANTE: `family` dipende da `materials` (DerivedParameters), quindi
l'ordine di importazione va mantenuto.
"""

# 1. Costanti del materiale e parametri derivati
from .materials import DerivedParameters, MaterialConstants, derive_parameters

# 2. Identificativi e input delle famiglie (dipendono da DerivedParameters)
from .family import Branch, FamilyId, FamilyInputs, Method, Variant

# Definisce l'API pubblica di questo package
__all__ = [
    "Branch",
    "DerivedParameters",
    "FamilyId",
    "FamilyInputs",
    "MaterialConstants",
    "Method",
    "Variant",
    "derive_parameters",
]
