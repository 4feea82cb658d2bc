from .base import Branch, Classification, FamilyId, Method, Variant
from .inputs import INPUT_FIELDS, CoefficientSet, FamilyInputs
from .validators import validate_denominator_pair, validate_real, validate_required

__all__ = [
    "Branch",
    "Classification",
    "CoefficientSet",
    "FamilyId",
    "FamilyInputs",
    "INPUT_FIELDS",
    "Method",
    "Variant",
    "validate_denominator_pair",
    "validate_real",
    "validate_required",
]
