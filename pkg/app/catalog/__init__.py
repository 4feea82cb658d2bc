from .auxiliary import AuxSet, InnerFactor, aux_reciprocal, aux_set_for, aux_solution, check_gate
from .registry import (
    REGISTRY,
    FamilyEntry,
    FamilySpec,
    SolitonFamily,
    build,
    coefficient_set,
    evaluate,
    evaluate_grid,
    evaluate_jet,
    jet_at,
    list_families,
    resolve,
    singularities,
    spec_for,
)
from .singularities import Locus, LocusKind, nearest_distance

__all__ = [
    "REGISTRY",
    "AuxSet",
    "FamilyEntry",
    "FamilySpec",
    "InnerFactor",
    "Locus",
    "LocusKind",
    "SolitonFamily",
    "aux_reciprocal",
    "aux_set_for",
    "aux_solution",
    "build",
    "check_gate",
    "coefficient_set",
    "evaluate",
    "evaluate_grid",
    "evaluate_jet",
    "jet_at",
    "list_families",
    "nearest_distance",
    "resolve",
    "singularities",
    "spec_for",
]
