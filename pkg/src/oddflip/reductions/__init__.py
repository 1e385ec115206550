"""Generators for the three hardness constructions and their file formats."""

from .diameter import DiameterInstance, build_diameter_instance, build_witness_pair
from .formula import QuantifiedFormula, SetCoverInstance, parse_formula, parse_setcover
from .params import CLOSED_FORM, SAFE_MINIMAL, ReductionParams
from .radius import RadiusInstance, build_radius_instance, build_radius_witnesses
from .setcover import (SetCoverReduction, build_setcover_instance, canonical_sequence,
                       recover_cover)

__all__ = [
    "DiameterInstance", "build_diameter_instance", "build_witness_pair",
    "QuantifiedFormula", "SetCoverInstance", "parse_formula", "parse_setcover",
    "CLOSED_FORM", "SAFE_MINIMAL", "ReductionParams",
    "RadiusInstance", "build_radius_instance", "build_radius_witnesses",
    "SetCoverReduction", "build_setcover_instance", "canonical_sequence", "recover_cover",
]
