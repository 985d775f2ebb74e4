"""Moduli-side computations: degenerate loci, the w-tower, recovery and Nielsen counts."""

from .case3 import Case3Invariants, case3_invariant_functions, recover_case3, u_of_a
from .classification import (
    ClassificationPoly,
    classification,
    classification_poly,
    is_v4_point,
    split_factors,
    v4_numeric_check,
)
from .discriminant import DeltaDerivation, delta_derivation_check, derive_delta
from .formulas import TParam, a_of_t, formulas, locus_formulas, recover_parameter, t_of_a, y1_formulas, y2_formulas
from .nielsen import NielsenCount, nielsen_count
from .wtower import WRelation, delta_w_check, verify_w_relation, w_of_z, w_relation, w_symbolic, y3_membership, y3_uv_constraint

__all__ = [
    "Case3Invariants", "ClassificationPoly", "DeltaDerivation", "NielsenCount", "TParam", "WRelation",
    "a_of_t", "case3_invariant_functions", "classification", "classification_poly", "delta_derivation_check",
    "delta_w_check", "derive_delta", "formulas", "is_v4_point", "locus_formulas", "nielsen_count",
    "recover_case3", "recover_parameter", "split_factors", "t_of_a", "u_of_a", "v4_numeric_check",
    "verify_w_relation", "w_of_z", "w_relation", "w_symbolic", "y1_formulas", "y2_formulas",
    "y3_membership", "y3_uv_constraint",
]
