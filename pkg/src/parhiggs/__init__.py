"""Exact invariants of rank-2 parabolic Higgs moduli spaces.

Weight-space walls and chambers, Morse strata of the circle action,
Poincare polynomials and Euler characteristics, and decision procedures for
stabilizing Higgs fields. All arithmetic is exact.
"""
__version__ = "0.1.0"

from .arrangement import (
    ChamberID, Wall, chamber_of, enumerate_chambers, enumerate_walls, fusion_nonempty,
    is_null_chamber, is_vanishing_wall, segment_crossings,
)
from .betti import (
    euler_characteristic, higgs_poincare, higgs_poincare_closed, higgs_poincare_morse,
    parabolic_poincare, poincare_report, survey_chambers, wallcross_delta_check,
)
from .errors import (
    ConsistencyError, InsufficientData, InvalidInput, NonGenericWeights, OnWall, ParHiggsError,
)
from .exactmath import IntPoly, macdonald_coeff, parse_fraction
from .morse import Stratum, enumerate_strata, weighted_stratum_sum
from .parabolic import Curve, WeightVector, parse_weights, pardeg_sub
from .stability import (
    Decision, SplitData, exists_stable_higgs, exists_stable_pair, p1_three_classify,
)

__all__ = [
    "ChamberID", "ConsistencyError", "Curve", "Decision", "InsufficientData", "IntPoly",
    "InvalidInput", "NonGenericWeights", "OnWall", "ParHiggsError", "SplitData", "Stratum",
    "Wall", "WeightVector", "chamber_of", "enumerate_chambers", "enumerate_strata",
    "enumerate_walls", "euler_characteristic", "exists_stable_higgs", "exists_stable_pair",
    "fusion_nonempty", "higgs_poincare", "higgs_poincare_closed", "higgs_poincare_morse",
    "is_null_chamber", "is_vanishing_wall", "macdonald_coeff", "p1_three_classify",
    "parabolic_poincare", "pardeg_sub", "parse_fraction", "parse_weights", "poincare_report",
    "segment_crossings", "survey_chambers", "wallcross_delta_check", "weighted_stratum_sum",
]
