"""Binary cyclic codes from monomials and trinomials over GF(2^m).

Pipeline: a polynomial f over GF(2^m) defines the period-(2^m - 1)
binary sequence s_i = Tr(f(alpha^i + 1)); the sequence's minimal
polynomial becomes the generator of a cyclic code.  Five families come
with closed-form predictions of the generator, dimension, and distance
bounds, verified here computationally.
"""

from .codes import (
    CyclicCode,
    DistanceBudget,
    DistanceResult,
    SpherePackingResult,
    bch_bound,
    dual,
    encode,
    from_generator,
    is_even_weight,
    min_distance,
    sphere_packing_check,
)
from .cosets import (
    Coset,
    CosetTable,
    EpsilonTable,
    build_coset_table,
    build_epsilon_table,
    count_odd_epsilon,
    odd_even_split,
    weight2,
)
from .families import (
    CodePrediction,
    DiscrepancyReport,
    PredictionMismatch,
    RealizationRecord,
    apn_profile,
    kasami_h_window,
    predict_kasami,
    predict_niho,
    predict_power2h,
    predict_trinomial,
    predict_welch,
    realize,
)
from .field import DEFAULT_MODULI, FieldContext, make_field
from .gf2x import BinPoly, poly_divexact, poly_gcd
from .seqgen import (
    DefiningSequence,
    ExponentPoly,
    SpanResult,
    autocorrelation,
    autocorrelation_profile,
    berlekamp_massey,
    defining_sequence,
    expansion_support,
    minimal_poly_expansion,
    minimal_poly_gcd,
)

__version__ = "0.1.0"

__all__ = [
    "BinPoly", "CodePrediction", "Coset", "CosetTable", "CyclicCode",
    "DEFAULT_MODULI", "DefiningSequence", "DiscrepancyReport",
    "DistanceBudget", "DistanceResult", "EpsilonTable", "ExponentPoly",
    "FieldContext", "PredictionMismatch", "RealizationRecord", "SpanResult",
    "SpherePackingResult", "apn_profile", "autocorrelation",
    "autocorrelation_profile", "bch_bound", "berlekamp_massey",
    "build_coset_table", "build_epsilon_table", "count_odd_epsilon",
    "defining_sequence", "dual", "encode", "expansion_support",
    "from_generator", "is_even_weight", "kasami_h_window", "make_field",
    "min_distance", "minimal_poly_expansion", "minimal_poly_gcd",
    "odd_even_split", "poly_divexact", "poly_gcd", "predict_kasami",
    "predict_niho", "predict_power2h", "predict_trinomial", "predict_welch",
    "realize", "sphere_packing_check", "weight2",
]
