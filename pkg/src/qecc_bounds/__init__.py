"""Exact bounds, CSS constructions and a parameter classifier for quantum codes."""

from .bounds import (
    BoundVerdict,
    QuantumParams,
    classical_bounds,
    combined_css_hamming,
    cor_tight_singleton,
    css_feasibility,
    k1_feasible_range,
    qhb_check,
    quantum_griesmer_css,
    quantum_singleton_check,
    rains_css_max_t,
)
from .codes import (
    LinearCode,
    WorkLimitExceeded,
    code_from_generator,
    coset_min_weight,
    dual,
    is_subcode,
    min_weight,
)
from .css import CssPair, DerivedCodes, css_params, lemma1_derive, verify_derived
from .galois import CodeMatrix, FieldElement, FieldSpec, field_arith, field_make, rref
from .scan import Category, Classification, classify, oracle_exhaustive_css, scan_range
from .threshold import delta_threshold, table1, thm1_applies

__version__ = "0.1.0"
