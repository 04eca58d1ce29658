"""Exact analysis of p-ary functions f: GF(p)^n -> GF(p).

Bentness, regularity and duals over Z[zeta_p]; edge-weighted Cayley graphs;
(weighted) partial difference sets and association schemes; GL(n, p) orbit
classification; and a randomized search for Boolean bent functions.
"""

from .core import (
    Anf,
    PAryFunction,
    evaluate_anf,
    format_function_literal,
    function_from_anf_text,
    is_even,
    parse_anf,
    parse_function_literal,
    signature,
    support,
    to_anf,
    vector_index,
)
from .cyclotomic import CycInt, as_root_of_unity_multiple, gauss_sum
from .transforms import (
    BentProfile,
    WalshSpectrum,
    classify_regularity,
    derivative_is_balanced,
    dual_round_trip,
    fourier_transform,
    is_bent,
    is_butson,
    walsh_transform,
)
from .graph import (
    WeightedCayleyGraph,
    build_cayley_graph,
    connected_components,
    distance_regularity_check,
    is_strongly_regular_unweighted,
    matrix_walk_counts,
    spectrum_via_fourier,
    weighted_srg_verdict,
)
from .combinatorics import (
    LevelCurves,
    WpdsReport,
    build_association_scheme,
    complement_pds_params,
    intersection_numbers_direct,
    intersection_numbers_trace,
    is_pds,
    is_weighted_pds,
    latin_square_type,
)
from .orbits import OrbitReport, act, enumerate_gl, orbit_partition, scalar_relations
from .search import NoBentFunction, search_bent
from .classify import classify, conjecture_report, lemma34_check

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
