"""Minimum and maximum rank of sign pattern matrices.

Polynomial-time decision of ``minrank <= 0, 1, 2``, maximum rank by
bipartite matching, exact covector enumeration for rational line
arrangements, and the arrangement-to-matrix constructions, each backed by
brute-force oracles.
"""

from .chain import (
    ChainWitness,
    Rank2Witness,
    SetSystem,
    build_set_system,
    has_two_chain,
    minrank_le2_strict,
    minrank_le_r_small,
    t_minus,
    verify_rank2_witness,
)
from .genreduce import ReductionOutcome, minrank_le2, reduce_generalized
from .geometry import Arrangement, CovectorSet, Line, Point, covector_at, enumerate_covectors, is_uniform
from .matroid import (
    PointLineRealization,
    build_matrix_lemma_main,
    build_matrix_lemma_main2,
    find_reorientation,
    mat_of,
    reconstruct_from_C2,
    reorient,
    verify_rank3_witness,
)
from .maxrank import maxrank
from .oracle import heuristic_rank_upper_bound, minrank2_oracle, sauer_shelah_bound, subspace_patterns
from .rational import rational_rank
from .signs import Sign, SignMatrix, complement, flip_rows, parse_matrix, serialize_matrix, sign_of_rational_matrix

__version__ = "0.1.0"
