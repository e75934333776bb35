"""framelat: self-dual Z_k codes, unimodular lattices, and k-frames.

Exact construction and verification toolkit: block-matrix code builders,
Construction A, short-vector enumeration (minimum norms, theta coefficients,
kissing numbers), shadows and unimodular neighbors, k-frame search and
scaling, and constrained quaternary representations of primes.
"""

from .codes import (
    EuclideanWeightReport,
    NegacirculantSpec,
    ZkCode,
    extremal_bound,
    four_block_code,
    is_self_dual,
    make_code,
    min_euclidean_weight,
    negacirculant,
    paley_matrix,
    two_block_code,
    z4_split_code,
)
from .errors import FramelatError
from .frames import (
    Frame,
    FrameSearchResult,
    code_from_frame,
    find_frame,
    prop_const_frame,
    scale_frame,
    standard_frame,
    star_condition,
)
from .lattices import (
    ShadowDecomposition,
    ThetaFingerprint,
    UnimodularLattice,
    construction_a,
    even_neighbors,
    min_norm,
    odd_neighbor_from_vector,
    shadow,
    theta_coefficients,
)
from .linalg import gram, hnf, imat, lll_reduce
from .representations import (
    CASES,
    FormParams,
    RepWitness,
    find_representation,
    form_lattice,
    form_theta,
    frame_order_for,
)

__version__ = "0.1.0"

__all__ = [
    "CASES",
    "EuclideanWeightReport",
    "Frame",
    "FrameSearchResult",
    "FormParams",
    "FramelatError",
    "NegacirculantSpec",
    "RepWitness",
    "ShadowDecomposition",
    "ThetaFingerprint",
    "UnimodularLattice",
    "ZkCode",
    "code_from_frame",
    "construction_a",
    "even_neighbors",
    "extremal_bound",
    "find_frame",
    "find_representation",
    "form_lattice",
    "form_theta",
    "four_block_code",
    "frame_order_for",
    "gram",
    "hnf",
    "imat",
    "is_self_dual",
    "lll_reduce",
    "make_code",
    "min_euclidean_weight",
    "min_norm",
    "negacirculant",
    "odd_neighbor_from_vector",
    "paley_matrix",
    "prop_const_frame",
    "scale_frame",
    "shadow",
    "standard_frame",
    "star_condition",
    "theta_coefficients",
    "two_block_code",
    "z4_split_code",
]
