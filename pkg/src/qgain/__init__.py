"""Exact rank computations for quaternion unit gain graphs."""

from .analysis import (
    CycleType,
    Matching,
    classify_cycle,
    cycle_gain,
    cycle_rank,
    dual_pendants,
    extract_core,
    graph_rank,
    longest_path,
    max_matching,
    path_rank,
    reduce_rank,
    tree_rank,
)
from .graph import GainGraph, RankReport, adjacency, components, degrees, induced, validate
from .qlinalg import QMatrix, RankSide, is_hermitian, left_scale_row, rank
from .quat import I, J, K, ONE, ZERO, Quaternion, norm_sq, qconj, qinv, qmul, unit_from_seed
from .theorems import (
    BoundVerdict,
    all_c4_type1,
    check_connected_bound,
    check_general_bound,
    is_extremal_connected,
    is_extremal_general,
)

__version__ = "0.1.0"
