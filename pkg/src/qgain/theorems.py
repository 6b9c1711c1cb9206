"""Maximum-degree rank bounds and recognizers for the graphs attaining them.

The recognizers are purely structural (plus 4-cycle classification) and
never compute a rank, so they can be checked against the rank engine
independently.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations

from .analysis import CycleType, cycle_order, classify_cycle, graph_rank, is_cycle_graph
from .graph import GainGraph, components, degrees, is_connected

__all__ = [
    "BoundVerdict",
    "PreconditionError",
    "NotCompleteBipartiteError",
    "check_general_bound",
    "check_connected_bound",
    "is_extremal_general",
    "is_extremal_connected",
    "all_c4_type1",
    "all_c4_type1_reduced",
    "complete_bipartite_parts",
    "four_cycles",
]


class PreconditionError(ValueError):
    """The input does not satisfy the hypotheses of the bound being checked."""


class NotCompleteBipartiteError(PreconditionError):
    pass


@dataclass(frozen=True)
class BoundVerdict:
    n: int
    delta: int
    rank: int
    bound: Fraction
    holds: bool
    tight: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["bound"] = str(self.bound)
        out["bound_ceil"] = math.ceil(self.bound)
        return out


def _verdict(n: int, delta: int, r: int, bound: Fraction) -> BoundVerdict:
    return BoundVerdict(n=n, delta=delta, rank=r, bound=bound,
                        holds=r >= math.ceil(bound), tight=r == bound)


def check_general_bound(G: GainGraph, rank: int | None = None) -> BoundVerdict:
    """``rank >= n / max_degree`` for graphs without isolated vertices."""
    deg, delta, _ = degrees(G)
    if G.n == 0 or min(deg) == 0:
        raise PreconditionError("the n/Δ bound needs a graph without isolated vertices")
    r = graph_rank(G) if rank is None else rank
    return _verdict(G.n, delta, r, Fraction(G.n, delta))


def check_connected_bound(G: GainGraph, rank: int | None = None) -> BoundVerdict:
    """``rank >= (n - 2) / (max_degree - 1)`` for connected graphs with Δ >= 2."""
    _, delta, _ = degrees(G)
    if not is_connected(G) or G.n == 0:
        raise PreconditionError("the (n-2)/(Δ-1) bound needs a connected graph")
    if delta < 2:
        raise PreconditionError("the (n-2)/(Δ-1) bound needs maximum degree at least 2")
    r = graph_rank(G) if rank is None else rank
    return _verdict(G.n, delta, r, Fraction(G.n - 2, delta - 1))


def complete_bipartite_parts(G: GainGraph, within=None) -> tuple[list[int], list[int]] | None:
    """The two sides if the (sub)graph is complete bipartite, else ``None``.

    The side containing the smallest vertex comes first.
    """
    verts = sorted(range(G.n) if within is None else within)
    if len(verts) < 2:
        return None
    vs = set(verts)
    first = verts[0]
    side_b = sorted(w for w in G.neighbors(first) if w in vs)
    if not side_b:
        return None
    side_a = sorted(vs - set(side_b))
    bset = set(side_b)
    for u in side_a:
        if set(w for w in G.neighbors(u) if w in vs) != bset:
            return None
    aset = set(side_a)
    for w in side_b:
        if set(x for x in G.neighbors(w) if x in vs) != aset:
            return None
    return side_a, side_b


def four_cycles(G: GainGraph, within=None):
    """Every 4-cycle once, as ``[a, b, c, d]`` with ``a`` its smallest vertex."""
    verts = sorted(range(G.n) if within is None else within)
    vs = set(verts)
    for a in verts:
        for b, d in combinations(sorted(w for w in G.neighbors(a) if w in vs and w > a), 2):
            for c in sorted(G.neighbors(b) & G.neighbors(d)):
                if c in vs and c > a and c != b and c != d:
                    yield [a, b, c, d]


def all_c4_type1(G: GainGraph, part_check: bool = False, within=None) -> bool:
    """True when every 4-cycle (of the subgraph on ``within``) is of Type 1.

    With ``part_check`` the graph must be a complete bipartite ``K_{a,b}``
    with ``a, b >= 2`` and the 4-cycles are enumerated as pairs of pairs
    across the bipartition.
    """
    if part_check:
        parts = complete_bipartite_parts(G, within)
        if parts is None or min(len(parts[0]), len(parts[1])) < 2:
            raise NotCompleteBipartiteError("expected a complete bipartite K_{a,b} with a, b >= 2")
        A, B = parts
        for u1, u2 in combinations(A, 2):
            for v1, v2 in combinations(B, 2):
                if classify_cycle(G, [u1, v1, u2, v2]) is not CycleType.TYPE1:
                    return False
        return True
    return all(classify_cycle(G, c) is CycleType.TYPE1 for c in four_cycles(G, within))


def all_c4_type1_reduced(G: GainGraph, within=None) -> bool:
    """Same answer as :func:`all_c4_type1` on a complete bipartite graph, but
    only looks at the 4-cycles through the first vertex of each side."""
    parts = complete_bipartite_parts(G, within)
    if parts is None or min(len(parts[0]), len(parts[1])) < 2:
        raise NotCompleteBipartiteError("expected a complete bipartite K_{a,b} with a, b >= 2")
    A, B = parts
    u1, v1 = A[0], B[0]
    return all(classify_cycle(G, [u1, v1, u2, v2]) is CycleType.TYPE1
               for u2 in A[1:] for v2 in B[1:])


def is_extremal_general(G: GainGraph) -> bool:
    """Disjoint union of ``K_{Δ,Δ}`` copies whose 4-cycles are all Type 1."""
    deg, delta, _ = degrees(G)
    if G.n == 0 or min(deg) == 0:
        raise PreconditionError("needs a graph without isolated vertices")
    if G.n % (2 * delta):
        return False
    for comp in components(G):
        parts = complete_bipartite_parts(G, comp)
        if parts is None or len(parts[0]) != delta or len(parts[1]) != delta:
            return False
        if delta >= 2 and not all_c4_type1(G, part_check=True, within=comp):
            return False
    return True


def is_extremal_connected(G: GainGraph) -> bool:
    """A Type 1 cycle, or ``K_{n/2,n/2}`` whose 4-cycles are all Type 1."""
    _, delta, _ = degrees(G)
    if G.n == 0 or not is_connected(G):
        raise PreconditionError("needs a connected graph")
    if delta < 2:
        raise PreconditionError("needs maximum degree at least 2")
    if is_cycle_graph(G):
        return classify_cycle(G, cycle_order(G, range(G.n))) is CycleType.TYPE1
    parts = complete_bipartite_parts(G)
    if parts is None or len(parts[0]) != len(parts[1]):
        return False
    return all_c4_type1(G, part_check=True)

