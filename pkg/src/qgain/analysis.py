"""Structural rank machinery for gain graphs.

Cycle classification, the closed-form ranks of paths, cycles and trees,
pendant reduction, matchings, and extraction of an induced subgraph whose
order equals its rank.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .graph import GainGraph, RankReport, adjacency, components, induced, is_connected
from .qlinalg import RankSide, rank
from .quat import ONE, Quaternion

__all__ = [
    "CycleType",
    "Matching",
    "NotACycleError",
    "NotATreeError",
    "SizeLimitError",
    "graph_rank",
    "cycle_gain",
    "classify_cycle",
    "path_rank",
    "cycle_rank",
    "max_matching",
    "tree_rank",
    "reduce_rank",
    "extract_core",
    "dual_pendants",
    "longest_path",
    "is_forest",
    "is_cycle_graph",
    "is_path_graph",
    "cycle_order",
    "EXHAUSTIVE_MATCHING_LIMIT",
    "EXHAUSTIVE_CORE_LIMIT",
]

EXHAUSTIVE_MATCHING_LIMIT = 16
EXHAUSTIVE_CORE_LIMIT = 14


class NotACycleError(ValueError):
    pass


class NotATreeError(ValueError):
    pass


class SizeLimitError(RuntimeError):
    pass


class CycleType(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4

    def __str__(self) -> str:
        return f"Type {self.value}"


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]
    perfect: bool

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def contains(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def graph_rank(G: GainGraph) -> int:
    """Row-left rank of the adjacency matrix, by direct elimination."""
    return rank(adjacency(G), RankSide.ROW_LEFT)


# -- cycles ----------------------------------------------------------------

def _check_cycle(G: GainGraph, cycle: Sequence[int]) -> list[int]:
    cyc = list(cycle)
    if len(cyc) < 3:
        raise NotACycleError(f"a cycle needs at least 3 vertices, got {len(cyc)}")
    if len(set(cyc)) != len(cyc):
        raise NotACycleError(f"repeated vertex in {cyc}")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not (0 <= a < G.n and 0 <= b < G.n) or not G.has_edge(a, b):
            raise NotACycleError(f"{a}-{b} is not an edge, so {cyc} is not a cycle")
    return cyc


def cycle_gain(G: GainGraph, cycle: Sequence[int]) -> Quaternion:
    """Left-to-right product of the oriented gains around ``cycle``."""
    cyc = _check_cycle(G, cycle)
    out = ONE
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        out = out * G.gain(a, b)
    return out


def classify_cycle(G: GainGraph, cycle: Sequence[int]) -> CycleType:
    phi = cycle_gain(G, cycle)
    n = len(cycle)
    if n % 2 == 0:
        target = 1 if (n // 2) % 2 == 0 else -1
        return CycleType.TYPE1 if phi == target else CycleType.TYPE2
    sign = 1 if ((n - 1) // 2) % 2 == 0 else -1
    return CycleType.TYPE3 if sign * phi.re() != 0 else CycleType.TYPE4


def path_rank(n: int) -> int:
    if n < 1:
        raise ValueError("a path has at least one vertex")
    return n - (n % 2)


_CYCLE_DEFICIT = {CycleType.TYPE1: 2, CycleType.TYPE2: 0, CycleType.TYPE3: 0, CycleType.TYPE4: 1}


def cycle_rank(G: GainGraph, cycle: Sequence[int]) -> int:
    """Closed-form rank of the gain cycle traced by ``cycle``.

    Only meaningful as the rank of a component when that component is exactly
    this cycle (no chords, nothing hanging off it).
    """
    return len(cycle) - _CYCLE_DEFICIT[classify_cycle(G, cycle)]


# -- shape predicates --------------------------------------------------------

def is_forest(G: GainGraph, within: Iterable[int] | None = None) -> bool:
    verts = set(range(G.n)) if within is None else set(within)
    m = sum(1 for u in verts for w in G.neighbors(u) if w in verts and u < w)
    return m == len(verts) - len(components(G, verts))


def _is_tree(G: GainGraph) -> bool:
    return G.n >= 1 and is_connected(G) and G.num_edges == G.n - 1


def is_cycle_graph(G: GainGraph, within: Iterable[int] | None = None) -> bool:
    """Connected and 2-regular on at least 3 vertices."""
    verts = list(range(G.n)) if within is None else list(within)
    vs = set(verts)
    if len(vs) < 3:
        return False
    if any(sum(1 for w in G.neighbors(v) if w in vs) != 2 for v in vs):
        return False
    return len(components(G, vs)) == 1


def is_path_graph(G: GainGraph, within: Iterable[int] | None = None) -> bool:
    verts = set(range(G.n)) if within is None else set(within)
    if not verts:
        return False
    degs = [sum(1 for w in G.neighbors(v) if w in verts) for v in verts]
    if any(d > 2 for d in degs):
        return False
    return is_forest(G, verts) and len(components(G, verts)) == 1


def cycle_order(G: GainGraph, verts: Iterable[int]) -> list[int]:
    vs = set(verts)
    start = min(vs)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in G.neighbors(cur) if w in vs and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(vs):
            raise NotACycleError("vertex set does not trace a single cycle")
    return order


# -- matchings -------------------------------------------------------------

def _forest_matching(G: GainGraph) -> set[tuple[int, int]]:
    # match every leaf with its neighbour, delete both, repeat
    alive = set(range(G.n))
    deg = {v: G.degree(v) for v in alive}
    leaves = sorted(v for v in alive if deg[v] == 1)
    matched = set()
    while leaves:
        x = leaves.pop()
        if x not in alive or deg[x] != 1:
            continue
        y = next(w for w in G.neighbors(x) if w in alive)
        matched.add((min(x, y), max(x, y)))
        alive.discard(x)
        alive.discard(y)
        for w in G.neighbors(y):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return matched


def _bipartition(G: GainGraph) -> dict[int, int] | None:
    color: dict[int, int] = {}
    for s in range(G.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def _bipartite_matching(G: GainGraph, color: dict[int, int]) -> set[tuple[int, int]]:
    # Kuhn's augmenting paths; exact for bipartite graphs
    left = [v for v in range(G.n) if color[v] == 0]
    mate: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in sorted(G.neighbors(u)):
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment(mate[w], seen):
                mate[w] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return {(min(u, w), max(u, w)) for w, u in mate.items()}


def _exhaustive_matching(G: GainGraph) -> set[tuple[int, int]]:
    adj = [sum(1 << w for w in G.neighbors(v)) for v in range(G.n)]

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, tuple[tuple[int, int], ...]]:
        if mask == 0:
            return 0, ()
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = best(rest)
        cand = adj[v] & rest
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            size, edges = best(rest & ~(1 << w))
            if size + 1 > top[0]:
                top = (size + 1, edges + ((v, w),))
        return top

    return set(best((1 << G.n) - 1)[1])


def max_matching(G: GainGraph) -> Matching:
    """Maximum matching of the underlying graph.

    Forests use leaf pruning and bipartite graphs augmenting paths.  Other
    graphs fall back to exhaustive search, which is only attempted up to
    ``EXHAUSTIVE_MATCHING_LIMIT`` vertices.
    """
    if is_forest(G):
        edges = _forest_matching(G)
    else:
        color = _bipartition(G)
        if color is not None:
            edges = _bipartite_matching(G, color)
        elif G.n <= EXHAUSTIVE_MATCHING_LIMIT:
            edges = _exhaustive_matching(G)
        else:
            raise SizeLimitError(f"non-bipartite matching on {G.n} > {EXHAUSTIVE_MATCHING_LIMIT} "
                                 "vertices needs blossom matching, which is not provided")
    return Matching(frozenset(edges), 2 * len(edges) == G.n)


def tree_rank(T: GainGraph) -> int:
    """Rank of a gain tree or forest: twice its matching number, whatever the gains."""
    if not is_forest(T):
        raise NotATreeError("tree_rank needs an acyclic underlying graph")
    return 2 * len(_forest_matching(T))


# -- reduction -------------------------------------------------------------

def reduce_rank(G: GainGraph) -> RankReport:
    """Rank via component splitting, pendant reduction and closed forms.

    Whatever cannot be reduced is handed to row-left elimination.  The trace
    lists the steps in the order they were applied; vertex labels are those
    of ``G``.
    """
    trace: list[tuple] = []
    total = 0
    queue = components(G)
    if len(queue) > 1:
        trace.append(("split", [list(c) for c in queue]))
    while queue:
        comp = queue.pop(0)
        verts = set(comp)
        if len(verts) == 1:
            trace.append(("isolated", comp[0]))
            continue
        if len(verts) >= 3 and len(verts) % 2 == 1 and is_path_graph(G, verts):
            r = path_rank(len(verts))
            trace.append(("path", sorted(verts), r))
            total += r
            continue
        pend = [v for v in sorted(verts) if sum(1 for w in G.neighbors(v) if w in verts) == 1]
        if pend:
            x = pend[0]
            y = next(w for w in G.neighbors(x) if w in verts)
            trace.append(("pendant", x, y))
            total += 2
            rest = verts - {x, y}
            if rest:
                parts = components(G, rest)
                if len(parts) > 1:
                    trace.append(("split", [list(p) for p in parts]))
                queue[:0] = parts
            continue
        if is_cycle_graph(G, verts):
            order = cycle_order(G, verts)
            ctype = classify_cycle(G, order)
            r = len(order) - _CYCLE_DEFICIT[ctype]
            trace.append(("cycle", order, ctype, r))
            total += r
            continue
        sub, _ = induced(G, verts)
        r = graph_rank(sub)
        trace.append(("eliminate", sorted(verts), r))
        total += r
    return RankReport(rank=total, nullity=G.n - total, trace=trace)


def extract_core(G: GainGraph, require_connected: bool = False,
                 rank_of=None) -> list[int]:
    """Vertex set ``S`` with ``|S| == rank(G[S]) == rank(G)``.

    Vertices are deleted greedily (smallest label first) while the rank is
    kept, and connectivity too when ``require_connected``.  If that stalls
    above the target size an exhaustive search over ``r``-subsets takes over.
    """
    if rank_of is None:
        rank_of = lambda S: graph_rank(induced(G, S)[0])  # noqa: E731
    if require_connected and not is_connected(G):
        raise ValueError("require_connected needs a connected graph")
    r = rank_of(range(G.n))
    S = list(range(G.n))
    progress = True
    while len(S) > r and progress:
        progress = False
        for v in S:
            T = [w for w in S if w != v]
            if require_connected and not is_connected(G, T):
                continue
            if rank_of(T) == r:
                S = T
                progress = True
                break
    if len(S) == r:
        return S
    if G.n > EXHAUSTIVE_CORE_LIMIT:
        raise SizeLimitError(f"greedy core extraction stalled and exhaustive search on {G.n} > "
                             f"{EXHAUSTIVE_CORE_LIMIT} vertices is not attempted")
    for cand in combinations(range(G.n), r):
        if require_connected and not is_connected(G, cand):
            continue
        if rank_of(cand) == r:
            return list(cand)
    raise RuntimeError("no induced subgraph of full rank found; rank computation is inconsistent")


# -- trees -----------------------------------------------------------------

def _tree_path(T: GainGraph, a: int, b: int) -> list[int]:
    parent = {a: None}
    stack = [a]
    while stack:
        u = stack.pop()
        for w in T.neighbors(u):
            if w not in parent:
                parent[w] = u
                stack.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def dual_pendants(T: GainGraph, v: int, M: Matching) -> set[int]:
    """Pendant vertices joined to pendant ``v`` by an ``M``-alternating path."""
    if not _is_tree(T):
        raise NotATreeError("dual pendants are defined on trees")
    if not M.perfect or 2 * M.size != T.n or any(not T.has_edge(a, b) for a, b in M.edges):
        raise ValueError("M must be a perfect matching of T")
    if T.degree(v) != 1:
        raise ValueError(f"vertex {v} is not a pendant vertex")
    out = set()
    for w in range(T.n):
        if w == v or T.degree(w) != 1:
            continue
        path = _tree_path(T, v, w)
        flags = [M.contains(a, b) for a, b in zip(path, path[1:])]
        if all(f != g for f, g in zip(flags, flags[1:])):
            out.add(w)
    return out


def _bfs_far(T: GainGraph, s: int) -> dict[int, int]:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in T.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def longest_path(T: GainGraph) -> list[int]:
    """A longest path of a tree, lexicographically smallest among all of them."""
    if not _is_tree(T):
        raise NotATreeError("longest_path needs a tree")
    d0 = _bfs_far(T, 0)
    a = max(d0, key=lambda v: (d0[v], -v))
    da = _bfs_far(T, a)
    b = max(da, key=lambda v: (da[v], -v))
    db = _bfs_far(T, b)
    diam = da[b]
    # in a tree every vertex's eccentricity is reached at one end of a diameter
    s = min(v for v in range(T.n) if max(da[v], db[v]) == diam)
    ds = _bfs_far(T, s)
    height = {}
    for u in sorted(ds, key=ds.get, reverse=True):
        height[u] = max((height[w] + 1 for w in T.neighbors(u) if ds[w] == ds[u] + 1), default=0)
    path = [s]
    while height[path[-1]] > 0:
        u = path[-1]
        path.append(min(w for w in T.neighbors(u)
                        if ds[w] == ds[u] + 1 and height[w] == height[u] - 1))
    return path
