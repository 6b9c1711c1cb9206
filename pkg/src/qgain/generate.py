"""Seeded constructors for random and extremal gain graphs.

Every generator takes an integer seed and is deterministic in
``(parameters, seed)``; none of them touches the global ``random`` state.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from .graph import GainGraph
from .quat import ONE, I, J, K, Quaternion, unit_from_seed

__all__ = [
    "SEED_NUMERATOR_BOUND",
    "SEED_DENOMINATOR_BOUND",
    "random_unit",
    "random_gains",
    "type1_cycle",
    "rank2_kab",
    "extremal_union",
    "random_pm_tree",
    "random_connected",
    "random_graph",
    "random_tree",
    "path_graph",
    "cycle_graph",
    "complete_bipartite",
    "disjoint_union",
]

# seed quaternions draw components p/q with |p| <= 5, 1 <= q <= 5
SEED_NUMERATOR_BOUND = 5
SEED_DENOMINATOR_BOUND = 5

_BASIS_UNITS = [s * u for u in (ONE, I, J, K) for s in (ONE, -ONE)]


def _rng(seed: int) -> random.Random:
    return random.Random(seed & 0xFFFF_FFFF_FFFF_FFFF)


def random_unit(rng: random.Random, palette: str = "rational") -> Quaternion:
    """Random exact unit quaternion.

    ``palette="rational"`` squares a random small rational seed;
    ``palette="basis"`` picks one of the eight units ``±1, ±i, ±j, ±k``,
    which makes degenerate cycle types (Type 1, Type 4) common.
    """
    if palette == "basis":
        return rng.choice(_BASIS_UNITS)
    if palette != "rational":
        raise ValueError(f"unknown gain palette {palette!r}")
    while True:
        parts = [Fraction(rng.randint(-SEED_NUMERATOR_BOUND, SEED_NUMERATOR_BOUND),
                          rng.randint(1, SEED_DENOMINATOR_BOUND)) for _ in range(4)]
        if any(parts):
            return unit_from_seed(Quaternion(*parts))


def random_gains(n: int, edges: Iterable[tuple[int, int]], seed: int,
                 palette: str = "rational") -> GainGraph:
    """Put independent random unit gains on a simple underlying graph."""
    rng = _rng(seed)
    seen = set()
    gains = {}
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            raise ValueError(f"underlying graph is not simple at edge {u}-{v}")
        seen.add(key)
        gains[key] = random_unit(rng, palette)
    return GainGraph(n, gains)


# -- skeletons -------------------------------------------------------------

def path_graph(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def cycle_graph(n: int) -> list[tuple[int, int]]:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]


def complete_bipartite(a: int, b: int) -> list[tuple[int, int]]:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    return [(u, a + v) for u in range(a) for v in range(b)]


def disjoint_union(graphs: Iterable[GainGraph]) -> GainGraph:
    gains = {}
    offset = 0
    for G in graphs:
        for (u, v), q in G.gains.items():
            if u < v:
                gains[(u + offset, v + offset)] = q
        offset += G.n
    return GainGraph(offset, gains)


def random_tree(n: int, seed: int, palette: str = "rational") -> GainGraph:
    """Random recursive tree (each new vertex hangs off a uniform earlier one)."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    rng = _rng(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return random_gains(n, edges, rng.getrandbits(64), palette)


# -- extremal families -----------------------------------------------------

def type1_cycle(n: int, seed: int, palette: str = "rational") -> GainGraph:
    """Gain cycle ``0-1-...-(n-1)-0`` whose gain product is exactly ``(-1)^(n/2)``."""
    if n < 4 or n % 2:
        raise ValueError(f"a Type 1 cycle needs an even order >= 4, got {n}")
    rng = _rng(seed)
    gains = {}
    prod = ONE
    for i in range(n - 1):
        q = random_unit(rng, palette)
        gains[(i, i + 1)] = q
        prod = prod * q
    target = ONE if (n // 2) % 2 == 0 else -ONE
    closing = prod.inverse() * target  # gain of n-1 -> 0
    gains[(0, n - 1)] = closing.conj()
    return GainGraph(n, gains)


def rank2_kab(a: int, b: int, seed: int, palette: str = "rational") -> GainGraph:
    """``K_{a,b}`` whose biadjacency rows are left multiples of the first row.

    Gain ``u_i -> v_j`` is ``k_i * alpha_j`` with ``k_1 = 1``; every 4-cycle
    is then of Type 1 and the rank is 2.
    """
    if a < 2 or b < 2:
        raise ValueError("rank2_kab needs a, b >= 2")
    rng = _rng(seed)
    ks = [ONE] + [random_unit(rng, palette) for _ in range(a - 1)]
    alphas = [random_unit(rng, palette) for _ in range(b)]
    gains = {(i, a + j): ks[i] * alphas[j] for i in range(a) for j in range(b)}
    return GainGraph(a + b, gains)


def extremal_union(n: int, delta: int, seed: int, palette: str = "rational") -> GainGraph:
    """``n / (2 delta)`` disjoint copies of a rank-2 ``K_{delta,delta}``
    (single edges when ``delta == 1``)."""
    if delta < 1 or n < 2 * delta or n % (2 * delta):
        raise ValueError(f"extremal_union needs 2*delta | n with delta >= 1, got n={n}, delta={delta}")
    rng = _rng(seed)
    copies = []
    for _ in range(n // (2 * delta)):
        sub_seed = rng.getrandbits(64)
        if delta == 1:
            copies.append(random_gains(2, [(0, 1)], sub_seed, palette))
        else:
            copies.append(rank2_kab(delta, delta, sub_seed, palette))
    return disjoint_union(copies)


def random_pm_tree(n: int, seed: int, palette: str = "rational") -> GainGraph:
    """Random tree with a perfect matching, grown by hanging ``P2`` pieces."""
    if n < 2 or n % 2:
        raise ValueError(f"a PM-tree needs an even order >= 2, got {n}")
    rng = _rng(seed)
    edges = [(0, 1)]
    for y in range(2, n, 2):
        x = rng.randrange(y)
        edges += [(x, y), (y, y + 1)]
    return random_gains(n, edges, rng.getrandbits(64), palette)


def random_connected(n: int, max_delta: int, seed: int, palette: str = "rational",
                     extra_edges: int | None = None) -> GainGraph:
    """Connected graph with maximum degree at most ``max_delta``.

    A degree-capped random spanning tree plus up to ``extra_edges`` random
    chords (a random amount when not given).
    """
    if n < 2:
        raise ValueError("random_connected needs n >= 2")
    if max_delta < 2:
        raise ValueError("random_connected needs max_delta >= 2")
    rng = _rng(seed)
    deg = [0] * n
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for idx in range(1, n):
        v = order[idx]
        open_ = [order[t] for t in range(idx) if deg[order[t]] < max_delta]
        u = rng.choice(open_)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    if extra_edges is None:
        extra_edges = rng.randint(0, n)
    for _ in range(extra_edges):
        cand = [(u, v) for u in range(n) for v in range(u + 1, n)
                if (u, v) not in edges and deg[u] < max_delta and deg[v] < max_delta]
        if not cand:
            break
        u, v = rng.choice(cand)
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return random_gains(n, sorted(edges), rng.getrandbits(64), palette)


def random_graph(n: int, seed: int, *, max_delta: int | None = None, edge_prob: float | None = None,
                 no_isolated: bool = False, palette: str = "rational") -> GainGraph:
    """Random simple graph, optionally degree-capped and free of isolated vertices."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if no_isolated and n == 1:
        raise ValueError("a single vertex is always isolated")
    cap = n if max_delta is None else max_delta
    if no_isolated and cap < 1:
        raise ValueError("no_isolated needs max_delta >= 1")
    rng = _rng(seed)
    p = rng.uniform(0.1, 0.6) if edge_prob is None else edge_prob
    deg = [0] * n
    edges = set()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if deg[u] < cap and deg[v] < cap and rng.random() < p:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    if no_isolated:
        for v in range(n):
            if deg[v]:
                continue
            open_ = [u for u in range(n) if u != v and deg[u] < cap]
            if not open_:
                if cap < 2:
                    raise ValueError("cannot avoid isolated vertices with max_delta=1 and odd n")
                # all others saturated (degree cap >= 2): move one edge u-w over to u-v
                u = rng.choice([u for u in range(n) if u != v])
                w = rng.choice(sorted(x for e in edges if u in e for x in e if x != u))
                edges.discard((min(u, w), max(u, w)))
                deg[w] -= 1
                deg[u] -= 1
                open_ = [u]
            u = rng.choice(open_)
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
    return random_gains(n, sorted(edges), rng.getrandbits(64), palette)
