"""Seeded property checks over generated corpora, used by ``qgain fuzz``.

Each property is a function ``check(seed, max_n) -> Failure | None``.  The
instance for a given ``(property, seed)`` is fully determined, so a failing
seed can be replayed and the dumped artifact re-checked with ``qgain verify``.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import generate as gen
from .analysis import (
    CycleType,
    classify_cycle,
    graph_rank,
    max_matching,
    path_rank,
    reduce_rank,
    tree_rank,
)
from .graph import GainGraph, components, degrees, induced, to_json
from .qlinalg import QMatrix, RankSide, rank
from .quat import ZERO
from .theorems import (
    all_c4_type1,
    check_connected_bound,
    check_general_bound,
    is_extremal_connected,
    is_extremal_general,
)

__all__ = ["Failure", "PROPERTIES", "SUITES", "FuzzReport", "run_suite", "thread_count"]


@dataclass
class Failure:
    prop: str
    seed: int
    message: str
    theorem: str | None = None
    graph: GainGraph | None = None
    matrix: QMatrix | None = None

    def artifact(self) -> dict:
        if self.graph is not None:
            out = to_json(self.graph)
        else:
            out = {"matrix": self.matrix.to_strings() if self.matrix is not None else None}
        out["property"] = self.prop
        out["seed"] = self.seed
        out["message"] = self.message
        if self.theorem:
            out["theorem"] = self.theorem
        return out


def _palette(rng: random.Random) -> str:
    return "basis" if rng.random() < 0.5 else "rational"


def _random_matrix(rng: random.Random, max_side: int = 8) -> QMatrix:
    rows, cols = rng.randint(1, max_side), rng.randint(1, max_side)
    pal = _palette(rng)
    density = rng.uniform(0.2, 1.0)
    entries = []
    for _ in range(rows * cols):
        entries.append(gen.random_unit(rng, pal) if rng.random() < density else ZERO)
    # low-rank instances: make some rows left combinations of others
    if rows > 1 and rng.random() < 0.5:
        for r in range(1, rows):
            if rng.random() < 0.5:
                src = rng.randrange(r)
                c = gen.random_unit(rng, pal)
                for j in range(cols):
                    entries[r * cols + j] = c * entries[src * cols + j]
    return QMatrix(rows, cols, tuple(entries))


def _any_graph(rng: random.Random, max_n: int) -> GainGraph:
    n = rng.randint(1, max_n)
    return gen.random_graph(n, rng.getrandbits(64), max_delta=rng.randint(1, 5),
                            palette=_palette(rng))


# -- lemma properties ------------------------------------------------------

def prop_row_col_duality(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    M = _random_matrix(rng)
    rl, rr = rank(M, RankSide.ROW_LEFT), rank(M, RankSide.ROW_RIGHT)
    cl, cr = rank(M, RankSide.COL_LEFT), rank(M, RankSide.COL_RIGHT)
    if rl != cr or rr != cl:
        return Failure("duality", seed, f"row-left {rl} col-right {cr} row-right {rr} col-left {cl}",
                       matrix=M)
    return None


def prop_vertex_deletion(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    G = _any_graph(rng, max_n)
    r = graph_rank(G)
    if G.n == 0:
        return None
    v = rng.randrange(G.n)
    rv = graph_rank(induced(G, [w for w in range(G.n) if w != v])[0])
    if not r - 2 <= rv <= r:
        return Failure("deletion", seed, f"rank {r}, rank after deleting {v} is {rv}", graph=G)
    S = [w for w in range(G.n) if rng.random() < 0.6]
    rs = graph_rank(induced(G, S)[0])
    if rs > r:
        return Failure("deletion", seed, f"induced subgraph on {S} has rank {rs} > {r}", graph=G)
    return None


def prop_pendant(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    # a tree skeleton plus chords guarantees pendant vertices often enough
    G = _any_graph(rng, max_n)
    _, _, pend = degrees(G)
    if not pend:
        return None
    x = rng.choice(sorted(pend))
    (y,) = G.neighbors(x)
    r = graph_rank(G)
    r2 = graph_rank(induced(G, [w for w in range(G.n) if w not in (x, y)])[0])
    if r != r2 + 2:
        return Failure("pendant", seed, f"rank {r}, rank without pendant {x} and {y} is {r2}", graph=G)
    return None


def prop_components(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    G = _any_graph(rng, max_n)
    r = graph_rank(G)
    parts = sum(graph_rank(induced(G, c)[0]) for c in components(G))
    if r != parts:
        return Failure("components", seed, f"rank {r} but components sum to {parts}", graph=G)
    if (r == 0) != (G.num_edges == 0):
        return Failure("components", seed, f"rank {r} with {G.num_edges} edges", graph=G)
    red = reduce_rank(G).rank
    if red != r:
        return Failure("reduce", seed, f"reduce_rank {red} != elimination {r}", graph=G)
    return None


def prop_path_cycle(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    n = rng.randint(3, max(3, max_n))
    pal = _palette(rng)
    P = gen.random_gains(n, gen.path_graph(n), rng.getrandbits(64), pal)
    if graph_rank(P) != path_rank(n):
        return Failure("path", seed, f"path of order {n} has rank {graph_rank(P)}", graph=P)
    C = gen.random_gains(n, gen.cycle_graph(n), rng.getrandbits(64), pal)
    t = classify_cycle(C, list(range(n)))
    want = {CycleType.TYPE1: n - 2, CycleType.TYPE2: n, CycleType.TYPE3: n, CycleType.TYPE4: n - 1}[t]
    got = graph_rank(C)
    if got != want:
        return Failure("cycle", seed, f"{t} cycle of order {n} has rank {got}, expected {want}", graph=C)
    return None


def prop_kab(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    a, b = rng.randint(2, 4), rng.randint(2, 4)
    if rng.random() < 0.3:
        K = gen.rank2_kab(a, b, rng.getrandbits(64), _palette(rng))
    else:
        K = gen.random_gains(a + b, gen.complete_bipartite(a, b), rng.getrandbits(64), "basis")
    r = graph_rank(K)
    if (r == 2) != all_c4_type1(K, part_check=True):
        return Failure("kab", seed, f"K_{{{a},{b}}} rank {r} disagrees with the 4-cycle test",
                       theorem="L3.1", graph=K)
    return None


def prop_tree(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    n = rng.randint(1, max(1, max_n))
    T = gen.random_tree(n, rng.getrandbits(64), _palette(rng))
    r = graph_rank(T)
    m = max_matching(T).size
    if r != 2 * m or tree_rank(T) != r:
        return Failure("tree", seed, f"tree rank {r}, matching number {m}", graph=T)
    T2 = gen.random_gains(n, T.edges, rng.getrandbits(64), _palette(rng))
    if graph_rank(T2) != r:
        return Failure("tree-gains", seed, "re-randomised gains changed the tree rank", graph=T2)
    return None


# -- bound properties ------------------------------------------------------

def _bound_corpus(rng: random.Random, max_n: int, connected: bool) -> GainGraph:
    kind = rng.random()
    pal = _palette(rng)
    s = rng.getrandbits(64)
    if kind < 0.15:
        # near-extremal: union / single K_{d,d} with unconstrained gains
        d = rng.randint(1, max(1, min(4, max_n // 2)))
        if connected and d < 2:
            return gen.type1_cycle(4, s, pal)
        copies = 1 if connected else rng.randint(1, max(1, max_n // (2 * d)))
        parts = [gen.random_gains(2 * d, gen.complete_bipartite(d, d), rng.getrandbits(64), "basis")
                 for _ in range(copies)]
        return gen.disjoint_union(parts)
    if kind < 0.25:
        n = rng.randint(3, max(3, max_n))
        G = gen.random_gains(n, gen.cycle_graph(n), s, "basis")
        if connected:
            return G
        return gen.disjoint_union([G, gen.random_gains(2, [(0, 1)], rng.getrandbits(64), pal)])
    if kind < 0.3:
        d = rng.randint(2, max(2, min(5, max_n // 2)))
        return gen.rank2_kab(d, d, s, pal)
    if connected:
        n = rng.randint(2, max(2, max_n))
        return gen.random_connected(n, rng.randint(2, 5), s, pal)
    n = rng.randint(2, max(2, max_n))
    cap = rng.randint(1, 5)
    if cap == 1 and n % 2:
        n -= 1
    return gen.random_graph(n, s, max_delta=cap, no_isolated=True, palette=pal)


def prop_general_bound(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    G = _bound_corpus(rng, max_n, connected=False)
    v = check_general_bound(G)
    if not v.holds:
        return Failure("general-bound", seed, f"rank {v.rank} < n/Δ = {v.bound}", theorem="3.2", graph=G)
    rec = is_extremal_general(G)
    if rec != v.tight:
        return Failure("general-extremal", seed, f"tight={v.tight} but recognizer={rec}", theorem="3.3", graph=G)
    return None


def prop_connected_bound(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    G = _bound_corpus(rng, max_n, connected=True)
    if degrees(G)[1] < 2:
        return None
    v = check_connected_bound(G)
    if not v.holds:
        return Failure("connected-bound", seed, f"rank {v.rank} < (n-2)/(Δ-1) = {v.bound}", theorem="4.2", graph=G)
    rec = is_extremal_connected(G)
    if rec != v.tight:
        return Failure("connected-extremal", seed, f"tight={v.tight} but recognizer={rec}", theorem="4.3", graph=G)
    return None


def prop_constructive(seed: int, max_n: int) -> Failure | None:
    rng = random.Random(seed)
    pal = _palette(rng)
    d = rng.randint(1, max(1, min(4, max_n // 2)))
    copies = rng.randint(1, max(1, max_n // (2 * d)))
    G = gen.extremal_union(2 * d * copies, d, rng.getrandbits(64), pal)
    v = check_general_bound(G)
    if not (v.tight and is_extremal_general(G)):
        return Failure("general-extremal", seed, "extremal union not tight or not recognized", theorem="3.3", graph=G)
    n = 2 * rng.randint(2, max(2, max_n // 2))
    C = gen.type1_cycle(n, rng.getrandbits(64), pal)
    if not (check_connected_bound(C).tight and is_extremal_connected(C)):
        return Failure("connected-extremal", seed, "Type 1 cycle not tight or not recognized", theorem="4.3", graph=C)
    return None


PROPERTIES: dict[str, Callable[[int, int], Failure | None]] = {
    "row/column rank duality": prop_row_col_duality,
    "path and cycle ranks": prop_path_cycle,
    "vertex deletion": prop_vertex_deletion,
    "pendant reduction": prop_pendant,
    "components and rank 0": prop_components,
    "K_ab rank 2": prop_kab,
    "tree rank": prop_tree,
    "n/Δ bound": prop_general_bound,
    "(n-2)/(Δ-1) bound": prop_connected_bound,
    "extremal constructions": prop_constructive,
}

SUITES = {
    "lemmas": list(PROPERTIES)[:7],
    "bounds": list(PROPERTIES)[7:],
}
SUITES["all"] = list(PROPERTIES)


def thread_count() -> int:
    cap = os.environ.get("QGAIN_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = max(1, min(n, int(cap)))
        except ValueError:
            pass
    return n


def _instance_seed(base: int, prop_index: int, i: int) -> int:
    return random.Random(f"{base}:{prop_index}:{i}").getrandbits(64)


def _run_one(args: tuple[str, int, int]) -> Failure | None:
    name, seed, max_n = args
    return PROPERTIES[name](seed, max_n)


@dataclass
class FuzzReport:
    tallies: dict[str, tuple[int, int]] = field(default_factory=dict)  # name -> (passed, failed)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(suite: str, count: int, seed: int, max_n: int, threads: int | None = None) -> FuzzReport:
    names = SUITES[suite]
    threads = thread_count() if threads is None else threads
    report = FuzzReport()
    for name in names:
        jobs = [(name, _instance_seed(seed, list(PROPERTIES).index(name), i), max_n)
                for i in range(count)]
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_run_one, jobs, chunksize=max(1, count // (4 * threads))))
        else:
            results = [_run_one(j) for j in jobs]
        fails = [r for r in results if r is not None]
        report.tallies[name] = (len(results) - len(fails), len(fails))
        report.failures.extend(fails)
    return report
