"""Acceptance suite: one test per acceptance criterion, each printing a
single PASS/FAIL line with its counts and timing."""

import random
import time

from qgain import generate as gen
from qgain.analysis import (
    CycleType,
    classify_cycle,
    dual_pendants,
    extract_core,
    graph_rank,
    longest_path,
    max_matching,
)
from qgain.fuzz import _bound_corpus, _random_matrix
from qgain.graph import components, degrees, induced, is_connected
from qgain.qlinalg import QMatrix, RankSide, rank
from qgain.quat import I, J, ONE
from qgain.theorems import (
    all_c4_type1,
    check_connected_bound,
    check_general_bound,
    is_extremal_connected,
    is_extremal_general,
)

from conftest import adjoint_rank

ROW_LEFT, ROW_RIGHT, COL_LEFT, COL_RIGHT = RankSide
PALETTES = ("rational", "basis")


def report(num, ok, detail):
    print(f"\ncriterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_example_ranks():
    A = QMatrix.from_rows([[ONE - J * I, J + I], [-I, ONE]])
    A_prime = QMatrix.from_rows([[ONE, I], [-I, ONE]])
    sides = (ROW_LEFT, ROW_RIGHT, COL_LEFT, COL_RIGHT)
    got = got_prime = None
    best = float("inf")
    for _ in range(20):
        t0 = time.perf_counter()
        got = tuple(rank(A, s) for s in sides)
        got_prime = tuple(rank(A_prime, s) for s in sides)
        best = min(best, time.perf_counter() - t0)
    ok = got == (1, 2, 2, 1) and got_prime == (1, 1, 1, 1) and best < 1e-3
    report(1, ok, f"A -> {got}, A' -> {got_prime}, {best * 1e3:.3f} ms")


def test_criterion_02_path_and_cycle_formulas():
    rng = random.Random(2)
    t0 = time.perf_counter()
    bad = []
    checked = 0
    types_seen = set()
    for n in range(1, 13):
        for t in range(50):
            pal = PALETTES[t % 2]
            P = gen.random_gains(n, gen.path_graph(n), rng.getrandbits(64), pal)
            if graph_rank(P) != n - n % 2:
                bad.append(("P", n, t))
            checked += 1
            if n < 3:
                continue
            C = gen.random_gains(n, gen.cycle_graph(n), rng.getrandbits(64), pal)
            ctype = classify_cycle(C, list(range(n)))
            types_seen.add(ctype)
            expected = {CycleType.TYPE1: n - 2, CycleType.TYPE2: n,
                        CycleType.TYPE3: n, CycleType.TYPE4: n - 1}[ctype]
            if graph_rank(C) != expected:
                bad.append(("C", n, t, ctype))
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10 and types_seen == set(CycleType)
    report(2, ok, f"{checked} graphs, types seen {sorted(x.value for x in types_seen)}, "
                  f"{len(bad)} mismatches, {elapsed:.2f} s")


def test_criterion_03_row_column_duality():
    rng = random.Random(3)
    bad = oracle_bad = 0
    for _ in range(500):
        M = _random_matrix(rng, max_side=8)
        rl, rr = rank(M, ROW_LEFT), rank(M, ROW_RIGHT)
        if rl != rank(M, COL_RIGHT) or rr != rank(M, COL_LEFT):
            bad += 1
        if rl != adjoint_rank(M) or rr != adjoint_rank(M.transpose()):
            oracle_bad += 1
    report(3, bad == 0 and oracle_bad == 0,
           f"500 matrices, {bad} duality violations, {oracle_bad} complex-adjoint mismatches")


def _edgeless(G):
    return G.num_edges == 0


def test_criterion_04_deletion_pendant_components():
    rng = random.Random(4)
    t0 = time.perf_counter()
    fails = {"deletion": 0, "pendant": 0, "components": 0, "rank0": 0}
    pendant_cases = 0
    for i in range(1000):
        n = rng.randint(1, 12)
        G = gen.random_graph(n, rng.getrandbits(64), max_delta=rng.randint(1, 5),
                             palette=PALETTES[i % 2])
        r = graph_rank(G)
        v = rng.randrange(n)
        rv = graph_rank(induced(G, [w for w in range(n) if w != v])[0])
        if not r - 2 <= rv <= r:
            fails["deletion"] += 1
        _, _, pend = degrees(G)
        if pend:
            pendant_cases += 1
            p = min(pend)
            (q,) = G.neighbors(p)
            rest = graph_rank(induced(G, [w for w in range(n) if w not in (p, q)])[0])
            if r != rest + 2:
                fails["pendant"] += 1
        if r != sum(graph_rank(induced(G, c)[0]) for c in components(G)):
            fails["components"] += 1
        if (r == 0) != _edgeless(G):
            fails["rank0"] += 1
    elapsed = time.perf_counter() - t0
    ok = not any(fails.values()) and elapsed < 60
    report(4, ok, f"1000 graphs ({pendant_cases} with pendants), failures {fails}, {elapsed:.2f} s")


def test_criterion_05_kab_rank_two():
    rng = random.Random(5)
    bad = 0
    rank2_random = 0
    total = 0
    for a in range(2, 5):
        for b in range(2, 5):
            for t in range(200):
                G = gen.random_gains(a + b, gen.complete_bipartite(a, b), rng.getrandbits(64),
                                     PALETTES[t % 2])
                r2 = graph_rank(G) == 2
                rank2_random += r2
                bad += r2 != all_c4_type1(G, part_check=True)
                total += 1
            for t in range(50):
                G = gen.rank2_kab(a, b, rng.getrandbits(64), PALETTES[t % 2])
                bad += not (graph_rank(G) == 2 and all_c4_type1(G, part_check=True))
                total += 1
    report(5, bad == 0, f"{total} K_ab instances ({rank2_random} random ones of rank 2), "
                        f"{bad} disagreements")


def test_criterion_06_tree_rank():
    rng = random.Random(6)
    bad = 0
    for i in range(500):
        n = rng.randint(1, 14)
        seed = rng.getrandbits(64)
        T = gen.random_tree(n, seed, PALETTES[i % 2])
        r = graph_rank(T)
        other = gen.random_gains(n, T.edges, rng.getrandbits(64), PALETTES[(i + 1) % 2])
        bad += r != 2 * max_matching(T).size or graph_rank(other) != r
    report(6, bad == 0, f"500 trees, {bad} failures")


def test_criterion_07_degree_bounds():
    rng = random.Random(7)
    t0 = time.perf_counter()
    general_bad = connected_bad = connected_checked = 0
    for i in range(1000):
        n = rng.randint(2, 12)
        cap = rng.randint(1, 5)
        if cap == 1 and n % 2:
            n -= 1
        G = gen.random_graph(n, rng.getrandbits(64), max_delta=cap, no_isolated=True,
                             palette=PALETTES[i % 2])
        v = check_general_bound(G)
        general_bad += v.rank < -(-v.n // v.delta)
    for i in range(1000):
        # n >= 3 so that Δ >= 2 and the (n-2)/(Δ-1) bound applies
        G = gen.random_connected(rng.randint(3, 12), rng.randint(2, 5), rng.getrandbits(64),
                                 PALETTES[i % 2])
        connected_checked += 1
        v = check_connected_bound(G)
        connected_bad += v.rank < -(-(v.n - 2) // (v.delta - 1))
    elapsed = time.perf_counter() - t0
    ok = general_bad == 0 and connected_bad == 0 and elapsed < 300
    report(7, ok, f"1000 isolated-free ({general_bad} violations), {connected_checked} connected "
                  f"({connected_bad} violations), {elapsed:.2f} s")


def test_criterion_08_extremal_characterizations():
    rng = random.Random(8)
    constructed_bad = constructed = 0
    for i in range(100):
        pal = PALETTES[i % 2]
        d = rng.randint(1, 4)
        G = gen.extremal_union(2 * d * rng.randint(1, 3), d, rng.getrandbits(64), pal)
        constructed_bad += not (check_general_bound(G).tight and is_extremal_general(G))
        C = gen.type1_cycle(2 * rng.randint(2, 6), rng.getrandbits(64), pal)
        constructed_bad += not (check_connected_bound(C).tight and is_extremal_connected(C))
        d = rng.randint(2, 5)
        K = gen.rank2_kab(d, d, rng.getrandbits(64), pal)
        constructed_bad += not (check_general_bound(K).tight and is_extremal_general(K)
                                and check_connected_bound(K).tight and is_extremal_connected(K))
        constructed += 3
    corpus_bad = tight_seen = corpus = 0
    for i in range(1000):
        connected = i % 2 == 1
        G = _bound_corpus(rng, 12, connected)
        if connected:
            if degrees(G)[1] < 2:
                continue
            tight, rec = check_connected_bound(G).tight, is_extremal_connected(G)
        else:
            tight, rec = check_general_bound(G).tight, is_extremal_general(G)
        corpus += 1
        tight_seen += tight
        corpus_bad += tight != rec
    ok = constructed_bad == 0 and corpus_bad == 0 and tight_seen > 0
    report(8, ok, f"{constructed} constructions ({constructed_bad} bad); corpus of {corpus} "
                  f"with {tight_seen} tight, {corpus_bad} recognizer disagreements")


def test_criterion_09_core_contract():
    rng = random.Random(9)
    bad = 0
    for i in range(300):
        pal = PALETTES[i % 2]
        conn = i < 100
        if conn:
            G = gen.random_connected(rng.randint(2, 12), rng.randint(2, 5), rng.getrandbits(64), pal)
        else:
            G = gen.random_graph(rng.randint(1, 12), rng.getrandbits(64),
                                 max_delta=rng.randint(1, 5), palette=pal)
        S = extract_core(G, require_connected=conn)
        H, _ = induced(G, S)
        good = len(S) == graph_rank(H) == graph_rank(G)
        if conn:
            good = good and is_connected(H)
        bad += not good
    report(9, bad == 0, f"300 graphs (100 with require_connected), {bad} failures")


def test_criterion_10_pm_tree_structure():
    rng = random.Random(10)
    bad = 0
    for i in range(300):
        T = gen.random_pm_tree(2 * rng.randint(2, 8), rng.getrandbits(64), PALETTES[i % 2])
        p = longest_path(T)
        assert len(p) >= 3  # diameter >= 2
        good = (T.degree(p[0]) == T.degree(p[-1]) == 1
                and T.degree(p[1]) == T.degree(p[-2]) == 2)
        M = max_matching(T)
        good = good and M.perfect and all(dual_pendants(T, v, M)
                                          for v in range(T.n) if T.degree(v) == 1)
        bad += not good
    report(10, bad == 0, f"300 PM-trees, {bad} failures")
