import json
import random

import pytest

from qgain import generate as gen
from qgain.analysis import graph_rank
from qgain.graph import (
    GainGraph,
    GraphFormatError,
    adjacency,
    components,
    degrees,
    from_json,
    induced,
    load,
    to_json,
    validate,
)
from qgain.qlinalg import QMatrix, is_hermitian
from qgain.quat import I, J, ONE, ZERO, Quaternion


def test_adjacency_edgeless():
    assert adjacency(GainGraph(3, {})) == QMatrix.zeros(3, 3)


def test_adjacency_single_edge():
    q = Quaternion("3/5", 0, "4/5", 0)
    G = GainGraph(2, {(0, 1): q})
    assert adjacency(G) == QMatrix.from_rows([[ZERO, q], [q.conj(), ZERO]])
    assert G.gain(1, 0) == q.conj()


def test_adjacency_hermitian_random():
    rng = random.Random(1)
    for s in range(500):
        G = gen.random_graph(rng.randint(0, 9), s, palette=rng.choice(["basis", "rational"]))
        M = adjacency(G)
        assert is_hermitian(M)
        assert all(M[i, i].is_zero() for i in range(G.n))


def test_validate_conjugacy_violation():
    G = GainGraph(2, {(0, 1): I, (1, 0): I})
    problems = validate(G)
    assert len(problems) == 1 and "conjugate" in problems[0]


def test_validate_norm_violation():
    G = GainGraph(2, {(0, 1): Quaternion(1, 1)})
    problems = validate(G)
    assert len(problems) == 1 and "norm_sq 2" in problems[0]


def test_validate_loop_and_range():
    assert any("self-loop" in p for p in validate(GainGraph(2, {(1, 1): ONE})))
    assert any("out of range" in p for p in validate(GainGraph(2, {(0, 5): ONE})))


def test_generators_validate():
    for s in range(20):
        for G in (gen.type1_cycle(6, s), gen.rank2_kab(3, 4, s), gen.extremal_union(12, 3, s),
                  gen.random_pm_tree(10, s), gen.random_connected(9, 3, s),
                  gen.random_graph(10, s, no_isolated=True), gen.random_tree(8, s)):
            assert validate(G) == []


def test_induced_basic():
    P5 = gen.random_gains(5, gen.path_graph(5), 0)
    H, labels = induced(P5, [0, 1, 2])
    assert labels == [0, 1, 2] and H.edges == [(0, 1), (1, 2)]
    assert H.gain(0, 1) == P5.gain(0, 1)
    full, labels = induced(P5, range(5))
    assert full == P5 and labels == list(range(5))


def test_induced_relabels():
    G = gen.random_gains(5, [(1, 3), (3, 4), (0, 2)], 4)
    H, labels = induced(G, {4, 1, 3})
    assert labels == [1, 3, 4]
    assert H.edges == [(0, 1), (1, 2)]
    assert H.gain(1, 2) == G.gain(3, 4)


def test_induced_idempotent_and_monotone():
    rng = random.Random(2)
    for s in range(100):
        G = gen.random_graph(rng.randint(1, 9), s, palette="basis")
        S = [v for v in range(G.n) if rng.random() < 0.5]
        H, _ = induced(G, S)
        assert induced(H, range(H.n))[0] == H
        assert graph_rank(H) <= graph_rank(G)


def test_components():
    assert components(GainGraph(3, {})) == [[0], [1], [2]]
    edges = gen.path_graph(4) + [(4, 5), (5, 6), (4, 6)]
    G = gen.random_gains(7, edges, 1)
    comps = components(G)
    assert sorted(len(c) for c in comps) == [3, 4]
    assert graph_rank(G) == sum(graph_rank(induced(G, c)[0]) for c in comps)


def test_degrees():
    C5 = gen.random_gains(5, gen.cycle_graph(5), 0)
    assert degrees(C5) == ([2] * 5, 2, set())
    star = gen.random_gains(5, [(0, v) for v in range(1, 5)], 0)
    deg, delta, pend = degrees(star)
    assert deg == [4, 1, 1, 1, 1] and delta == 4 and pend == {1, 2, 3, 4}
    K33 = gen.random_gains(6, gen.complete_bipartite(3, 3), 0)
    assert degrees(K33)[:2] == ([3] * 6, 3)


def test_json_round_trip(tmp_path):
    for s in range(30):
        G = gen.random_graph(8, s)
        data = json.loads(json.dumps(to_json(G)))
        assert from_json(data) == G
    G = gen.rank2_kab(2, 3, 7)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(to_json(G)))
    assert load(path) == G


def test_json_reverse_orientation_and_shorthand():
    data = {"n": 2, "edges": [{"u": 1, "v": 0, "gain": ["0", "1", "0", "0"]}]}
    G = from_json(data)
    assert G.gain(1, 0) == I and G.gain(0, 1) == -I


def test_json_rejects_invalid():
    bad = {"n": 2, "edges": [{"u": 0, "v": 1, "gain": ["1", "1", "0", "0"]}]}
    with pytest.raises(GraphFormatError) as info:
        from_json(bad)
    assert info.value.violations
    G = from_json(bad, check=False)
    assert G.gain(0, 1) == Quaternion(1, 1)
    dup = {"n": 2, "edges": [{"u": 0, "v": 1, "gain": ["1", "0", "0", "0"]},
                             {"u": 0, "v": 1, "gain": ["0", "1", "0", "0"]}]}
    with pytest.raises(GraphFormatError):
        from_json(dup)
    inconsistent = {"n": 2, "edges": [{"u": 0, "v": 1, "gain": ["0", "0", "1", "0"]},
                                      {"u": 1, "v": 0, "gain": ["0", "0", "1", "0"]}]}
    with pytest.raises(GraphFormatError):
        from_json(inconsistent)
    consistent = {"n": 2, "edges": [{"u": 0, "v": 1, "gain": ["0", "0", "1", "0"]},
                                    {"u": 1, "v": 0, "gain": ["0", "0", "-1", "0"]}]}
    assert from_json(consistent).gain(1, 0) == -J
    with pytest.raises(GraphFormatError):
        from_json({"edges": []})


def test_names_side_table():
    data = {"n": 2, "edges": [{"u": 0, "v": 1, "gain": ["1", "0", "0", "0"]}],
            "names": {"0": "a", "1": "b"}}
    G = from_json(data)
    assert G.names == {0: "a", 1: "b"}
    assert G == GainGraph.simple(2, [(0, 1)])
    assert to_json(G)["names"] == {"0": "a", "1": "b"}
