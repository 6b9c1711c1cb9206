"""Quaternion unit gain graphs: data model, adjacency matrix and JSON I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .qlinalg import QMatrix
from .quat import ONE, ZERO, Quaternion

__all__ = [
    "GainGraph",
    "RankReport",
    "GraphFormatError",
    "adjacency",
    "validate",
    "induced",
    "components",
    "degrees",
    "from_json",
    "to_json",
    "load",
    "dump",
]


class GraphFormatError(ValueError):
    """A graph file could not be parsed, or it parsed but failed validation."""

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = violations or []


@dataclass(frozen=True, eq=False)
class GainGraph:
    """Simple graph on vertices ``0..n-1`` with oriented quaternion gains.

    ``gains`` maps oriented pairs ``(u, v)`` to the gain of ``u -> v``.  When
    only one orientation of an edge is given the other is filled in with the
    conjugate, so graphs built through the normal constructors always satisfy
    the reverse-gain rule; an explicitly inconsistent reverse gain is kept so
    that :func:`validate` can report it.
    """

    n: int
    gains: Mapping[tuple[int, int], Quaternion]
    names: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        full = dict(self.gains)
        for (u, v), q in self.gains.items():
            if (v, u) not in full:
                full[(v, u)] = q.conj()
        object.__setattr__(self, "gains", full)
        adj: list[set[int]] = [set() for _ in range(max(self.n, 0))]
        for u, v in full:
            if 0 <= u < self.n and 0 <= v < self.n and u != v:
                adj[u].add(v)
                adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, Quaternion]]) -> "GainGraph":
        return cls(n, {(u, v): q for u, v, q in edges})

    @classmethod
    def simple(cls, n: int, edges: Iterable[tuple[int, int]]) -> "GainGraph":
        """All gains equal to 1, i.e. an ordinary graph."""
        return cls(n, {(u, v): ONE for u, v in edges})

    def gain(self, u: int, v: int) -> Quaternion:
        try:
            return self.gains[(u, v)]
        except KeyError:
            raise KeyError(f"no edge {u}-{v}") from None

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.gains if u != v})

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.n == other.n and dict(self.gains) == dict(other.gains)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.gains.items())))

    def __repr__(self) -> str:
        return f"GainGraph(n={self.n}, edges={len(self.edges)})"


@dataclass
class RankReport:
    rank: int
    nullity: int
    trace: list[tuple] = field(default_factory=list)
    core: list[int] | None = None

    def to_dict(self) -> dict:
        out = {"rank": self.rank, "nullity": self.nullity,
               "trace": [_step_to_json(s) for s in self.trace]}
        if self.core is not None:
            out["core"] = list(self.core)
        return out


def _step_to_json(step: tuple) -> dict:
    kind, *rest = step
    keys = {
        "split": ("components",),
        "isolated": ("vertex",),
        "pendant": ("pendant", "neighbor"),
        "path": ("vertices", "rank"),
        "cycle": ("vertices", "type", "rank"),
        "eliminate": ("vertices", "rank"),
    }.get(kind, tuple(f"arg{i}" for i in range(len(rest))))
    out = {"step": kind}
    for k, v in zip(keys, rest):
        out[k] = v.value if hasattr(v, "value") else v
    return out


def adjacency(G: GainGraph) -> QMatrix:
    n = G.n
    entries = [ZERO] * (n * n)
    for (u, v), q in G.gains.items():
        if 0 <= u < n and 0 <= v < n:
            entries[u * n + v] = q
    return QMatrix(n, n, tuple(entries))


def validate(G: GainGraph) -> list[str]:
    """Human-readable list of broken gain-graph invariants (empty when valid)."""
    problems = []
    if G.n < 0:
        problems.append(f"negative vertex count {G.n}")
    for (u, v), q in sorted(G.gains.items()):
        if not (0 <= u < G.n and 0 <= v < G.n):
            problems.append(f"edge {u}-{v}: vertex out of range 0..{G.n - 1}")
            continue
        if u == v:
            problems.append(f"self-loop at vertex {u}")
            continue
        if u > v:
            continue
        back = G.gains[(v, u)]
        if back != q.conj():
            problems.append(f"edge {u}-{v}: gain({v},{u}) = {back} is not the conjugate of "
                            f"gain({u},{v}) = {q}")
        if not q.is_unit():
            problems.append(f"edge {u}-{v}: gain {q} has norm_sq {q.norm_sq()} != 1")
    return problems


def induced(G: GainGraph, S: Iterable[int]) -> tuple[GainGraph, list[int]]:
    """Induced subgraph on ``S``; returns it with ``labels[new] = old``."""
    labels = sorted(set(S))
    for v in labels:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} not in graph of order {G.n}")
    index = {old: new for new, old in enumerate(labels)}
    gains = {(index[u], index[v]): q for (u, v), q in G.gains.items()
             if u in index and v in index}
    names = {index[v]: name for v, name in G.names.items() if v in index}
    return GainGraph(len(labels), gains, names), labels


def components(G: GainGraph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    alive = set(range(G.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(G: GainGraph, within: Iterable[int] | None = None) -> bool:
    alive = list(range(G.n)) if within is None else list(within)
    if not alive:
        return True
    return len(components(G, alive)) == 1


def degrees(G: GainGraph) -> tuple[list[int], int, set[int]]:
    """``(degree list, maximum degree, pendant vertices)``."""
    deg = [G.degree(v) for v in range(G.n)]
    return deg, max(deg, default=0), {v for v, d in enumerate(deg) if d == 1}


# -- JSON ------------------------------------------------------------------

def to_json(G: GainGraph) -> dict:
    out: dict = {"n": G.n,
                 "edges": [{"u": u, "v": v, "gain": G.gain(u, v).to_strings()} for u, v in G.edges]}
    if G.names:
        out["names"] = {str(k): v for k, v in sorted(G.names.items())}
    return out


def from_json(data: Mapping, *, check: bool = True) -> GainGraph:
    """Build a graph from the JSON object format.

    Records may list an edge in either orientation, or in both; a repeated
    orientation or a reverse gain that is not the conjugate is a violation.
    With ``check=False`` the graph is returned even when invalid.
    """
    try:
        n = data["n"]
        records = data.get("edges", [])
    except (TypeError, KeyError, AttributeError):
        raise GraphFormatError("graph JSON must be an object with 'n' and 'edges'") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError(f"'n' must be an integer, got {n!r}")
    gains: dict[tuple[int, int], Quaternion] = {}
    violations = []
    for idx, rec in enumerate(records):
        try:
            u, v = rec["u"], rec["v"]
            q = Quaternion.from_strings(rec["gain"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"edge record {idx}: {exc}") from None
        if not isinstance(u, int) or not isinstance(v, int):
            raise GraphFormatError(f"edge record {idx}: endpoints must be integers")
        if (u, v) in gains:
            violations.append(f"edge {u}-{v}: orientation listed twice (multi-edge)")
            continue
        gains[(u, v)] = q
    names = {int(k): str(v) for k, v in (data.get("names") or {}).items()}
    G = GainGraph(n, gains, names)
    violations += validate(G)
    if violations and check:
        raise GraphFormatError(f"graph failed validation ({len(violations)} problem(s))", violations)
    return G


def load(path: str | Path, *, check: bool = True) -> GainGraph:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON: {exc}") from None
    return from_json(data, check=check)


def dump(G: GainGraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_json(G), indent=1) + "\n", encoding="utf-8")
