"""Command-line front end: ``qgain rank | classify | verify | generate | fuzz``.

Exit codes: 0 success (or the checked claim holds), 1 bad input or failed
precondition, 2 a property or theorem check was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generate as gen
from .analysis import (
    NotACycleError,
    SizeLimitError,
    classify_cycle,
    cycle_gain,
    extract_core,
    graph_rank,
    reduce_rank,
)
from .graph import (
    GainGraph,
    GraphFormatError,
    RankReport,
    adjacency,
    is_connected,
    load,
    to_json,
)
from .qlinalg import QMatrix, RankSide, rank
from .quat import Quaternion
from .theorems import (
    PreconditionError,
    all_c4_type1,
    check_connected_bound,
    check_general_bound,
    is_extremal_connected,
    is_extremal_general,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(human)


def _load_graph(args) -> GainGraph:
    try:
        return load(args.input, check=not args.no_validate)
    except GraphFormatError as exc:
        lines = [f"error: {exc}"] + [f"  - {v}" for v in exc.violations]
        raise InputError("\n".join(lines)) from None
    except OSError as exc:
        raise InputError(f"error: cannot read {args.input}: {exc.strerror}") from None


def _load_matrix(path: str) -> QMatrix:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if isinstance(data, dict):
            data = data["matrix"]
        return QMatrix.from_rows([[Quaternion.from_strings(q) for q in row] for row in data])
    except OSError as exc:
        raise InputError(f"error: cannot read {path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"error: bad matrix file {path}: {exc}") from None


# -- rank ------------------------------------------------------------------

def cmd_rank(args) -> int:
    if args.matrix:
        M = _load_matrix(args.input)
        sides = [RankSide.parse(args.side)] if args.side else list(RankSide)
        ranks = {s.value: rank(M, s) for s in sides}
        human = "\n".join(f"{k}: {v}" for k, v in ranks.items())
        _emit(args, {"rows": M.rows, "cols": M.cols, "ranks": ranks}, human)
        return EXIT_OK

    G = _load_graph(args)
    side = RankSide.parse(args.side) if args.side else RankSide.ROW_LEFT
    if side is RankSide.ROW_LEFT:
        report = reduce_rank(G)
    else:
        r = rank(adjacency(G), side)
        report = RankReport(r, G.n - r, [("eliminate", list(range(G.n)), r)])
    if args.core or args.connected_core:
        if args.connected_core and not is_connected(G):
            raise InputError("error: --connected-core needs a connected graph")
        try:
            report.core = extract_core(G, require_connected=args.connected_core)
        except SizeLimitError as exc:
            raise InputError(f"error: {exc}") from None
    payload = {"n": G.n, "side": side.value, **report.to_dict()}
    if not args.trace:
        payload.pop("trace")
    lines = [f"rank: {report.rank}", f"nullity: {report.nullity}"]
    if args.trace:
        lines.append("trace:")
        lines += [f"  {_fmt_step(s)}" for s in report.trace]
    if report.core is not None:
        lines.append("core: " + " ".join(map(str, report.core)))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _fmt_step(step: tuple) -> str:
    kind, *rest = step
    if kind == "pendant":
        return f"pendant {rest[0]} with neighbour {rest[1]}: +2"
    if kind == "isolated":
        return f"isolated vertex {rest[0]}: +0"
    if kind == "split":
        return "split into components " + " | ".join(",".join(map(str, c)) for c in rest[0])
    if kind == "path":
        return f"path on {','.join(map(str, rest[0]))}: +{rest[1]}"
    if kind == "cycle":
        return f"cycle {','.join(map(str, rest[0]))} ({rest[1]}): +{rest[2]}"
    if kind == "eliminate":
        return f"elimination on {','.join(map(str, rest[0]))}: +{rest[1]}"
    return " ".join(map(str, step))


# -- classify --------------------------------------------------------------

def simple_cycles(G: GainGraph, max_len: int):
    """Each simple cycle of length 3..max_len once: smallest vertex first,
    second vertex smaller than the last."""
    for s in range(G.n):
        stack = [(s, [s])]
        while stack:
            u, path = stack.pop()
            for w in sorted(G.neighbors(u), reverse=True):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield list(path)
                elif w > s and w not in path and len(path) < max_len:
                    stack.append((w, path + [w]))


def cmd_classify(args) -> int:
    G = _load_graph(args)
    if args.cycle:
        try:
            cycles = [[int(x) for x in args.cycle.split(",")]]
        except ValueError:
            raise InputError(f"error: --cycle expects comma-separated integers, got {args.cycle!r}") from None
    else:
        cycles = sorted(simple_cycles(G, args.max_len), key=lambda c: (len(c), c))
    rows = []
    for c in cycles:
        try:
            t = classify_cycle(G, c)
        except NotACycleError as exc:
            raise InputError(f"error: {exc}") from None
        rows.append({"cycle": c, "length": len(c), "type": t.value,
                     "gain": cycle_gain(G, c).to_strings()})
    human = "\n".join(f"{','.join(map(str, r['cycle']))}: Type {r['type']}  "
                      f"(gain {' '.join(r['gain'])})" for r in rows) or "no cycles"
    _emit(args, {"cycles": rows}, human)
    return EXIT_OK


# -- verify ----------------------------------------------------------------

THEOREMS = ("3.2", "3.3", "4.2", "4.3", "L3.1")


def cmd_verify(args) -> int:
    G = _load_graph(args)
    thm = args.theorem
    try:
        if thm in ("3.2", "4.2"):
            check = check_general_bound if thm == "3.2" else check_connected_bound
            v = check(G)
            _emit(args, {"theorem": thm, **v.to_dict()},
                  f"n={v.n} Δ={v.delta} rank={v.rank} bound={v.bound} "
                  f"holds={v.holds} tight={v.tight}")
            return EXIT_OK if v.holds else EXIT_VIOLATION
        if thm in ("3.3", "4.3"):
            recognize = is_extremal_general if thm == "3.3" else is_extremal_connected
            check = check_general_bound if thm == "3.3" else check_connected_bound
            extremal = recognize(G)
            v = check(G)
            consistent = extremal == v.tight
            _emit(args, {"theorem": thm, "extremal": extremal, "tight": v.tight,
                         "rank": v.rank, "bound": str(v.bound), "consistent": consistent},
                  f"extremal={str(extremal).lower()} (rank {v.rank}, bound {v.bound}, "
                  f"tight={str(v.tight).lower()})")
            return EXIT_OK if consistent else EXIT_VIOLATION
        # K_ab: rank 2 exactly when every 4-cycle is Type 1
        c4 = all_c4_type1(G, part_check=True)
        r = graph_rank(G)
        consistent = (r == 2) == c4
        _emit(args, {"theorem": thm, "all_c4_type1": c4, "rank": r, "consistent": consistent},
              f"all_c4_type1={str(c4).lower()} rank={r}")
        return EXIT_OK if consistent else EXIT_VIOLATION
    except PreconditionError as exc:
        raise InputError(f"error: precondition failed for {thm}: {exc}") from None


# -- generate --------------------------------------------------------------

def cmd_generate(args) -> int:
    kind, s, pal = args.kind, args.seed, args.palette
    try:
        if kind == "type1-cycle":
            G = gen.type1_cycle(args.n, s, pal)
        elif kind == "rank2-kab":
            G = gen.rank2_kab(args.a, args.b, s, pal)
        elif kind == "extremal-union":
            G = gen.extremal_union(args.n, args.delta, s, pal)
        elif kind == "pm-tree":
            G = gen.random_pm_tree(args.n, s, pal)
        elif kind == "connected":
            G = gen.random_connected(args.n, args.max_delta, s, pal)
        elif kind == "tree":
            G = gen.random_tree(args.n, s, pal)
        elif kind == "path":
            G = gen.random_gains(args.n, gen.path_graph(args.n), s, pal)
        elif kind == "cycle":
            G = gen.random_gains(args.n, gen.cycle_graph(args.n), s, pal)
        elif kind == "kab":
            G = gen.random_gains(args.a + args.b, gen.complete_bipartite(args.a, args.b), s, pal)
        else:  # "graph"
            G = gen.random_graph(args.n, s, max_delta=args.max_delta, no_isolated=args.no_isolated,
                                 palette=pal)
    except (TypeError, ValueError) as exc:
        raise InputError(f"error: cannot generate {kind}: {exc}") from None
    text = json.dumps(to_json(G), indent=1)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


GENERATORS = ("type1-cycle", "rank2-kab", "extremal-union", "pm-tree", "connected", "tree",
              "path", "cycle", "kab", "graph")


# -- fuzz ------------------------------------------------------------------

def cmd_fuzz(args) -> int:
    from .fuzz import run_suite

    report = run_suite(args.suite, args.count, args.seed, args.max_n, threads=args.threads)
    dumped = []
    if report.failures:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for f in report.failures:
            tag = f.prop.replace("/", "_").replace(".", "_")
            path = out_dir / f"fuzz-fail-{tag}-{f.seed}.json"
            path.write_text(json.dumps(f.artifact(), indent=1) + "\n", encoding="utf-8")
            dumped.append(str(path))
    payload = {
        "suite": args.suite, "count": args.count, "seed": args.seed, "max_n": args.max_n,
        "properties": [{"name": k, "passed": p, "failed": q} for k, (p, q) in report.tallies.items()],
        "failures": [{"property": f.prop, "seed": f.seed, "message": f.message, "theorem": f.theorem}
                     for f in report.failures],
        "artifacts": dumped,
    }
    width = max(len(k) for k in report.tallies)
    lines = [f"{k:<{width}}  pass {p:>6}  fail {q:>4}" for k, (p, q) in report.tallies.items()]
    lines += [f"FAIL {f.prop} seed={f.seed}: {f.message}" for f in report.failures]
    lines += [f"wrote {d}" for d in dumped]
    lines.append("all properties passed" if report.ok else f"{len(report.failures)} failure(s)")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_VIOLATION


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qgain", description="Rank tools for quaternion unit gain graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("input", help="graph JSON file")
        sp.add_argument("--no-validate", action="store_true", help="load graphs that fail validation")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("rank", help="rank and nullity of a graph (or a raw matrix with --matrix)")
    graph_input(sp)
    sp.add_argument("--matrix", action="store_true",
                    help="input is a JSON array of rows of [x0,x1,x2,x3] entries")
    sp.add_argument("--side", help="row-left (default), row-right, col-left or col-right")
    sp.add_argument("--trace", action="store_true", help="show the reduction steps")
    sp.add_argument("--core", action="store_true", help="report an induced subgraph of full rank")
    sp.add_argument("--connected-core", action="store_true", help="same, but connected")
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("classify", help="cycle types")
    graph_input(sp)
    sp.add_argument("--cycle", help="comma-separated vertex sequence of one cycle")
    sp.add_argument("--max-len", type=int, default=8, help="longest cycle enumerated (default 8)")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="check a bound or an extremal characterization")
    graph_input(sp)
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="write a generated graph as JSON")
    sp.add_argument("kind", choices=GENERATORS)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--delta", type=int)
    sp.add_argument("--max-delta", type=int)
    sp.add_argument("--no-isolated", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--palette", choices=("rational", "basis"), default="rational")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate, json=False)

    sp = sub.add_parser("fuzz", help="run seeded property suites")
    sp.add_argument("--suite", choices=("lemmas", "bounds", "all"), default="all")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=12)
    sp.add_argument("--threads", type=int, help="worker processes (default: QGAIN_THREADS or CPU count)")
    sp.add_argument("--out-dir", default=".", help="where failing instances are written")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
