"""Command line: ``halohedra build | classify | verify | export``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .graph import Graph, cycle_graph, load_graph, path_graph
from .moduli import SurfaceSignature, classify_polytopality
from .realization import build, exact_json, off_text
from .suites import SUITES
from .tubings import PolytopeKind, halohedron_graph, poset_to_json, tubing_poset

OBJECTS = ("k", "w", "halo", "graph-assoc", "graph-cube")
DEFAULT_BOUNDS = {
    "catalan": 6,
    "facet-count": 6,
    "facet-decomp": 5,
    "path-bijection": 5,
    "realization": 4,
    "polygon-iso": 4,
    "classifier": 4,
}
COMBINATORIAL_MAX_NODES = 6


class UsageError(Exception):
    pass


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def resolve_object(obj: str, n: int | None, graph_file: str | None) -> tuple[str, Graph, PolytopeKind]:
    """Map an object name and size to (file stem, graph, polytope kind)."""
    if obj in ("graph-assoc", "graph-cube"):
        if graph_file is None:
            raise UsageError(f"--object {obj} needs --graph FILE")
        G = load_graph(graph_file)
        kind = PolytopeKind.ASSOCIAHEDRON if obj == "graph-assoc" else PolytopeKind.CUBEAHEDRON
        return f"{obj}-{Path(graph_file).stem}", G, kind
    if n is None:
        raise UsageError(f"--object {obj} needs --n")
    if obj == "k":
        if n < 2:
            raise UsageError("K_n needs n >= 2")
        return f"k{n}", path_graph(n - 1), PolytopeKind.ASSOCIAHEDRON
    if obj == "w":
        if n < 2:
            raise UsageError("W_n needs n >= 2")
        return f"w{n}", cycle_graph(n), PolytopeKind.ASSOCIAHEDRON
    if n < 1:
        raise UsageError("Y_n needs n >= 1")
    return f"halo{n}", halohedron_graph(n), PolytopeKind.CUBEAHEDRON


def _check_combinatorial(G: Graph, max_nodes: int | None) -> None:
    bound = COMBINATORIAL_MAX_NODES if max_nodes is None else max_nodes
    if G.node_count > bound:
        raise UsageError(f"{G.node_count} nodes exceeds the bound of {bound} (see --max-nodes)")


def cmd_build(args) -> int:
    stem, G, kind = resolve_object(args.object, args.n, args.graph)
    _check_combinatorial(G, args.max_nodes)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    poset = tubing_poset(G, kind)
    (out / f"{stem}.poset.json").write_text(_dump(poset_to_json(poset, stem)))
    if args.realize:
        poly = build(G, kind, args.max_nodes)
        (out / f"{stem}.exact.json").write_text(_dump(exact_json(poly)))
        (out / f"{stem}.off").write_text(off_text(poly))
    print(" ".join(map(str, poset.f_vector())))
    return 0


def cmd_export(args) -> int:
    stem, G, kind = resolve_object(args.object, args.n, args.graph)
    _check_combinatorial(G, args.max_nodes)
    if args.format == "poset":
        text = _dump(poset_to_json(tubing_poset(G, kind), stem))
    else:
        poly = build(G, kind, args.max_nodes)
        text = off_text(poly) if args.format == "off" else _dump(exact_json(poly))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return 0


def _parse_marks(text: str | None, h: int) -> tuple[int, ...]:
    if text is None or text == "":
        if h:
            raise UsageError(f"h = {h} needs {h} comma-separated boundary mark counts")
        return ()
    try:
        marks = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad mark list {text!r}") from exc
    return marks


def cmd_classify(args) -> int:
    sig = SurfaceSignature(args.g, args.h, args.n, _parse_marks(args.m, args.h))
    print(json.dumps(classify_polytopality(sig).to_json(), sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    bound = DEFAULT_BOUNDS[args.suite] if args.bound is None else args.bound
    start = time.perf_counter()
    rows = SUITES[args.suite](bound)
    elapsed = time.perf_counter() - start
    width = max((len(r.name) for r in rows), default=10)
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  {r.detail}")
    failed = [r for r in rows if not r.passed]
    print(f"{args.suite}: {len(rows) - len(failed)}/{len(rows)} passed in {elapsed:.2f}s")
    if failed:
        print(f"first failure: {failed[0].name}: {failed[0].detail}", file=sys.stderr)
        return 1
    return 0


def _add_object_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--object", required=True, choices=OBJECTS)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", help="graph JSON file for graph-assoc / graph-cube")
    p.add_argument("--max-nodes", type=int, help="override the node-count bound")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="halohedra", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a face poset, optionally a realized polytope")
    _add_object_args(p)
    p.add_argument("--realize", action="store_true", help="also write exact JSON and OFF geometry")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("classify", help="classify a surface signature g h n [m1,m2,...]")
    p.add_argument("g", type=int)
    p.add_argument("h", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", nargs="?", default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write one artifact to a file or stdout")
    _add_object_args(p)
    p.add_argument("--format", choices=("poset", "exact", "off"), default="off")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"halohedra: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
