"""Graph associahedra and cubeahedra as truncated simplices and cubes.

Coordinates: the simplex is {x >= 0, sum(x) <= 1} in R^(n-1), with facet
x_i = 0 labeled by node i and the facet sum(x) = 1 labeled by node n. The
cube is [0, 1]^n with the round side of node i at x_i = 0 and the square
side at x_i = 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .geometry import (
    GeometryError,
    HalfSpace,
    HPolytope,
    VPolytope,
    face_lattice,
    face_of_facets,
    fraction_str,
    truncate_face,
    vertex_enumeration,
)
from .graph import Graph
from .poset import check_map
from .tubings import (
    ROUND,
    DesignTube,
    PolytopeKind,
    Tube,
    enumerate_design_tubes,
    enumerate_tubes,
    tubing_poset,
)

DEFAULT_MAX_NODES = {PolytopeKind.ASSOCIAHEDRON: 6, PolytopeKind.CUBEAHEDRON: 5}
ORIENTATION = "round side of node i is x_i = 0; square side is x_i = 1"


def max_geometric_dim() -> int:
    return int(os.environ.get("HALO_MAX_DIM", "5"))


def labeled_simplex(G: Graph) -> VPolytope:
    n = G.node_count
    if n < 2:
        raise GeometryError("the labeled simplex needs at least two nodes")
    d = n - 1
    hs = []
    for i in range(d):
        normal = tuple(Fraction(-1 if k == i else 0) for k in range(d))
        hs.append(HalfSpace(normal, Fraction(0), Tube((i + 1,))))
    hs.append(HalfSpace(tuple(Fraction(1) for _ in range(d)), Fraction(1), Tube((n,))))
    return vertex_enumeration(HPolytope(d, tuple(hs)))


def labeled_cube(G: Graph) -> VPolytope:
    n = G.node_count
    hs = []
    for i in range(n):
        unit = tuple(Fraction(int(k == i)) for k in range(n))
        hs.append(HalfSpace(tuple(-x for x in unit), Fraction(0), DesignTube.round(i + 1)))
        hs.append(HalfSpace(unit, Fraction(1), DesignTube.square(i + 1)))
    return vertex_enumeration(HPolytope(n, tuple(hs)))


def _facet_with_label(poly: VPolytope, label) -> int:
    for i, h in enumerate(poly.halfspaces):
        if h.label == label:
            return i
    raise GeometryError(f"no facet labeled {label!r}")


def face_of_label(poly: VPolytope, label: Iterable) -> frozenset[int]:
    """Face cut out by node facets.

    ``label`` is either plain node numbers (simplex facets) or
    ``(node, "round" | "square")`` pairs (cube facets).
    """
    sides: dict[int, str] = {}
    facets = []
    for item in label:
        if isinstance(item, int):
            facets.append(_facet_with_label(poly, Tube((item,))))
            continue
        node, kind = item
        if sides.setdefault(node, kind) != kind:
            raise GeometryError(f"node {node} asked for both round and square sides")
        facets.append(_facet_with_label(poly, DesignTube(kind, (node,))))
    return face_of_facets(poly, facets)


def _check_size(G: Graph, kind: PolytopeKind, max_nodes: int | None) -> None:
    bound = DEFAULT_MAX_NODES[kind] if max_nodes is None else max_nodes
    if G.node_count > bound:
        raise GeometryError(f"{G.node_count} nodes exceeds the bound of {bound}")
    dim = G.node_count - 1 if kind is PolytopeKind.ASSOCIAHEDRON else G.node_count
    if dim > max_geometric_dim():
        raise GeometryError(f"dimension {dim} exceeds HALO_MAX_DIM={max_geometric_dim()}")


def _truncation_schedule(tubes: list) -> list:
    # increasing face dimension means decreasing tube size; ties go lexicographically
    return sorted(tubes, key=lambda t: (-len(t.nodes), t.nodes))


def build_graph_associahedron(G: Graph, max_nodes: int | None = None, trace: list | None = None) -> VPolytope:
    _check_size(G, PolytopeKind.ASSOCIAHEDRON, max_nodes)
    poly = labeled_simplex(G)
    todo = [t for t in enumerate_tubes(G) if len(t.nodes) >= 2]
    for tube in _truncation_schedule(todo):
        poly = truncate_face(poly, face_of_label(poly, tube.nodes), label=tube)
        if trace is not None:
            trace.append((tube, poly))
    return poly


def build_graph_cubeahedron(G: Graph, max_nodes: int | None = None, trace: list | None = None) -> VPolytope:
    _check_size(G, PolytopeKind.CUBEAHEDRON, max_nodes)
    poly = labeled_cube(G)
    todo = [d for d in enumerate_design_tubes(G) if d.kind == ROUND and len(d.nodes) >= 2]
    for tube in _truncation_schedule(todo):
        face = face_of_label(poly, [(v, ROUND) for v in tube.nodes])
        poly = truncate_face(poly, face, label=tube)
        if trace is not None:
            trace.append((tube, poly))
    return poly


def build(G: Graph, kind: PolytopeKind, max_nodes: int | None = None) -> VPolytope:
    if kind is PolytopeKind.ASSOCIAHEDRON:
        return build_graph_associahedron(G, max_nodes)
    return build_graph_cubeahedron(G, max_nodes)


@dataclass
class CertificationReport:
    isomorphic: bool
    f_vector: tuple[int, ...]
    facet_count: int
    vertex_count: int
    simple: bool
    mismatch: str | None = None


def face_labels(poly: VPolytope, face: frozenset[int]) -> frozenset:
    """The tubing read off a face: labels of all facets containing it."""
    common = frozenset.intersection(*(poly.incidence[v] for v in face))
    return frozenset(poly.halfspaces[i].label for i in common)


def certify_realization(G: Graph, kind: PolytopeKind, max_nodes: int | None = None) -> CertificationReport:
    poly = build(G, kind, max_nodes)
    lattice = face_lattice(poly)
    tubings = tubing_poset(G, kind)
    mapping = {face: face_labels(poly, face) for face in lattice.elements}
    mismatch = check_map(lattice, tubings, mapping)
    return CertificationReport(
        isomorphic=mismatch is None,
        f_vector=lattice.f_vector(),
        facet_count=len(poly.halfspaces),
        vertex_count=len(poly.vertices),
        simple=poly.is_simple(),
        mismatch=mismatch,
    )


# ---- export ------------------------------------------------------------------------


def _label_json(label) -> dict | None:
    if label is None:
        return None
    return label.to_json()


def exact_json(poly: VPolytope) -> dict:
    facets = [sorted(poly.facet_vertices(f)) for f in range(len(poly.halfspaces))]
    return {
        "dimension": poly.dimension,
        "orientation": ORIENTATION,
        "vertices": [[fraction_str(x) for x in v] for v in poly.vertices],
        "facets": facets,
        "labels": [_label_json(h.label) for h in poly.halfspaces],
        "halfspaces": [
            {"normal": [fraction_str(x) for x in h.normal], "offset": fraction_str(h.offset)}
            for h in poly.halfspaces
        ],
    }


def _cyclic_order(poly: VPolytope, f: int, edges: list[tuple[int, int]]) -> list[int]:
    verts = poly.facet_vertices(f)
    nbrs: dict[int, list[int]] = {v: [] for v in verts}
    for u, w in edges:
        if u in verts and w in verts:
            nbrs[u].append(w)
            nbrs[w].append(u)
    start = min(verts)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(x for x in sorted(nbrs[cur]) if x != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    # orient counterclockwise seen from outside
    a, b, c = (poly.vertices[order[i]] for i in range(3))
    u = [y - x for x, y in zip(a, b)]
    w = [y - x for x, y in zip(a, c)]
    cross = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
    if sum(x * y for x, y in zip(cross, poly.halfspaces[f].normal)) < 0:
        order = [order[0]] + order[:0:-1]
    return order


def off_text(poly: VPolytope) -> str:
    """OFF for dimension 3 (lower dimensions padded with zeros); nOFF above that.

    Coordinates are decimal approximations; the exact values live in the JSON.
    """
    d = poly.dimension
    edges = poly.edges()
    nfacets = len(poly.halfspaces)
    lines = []
    if d <= 3:
        lines.append("OFF")
        width = 3
    else:
        lines.append("nOFF")
        lines.append(str(d))
        width = d
    lines.append(f"{len(poly.vertices)} {nfacets} {len(edges)}")
    for v in poly.vertices:
        coords = [float(x) for x in v] + [0.0] * (width - d)
        lines.append(" ".join(f"{x:.12g}" for x in coords))
    for f in range(nfacets):
        if d == 3:
            idx = _cyclic_order(poly, f, edges)
        else:
            idx = sorted(poly.facet_vertices(f))
        lines.append(" ".join(str(x) for x in [len(idx)] + idx))
    return "\n".join(lines) + "\n"


def facet_shapes(poly: VPolytope) -> dict[int, int]:
    """For a 3-polytope: number of facets with k vertices, keyed by k."""
    counts: dict[int, int] = {}
    for f in range(len(poly.halfspaces)):
        k = len(poly.facet_vertices(f))
        counts[k] = counts.get(k, 0) + 1
    return counts

