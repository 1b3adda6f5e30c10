"""Tubes, design tubes and the face posets of graph associahedra and cubeahedra.

A tubing is a frozenset of tubes. Faces are ordered by reverse containment,
so the empty tubing is the whole polytope and maximal tubings are vertices.

Adjacency is tested on connectivity of the union: two disjoint tubes whose
union is the whole (connected) graph are adjacent too. Without that the
path on three nodes would give seven vertices instead of a pentagon.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, GraphError, cycle_graph, mask_to_nodes, nodes_to_mask, path_graph
from .poset import FacePoset, find_isomorphism, product_poset

ROUND = "round"
SQUARE = "square"


class TubeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Tube:
    nodes: tuple[int, ...]

    @classmethod
    def of(cls, *nodes: int) -> "Tube":
        return cls(tuple(sorted(nodes)))

    @property
    def mask(self) -> int:
        return nodes_to_mask(self.nodes)

    def sort_key(self):
        return (len(self.nodes), self.nodes)

    def to_json(self) -> dict:
        return {"kind": ROUND, "nodes": list(self.nodes)}

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.nodes)) + "}"


@dataclass(frozen=True, order=True)
class DesignTube:
    kind: str
    nodes: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (ROUND, SQUARE):
            raise TubeError(f"unknown design tube kind {self.kind!r}")
        if self.kind == SQUARE and len(self.nodes) != 1:
            raise TubeError("a square tube holds exactly one node")
        if not self.nodes:
            raise TubeError("design tubes are nonempty")

    @classmethod
    def round(cls, *nodes: int) -> "DesignTube":
        return cls(ROUND, tuple(sorted(nodes)))

    @classmethod
    def square(cls, node: int) -> "DesignTube":
        return cls(SQUARE, (node,))

    @property
    def mask(self) -> int:
        return nodes_to_mask(self.nodes)

    def sort_key(self):
        return (len(self.nodes), self.nodes, self.kind)

    def to_json(self) -> dict:
        return {"kind": self.kind, "nodes": list(self.nodes)}

    def __repr__(self) -> str:
        body = ",".join(map(str, self.nodes))
        return f"R{{{body}}}" if self.kind == ROUND else f"S{{{body}}}"


class Relation(Enum):
    NESTED = "nested"
    INTERSECTING = "intersecting"
    ADJACENT = "adjacent"
    DISJOINT = "disjoint"


class PolytopeKind(Enum):
    ASSOCIAHEDRON = "associahedron"
    CUBEAHEDRON = "cubeahedron"


def _check_tube(G: Graph, t: Tube) -> None:
    m = t.mask
    if m & ~G.full_mask or m == G.full_mask or not G.mask_connected(m):
        raise TubeError(f"{t!r} is not a tube of the graph")


def _check_design_tube(G: Graph, d: DesignTube) -> None:
    m = d.mask
    if m & ~G.full_mask or not G.mask_connected(m):
        raise TubeError(f"{d!r} is not a design tube of the graph")


def _mask_relation(G: Graph, a: int, b: int) -> Relation:
    inter = a & b
    if inter:
        if inter == a or inter == b:
            return Relation.NESTED
        return Relation.INTERSECTING
    if G.mask_connected(a | b):
        return Relation.ADJACENT
    return Relation.DISJOINT


def tube_relation(G: Graph, t1: Tube, t2: Tube) -> Relation:
    _check_tube(G, t1)
    _check_tube(G, t2)
    if t1 == t2:
        raise TubeError("relation of a tube with itself is undefined")
    return _mask_relation(G, t1.mask, t2.mask)


def compatible(G: Graph, t1: Tube, t2: Tube) -> bool:
    return tube_relation(G, t1, t2) in (Relation.NESTED, Relation.DISJOINT)


def _design_compatible_masks(G: Graph, k1: str, a: int, k2: str, b: int) -> bool:
    if k1 == ROUND and k2 == ROUND:
        return _mask_relation(G, a, b) in (Relation.NESTED, Relation.DISJOINT)
    if k1 == SQUARE and k2 == SQUARE:
        return True
    # a square at v is nested with a round tube exactly when v lies in it
    return not (a & b)


def design_compatible(G: Graph, d1: DesignTube, d2: DesignTube) -> bool:
    _check_design_tube(G, d1)
    _check_design_tube(G, d2)
    if d1 == d2:
        raise TubeError("compatibility of a design tube with itself is undefined")
    return _design_compatible_masks(G, d1.kind, d1.mask, d2.kind, d2.mask)


def _connected_masks(G: Graph) -> list[int]:
    return [m for m in range(1, G.full_mask + 1) if G.mask_connected(m)]


def enumerate_tubes(G: Graph) -> list[Tube]:
    full = G.full_mask
    tubes = [Tube(mask_to_nodes(m)) for m in _connected_masks(G) if m != full]
    return sorted(tubes, key=Tube.sort_key)


def enumerate_design_tubes(G: Graph) -> list[DesignTube]:
    rounds = [DesignTube(ROUND, mask_to_nodes(m)) for m in _connected_masks(G)]
    squares = [DesignTube.square(v) for v in G.nodes]
    return sorted(rounds + squares, key=DesignTube.sort_key)


def _atoms(G: Graph, kind: PolytopeKind) -> list:
    if kind is PolytopeKind.ASSOCIAHEDRON:
        return enumerate_tubes(G)
    return enumerate_design_tubes(G)


def _compat_masks(G: Graph, atoms: Sequence, kind: PolytopeKind) -> list[int]:
    """compat[i] has bit j set when atoms i and j are compatible (i != j)."""
    n = len(atoms)
    compat = [0] * n
    for i, j in combinations(range(n), 2):
        a, b = atoms[i], atoms[j]
        if kind is PolytopeKind.ASSOCIAHEDRON:
            ok = _mask_relation(G, a.mask, b.mask) in (Relation.NESTED, Relation.DISJOINT)
        else:
            ok = _design_compatible_masks(G, a.kind, a.mask, b.kind, b.mask)
        if ok:
            compat[i] |= 1 << j
            compat[j] |= 1 << i
    return compat


def ambient_dim(G: Graph, kind: PolytopeKind) -> int:
    return G.node_count - 1 if kind is PolytopeKind.ASSOCIAHEDRON else G.node_count


def _tubing_key(tubing: frozenset):
    return (len(tubing), sorted(t.sort_key() for t in tubing))


@lru_cache(maxsize=64)
def enumerate_tubings(G: Graph, kind: PolytopeKind) -> tuple[frozenset, ...]:
    """All (design) tubings, backtracking over sorted atoms with compatibility pruning."""
    atoms = _atoms(G, kind)
    compat = _compat_masks(G, atoms, kind)
    out: list[frozenset] = []

    def extend(chosen: list[int], candidates: int) -> None:
        out.append(frozenset(atoms[i] for i in chosen))
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            i = low.bit_length() - 1
            chosen.append(i)
            # only later atoms, to visit each set once
            extend(chosen, candidates & compat[i])
            chosen.pop()

    extend([], (1 << len(atoms)) - 1)
    out.sort(key=_tubing_key)
    return tuple(out)


@lru_cache(maxsize=64)
def tubing_poset(G: Graph, kind: PolytopeKind) -> FacePoset:
    name = f"{kind.value}:{G.node_count}:{sorted(G.edges)}"
    return FacePoset.from_complexes(enumerate_tubings(G, kind), ambient_dim(G, kind), name)


def maximal_tubings(G: Graph, kind: PolytopeKind) -> list[frozenset]:
    tubings = enumerate_tubings(G, kind)
    size = max(len(t) for t in tubings)
    return [t for t in tubings if len(t) == size]


def is_tubing(G: Graph, tubes: Iterable, kind: PolytopeKind) -> bool:
    tubes = list(tubes)
    try:
        for t in tubes:
            if kind is PolytopeKind.ASSOCIAHEDRON:
                _check_tube(G, t)
            else:
                _check_design_tube(G, t)
    except TubeError:
        return False
    if len(set(tubes)) != len(tubes):
        return False
    check = compatible if kind is PolytopeKind.ASSOCIAHEDRON else design_compatible
    return all(check(G, a, b) for a, b in combinations(tubes, 2))


def design_tube_to_path_tube(n: int, d: DesignTube) -> Tube:
    if d.kind == ROUND:
        return Tube(d.nodes)
    k = d.nodes[0]
    return Tube(tuple(range(k + 1, n + 2)))


def path_design_bijection(G: Graph, U: Iterable[DesignTube]) -> frozenset[Tube]:
    """Design tubing of path(n) -> tubing of path(n+1).

    Round tubes keep their nodes; the square on node k becomes {k+1, ..., n+1}.
    """
    if not G.is_path():
        raise GraphError("path_design_bijection needs a path graph")
    U = list(U)
    if not is_tubing(G, U, PolytopeKind.CUBEAHEDRON):
        raise TubeError(f"{U!r} is not a design tubing of path({G.node_count})")
    return frozenset(design_tube_to_path_tube(G.node_count, d) for d in U)


# ---- facets of the halohedron -------------------------------------------------


@dataclass(frozen=True)
class FacetType:
    """Combinatorial type of a facet of CG(cycle n).

    ``kind`` is "cyclohedron" (W_a), "associahedron" (K_a) or "product"
    (K_a x Y_b). Unused parameters are zero.
    """

    kind: str
    a: int
    b: int = 0

    def __str__(self) -> str:
        if self.kind == "cyclohedron":
            return f"W_{self.a}"
        if self.kind == "associahedron":
            return f"K_{self.a}"
        return f"K_{self.a} x Y_{self.b}"


def cycle_facet_type(G: Graph, d: DesignTube) -> FacetType:
    if not G.is_cycle():
        raise GraphError("cycle_facet_type needs a cycle graph")
    _check_design_tube(G, d)
    n = G.node_count
    if d.kind == SQUARE:
        return FacetType("associahedron", n + 1)
    if len(d.nodes) == n:
        return FacetType("cyclohedron", n)
    # a round tube on k-1 nodes is an arc capturing k marked points
    k = len(d.nodes) + 1
    return FacetType("product", k, n - k + 1)


def associahedron_poset(k: int) -> FacePoset:
    """K_k, of dimension k - 2, as the tubing poset of path(k - 1)."""
    if k < 2:
        raise ValueError(f"K_k needs k >= 2, got {k}")
    return tubing_poset(path_graph(k - 1), PolytopeKind.ASSOCIAHEDRON)


def cyclohedron_poset(n: int) -> FacePoset:
    """W_n, of dimension n - 1."""
    if n < 1:
        raise ValueError(f"W_n needs n >= 1, got {n}")
    if n == 1:
        return tubing_poset(path_graph(1), PolytopeKind.ASSOCIAHEDRON)
    return tubing_poset(cycle_graph(n), PolytopeKind.ASSOCIAHEDRON)


def halohedron_graph(n: int) -> Graph:
    # Y_1 is the cubeahedron of a single node: an interval
    return path_graph(1) if n == 1 else cycle_graph(n)


def halohedron_poset(n: int) -> FacePoset:
    """Y_n, of dimension n."""
    if n < 1:
        raise ValueError(f"Y_n needs n >= 1, got {n}")
    return tubing_poset(halohedron_graph(n), PolytopeKind.CUBEAHEDRON)


def facet_type_poset(ft: FacetType) -> FacePoset:
    if ft.kind == "cyclohedron":
        return cyclohedron_poset(ft.a)
    if ft.kind == "associahedron":
        return associahedron_poset(ft.a)
    return product_poset(associahedron_poset(ft.a), halohedron_poset(ft.b))


def facet_census(n: int) -> dict[str, int]:
    """Counts of facet kinds of Y_n, read off the design tubes of cycle(n)."""
    G = cycle_graph(n)
    census = {"cyclohedron": 0, "associahedron": 0, "product": 0}
    for d in enumerate_design_tubes(G):
        census[cycle_facet_type(G, d).kind] += 1
    return census


def facet_interval_matches(G: Graph, d: DesignTube) -> bool:
    """Is the facet of CG(cycle) labeled d isomorphic to its named polytope?"""
    interval = tubing_poset(G, PolytopeKind.CUBEAHEDRON).subface_poset(frozenset([d]))
    return find_isomorphism(interval, facet_type_poset(cycle_facet_type(G, d))) is not None


def poset_to_json(poset: FacePoset, object_name: str) -> dict:
    faces = []
    for element, rank in zip(poset.elements, poset.ranks):
        tubes = sorted(element, key=lambda t: t.sort_key())
        faces.append({"tubes": [t.to_json() for t in tubes], "dim": rank})
    return {
        "object": object_name,
        "ambient_dim": poset.ambient_dim,
        "faces": faces,
        "f_vector": list(poset.f_vector()),
    }
