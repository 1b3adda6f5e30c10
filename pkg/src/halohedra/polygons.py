"""Diagonalization posets of polygons.

Model A is a convex n-gon. Models B and C use a centrally symmetric 2n-gon
with vertices 0..2n-1 and symmetry i -> i + n (mod 2n); C adds a vertex at
the center. Diagonals:

* ``chord`` (A): a diagonal {a, b}.
* ``pair`` (B, C): a chord together with its symmetric image, stored by the
  representative (a, a + L) with 0 <= a < n. In C, L may equal n: the two
  curves from a to a + n pass on either side of the central vertex.
* ``diameter`` (B, C): the straight chord (a, a + n), 0 <= a < n.
* ``circle`` (C): a loop around the central vertex.

Shared polygon vertices never count as a crossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import cycle_graph, path_graph
from .poset import FacePoset, check_map
from .tubings import DesignTube, PolytopeKind, Tube, halohedron_graph, tubing_poset

CHORD = "chord"
PAIR = "pair"
DIAMETER = "diameter"
CIRCLE = "circle"

_KIND_ORDER = {CIRCLE: 0, DIAMETER: 1, PAIR: 2, CHORD: 3}


class PolygonError(ValueError):
    pass


@dataclass(frozen=True)
class Diagonal:
    kind: str
    endpoints: tuple[int, ...] = ()

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.endpoints)

    def to_json(self) -> dict:
        return {"kind": self.kind, "endpoints": list(self.endpoints)}

    def __repr__(self) -> str:
        if self.kind == CIRCLE:
            return "circle"
        return f"{self.kind}{self.endpoints}"


@dataclass(frozen=True)
class PolygonModel:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C"):
            raise PolygonError(f"unknown polygon model {self.family!r}")
        low = 3 if self.family == "A" else 1
        if not isinstance(self.n, int) or self.n < low:
            raise PolygonError(f"model {self.family} needs n >= {low}, got {self.n}")

    @property
    def sides(self) -> int:
        return self.n if self.family == "A" else 2 * self.n

    @property
    def ambient_dim(self) -> int:
        return {"A": self.n - 3, "B": self.n - 1, "C": self.n}[self.family]

    @property
    def diagonals(self) -> tuple[Diagonal, ...]:
        return _diagonals(self)


@lru_cache(maxsize=None)
def _diagonals(model: PolygonModel) -> tuple[Diagonal, ...]:
    n = model.n
    out = []
    if model.family == "A":
        for a, b in combinations(range(n), 2):
            if b - a >= 2 and not (a == 0 and b == n - 1):
                out.append(Diagonal(CHORD, (a, b)))
        return tuple(out)
    if model.family == "C":
        out.append(Diagonal(CIRCLE))
    # a 2-gon has no diameters of its own in B; in C the central vertex makes one
    if model.family == "C" or n >= 2:
        out.extend(Diagonal(DIAMETER, (a, a + n)) for a in range(n))
    longest = n if (model.family == "C" and n >= 2) else n - 1
    for length in range(2, longest + 1):
        out.extend(Diagonal(PAIR, (a, a + length)) for a in range(n))
    return tuple(sorted(out, key=Diagonal.sort_key))


def _strictly_inside(v: int, x: int, y: int, size: int) -> bool:
    """v lies on the open boundary arc running counterclockwise from x to y."""
    return 0 < (v - x) % size < (y - x) % size


def _chords_cross(c1: tuple[int, int], c2: tuple[int, int], size: int) -> bool:
    x, y = c1
    p, q = c2
    if {x, y} & {p, q}:
        return False
    return _strictly_inside(p, x, y, size) != _strictly_inside(q, x, y, size)


def _pair_chords(d: Diagonal, n: int) -> list[tuple[int, int]]:
    a, b = d.endpoints
    return [(a, b), ((a + n) % (2 * n), (b + n) % (2 * n))]


def _is_diametral(d: Diagonal, n: int) -> bool:
    return d.kind == PAIR and d.endpoints[1] - d.endpoints[0] == n


def crosses(model: PolygonModel, e1: Diagonal, e2: Diagonal) -> bool:
    valid = set(model.diagonals)
    if e1 not in valid or e2 not in valid:
        raise PolygonError(f"{e1!r} / {e2!r} are not both diagonals of {model}")
    if e1 == e2:
        return False
    size = model.sides
    if model.family == "A":
        return _chords_cross(e1.endpoints, e2.endpoints, size)
    n = model.n
    kinds = {e1.kind, e2.kind}
    if CIRCLE in kinds:
        other = e2 if e1.kind == CIRCLE else e1
        return other.kind == DIAMETER
    if kinds == {DIAMETER}:
        # B: distinct diameters meet at the center; C: the central vertex separates them
        return model.family == "B"
    diam1 = e1.kind == DIAMETER or _is_diametral(e1, n)
    diam2 = e2.kind == DIAMETER or _is_diametral(e2, n)
    if diam1 and diam2:
        # a diameter and the diametral pair on the same endpoints share them only
        return e1.endpoints[0] != e2.endpoints[0] or e1.kind == e2.kind
    chords1 = [e1.endpoints] if e1.kind == DIAMETER else _pair_chords(e1, n)
    chords2 = [e2.endpoints] if e2.kind == DIAMETER else _pair_chords(e2, n)
    return any(_chords_cross(c, d, size) for c in chords1 for d in chords2)


@lru_cache(maxsize=None)
def diagonalizations(model: PolygonModel) -> tuple[frozenset, ...]:
    diags = model.diagonals
    ok = {(a, b): not crosses(model, a, b) for a, b in combinations(diags, 2)}
    out = []

    def extend(chosen: list[Diagonal], start: int) -> None:
        out.append(frozenset(chosen))
        for i in range(start, len(diags)):
            d = diags[i]
            if all(ok[(c, d)] for c in chosen):
                chosen.append(d)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    out.sort(key=lambda s: (len(s), sorted(d.sort_key() for d in s)))
    return tuple(out)


def poset(family: str, n: int) -> FacePoset:
    model = PolygonModel(family, n)
    return FacePoset.from_complexes(diagonalizations(model), model.ambient_dim, f"{family}({n})")


# ---- bijections with tubings ---------------------------------------------------


def tubing_side(family: str, n: int) -> FacePoset:
    """The tubing poset each polygon model is matched against."""
    if family == "A":
        return tubing_poset(path_graph(n - 2), PolytopeKind.ASSOCIAHEDRON)
    if family == "B":
        if n < 2:
            raise PolygonError("B(n) is matched with cycle(n), which needs n >= 2")
        return tubing_poset(cycle_graph(n), PolytopeKind.ASSOCIAHEDRON)
    return tubing_poset(halohedron_graph(n), PolytopeKind.CUBEAHEDRON)


def _enclosed_nodes(d: Diagonal, n: int) -> tuple[int, ...]:
    """Cycle nodes for the polygon vertices strictly inside the short side of d."""
    a, b = d.endpoints
    return tuple(sorted((v % n) + 1 for v in range(a + 1, b)))


def diagonal_to_tube(family: str, n: int, d: Diagonal):
    if family == "A":
        a, b = d.endpoints
        return Tube(tuple(range(a + 1, b)))
    every = tuple(range(1, n + 1))
    if family == "B":
        if d.kind == DIAMETER:
            return Tube(tuple(v for v in every if v != d.endpoints[0] + 1))
        return Tube(_enclosed_nodes(d, n))
    if d.kind == CIRCLE:
        return DesignTube.round(*every)
    if d.kind == DIAMETER:
        return DesignTube.square(d.endpoints[0] + 1)
    return DesignTube.round(*_enclosed_nodes(d, n))


@dataclass
class IsoReport:
    ok: bool
    element_map: dict
    failure: str | None = None


def polygon_tubing_iso(family: str, n: int) -> IsoReport:
    model = PolygonModel(family, n)
    source = poset(family, n)
    target = tubing_side(family, n)
    atom_map = {d: diagonal_to_tube(family, n, d) for d in model.diagonals}
    if len(set(atom_map.values())) != len(atom_map):
        return IsoReport(False, atom_map, "diagonal map is not injective")
    face_map = {face: frozenset(atom_map[d] for d in face) for face in source.elements}
    failure = check_map(source, target, face_map)
    return IsoReport(failure is None, atom_map, failure)


def poset_to_json(p: FacePoset, object_name: str) -> dict:
    faces = []
    for element, rank in zip(p.elements, p.ranks):
        diags = sorted(element, key=Diagonal.sort_key)
        faces.append({"diagonals": [d.to_json() for d in diags], "dim": rank})
    return {
        "object": object_name,
        "ambient_dim": p.ambient_dim,
        "faces": faces,
        "f_vector": list(p.f_vector()),
    }
