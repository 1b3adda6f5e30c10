"""Exact rational polytopes: halfspaces, vertices, truncation and face lattices.

Every halfspace is ``normal . x <= offset``. Nothing here uses floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Sequence

from .poset import FacePoset

Vector = tuple[Fraction, ...]

MAX_ENUMERATION_DIM = 6


class GeometryError(ValueError):
    pass


def vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class HalfSpace:
    normal: Vector
    offset: Fraction
    label: Any = None

    def __post_init__(self):
        if not any(self.normal):
            raise GeometryError("halfspace normal must be nonzero")

    def slack(self, point: Sequence[Fraction]) -> Fraction:
        return self.offset - dot(self.normal, point)


@dataclass(frozen=True)
class HPolytope:
    dimension: int
    halfspaces: tuple[HalfSpace, ...]

    def with_halfspace(self, h: HalfSpace) -> "HPolytope":
        return HPolytope(self.dimension, self.halfspaces + (h,))


@dataclass(frozen=True)
class VPolytope:
    """Vertices of an H-polytope together with vertex-facet incidences.

    ``incidence[v]`` is the set of halfspace indices tight at vertex ``v``.
    """

    hpoly: HPolytope
    vertices: tuple[Vector, ...]
    incidence: tuple[frozenset[int], ...]

    @property
    def dimension(self) -> int:
        return self.hpoly.dimension

    @property
    def halfspaces(self) -> tuple[HalfSpace, ...]:
        return self.hpoly.halfspaces

    def facet_vertices(self, f: int) -> frozenset[int]:
        return frozenset(v for v, inc in enumerate(self.incidence) if f in inc)

    def is_simple(self) -> bool:
        return all(len(inc) == self.dimension for inc in self.incidence)

    def edges(self) -> list[tuple[int, int]]:
        """Vertex pairs spanning an edge, by the combinatorial adjacency test."""
        out = []
        for u, w in combinations(range(len(self.vertices)), 2):
            common = self.incidence[u] & self.incidence[w]
            if len(common) < self.dimension - 1:
                continue
            if not any(
                common <= self.incidence[z] for z in range(len(self.vertices)) if z not in (u, w)
            ):
                out.append((u, w))
        return out


# ---- linear algebra over Q ------------------------------------------------------


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector | None:
    """Unique solution of a square system, or None when it is singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    width = len(m[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                factor = m[i][col] / m[r][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def affine_dimension(points: Sequence[Vector]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([tuple(x - y for x, y in zip(p, base)) for p in points[1:]])


# ---- vertex enumeration ----------------------------------------------------------


def _incidence(hpoly: HPolytope, point: Vector) -> frozenset[int]:
    return frozenset(i for i, h in enumerate(hpoly.halfspaces) if h.slack(point) == 0)


def vertex_enumeration(hpoly: HPolytope) -> VPolytope:
    """Every vertex, by solving each d-subset of facet equations exactly."""
    d = hpoly.dimension
    if d > MAX_ENUMERATION_DIM:
        raise GeometryError(f"vertex enumeration is limited to dimension {MAX_ENUMERATION_DIM}")
    hs = hpoly.halfspaces
    found: dict[Vector, None] = {}
    for subset in combinations(range(len(hs)), d):
        point = solve([hs[i].normal for i in subset], [hs[i].offset for i in subset])
        if point is None or point in found:
            continue
        if all(h.slack(point) >= 0 for h in hs):
            found[point] = None
    if not found:
        raise GeometryError("polytope is empty")
    verts = tuple(sorted(found))
    if affine_dimension(list(verts)) != d:
        raise GeometryError("polytope is not full-dimensional")
    _check_bounded(hpoly)
    return VPolytope(hpoly, verts, tuple(_incidence(hpoly, v) for v in verts))


def _check_bounded(hpoly: HPolytope) -> None:
    # bounded iff the normals positively span: no nonzero direction with all a.y <= 0.
    # the recession cone is pointed and is generated by solutions of d-1 tight normals
    d = hpoly.dimension
    normals = [h.normal for h in hpoly.halfspaces]
    if rank(normals) < d:
        raise GeometryError("polytope is unbounded")
    for subset in combinations(range(len(normals)), d - 1):
        rows = [normals[i] for i in subset]
        if rank(rows) != d - 1:
            continue
        ray = _null_vector(rows, d)
        for direction in (ray, tuple(-x for x in ray)):
            if all(dot(a, direction) <= 0 for a in normals):
                raise GeometryError(f"polytope is unbounded along {direction}")


def _null_vector(rows: Sequence[Vector], d: int) -> Vector:
    for extra in range(d):
        unit = tuple(Fraction(int(i == extra)) for i in range(d))
        if rank(list(rows) + [unit]) == d:
            sol = solve(list(rows) + [unit], [Fraction(0)] * (d - 1) + [Fraction(1)])
            if sol is not None:
                return sol
    raise GeometryError("no null vector")


# ---- faces and truncation --------------------------------------------------------


def face_of_facets(poly: VPolytope, facets: Iterable[int]) -> frozenset[int]:
    """Vertex set of the intersection of the given facets (all vertices for none)."""
    facets = frozenset(facets)
    return frozenset(v for v, inc in enumerate(poly.incidence) if facets <= inc)


def facets_containing(poly: VPolytope, face: Iterable[int]) -> frozenset[int]:
    face = list(face)
    if not face:
        return frozenset(range(len(poly.halfspaces)))
    common = poly.incidence[face[0]]
    for v in face[1:]:
        common &= poly.incidence[v]
    return common


def safe_depth(poly: VPolytope, face: frozenset[int]) -> tuple[Vector, Fraction, Fraction]:
    """Cut functional, its value on the face, and the default depth (a third of the slack)."""
    tight = facets_containing(poly, face)
    if face_of_facets(poly, tight) != face:
        raise GeometryError("vertex set is not a face")
    if not face or len(face) == len(poly.vertices):
        raise GeometryError("can only truncate a nonempty proper face")
    hs = poly.halfspaces
    d = poly.dimension
    normal = tuple(sum((hs[i].normal[k] for i in tight), Fraction(0)) for k in range(d))
    level = sum((hs[i].offset for i in tight), Fraction(0))
    gap = min(level - dot(normal, poly.vertices[v]) for v in range(len(poly.vertices)) if v not in face)
    return normal, level, gap / 3


def truncate_face(
    poly: VPolytope, face: Iterable[int], depth: Fraction | None = None, label: Any = None
) -> VPolytope:
    """Cut off ``face`` with one new facet; vertices are updated along the cut edges."""
    face = frozenset(face)
    normal, level, default = safe_depth(poly, face)
    depth = default if depth is None else Fraction(depth)
    if depth <= 0:
        raise GeometryError("truncation depth must be positive")
    cut = level - depth
    for v, p in enumerate(poly.vertices):
        if v not in face and dot(normal, p) >= cut:
            raise GeometryError(f"depth {depth} would cut vertex {v} = {p} outside the face")
    new_h = HalfSpace(normal, cut, label)
    hpoly = poly.hpoly.with_halfspace(new_h)
    new_index = len(poly.halfspaces)

    kept = [v for v in range(len(poly.vertices)) if v not in face]
    points = {poly.vertices[v]: poly.incidence[v] for v in kept}
    for u, w in poly.edges():
        if (u in face) == (w in face):
            continue
        inner, outer = (u, w) if u in face else (w, u)
        a, b = poly.vertices[inner], poly.vertices[outer]
        fa, fb = dot(normal, a), dot(normal, b)
        t = (fa - cut) / (fa - fb)
        p = tuple(x + t * (y - x) for x, y in zip(a, b))
        points[p] = (poly.incidence[inner] & poly.incidence[outer]) | {new_index}
    verts = tuple(sorted(points))
    return VPolytope(hpoly, verts, tuple(frozenset(points[p]) for p in verts))


# ---- face lattice ---------------------------------------------------------------


def face_lattice(poly: VPolytope) -> FacePoset:
    """All nonempty faces as vertex sets, ranked by affine dimension.

    Starting from the whole polytope, the facets of a face are the maximal
    proper nonempty intersections of it with facets of the polytope.
    """
    nverts = len(poly.vertices)
    if nverts == 0 or any(not inc for inc in poly.incidence):
        raise GeometryError("incidence data is degenerate")
    facet_sets = {face_of_facets(poly, [f]) for f in range(len(poly.halfspaces))}
    facet_sets.discard(frozenset())
    top = frozenset(range(nverts))
    level = [top]
    dims = {top: poly.dimension}
    covers: set[tuple[frozenset, frozenset]] = set()
    for d in range(poly.dimension - 1, -1, -1):
        nxt = set()
        for upper in level:
            candidates = {upper & fs for fs in facet_sets}
            candidates = {c for c in candidates if c and c != upper}
            maximal = [c for c in candidates if not any(c < o for o in candidates)]
            for c in maximal:
                covers.add((c, upper))
                nxt.add(c)
        for c in nxt:
            dims[c] = d
        level = sorted(nxt, key=sorted)
    for face, d in dims.items():
        if affine_dimension([poly.vertices[v] for v in face]) != d:
            raise GeometryError(f"face {sorted(face)} has the wrong affine dimension")
    elements = sorted(dims, key=lambda f: (dims[f], sorted(f)))
    index = {f: i for i, f in enumerate(elements)}
    return FacePoset(
        tuple(elements),
        tuple(dims[f] for f in elements),
        poly.dimension,
        frozenset((index[a], index[b]) for a, b in covers),
        "face lattice",
    )


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
