"""Graded face posets and isomorphism checks between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FacePoset:
    """A finite graded poset with a unique top element.

    ``covers`` holds index pairs ``(i, j)`` meaning element ``i`` is covered
    by element ``j``. ``ranks[i]`` is the dimension of the face ``elements[i]``.
    The empty face is never stored.
    """

    elements: tuple
    ranks: tuple[int, ...]
    ambient_dim: int
    covers: frozenset[tuple[int, int]]
    name: str = ""
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.elements) != len(self.ranks):
            raise PosetError("elements and ranks differ in length")
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise PosetError("duplicate poset elements")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_complexes(
        cls,
        complexes: Iterable[frozenset],
        ambient_dim: int,
        name: str = "",
        sort_key: Callable[[frozenset], Any] | None = None,
    ) -> "FacePoset":
        """Poset of a downward-closed family of sets ordered by reverse containment.

        Used for tubings and diagonalizations: a face with ``k`` pieces has
        rank ``ambient_dim - k`` and the empty set is the top.
        """
        elems = list(complexes)
        if sort_key is not None:
            elems.sort(key=sort_key)
        index = {e: i for i, e in enumerate(elems)}
        covers = set()
        for i, e in enumerate(elems):
            for piece in e:
                j = index.get(e - {piece})
                if j is None:
                    raise PosetError(f"family is not closed under removal: {e!r}")
                covers.add((i, j))
        ranks = tuple(ambient_dim - len(e) for e in elems)
        return cls(tuple(elems), ranks, ambient_dim, frozenset(covers), name)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element: Hashable) -> int:
        return self._index[element]

    def __contains__(self, element) -> bool:
        return element in self._index

    @property
    def top(self) -> int:
        tops = [i for i, r in enumerate(self.ranks) if r == self.ambient_dim]
        if len(tops) != 1:
            raise PosetError(f"expected one top element, found {len(tops)}")
        return tops[0]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.ambient_dim
        for r in self.ranks:
            if r < self.ambient_dim:
                counts[r] += 1
        return tuple(counts)

    def elements_of_rank(self, r: int) -> list:
        return [e for e, rk in zip(self.elements, self.ranks) if rk == r]

    def upper_covers(self) -> list[list[int]]:
        up = [[] for _ in self.elements]
        for i, j in self.covers:
            up[i].append(j)
        return up

    def lower_covers(self) -> list[list[int]]:
        down = [[] for _ in self.elements]
        for i, j in self.covers:
            down[j].append(i)
        return down

    def is_graded(self) -> bool:
        """Every cover raises rank by one and the top is the unique maximal element.

        Together these force every maximal chain from an element up to the
        top to have length equal to that element's corank.
        """
        if any(self.ranks[j] - self.ranks[i] != 1 for i, j in self.covers):
            return False
        try:
            top = self.top
        except PosetError:
            return False
        up = self.upper_covers()
        return all(up[i] or i == top for i in range(len(self)))

    def satisfies_euler(self) -> bool:
        d = self.ambient_dim
        total = sum((-1) ** i * f for i, f in enumerate(self.f_vector()))
        return total == 1 - (-1) ** d

    def subface_poset(self, element) -> "FacePoset":
        """All faces of the face ``element``, as a poset with ``element`` on top."""
        start = self.index(element)
        down = self.lower_covers()
        keep = {start}
        stack = [start]
        while stack:
            j = stack.pop()
            for i in down[j]:
                if i not in keep:
                    keep.add(i)
                    stack.append(i)
        order = sorted(keep)
        remap = {old: new for new, old in enumerate(order)}
        return FacePoset(
            tuple(self.elements[i] for i in order),
            tuple(self.ranks[i] for i in order),
            self.ranks[start],
            frozenset((remap[i], remap[j]) for i, j in self.covers if i in keep and j in keep),
        )

    def hasse_digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for i, r in enumerate(self.ranks):
            g.add_node(i, rank=r)
        g.add_edges_from(self.covers)
        return g


def product_poset(p: FacePoset, q: FacePoset, name: str = "") -> FacePoset:
    """Face poset of the cartesian product of two polytopes."""
    elems = [(a, b) for a in p.elements for b in q.elements]
    index = {e: k for k, e in enumerate(elems)}
    ranks = tuple(ra + rb for ra in p.ranks for rb in q.ranks)
    covers = set()
    for i, j in p.covers:
        for b in q.elements:
            covers.add((index[(p.elements[i], b)], index[(p.elements[j], b)]))
    for i, j in q.covers:
        for a in p.elements:
            covers.add((index[(a, q.elements[i])], index[(a, q.elements[j])]))
    return FacePoset(tuple(elems), ranks, p.ambient_dim + q.ambient_dim, frozenset(covers), name)


def check_map(p: FacePoset, q: FacePoset, mapping: dict) -> str | None:
    """Verify that ``mapping`` (element of p -> element of q) is a rank-preserving
    poset isomorphism. Returns None on success, else a description of the
    first failure.
    """
    if len(p) != len(q):
        return f"sizes differ: {len(p)} vs {len(q)}"
    image = {}
    for e in p.elements:
        if e not in mapping:
            return f"element {e!r} has no image"
        target = mapping[e]
        if target not in q:
            return f"image of {e!r} is not an element: {target!r}"
        if target in image:
            return f"{e!r} and {image[target]!r} share the image {target!r}"
        image[target] = e
        if p.ranks[p.index(e)] != q.ranks[q.index(target)]:
            return f"rank mismatch at {e!r} -> {target!r}"
    mapped = {(q.index(mapping[p.elements[i]]), q.index(mapping[p.elements[j]])) for i, j in p.covers}
    for i, j in sorted(mapped - q.covers):
        return f"mapped cover ({q.elements[i]!r} < {q.elements[j]!r}) is not a cover in the target"
    for i, j in sorted(q.covers - mapped):
        return f"target cover ({q.elements[i]!r} < {q.elements[j]!r}) has no preimage cover"
    return None


def invariant(p: FacePoset) -> tuple:
    """Cheap isomorphism invariant: sorted (rank, #lower, #upper) profile."""
    up = [0] * len(p)
    down = [0] * len(p)
    for i, j in p.covers:
        up[i] += 1
        down[j] += 1
    return tuple(sorted(zip(p.ranks, down, up)))


def find_isomorphism(p: FacePoset, q: FacePoset) -> dict | None:
    """Search for a rank-preserving isomorphism between two posets.

    Returns an element mapping, or None when the posets are not isomorphic.
    """
    if len(p) != len(q) or p.ambient_dim != q.ambient_dim or invariant(p) != invariant(q):
        return None
    matcher = DiGraphMatcher(
        p.hasse_digraph(),
        q.hasse_digraph(),
        node_match=lambda a, b: a["rank"] == b["rank"],
    )
    for iso in matcher.isomorphisms_iter():
        return {p.elements[i]: q.elements[j] for i, j in iso.items()}
    return None


def are_isomorphic(p: FacePoset, q: FacePoset) -> bool:
    mapping = find_isomorphism(p, q)
    return mapping is not None and check_map(p, q, mapping) is None
