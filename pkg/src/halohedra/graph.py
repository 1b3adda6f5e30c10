"""Connected simple graphs on nodes labeled 1..n.

Node sets are handled both as sorted tuples (public surface) and as
bitmasks (bit ``i - 1`` set for node ``i``) for the enumeration code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable


class GraphError(ValueError):
    pass


def _norm_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    node_count: int
    edges: frozenset[tuple[int, int]]
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.node_count
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"node_count must be a positive integer, got {n!r}")
        adj = [0] * (n + 1)
        for a, b in self.edges:
            if a == b:
                raise GraphError(f"self-loop at node {a}")
            if not (1 <= a <= n and 1 <= b <= n):
                raise GraphError(f"edge ({a}, {b}) has an endpoint outside 1..{n}")
            if (a, b) != _norm_edge(a, b):
                raise GraphError(f"edge ({a}, {b}) is not normalized")
            adj[a] |= 1 << (b - 1)
            adj[b] |= 1 << (a - 1)
        object.__setattr__(self, "_adj", tuple(adj))
        if not self.mask_connected(self.full_mask):
            raise GraphError("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        normed = set()
        for e in edges:
            a, b = e
            key = _norm_edge(int(a), int(b))
            if key in normed:
                raise GraphError(f"duplicate edge {key}")
            normed.add(key)
        return cls(n, frozenset(normed))

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.node_count + 1))

    @property
    def full_mask(self) -> int:
        return (1 << self.node_count) - 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return mask_to_nodes(self._adj[v])

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def mask_connected(self, mask: int) -> bool:
        """True iff ``mask`` is nonempty and induces a connected subgraph."""
        if mask == 0:
            return False
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length()
            new = self._adj[v] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    def is_path(self) -> bool:
        return self.edges == path_graph(self.node_count).edges

    def is_cycle(self) -> bool:
        return self.node_count >= 2 and self.edges == cycle_graph(self.node_count).edges

    def to_json(self) -> dict:
        return {"nodes": self.node_count, "edges": [list(e) for e in self.sorted_edges()]}


def nodes_to_mask(nodes: Iterable[int]) -> int:
    mask = 0
    for v in nodes:
        mask |= 1 << (v - 1)
    return mask


def mask_to_nodes(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least one node, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    # cycle_graph(2) is a single edge; multi-edges are never represented
    if n < 2:
        raise GraphError(f"cycle needs at least two nodes, got {n}")
    edges = {(i, i + 1) for i in range(1, n)}
    edges.add(_norm_edge(n, 1))
    return Graph(n, frozenset(edges))


def star_graph(n: int) -> Graph:
    """Node 1 joined to every other node."""
    if n < 1:
        raise GraphError(f"star needs at least one node, got {n}")
    return Graph(n, frozenset((1, i) for i in range(2, n + 1)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs at least one node, got {n}")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "complete": complete_graph,
}


def is_connected_subset(G: Graph, S: Iterable[int]) -> bool:
    S = tuple(S)
    for v in S:
        if not isinstance(v, int) or not 1 <= v <= G.node_count:
            raise GraphError(f"node {v!r} outside 1..{G.node_count}")
    return G.mask_connected(nodes_to_mask(S))


def connected_graphs(n: int) -> list[Graph]:
    """Every connected labeled graph on nodes 1..n, in a fixed order."""
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for bits in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)
        try:
            out.append(Graph(n, edges))
        except GraphError:
            continue
    return out


def graph_from_json(data: dict) -> Graph:
    if "family" in data:
        family = data["family"]
        if family not in FAMILIES:
            raise GraphError(f"unknown graph family {family!r}")
        return FAMILIES[family](int(data["n"]))
    if "nodes" not in data:
        raise GraphError("graph JSON needs 'nodes' and 'edges' or 'family' and 'n'")
    return Graph.from_edges(int(data["nodes"]), data.get("edges", []))


def load_graph(path: str | Path) -> Graph:
    with open(path) as fh:
        return graph_from_json(json.load(fh))
