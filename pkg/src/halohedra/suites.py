"""Property suites run by ``halohedra verify`` and by the acceptance tests.

Each suite returns a list of :class:`Check` rows. Expected values come from
oracles that do not share code with the path they check (recurrences,
networkx connectivity, closed-form counts).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import networkx as nx

from .graph import FAMILIES, Graph, connected_graphs, cycle_graph, path_graph
from .moduli import (
    Verdict,
    admits_two_loop,
    classify_polytopality,
    dimension,
    signatures_up_to_dimension,
    strata_poset,
)
from .polygons import polygon_tubing_iso
from .poset import check_map
from .tubings import (
    PolytopeKind,
    design_tube_to_path_tube,
    enumerate_design_tubes,
    enumerate_tubes,
    facet_census,
    facet_interval_matches,
    maximal_tubings,
    tubing_poset,
)
from .realization import certify_realization

KG = PolytopeKind.ASSOCIAHEDRON
CG = PolytopeKind.CUBEAHEDRON


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def catalan_numbers(count: int) -> list[int]:
    c = [1]
    for k in range(count):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c


def family_graphs(bound: int) -> list[tuple[str, Graph]]:
    out = []
    for name, make in FAMILIES.items():
        for n in range(1, bound + 1):
            if name == "cycle" and n < 2:
                continue
            out.append((f"{name}({n})", make(n)))
    return out


def brute_force_tube_count(G: Graph) -> int:
    nxg = nx.Graph()
    nxg.add_nodes_from(G.nodes)
    nxg.add_edges_from(G.edges)
    count = 0
    for size in range(1, G.node_count):
        for subset in combinations(G.nodes, size):
            if nx.is_connected(nxg.subgraph(subset)):
                count += 1
    return count


def suite_catalan(bound: int) -> list[Check]:
    expected = catalan_numbers(bound)
    rows = []
    for n in range(1, bound + 1):
        got = len(maximal_tubings(path_graph(n), KG))
        rows.append(Check(f"path({n}) maximal tubings", got == expected[n], f"{got} vs C_{n}={expected[n]}"))
    return rows


def suite_facet_count(bound: int) -> list[Check]:
    rows = []
    for label, G in family_graphs(bound):
        kg = len(enumerate_tubes(G))
        cg = len(enumerate_design_tubes(G))
        oracle = brute_force_tube_count(G)
        ok = cg == kg + 1 + G.node_count and kg == oracle
        rows.append(Check(f"{label} |CG| = |KG| + 1 + n", ok, f"|CG|={cg} |KG|={kg} brute={oracle}"))
    return rows


def suite_facet_decomp(bound: int, iso_bound: int = 4) -> list[Check]:
    rows = []
    for n in range(2, bound + 1):
        census = facet_census(n)
        want = {"cyclohedron": 1, "associahedron": n, "product": n * n - n}
        facets = tubing_poset(cycle_graph(n), CG).f_vector()[n - 1]
        ok = census == want and facets == n * n + 1
        rows.append(Check(f"Y_{n} facet census", ok, f"{census}, {facets} facets"))
        if n <= iso_bound:
            G = cycle_graph(n)
            bad = [d for d in enumerate_design_tubes(G) if not facet_interval_matches(G, d)]
            rows.append(Check(f"Y_{n} facets match their types", not bad, f"mismatched: {bad}" if bad else ""))
    return rows


def suite_path_bijection(bound: int) -> list[Check]:
    rows = []
    for n in range(1, bound + 1):
        source = tubing_poset(path_graph(n), CG)
        target = tubing_poset(path_graph(n + 1), KG)
        mapping = {U: frozenset(design_tube_to_path_tube(n, d) for d in U) for U in source.elements}
        failure = check_map(source, target, mapping)
        rows.append(Check(f"CG(path({n})) = K_{n + 2}", failure is None, failure or f"{len(source)} faces"))
    return rows


def suite_realization(bound: int, cube_bound: int | None = None) -> list[Check]:
    cube_bound = bound - 1 if cube_bound is None else cube_bound
    rows = []
    for n in range(2, bound + 1):
        graphs = connected_graphs(n)
        bad = []
        for G in graphs:
            report = certify_realization(G, KG)
            if not (report.isomorphic and report.simple):
                bad.append((sorted(G.edges), report.mismatch))
        rows.append(Check(f"KG realized, all {len(graphs)} connected graphs on {n} nodes", not bad, str(bad[:1]) if bad else ""))
    for n in range(1, cube_bound + 1):
        for name in ("path", "cycle", "star"):
            if name == "cycle" and n < 2:
                continue
            G = FAMILIES[name](n)
            report = certify_realization(G, CG)
            ok = report.isomorphic and report.simple
            rows.append(Check(f"CG({name}({n})) realized", ok, report.mismatch or f"f={report.f_vector}"))
    return rows


def suite_polygon_iso(bound: int) -> list[Check]:
    rows = []
    cases = [("A", n) for n in range(4, bound + 4)]
    cases += [("B", n) for n in range(2, bound + 1)]
    cases += [("C", n) for n in range(1, bound + 1)]
    for family, n in cases:
        report = polygon_tubing_iso(family, n)
        rows.append(Check(f"{family}({n}) matches its tubing poset", report.ok, report.failure or ""))
    return rows


def suite_classifier(bound: int) -> list[Check]:
    rows = []
    sigs = signatures_up_to_dimension(bound)
    wrong = []
    for s in sigs:
        r = classify_polytopality(s)
        polytope = r.verdict is Verdict.POLYTOPE
        # independent oracle: polytopal exactly when no weight-two curve exists
        if polytope == admits_two_loop(s):
            wrong.append(str(s))
        if polytope:
            if strata_poset(s).ambient_dim != dimension(s):
                wrong.append(f"{s} rank")
        elif r.reason is None:
            wrong.append(f"{s} has no reason")
    rows.append(Check(f"{len(sigs)} stable signatures with dim <= {bound}", not wrong, ", ".join(wrong[:5])))
    return rows


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "catalan": suite_catalan,
    "facet-count": suite_facet_count,
    "facet-decomp": suite_facet_decomp,
    "path-bijection": suite_path_bijection,
    "realization": suite_realization,
    "polygon-iso": suite_polygon_iso,
    "classifier": suite_classifier,
}
