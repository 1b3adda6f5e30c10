import pytest

from halohedra.graph import cycle_graph, path_graph
from halohedra.poset import FacePoset, PosetError, check_map, find_isomorphism, product_poset
from halohedra.tubings import PolytopeKind, tubing_poset

KG = PolytopeKind.ASSOCIAHEDRON
CG = PolytopeKind.CUBEAHEDRON


def interval():
    return FacePoset.from_complexes([frozenset(), frozenset("a"), frozenset("b")], 1)


def test_from_complexes_requires_downward_closure():
    with pytest.raises(PosetError):
        FacePoset.from_complexes([frozenset(), frozenset("ab")], 2)


def test_interval_basics():
    p = interval()
    assert p.f_vector() == (2,)
    assert p.is_graded() and p.satisfies_euler()


def test_product_of_intervals_is_square():
    sq = product_poset(interval(), interval())
    assert sq.f_vector() == (4, 4)
    assert sq.is_graded() and sq.satisfies_euler()


def test_square_and_pentagon_differ():
    square = product_poset(interval(), interval())
    pentagon = tubing_poset(path_graph(3), KG)
    assert find_isomorphism(square, pentagon) is None


def test_check_map_reports_counterexample():
    p = tubing_poset(path_graph(3), KG)
    identity = {e: e for e in p.elements}
    assert check_map(p, p, identity) is None
    a, b = p.elements_of_rank(0)[:2]
    swapped = dict(identity)
    swapped[a], swapped[b] = b, a
    failure = check_map(p, p, swapped)
    assert failure is not None and "cover" in failure


def test_found_isomorphism_is_verified():
    y2 = tubing_poset(cycle_graph(2), CG)
    k4 = tubing_poset(path_graph(3), KG)
    mapping = find_isomorphism(y2, k4)
    assert mapping is not None
    assert check_map(y2, k4, mapping) is None


def test_subface_poset_of_vertex_is_point():
    p = tubing_poset(path_graph(3), KG)
    vertex = p.elements_of_rank(0)[0]
    sub = p.subface_poset(vertex)
    assert len(sub) == 1 and sub.ambient_dim == 0 and sub.f_vector() == ()


def test_ungraded_detected():
    # top covers a vertex directly in a 2-dimensional poset
    bad = FacePoset((frozenset(), frozenset("a")), (2, 0), 2, frozenset({(1, 0)}))
    assert not bad.is_graded()
