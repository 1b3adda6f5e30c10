import pytest
from hypothesis import given, strategies as st

from halohedra.moduli import (
    CurveKind,
    Family,
    Reason,
    SignatureError,
    SurfaceSignature as S,
    Verdict,
    admits_two_loop,
    classify_polytopality,
    curve_weight,
    dimension,
    is_stable,
    signatures_up_to_dimension,
    strata_poset,
)
from halohedra.poset import are_isomorphic


@pytest.mark.parametrize(
    "sig,dim",
    [(S(0, 3, 0, (0, 0, 0)), 3), (S(0, 1, 2, (0,)), 1), (S(0, 0, 3), 0), (S(0, 2, 0, (3, 0)), 3)],
)
def test_dimension(sig, dim):
    assert dimension(sig) == dim


def test_stability():
    assert not is_stable(S(1, 0, 0))
    assert is_stable(S(0, 1, 1, (1,)))
    assert not is_stable(S(0, 2, 0, (0, 0)))
    assert not is_stable(S(0, 1, 0, (2,)))
    with pytest.raises(SignatureError):
        dimension(S(1, 0, 0))


def test_signature_validation():
    with pytest.raises(SignatureError):
        S(0, 2, 0, (1,))
    with pytest.raises(SignatureError):
        S(-1, 0, 3)
    assert str(S(0, 2, 0, (3, 0))) == "(0,2)(0,<3,0>)"


def test_curve_weights():
    assert curve_weight(CurveKind.ARC) == 1
    assert curve_weight(CurveKind.ONE_LOOP) == 1
    assert curve_weight(CurveKind.TWO_LOOP) == 2


@pytest.mark.parametrize(
    "sig,family",
    [
        (S(0, 0, 3), Family("K", 2)),
        (S(0, 1, 2, (0,)), Family("K", 3)),
        (S(0, 2, 1, (0, 0)), Family("K", 4)),
        (S(0, 3, 0, (0, 0, 0)), Family("K", 5)),
        (S(0, 1, 0, (5,)), Family("K", 4)),
        (S(0, 1, 1, (2,)), Family("W", 2)),
        (S(0, 2, 0, (3, 0)), Family("Y", 3)),
        (S(0, 2, 0, (0, 3)), Family("Y", 3)),
    ],
)
def test_polytopal_families(sig, family):
    r = classify_polytopality(sig)
    assert r.verdict is Verdict.POLYTOPE and r.family == family
    assert family.dimension == dimension(sig)


@pytest.mark.parametrize(
    "sig,reason",
    [
        (S(2, 3, 1, (0, 0, 0)), Reason.POSITIVE_GENUS),
        (S(1, 0, 1), Reason.POSITIVE_GENUS),
        (S(0, 0, 4), Reason.H_PLUS_N_GREATER_THAN_3),
        (S(0, 1, 2, (1,)), Reason.H_PLUS_N_3_WITH_BOUNDARY_MARKS),
        (S(0, 2, 0, (1, 1)), Reason.TWO_MARKED_BOUNDARIES),
    ],
)
def test_obstructions(sig, reason):
    r = classify_polytopality(sig)
    assert r.verdict is Verdict.NOT_POLYTOPE and r.reason is reason


def test_unstable_json():
    data = classify_polytopality(S(1, 0, 0)).to_json()
    assert data["verdict"] == "unstable" and data["dimension"] is None and not data["stable"]


def test_strata_posets():
    k4 = strata_poset(S(0, 1, 0, (5,)))
    y2 = strata_poset(S(0, 2, 0, (2, 0)))
    assert k4.f_vector() == y2.f_vector() == (5, 5)
    assert are_isomorphic(k4, y2)
    w3 = strata_poset(S(0, 1, 1, (3,)))
    assert w3.ambient_dim == 2 and w3.f_vector() == (6, 6)
    with pytest.raises(SignatureError):
        strata_poset(S(0, 0, 4))


def test_scan_size():
    sigs = signatures_up_to_dimension(4)
    assert len(sigs) == len(set(sigs))
    assert all(dimension(s) <= 4 for s in sigs)


def test_scan_agrees_with_two_loop_oracle():
    for s in signatures_up_to_dimension(4):
        r = classify_polytopality(s)
        assert (r.verdict is Verdict.POLYTOPE) != admits_two_loop(s), s


sigs = st.integers(0, 2).flatmap(
    lambda h: st.builds(S, st.integers(0, 2), st.just(h), st.integers(0, 4), st.tuples(*[st.integers(0, 4)] * h))
)


@given(sigs)
def test_every_stable_signature_gets_family_or_reason(s):
    r = classify_polytopality(s)
    if not is_stable(s):
        assert r.verdict is Verdict.UNSTABLE
    elif r.verdict is Verdict.POLYTOPE:
        assert r.family.dimension == dimension(s) and not admits_two_loop(s)
    else:
        assert r.reason is not None and admits_two_loop(s)
