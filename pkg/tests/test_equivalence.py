import itertools

import pytest

from infgon.arcs import NEG_INF, POS_INF, Arc, crosses
from infgon.equivalence import (
    ALL_ADIC,
    ALL_PRUFER,
    DOUBLE,
    LF,
    UNKNOWN,
    ArrowKind,
    ClassLabel,
    ShiftGroup,
    Stage,
    TransfiniteWitness,
    class_graph,
    classify,
    find_obstruction,
    fountain,
    leq_s,
    parse_label,
    parse_witness,
    representative,
    route,
    solid_reachable,
    strongly_equivalent,
    verify_witness,
    witness_shape_ok,
)
from infgon.errors import SurfaceMismatch
from infgon.mutation import AlternatingSweep, AsymptoticSweep, FiniteList, ZigzagToFountain, flip
from infgon.triangulation import (
    COMPLETED,
    INFTY,
    AllAdic,
    AllPrufer,
    CompletedFountain,
    DoubleInf,
    LeftInfRight,
    RightInfRight,
    SplitFountain,
    ZigzagLF,
    instantiate,
)


def labels(values=range(-2, 3)):
    out = [LF, DOUBLE, ALL_PRUFER, ALL_ADIC]
    for x in values:
        out += [fountain(NEG_INF, x), fountain(POS_INF, x), fountain(x, POS_INF), fountain(x, NEG_INF)]
        out += [fountain(x, y) for y in values if x <= y]
    return out


def test_classify_examples():
    assert str(classify(instantiate(LeftInfRight(3)))) == "T(-inf, 3)"
    patched = flip(instantiate(ZigzagLF(0, "left")), Arc(-1, 1))
    assert classify(patched) == LF
    assert classify(instantiate(AllAdic())) == fountain(NEG_INF, NEG_INF)
    assert classify(instantiate(SplitFountain(-2, 1), INFTY)) == fountain(-2, 1)


def test_label_text_round_trip():
    for c in labels():
        assert parse_label(str(c)) == c
    with pytest.raises(ValueError):
        parse_label("T(3)")


def test_impossible_labels_are_rejected():
    with pytest.raises(ValueError):
        ClassLabel(3, 1)
    with pytest.raises(ValueError):
        ClassLabel(None, 2)


def test_strong_equivalence_examples():
    lf1 = instantiate(ZigzagLF(0, "left"))
    lf2 = instantiate(ZigzagLF(3, "right"))
    assert strongly_equivalent(lf1, lf2)
    assert not strongly_equivalent(instantiate(RightInfRight(3)), instantiate(RightInfRight(5)))
    T = instantiate(CompletedFountain(0, 2))
    assert strongly_equivalent(T, flip(T, Arc(2, 4)))


def test_strong_equivalence_needs_one_surface():
    with pytest.raises(SurfaceMismatch):
        strongly_equivalent(instantiate(ZigzagLF(0, "left")), instantiate(ZigzagLF(0, "left"), INFTY))


def test_leq_examples():
    assert leq_s(DOUBLE, fountain(-1, 2)) is True
    assert leq_s(fountain(-1, 2), DOUBLE, obstruction=True) is False
    assert leq_s(LF, fountain(POS_INF, 1)) is UNKNOWN
    assert leq_s(fountain(-1, 2), DOUBLE) is UNKNOWN


def test_unknown_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(UNKNOWN)


def test_obstruction_arc_crosses_infinitely_many():
    ob = find_obstruction(fountain(0, 2), DOUBLE)
    assert ob is not None
    left_fountain = [Arc(k, 0) for k in range(-60, -1)]
    assert sum(crosses(ob.arc, b) for b in left_fountain) >= 50


def test_leq_on_the_infinity_gon_is_equality():
    assert leq_s(fountain(0, 1), fountain(0, 1), surface=INFTY) is True
    assert leq_s(fountain(0, 1), fountain(0, 2), surface=INFTY) is False


def test_solid_reachability_never_meets_an_obstruction():
    for c1, c2 in itertools.product(labels(range(-1, 2)), repeat=2):
        if solid_reachable(c1, c2):
            assert find_obstruction(c1, c2) is None, (c1, c2)
            if c1 != c2:
                assert not solid_reachable(c2, c1)


def test_class_graph_examples():
    g = class_graph(range(-1, 2))
    edges = {(u, v, d["name"], d["kind"]) for u, v, d in g.edges(data=True)}
    assert (ALL_PRUFER, LF, "theta5", ArrowKind.SOLID) in edges
    assert (LF, fountain(0, 1), "theta3-bar", ArrowKind.DASHED) in edges
    assert (fountain(-1, 1), DOUBLE, "theta4-bar", ArrowKind.DOTTED) in edges
    for name in ("theta1", "theta2", "theta3", "theta4", "theta5", "theta6", "theta7", "theta8"):
        assert any(d["name"] == name for _, _, d in g.edges(data=True))
    _, stages = next(d["witness"]() for u, v, d in g.edges(data=True) if d["name"] == "theta5")
    assert stages[0].schedule == AlternatingSweep("prufer", 0)


def test_route_to_itself_is_empty():
    T = instantiate(CompletedFountain(0, 1))
    assert route(T, T).stages == ()


def test_route_from_locally_finite_to_double():
    T, G = instantiate(ZigzagLF(0, "left")), instantiate(DoubleInf(0))
    W = route(T, G)
    kinds = [s.arrow for s in W.stages]
    assert kinds[0] is ArrowKind.DASHED and isinstance(W.stages[0].schedule, ZigzagToFountain)
    assert ArrowKind.DOTTED in kinds and W.shape_ok()
    assert verify_witness(T, W, 60).ok


def test_route_from_all_prufer_to_a_fountain_pair():
    T, G = instantiate(AllPrufer()), instantiate(CompletedFountain(0, 0))
    W = route(T, G)
    assert [s.arrow for s in W.stages] == [ArrowKind.DASHED, ArrowKind.SOLID]
    assert W.stages[0].expected == fountain(0, POS_INF)
    assert W.stages[1].expected == fountain(0, 0)
    rep = verify_witness(T, W, 60)
    assert rep.ok and rep.class_match and rep.final_match


def test_route_with_finite_difference_is_one_finite_stage():
    T = instantiate(CompletedFountain(0, 2))
    G = flip(flip(T, Arc(2, 4)), Arc(2, 5))
    W = route(T, G)
    assert len(W.stages) == 1 and isinstance(W.stages[0].schedule, FiniteList)
    assert verify_witness(T, W, 20).ok


def test_route_undoes_patches_first():
    T = flip(instantiate(AllPrufer()), Arc(0, POS_INF))
    G = flip(instantiate(DoubleInf(1)), Arc(NEG_INF, 0))
    W = route(T, G)
    assert W.shape_ok()
    assert verify_witness(T, W, 60).ok


def test_corrupted_stage_fails():
    T, G = instantiate(AllPrufer()), instantiate(CompletedFountain(0, 0))
    W = route(T, G)
    bad = Stage(ArrowKind.SOLID, AsymptoticSweep("adic", 3, "-"), W.stages[1].expected)
    rep = verify_witness(T, TransfiniteWitness((W.stages[0], bad), G), 60)
    assert not rep.ok
    assert rep.stages[-1].verdict.startswith("Fails")


def test_wrong_expected_class_fails():
    T, G = instantiate(AllPrufer()), instantiate(CompletedFountain(0, 0))
    W = route(T, G)
    bad = Stage(W.stages[1].arrow, W.stages[1].schedule, fountain(1, 1))
    rep = verify_witness(T, TransfiniteWitness((W.stages[0], bad), G), 60)
    assert rep.verdict == "Fail"


def test_tiny_horizon_is_inconclusive():
    T, G = instantiate(ZigzagLF(0, "left")), instantiate(DoubleInf(0))
    rep = verify_witness(T, route(T, G), 1)
    assert rep.verdict == "Inconclusive"


def test_witness_text_round_trip():
    T, G = instantiate(ZigzagLF(1, "right")), instantiate(CompletedFountain(-1, 0))
    W = route(T, G)
    back = parse_witness(W.text())
    assert [s.describe() for s in back.stages] == [s.describe() for s in W.stages]
    assert verify_witness(T, back, 60, target=G).ok


def test_witness_shape_rules():
    s, d, t = (Stage(k, ShiftGroup(0, 0), DOUBLE) for k in ArrowKind)
    assert witness_shape_ok([d, s, t, s, s])
    assert not witness_shape_ok([t, d])
    assert not witness_shape_ok([t, s, t])


def test_representatives_land_in_their_class():
    for c in labels():
        assert classify(representative(c)) == c
    assert classify(representative(fountain(0, 2), INFTY)) == fountain(0, 2)
    with pytest.raises(SurfaceMismatch):
        representative(DOUBLE, INFTY)
    assert representative(LF, COMPLETED).surface is COMPLETED


def test_route_between_different_zigzags_goes_round():
    T, G = instantiate(ZigzagLF(-1, "right")), instantiate(ZigzagLF(2, "left"))
    W = route(T, G)
    kinds = [s.arrow for s in W.stages]
    assert kinds.count(ArrowKind.DOTTED) == 1 and W.shape_ok()
    assert W.stages[-1].expected == LF
    assert verify_witness(T, W, 60).ok
