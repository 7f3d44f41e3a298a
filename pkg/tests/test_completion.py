import pytest

from infgon.arcs import GENERIC, Arc, adic, prufer
from infgon.arcsets import ArcSet
from infgon.completion import (
    CompletionFlavor,
    complete,
    completed_mutation,
    completed_mutation_report,
    completion_sets,
    parse_flavor,
)
from infgon.equivalence import classify, fountain
from infgon.errors import NotFinitelyPresented
from infgon.intervals import IntervalSet
from infgon.mutation import FanCollapse, FiniteList, FountainShift, PreArcSet, evaluate, flip
from infgon.triangulation import (
    COMPLETED,
    INFTY,
    AllAdic,
    AllPrufer,
    CompletedFountain,
    DoubleInf,
    LeftInfRight,
    ZigzagLF,
    instantiate,
    window_probe,
)

P, A = CompletionFlavor.PRUFER, CompletionFlavor.ADIC
CF00 = instantiate(CompletedFountain(0, 0))
EXAMPLE = evaluate(CF00, FanCollapse(0, 2, "+"), 50)
ONLY_Z = ArcSet(COMPLETED)


def test_sets_of_the_generic_arc_alone():
    s = completion_sets(ONLY_Z)
    assert s.prufer == IntervalSet.everything() and s.adic == IntervalSet.everything()
    assert not s.prufer_tilde and not s.adic_tilde


def test_sets_of_the_fan_collapse_limit():
    s = completion_sets(EXAMPLE)
    assert s.prufer == IntervalSet.points([0, 1])
    assert s.adic_tilde == IntervalSet.points([0])
    assert s.missing_prufer() == prufer(1)
    assert s.missing_adic() is None


@pytest.mark.parametrize("spec", [CompletedFountain(-1, 2), LeftInfRight(1), DoubleInf(0), AllPrufer(), AllAdic()])
def test_sets_of_a_triangulation_hold_members_only(spec):
    T = instantiate(spec)
    s = completion_sets(T)
    for k in range(-10, 11):
        assert (k in s.prufer) == (prufer(k) in T)
        if k in s.adic_tilde:
            assert adic(k) in T


def test_completion_adds_exactly_the_missing_curve():
    T = complete(EXAMPLE, P)
    before = EXAMPLE.window(-40, 40)
    assert T.window(-40, 40) - before == {prufer(1)}
    assert before <= T.window(-40, 40)


@pytest.mark.parametrize("flavor", [P, A])
def test_maximal_sets_complete_to_themselves(flavor):
    T = flip(instantiate(CompletedFountain(-1, 2)), prufer(0))
    assert complete(T, flavor).window(-30, 30) == T.window(-30, 30)


def test_flavors_differ_on_the_generic_arc_alone():
    assert complete(ONLY_Z, P).window(-20, 20) == instantiate(AllPrufer()).window(-20, 20)
    assert complete(ONLY_Z, A).window(-20, 20) == instantiate(AllAdic()).window(-20, 20)


def test_empirical_snapshots_cannot_be_completed():
    N = PreArcSet(COMPLETED, None, EXAMPLE.certificate, EXAMPLE.maximal, frozenset({GENERIC}))
    with pytest.raises(NotFinitelyPresented):
        complete(N)


def test_infinity_gon_sets_are_repackaged():
    T = instantiate(ZigzagLF(0, "left"), INFTY)
    assert complete(T.arcset) == T


@pytest.mark.parametrize("a, b", [(0, 0), (-1, 2), (2, 3)])
def test_left_shift_moves_the_left_fountain(a, b):
    T = completed_mutation(instantiate(CompletedFountain(a, b)), FountainShift("left", a), P)
    assert classify(T) == fountain(a - 1, b)


@pytest.mark.parametrize("a, b", [(0, 0), (-1, 2)])
def test_right_shift_moves_the_right_fountain(a, b):
    T = completed_mutation(instantiate(CompletedFountain(a, b)), FountainShift("right", b), A)
    assert classify(T) == fountain(a, b + 1)


def test_completed_fan_collapse_holds_the_expected_curves():
    rep = completed_mutation_report(CF00, FanCollapse(0, 2, "+"), P)
    assert rep.certified
    T = rep.result
    assert {prufer(0), prufer(1), adic(0)} <= T.window(-5, 5)
    assert window_probe(T, -30, 30).ok


@pytest.mark.parametrize("flavor", [P, A])
def test_finite_mutation_needs_no_completion(flavor):
    g = Arc(0, 2)
    assert completed_mutation(CF00, FiniteList((g,)), flavor) == flip(CF00, g)


def test_parse_flavor():
    assert parse_flavor("Prüfer") is P
    assert parse_flavor("adic") is A
    with pytest.raises(ValueError):
        parse_flavor("both")
