import pytest
from hypothesis import given
from hypothesis import strategies as st

from infgon.arcs import (
    GENERIC,
    NEG_INF,
    POS_INF,
    Adic,
    Arc,
    Generic,
    Peripheral,
    Prufer,
    SurfaceKind,
    adic,
    arc_kind,
    crosses,
    format_arc,
    make_arc,
    parse_arc,
    phi_label,
    prufer,
)
from infgon.errors import DegenerateArc, EdgeNotArc, InfiniteEndpointOnInftyGon
from infgon.intervals import IntervalSet

INFTY, COMPLETED = SurfaceKind.INFTY, SurfaceKind.COMPLETED


def test_make_arc_normalizes_order():
    assert make_arc(5, -3, INFTY) == Arc(-3, 5)


def test_make_arc_rejects_edges_and_degenerate_pairs():
    with pytest.raises(EdgeNotArc):
        make_arc(0, 1, INFTY)
    with pytest.raises(DegenerateArc):
        make_arc(2, 2, INFTY)


def test_make_arc_limits_only_on_completed_surface():
    a = make_arc(NEG_INF, 7, COMPLETED)
    assert a == adic(7)
    assert arc_kind(a) == Adic(7)
    with pytest.raises(InfiniteEndpointOnInftyGon):
        make_arc(NEG_INF, 7, INFTY)


def test_make_arc_rejects_non_vertices():
    with pytest.raises(TypeError):
        make_arc(0.5, 3)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (Arc(0, 3), Arc(1, 4), True),
        (Arc(0, 3), Arc(3, 5), False),
        (GENERIC, prufer(5), False),
        (prufer(0), adic(1), True),
        (prufer(1), adic(0), False),
        (Arc(0, 5), Arc(1, 3), False),
        (prufer(2), Arc(0, 4), True),
        (adic(2), Arc(0, 4), True),
        (prufer(0), prufer(3), False),
    ],
)
def test_crossing_examples(a, b, expected):
    assert crosses(a, b) is expected
    assert crosses(b, a) is expected


def test_arc_kinds():
    assert arc_kind(Arc(2, 9)) == Peripheral()
    assert arc_kind(GENERIC) == Generic()
    assert arc_kind(Arc(4, POS_INF)) == Prufer(4)
    assert Arc(2, 9).finite and prufer(4).asymptotic and not GENERIC.asymptotic


def test_phi_labels():
    assert phi_label(Arc(1, 4)) == "M_{1,4}"
    assert phi_label(prufer(3)) == "Pi_3"
    assert phi_label(adic(-2)) == "A_-2"
    assert phi_label(GENERIC) == "G"


def test_other_endpoint():
    assert Arc(1, 4).other(1) == 4
    with pytest.raises(ValueError):
        Arc(1, 4).other(2)


def test_parse_arc_forms():
    assert parse_arc("(3, -2)") == Arc(-2, 3)
    assert parse_arc("a(-4)") == adic(-4)
    assert parse_arc("p(7)") == prufer(7)
    assert parse_arc("z") == GENERIC
    assert parse_arc("(-inf, 2)") == adic(2)
    with pytest.raises(ValueError):
        parse_arc("q(1)")


vertices = st.one_of(st.integers(-20, 20), st.sampled_from([NEG_INF, POS_INF]))


@st.composite
def arcs(draw):
    u, v = draw(vertices), draw(vertices)
    try:
        return make_arc(u, v, COMPLETED)
    except (EdgeNotArc, DegenerateArc):
        return make_arc(0, 2, COMPLETED)


@given(arcs())
def test_format_parse_round_trip(a):
    assert parse_arc(format_arc(a)) == a


@given(arcs(), arcs())
def test_crossing_is_symmetric_and_irreflexive(a, b):
    assert crosses(a, b) == crosses(b, a)
    assert not crosses(a, a)


@given(arcs(), arcs())
def test_crossing_means_strictly_interleaved_endpoints(a, b):
    ends = {a.lo, a.hi} & {b.lo, b.hi}
    if ends:
        assert not crosses(a, b)


@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(0, 10))), st.integers(-40, 40))
def test_interval_set_membership_matches_python_sets(parts, k):
    pieces = [(lo, lo + w) for lo, w in parts]
    s = IntervalSet.of(pieces)
    naive = {x for lo, hi in pieces for x in range(lo, hi + 1)}
    assert (k in s) == (k in naive)
    assert (k in s.complement()) == (k not in naive)
