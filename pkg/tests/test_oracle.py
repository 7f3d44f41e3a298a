import itertools

import networkx as nx
import pytest

from infgon.errors import NotMember, NotSubpolygon, TooLarge
from infgon.oracle import (
    PolyTriangulation,
    cross_validate,
    enum_triangulations,
    flip_distance,
    flip_graph,
    flip_path,
    oracle_flip,
)
from infgon.triangulation import INFTY, CompletedFountain, ZigzagLF, instantiate


def test_small_counts():
    assert len(enum_triangulations(4)) == 2
    assert len(enum_triangulations(6)) == 14


def test_triangle_has_one_empty_triangulation():
    assert enum_triangulations(3) == {PolyTriangulation(3)}


def test_size_bound():
    with pytest.raises(TooLarge):
        enum_triangulations(40)


def test_square_flip():
    t = PolyTriangulation(4, {(0, 2)})
    assert oracle_flip(t, (0, 2)).arcs == {(1, 3)}
    assert oracle_flip(oracle_flip(t, (0, 2)), (1, 3)) == t


def test_pentagon_flip():
    t = PolyTriangulation(5, {(0, 2), (0, 3)})
    assert oracle_flip(t, (0, 2)).arcs == {(1, 3), (0, 3)}


def test_flip_of_non_member():
    with pytest.raises(NotMember):
        oracle_flip(PolyTriangulation(4, {(0, 2)}), (1, 3))


def test_invalid_polygon_triangulations():
    with pytest.raises(ValueError):
        PolyTriangulation(5, {(0, 2), (1, 3)})
    with pytest.raises(ValueError):
        PolyTriangulation(5, {(0, 2)})
    with pytest.raises(ValueError):
        PolyTriangulation(5, {(0, 1), (0, 2)})


def test_pentagon_graph_is_a_five_cycle():
    g = flip_graph(5)
    assert nx.is_isomorphic(g, nx.cycle_graph(5))
    assert nx.diameter(g) == 2


def test_hexagon_graph():
    g = flip_graph(6)
    assert g.number_of_nodes() == 14
    assert all(d == 3 for _, d in g.degree())


def test_distance_examples():
    ts = sorted(enum_triangulations(5), key=lambda t: sorted(t.arcs))
    assert flip_distance(ts[0], ts[0]) == 0
    assert max(flip_distance(ts[0], t) for t in ts) == 2


def _brute_count(n):
    """Count triangulations by picking non-crossing chord sets of size n - 3."""
    chords = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    count = 0
    for combo in itertools.combinations(chords, n - 3):
        if all(not (a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]) for a, b in itertools.combinations(combo, 2)):
            count += 1
    return count


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_enumeration_matches_brute_force(n):
    assert len(enum_triangulations(n)) == _brute_count(n)


def test_flip_path_connects_all_heptagon_pairs():
    ts = sorted(enum_triangulations(7), key=lambda t: sorted(t.arcs))
    for s in ts[:6]:
        for t in ts:
            cur = s
            for c in flip_path(7, s.arcs, t.arcs):
                cur = oracle_flip(cur, c)
            assert cur == t


def test_cross_validate_fan():
    rep = cross_validate(instantiate(CompletedFountain(0, 0)), range(0, 6))
    assert rep.ok and rep.flips_checked == 3


def test_cross_validate_zigzag():
    rep = cross_validate(instantiate(ZigzagLF(0, "right"), INFTY), [-2, -1, 1, 2])
    assert rep.ok and rep.poly.arcs == {(1, 3)}


def test_cross_validate_rejects_non_subpolygon():
    with pytest.raises(NotSubpolygon):
        cross_validate(instantiate(CompletedFountain(0, 0)), [1, 2, 4])
