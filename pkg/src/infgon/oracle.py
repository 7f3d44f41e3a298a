"""Brute-force engine for triangulations of a convex polygon.

Vertices are ``0 .. n-1``; chords are pairs ``(i, j)`` with ``i < j``.  This
module is deliberately independent of the infinite machinery so it can serve
as ground truth for anything that happens inside a finite window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Sequence

import networkx as nx

from .errors import NotMember, NotSubpolygon, TooLarge

if TYPE_CHECKING:
    from .triangulation import Triangulation

MAX_N = 12

Chord = tuple[int, int]


def _is_side(n: int, i: int, j: int) -> bool:
    return j - i == 1 or (i == 0 and j == n - 1)


def _cross(a: Chord, b: Chord) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


@dataclass(frozen=True)
class PolyTriangulation:
    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("a polygon needs at least three vertices")
        arcs = frozenset((min(i, j), max(i, j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for i, j in arcs:
            if not (0 <= i < j < self.n) or _is_side(self.n, i, j):
                raise ValueError(f"({i},{j}) is not a chord of the {self.n}-gon")
        if len(arcs) != self.n - 3:
            raise ValueError(f"expected {self.n - 3} chords, got {len(arcs)}")
        ordered = sorted(arcs)
        for x in range(len(ordered)):
            for y in range(x + 1, len(ordered)):
                if _cross(ordered[x], ordered[y]):
                    raise ValueError(f"chords {ordered[x]} and {ordered[y]} cross")

    def has(self, i: int, j: int) -> bool:
        i, j = min(i, j), max(i, j)
        return _is_side(self.n, i, j) or (i, j) in self.arcs


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError("n must be at least 3")
    if n > MAX_N:
        raise TooLarge(f"n={n} exceeds the enumeration bound {MAX_N}")


@lru_cache(maxsize=None)
def _tri(i: int, j: int) -> tuple[frozenset, ...]:
    if j - i < 2:
        return (frozenset(),)
    out = []
    for k in range(i + 1, j):
        own = set()
        if k - i >= 2:
            own.add((i, k))
        if j - k >= 2:
            own.add((k, j))
        for left in _tri(i, k):
            for right in _tri(k, j):
                out.append(frozenset(own) | left | right)
    return tuple(out)


@lru_cache(maxsize=None)
def enum_triangulations(n: int) -> frozenset:
    _check_n(n)
    return frozenset(PolyTriangulation(n, arcs) for arcs in _tri(0, n - 1))


def _apexes(n: int, present: set, i: int, j: int) -> tuple[int | None, int | None]:
    def has(a: int, b: int) -> bool:
        a, b = min(a, b), max(a, b)
        return _is_side(n, a, b) or (a, b) in present

    inner = [k for k in range(i + 1, j) if has(i, k) and has(k, j)]
    outer = [k for k in range(n) if (k < i or k > j) and has(i, k) and has(k, j)]
    return (inner[0] if len(inner) == 1 else None, outer[0] if len(outer) == 1 else None)


def oracle_flip(t: PolyTriangulation, chord: Iterable[int]) -> PolyTriangulation:
    i, j = sorted(chord)
    if (i, j) not in t.arcs:
        raise NotMember(f"({i},{j}) is not a chord of this triangulation")
    w_in, w_out = _apexes(t.n, set(t.arcs), i, j)
    assert w_in is not None and w_out is not None
    new = (min(w_in, w_out), max(w_in, w_out))
    return PolyTriangulation(t.n, (t.arcs - {(i, j)}) | {new})


@lru_cache(maxsize=None)
def flip_graph(n: int) -> nx.Graph:
    g = nx.Graph()
    for t in enum_triangulations(n):
        g.add_node(t)
        for c in t.arcs:
            g.add_edge(t, oracle_flip(t, c))
    return g


def flip_distance(t1: PolyTriangulation, t2: PolyTriangulation) -> int:
    if t1.n != t2.n:
        raise ValueError("triangulations of different polygons")
    if t1 == t2:
        return 0
    return nx.shortest_path_length(flip_graph(t1.n), t1, t2)


def _to_fan(n: int, arcs: set) -> list[tuple[Chord, Chord]]:
    """Flips (old, new) turning ``arcs`` into the fan at vertex 0."""
    arcs = set(arcs)
    steps = []
    while True:
        for c in sorted(arcs):
            if c[0] == 0:
                continue
            w_in, w_out = _apexes(n, arcs, *c)
            if 0 in (w_in, w_out):
                other = w_in if w_out == 0 else w_out
                new = (0, other)
                arcs.discard(c)
                arcs.add(new)
                steps.append((c, new))
                break
        else:
            return steps


def flip_path(n: int, source: Iterable[Chord], target: Iterable[Chord]) -> list[Chord]:
    """Chords to flip, in order, to move ``source`` to ``target`` (via the fan at 0)."""
    down = _to_fan(n, set(source))
    up = _to_fan(n, set(target))
    return [old for old, _ in down] + [new for _, new in reversed(up)]


@dataclass(frozen=True)
class CrossValidation:
    vertices: tuple
    poly: PolyTriangulation
    flips_checked: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_validate(T: "Triangulation", window: Sequence) -> CrossValidation:
    """Check ``T`` restricted to a subpolygon against the brute-force engine."""
    from .arcs import Arc, is_edge
    from .mutation import flip
    from .triangulation import restrict

    verts = tuple(sorted(set(window)))
    k = len(verts)
    if k < 3:
        raise NotSubpolygon("a subpolygon needs at least three vertices")
    arcs = T.arcset
    for a, b in list(zip(verts, verts[1:])) + [(verts[0], verts[-1])]:
        if not (is_edge(a, b) or arcs.contains(Arc(a, b))):
            raise NotSubpolygon(f"boundary side ({a},{b}) is neither an edge nor a member")
    index = {v: i for i, v in enumerate(verts)}

    def chords(tri) -> set:
        pairs = ((index[a.lo], index[a.hi]) for a in restrict(tri, verts))
        return {p for p in pairs if not _is_side(k, *p)}

    try:
        poly = PolyTriangulation(k, chords(T))
    except ValueError as exc:
        raise NotSubpolygon(str(exc)) from exc
    vertex_at = dict(enumerate(verts))
    mismatches = []
    for i, j in sorted(poly.arcs):
        a = Arc(vertex_at[i], vertex_at[j])
        expect = oracle_flip(poly, (i, j))
        if chords(flip(T, a)) != set(expect.arcs):
            mismatches.append(a)
    return CrossValidation(verts, poly, len(poly.arcs), tuple(mismatches))
