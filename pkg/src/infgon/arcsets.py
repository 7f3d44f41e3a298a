"""Finitely described, possibly infinite, sets of arcs.

An :class:`ArcSet` is a union of closed-form families (fans, runs of
asymptotic arcs, zigzags) plus finitely many extra arcs, minus finitely many
removed arcs.  Each family answers membership, neighbour and crossing queries
in closed form, so nothing here ever scans an unbounded range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Protocol

from .arcs import GENERIC, NEG_INF, POS_INF, Arc, SurfaceKind, Vertex, is_finite
from .intervals import IntervalSet


@dataclass(frozen=True)
class NeighborSet:
    """Vertices joined to a fixed vertex by a member arc or an edge."""

    ints: IntervalSet
    limits: frozenset = frozenset()

    def __contains__(self, v: Vertex) -> bool:
        if is_finite(v):
            return v in self.ints
        return v in self.limits

    def union(self, other: "NeighborSet") -> "NeighborSet":
        return NeighborSet(self.ints.union(other.ints), self.limits | other.limits)

    def intersect(self, other: "NeighborSet") -> "NeighborSet":
        return NeighborSet(self.ints.intersect(other.ints), self.limits & other.limits)

    def between(self, lo: Vertex, hi: Vertex) -> "NeighborSet":
        return NeighborSet(self.ints.clip(lo + 1, hi - 1), frozenset())

    def outside(self, lo: Vertex, hi: Vertex) -> "NeighborSet":
        ints = self.ints.clip(-math.inf, lo - 1).union(self.ints.clip(hi + 1, math.inf))
        limits = frozenset(x for x in self.limits if x < lo or x > hi)
        return NeighborSet(ints, limits)

    @property
    def bounded(self) -> bool:
        return self.ints.bounded

    def elements(self) -> list[Vertex]:
        out: list[Vertex] = sorted(self.ints)
        if NEG_INF in self.limits:
            out.insert(0, NEG_INF)
        if POS_INF in self.limits:
            out.append(POS_INF)
        return out

    @property
    def lowest(self) -> Vertex | None:
        if NEG_INF in self.limits:
            return NEG_INF
        if self.ints:
            return self.ints.low
        return POS_INF if POS_INF in self.limits else None

    @property
    def highest(self) -> Vertex | None:
        if POS_INF in self.limits:
            return POS_INF
        if self.ints:
            return self.ints.high
        return NEG_INF if NEG_INF in self.limits else None


EMPTY_NEIGHBORS = NeighborSet(IntervalSet())


def _ints(lo, hi) -> list[int]:
    return list(range(int(lo), int(hi) + 1)) if lo <= hi else []


class Family(Protocol):
    def contains(self, a: Arc) -> bool: ...

    def neighbors(self, v: Vertex) -> NeighborSet: ...

    def crossing(self, a: Arc) -> tuple[list[Arc], bool]: ...

    def window(self, lo: int, hi: int, limits: bool) -> Iterator[Arc]: ...

    def covered(self, removed: frozenset, finite_lo: bool) -> IntervalSet: ...

    @property
    def fountains(self) -> frozenset: ...

    @property
    def extent(self) -> tuple[int, int]: ...

    def describe(self) -> str: ...


@dataclass(frozen=True)
class Fan:
    """``(pivot, k)`` for ``k >= bound`` (right) or ``(k, pivot)`` for ``k <= bound`` (left)."""

    pivot: int
    side: str
    bound: int

    def __post_init__(self) -> None:
        if self.side == "right" and self.bound < self.pivot + 2:
            raise ValueError("right fan bound must be at least pivot + 2")
        if self.side == "left" and self.bound > self.pivot - 2:
            raise ValueError("left fan bound must be at most pivot - 2")

    def member(self, k: int) -> Arc:
        return Arc(self.pivot, k) if self.side == "right" else Arc(k, self.pivot)

    def contains(self, a: Arc) -> bool:
        if self.side == "right":
            return a.lo == self.pivot and is_finite(a.hi) and a.hi >= self.bound
        return a.hi == self.pivot and is_finite(a.lo) and a.lo <= self.bound

    def neighbors(self, v: Vertex) -> NeighborSet:
        if not is_finite(v):
            return EMPTY_NEIGHBORS
        if v == self.pivot:
            if self.side == "right":
                return NeighborSet(IntervalSet.range(self.bound, math.inf))
            return NeighborSet(IntervalSet.range(-math.inf, self.bound))
        if (self.side == "right" and v >= self.bound) or (self.side == "left" and v <= self.bound):
            return NeighborSet(IntervalSet.points([self.pivot]))
        return EMPTY_NEIGHBORS

    def crossing(self, a: Arc) -> tuple[list[Arc], bool]:
        u, v, p = a.lo, a.hi, self.pivot
        if self.side == "right":
            if u < p < v:
                return ([], is_finite(v))
            if p < u:
                lo = max(u + 1, self.bound)
                if v == POS_INF:
                    return ([], True)
                return ([self.member(k) for k in _ints(lo, v - 1)], False)
            return ([], False)
        if u < p < v:
            return ([], is_finite(u))
        if v < p:
            hi = min(v - 1, self.bound)
            if u == NEG_INF:
                return ([], True)
            return ([self.member(k) for k in _ints(u + 1, hi)], False)
        return ([], False)

    def window(self, lo: int, hi: int, limits: bool) -> Iterator[Arc]:
        if not lo <= self.pivot <= hi:
            return
        if self.side == "right":
            for k in range(max(self.bound, lo), hi + 1):
                yield self.member(k)
        else:
            for k in range(lo, min(self.bound, hi) + 1):
                yield self.member(k)

    def covered(self, removed: frozenset, finite_lo: bool) -> IntervalSet:
        # infinitely many members survive any finite removal
        if self.side == "right":
            return IntervalSet.range(self.pivot + 1, math.inf)
        return IntervalSet.range(-math.inf, self.pivot - 1)

    @property
    def fountains(self) -> frozenset:
        return frozenset({(self.side, self.pivot)})

    @property
    def extent(self) -> tuple[int, int]:
        return (min(self.pivot, self.bound), max(self.pivot, self.bound))

    def describe(self) -> str:
        if self.side == "right":
            return f"{{({self.pivot},k) | k >= {self.bound}}}"
        return f"{{(k,{self.pivot}) | k <= {self.bound}}}"


@dataclass(frozen=True)
class AsymRun:
    """Adic arcs ``(-inf, k)`` or Prüfer arcs ``(k, inf)`` for ``lo <= k <= hi``; ``None`` is unbounded."""

    kind: str
    lo: int | None = None
    hi: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("adic", "prufer"):
            raise ValueError(self.kind)
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError("empty run")

    @property
    def limit(self) -> float:
        return NEG_INF if self.kind == "adic" else POS_INF

    @cached_property
    def range(self) -> IntervalSet:
        return IntervalSet.range(-math.inf if self.lo is None else self.lo, math.inf if self.hi is None else self.hi)

    def member(self, k: int) -> Arc:
        return Arc(NEG_INF, k) if self.kind == "adic" else Arc(k, POS_INF)

    def _index(self, a: Arc) -> int | None:
        if self.kind == "adic" and a.lo == NEG_INF and is_finite(a.hi):
            return a.hi  # type: ignore[return-value]
        if self.kind == "prufer" and a.hi == POS_INF and is_finite(a.lo):
            return a.lo  # type: ignore[return-value]
        return None

    def contains(self, a: Arc) -> bool:
        k = self._index(a)
        return k is not None and k in self.range

    def neighbors(self, v: Vertex) -> NeighborSet:
        if v == self.limit:
            return NeighborSet(self.range)
        if is_finite(v) and v in self.range:
            return NeighborSet(IntervalSet(), frozenset({self.limit}))
        return EMPTY_NEIGHBORS

    def crossing(self, a: Arc) -> tuple[list[Arc], bool]:
        u, v = a.lo, a.hi
        if self.kind == "adic":
            if not is_finite(u):
                return ([], False)
        elif not is_finite(v):
            return ([], False)
        ks = self.range.clip(u + 1, v - 1)
        if not ks.bounded:
            return ([], True)
        return ([self.member(k) for k in ks], False)

    def window(self, lo: int, hi: int, limits: bool) -> Iterator[Arc]:
        if limits:
            for k in self.range.clip(lo, hi):
                yield self.member(k)

    def covered(self, removed: frozenset, finite_lo: bool) -> IntervalSet:
        live = self.range.minus(self._index(a) for a in removed if self.contains(a))
        if not live:
            return IntervalSet()
        if self.kind == "adic" and not finite_lo:
            return IntervalSet.range(-math.inf, live.high - 1)  # type: ignore[operator]
        if self.kind == "prufer" and finite_lo:
            return IntervalSet.range(live.low + 1, math.inf)  # type: ignore[operator]
        return IntervalSet()

    @property
    def fountains(self) -> frozenset:
        out = set()
        if self.lo is None:
            out.add(("left", self.limit))
        if self.hi is None:
            out.add(("right", self.limit))
        return frozenset(out)

    @property
    def extent(self) -> tuple[int, int]:
        pts = [x for x in (self.lo, self.hi) if x is not None] or [0]
        return (min(pts), max(pts))

    def describe(self) -> str:
        sym = "a" if self.kind == "adic" else "p"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{{{sym}(k) | {lo} <= k <= {hi}}}"


@dataclass(frozen=True)
class Zigzag:
    """Right: ``(c-k, c+k)`` and ``(c-k, c+k+1)``; left: ``(c-k-1, c+k)`` and ``(c-k, c+k)``; k >= 1."""

    center: int
    orient: str

    def __post_init__(self) -> None:
        if self.orient not in ("left", "right"):
            raise ValueError(self.orient)

    def _has(self, u: int, v: int) -> bool:
        c = self.center
        s = u + v - 2 * c
        if s == 0:
            return v > c
        if self.orient == "right":
            return s == 1 and u < c
        return s == -1 and v > c

    def contains(self, a: Arc) -> bool:
        return a.finite and self._has(a.lo, a.hi)  # type: ignore[arg-type]

    def _adjacent(self, x: int) -> list[int]:
        out = []
        for y in (2 * self.center - x - 1, 2 * self.center - x, 2 * self.center - x + 1):
            if abs(y - x) >= 2 and self._has(min(x, y), max(x, y)):
                out.append(y)
        return out

    def neighbors(self, v: Vertex) -> NeighborSet:
        if not is_finite(v):
            return EMPTY_NEIGHBORS
        return NeighborSet(IntervalSet.points(self._adjacent(v)))  # type: ignore[arg-type]

    def crossing(self, a: Arc) -> tuple[list[Arc], bool]:
        if a == GENERIC:
            return ([], False)
        if not a.finite:
            return ([], True)
        out = []
        for x in range(a.lo + 1, a.hi):  # type: ignore[operator]
            for y in self._adjacent(x):
                if y < a.lo or y > a.hi:
                    out.append(Arc(min(x, y), max(x, y)))
        return (out, False)

    def window(self, lo: int, hi: int, limits: bool) -> Iterator[Arc]:
        for x in range(lo, hi + 1):
            for y in self._adjacent(x):
                if x < y <= hi:
                    yield Arc(x, y)

    def covered(self, removed: frozenset, finite_lo: bool) -> IntervalSet:
        return IntervalSet.everything()

    @property
    def fountains(self) -> frozenset:
        return frozenset()

    @property
    def extent(self) -> tuple[int, int]:
        return (self.center - 1, self.center + 1)

    def describe(self) -> str:
        return f"zigzag(center={self.center}, {self.orient})"


def _index_by_vertex(arcs: Iterable[Arc]) -> dict[Vertex, list[Arc]]:
    out: dict[Vertex, list[Arc]] = {}
    for a in arcs:
        out.setdefault(a.lo, []).append(a)
        out.setdefault(a.hi, []).append(a)
    return out


@dataclass(frozen=True)
class ArcSet:
    """``(union of families  u  extra) minus removed``; ``z`` is implicit on the completed surface."""

    surface: SurfaceKind
    families: tuple = ()
    extra: frozenset = field(default_factory=frozenset)
    removed: frozenset = field(default_factory=frozenset)

    @cached_property
    def _extra_at(self) -> dict[Vertex, list[Arc]]:
        return _index_by_vertex(self.extra)

    @cached_property
    def _removed_at(self) -> dict[Vertex, list[Arc]]:
        return _index_by_vertex(self.removed)

    @property
    def completed(self) -> bool:
        return self.surface is SurfaceKind.COMPLETED

    def in_families(self, a: Arc) -> bool:
        return any(f.contains(a) for f in self.families)

    def __contains__(self, a: Arc) -> bool:
        return self.contains(a)

    def contains(self, a: Arc) -> bool:
        if a == GENERIC:
            return self.completed
        if a in self.removed:
            return False
        return a in self.extra or self.in_families(a)

    @cached_property
    def _neighbor_cache(self) -> dict:
        return {}

    def arc_neighbors(self, v: Vertex) -> NeighborSet:
        """Opposite endpoints of member arcs at ``v`` (edges excluded)."""
        hit = self._neighbor_cache.get(v)
        if hit is None:
            hit = self._neighbor_cache[v] = self._arc_neighbors(v)
        return hit

    def _arc_neighbors(self, v: Vertex) -> NeighborSet:
        ns = EMPTY_NEIGHBORS
        for f in self.families:
            ns = ns.union(f.neighbors(v))
        gone = [a.other(v) for a in self._removed_at.get(v, ())]
        ints = ns.ints.minus(x for x in gone if is_finite(x))
        limits = ns.limits - {x for x in gone if not is_finite(x)}
        extra = [a.other(v) for a in self._extra_at.get(v, ())]
        ints = ints.union(IntervalSet.points(x for x in extra if is_finite(x)))
        limits = limits | {x for x in extra if not is_finite(x)}
        if self.completed and not is_finite(v):
            limits = limits | {POS_INF if v == NEG_INF else NEG_INF}
        return NeighborSet(ints, frozenset(limits))

    def neighbors(self, v: Vertex) -> NeighborSet:
        """Neighbours through member arcs or boundary edges."""
        ns = self.arc_neighbors(v)
        if is_finite(v):
            ns = NeighborSet(ns.ints.union(IntervalSet.points([v - 1, v + 1])), ns.limits)
        return ns

    def crossing(self, a: Arc) -> tuple[list[Arc], bool]:
        """Members crossing ``a``: a finite list, or ``([], True)``-style infinite flag."""
        found: set[Arc] = set()
        infinite = False
        for f in self.families:
            arcs, inf = f.crossing(a)
            infinite = infinite or inf
            found.update(arcs)
        found -= self.removed
        found.update(b for b in self.extra if _crosses(a, b))
        return (sorted(found), infinite)

    def crosses_any(self, a: Arc) -> bool:
        arcs, inf = self.crossing(a)
        return inf or bool(arcs)

    def window(self, lo: int, hi: int) -> frozenset:
        """Members with every finite endpoint in ``[lo, hi]``."""
        lim = self.completed
        out: set[Arc] = set()
        for f in self.families:
            out.update(f.window(lo, hi, lim))
        for a in self.extra:
            if _fits(a, lo, hi, lim):
                out.add(a)
        out -= self.removed
        if lim:
            out.add(GENERIC)
        return frozenset(out)

    @property
    def extent(self) -> tuple[int, int]:
        pts: list[int] = []
        for f in self.families:
            pts.extend(f.extent)
        for a in self.extra | self.removed:
            pts.extend(x for x in a.endpoints if is_finite(x))  # type: ignore[misc]
        if not pts:
            return (0, 0)
        return (min(pts), max(pts))

    @property
    def fountains(self) -> frozenset:
        out: set = set()
        for f in self.families:
            out |= f.fountains
        return frozenset(out)

    def with_changes(self, remove: Iterable[Arc] = (), add: Iterable[Arc] = ()) -> "ArcSet":
        extra, removed = set(self.extra), set(self.removed)
        for a in remove:
            if a in extra:
                extra.discard(a)
            else:
                removed.add(a)
        for a in add:
            if a in removed:
                removed.discard(a)
            elif not self.in_families(a):
                extra.add(a)
        return ArcSet(self.surface, self.families, frozenset(extra), frozenset(removed))

    def describe(self) -> list[str]:
        lines = [f.describe() for f in self.families]
        if self.extra:
            lines.append("plus " + ", ".join(str(a) for a in sorted(self.extra)))
        if self.removed:
            lines.append("minus " + ", ".join(str(a) for a in sorted(self.removed)))
        if self.completed:
            lines.append("z")
        return lines


def _crosses(a: Arc, b: Arc) -> bool:
    return a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi


def _fits(a: Arc, lo: int, hi: int, limits: bool) -> bool:
    for x in a.endpoints:
        if is_finite(x):
            if not lo <= x <= hi:
                return False
        elif not limits:
            return False
    return True
