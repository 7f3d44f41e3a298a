"""Unions of integer intervals with possibly unbounded ends.

Bounds are ints, ``-math.inf`` or ``math.inf``; every interval is closed on
its finite ends.  Used for neighbour sets of infinite fans and for the
Prüfer/adic candidate sets during completion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

Bound = Union[int, float]


def _norm(parts: Iterable[tuple[Bound, Bound]]) -> tuple[tuple[Bound, Bound], ...]:
    items = sorted((lo, hi) for lo, hi in parts if lo <= hi and not (lo == hi and math.isinf(lo)))
    out: list[list[Bound]] = []
    for lo, hi in items:
        if out and lo <= out[-1][1] + 1:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


@dataclass(frozen=True)
class IntervalSet:
    parts: tuple[tuple[Bound, Bound], ...] = ()

    @staticmethod
    def of(parts: Iterable[tuple[Bound, Bound]]) -> "IntervalSet":
        return IntervalSet(_norm(parts))

    @staticmethod
    def points(values: Iterable[int]) -> "IntervalSet":
        return IntervalSet(_norm((v, v) for v in values))

    @staticmethod
    def range(lo: Bound, hi: Bound) -> "IntervalSet":
        return IntervalSet(_norm([(lo, hi)]))

    @staticmethod
    def everything() -> "IntervalSet":
        return IntervalSet(((-math.inf, math.inf),))

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __contains__(self, k: object) -> bool:
        return any(lo <= k <= hi for lo, hi in self.parts)  # type: ignore[operator]

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(_norm(self.parts + other.parts))

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a, b in self.parts:
            for c, d in other.parts:
                lo, hi = max(a, c), min(b, d)
                if lo <= hi:
                    out.append((lo, hi))
        return IntervalSet(_norm(out))

    def clip(self, lo: Bound, hi: Bound) -> "IntervalSet":
        return self.intersect(IntervalSet.range(lo, hi))

    def complement(self) -> "IntervalSet":
        out = []
        prev: Bound = -math.inf
        first = True
        for lo, hi in self.parts:
            if first:
                if lo != -math.inf:
                    out.append((-math.inf, lo - 1))
            else:
                out.append((prev + 1, lo - 1))
            prev = hi
            first = False
        if first:
            return IntervalSet.everything()
        if prev != math.inf:
            out.append((prev + 1, math.inf))
        return IntervalSet(_norm(out))

    def minus(self, values: Iterable[int]) -> "IntervalSet":
        pts = sorted({v for v in values if v in self})
        if not pts:
            return self
        return self.intersect(IntervalSet.points(pts).complement())

    @property
    def bounded(self) -> bool:
        return all(lo != -math.inf and hi != math.inf for lo, hi in self.parts)

    @property
    def low(self) -> Bound | None:
        return self.parts[0][0] if self.parts else None

    @property
    def high(self) -> Bound | None:
        return self.parts[-1][1] if self.parts else None

    def __iter__(self) -> Iterator[int]:
        if not self.bounded:
            raise ValueError("cannot enumerate an unbounded interval set")
        for lo, hi in self.parts:
            yield from range(int(lo), int(hi) + 1)

    def __len__(self) -> int:
        if not self.bounded:
            raise ValueError("unbounded interval set")
        return sum(int(hi) - int(lo) + 1 for lo, hi in self.parts)

    def describe(self) -> str:
        if not self.parts:
            return "{}"

        def b(x: Bound) -> str:
            return "-inf" if x == -math.inf else "inf" if x == math.inf else str(x)

        return " u ".join(f"[{b(lo)},{b(hi)}]" if lo != hi else f"{{{b(lo)}}}" for lo, hi in self.parts)
