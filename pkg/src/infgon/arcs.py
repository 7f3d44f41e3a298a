"""Vertices, arcs, the crossing rule and module labels.

Vertices are plain Python values: an ``int`` for a finite marked point and
``-math.inf`` / ``math.inf`` for the two limit points.  Python already orders
these the way we need, so every comparison below is a native one.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import DegenerateArc, EdgeNotArc, InfiniteEndpointOnInftyGon

Vertex = Union[int, float]

NEG_INF: float = -math.inf
POS_INF: float = math.inf


class SurfaceKind(Enum):
    INFTY = "infty"
    COMPLETED = "completed"


def is_finite(v: Vertex) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def check_vertex(v: object) -> Vertex:
    if is_finite(v):
        return v  # type: ignore[return-value]
    if isinstance(v, float) and math.isinf(v):
        return v
    raise TypeError(f"not a vertex: {v!r}")


def format_vertex(v: Vertex) -> str:
    if v == NEG_INF:
        return "-inf"
    if v == POS_INF:
        return "inf"
    return str(v)


def parse_vertex(text: str) -> Vertex:
    t = text.strip().lower()
    if t in ("-inf", "-oo", "-∞"):
        return NEG_INF
    if t in ("inf", "+inf", "oo", "+oo", "∞", "+∞"):
        return POS_INF
    return int(t)


@dataclass(frozen=True)
class Peripheral:
    pass


@dataclass(frozen=True)
class Adic:
    m: int


@dataclass(frozen=True)
class Prufer:
    m: int


@dataclass(frozen=True)
class Generic:
    pass


ArcKind = Union[Peripheral, Adic, Prufer, Generic]


@dataclass(frozen=True, order=True)
class Arc:
    """A normalized arc ``lo < hi``.  Build through :func:`make_arc`."""

    lo: Vertex
    hi: Vertex

    @property
    def kind(self) -> ArcKind:
        return arc_kind(self)

    @property
    def finite(self) -> bool:
        return is_finite(self.lo) and is_finite(self.hi)

    @property
    def asymptotic(self) -> bool:
        return is_finite(self.lo) != is_finite(self.hi)

    @property
    def endpoints(self) -> tuple[Vertex, Vertex]:
        return (self.lo, self.hi)

    def other(self, v: Vertex) -> Vertex:
        if v == self.lo:
            return self.hi
        if v == self.hi:
            return self.lo
        raise ValueError(f"{v} is not an endpoint of {self}")

    def __str__(self) -> str:
        return format_arc(self)

    def __repr__(self) -> str:
        return f"Arc({format_arc(self)})"


def make_arc(u: Vertex, v: Vertex, surface: SurfaceKind = SurfaceKind.COMPLETED) -> Arc:
    u, v = check_vertex(u), check_vertex(v)
    if u == v:
        raise DegenerateArc(f"degenerate arc at {format_vertex(u)}")
    if surface is SurfaceKind.INFTY and not (is_finite(u) and is_finite(v)):
        raise InfiniteEndpointOnInftyGon("the infinity-gon has no limit points")
    lo, hi = (u, v) if u < v else (v, u)
    if is_finite(lo) and is_finite(hi) and hi - lo <= 1:
        raise EdgeNotArc(f"({lo},{hi}) is an edge")
    return Arc(lo, hi)


def adic(m: int) -> Arc:
    return Arc(NEG_INF, m)


def prufer(m: int) -> Arc:
    return Arc(m, POS_INF)


GENERIC = Arc(NEG_INF, POS_INF)


def is_edge(u: Vertex, v: Vertex) -> bool:
    """Boundary segments join consecutive integers only."""
    return is_finite(u) and is_finite(v) and abs(u - v) == 1


def crosses(a: Arc, b: Arc) -> bool:
    return a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi


def arc_kind(a: Arc) -> ArcKind:
    lo_fin, hi_fin = is_finite(a.lo), is_finite(a.hi)
    if lo_fin and hi_fin:
        return Peripheral()
    if hi_fin:
        return Adic(a.hi)  # type: ignore[arg-type]
    if lo_fin:
        return Prufer(a.lo)  # type: ignore[arg-type]
    return Generic()


def phi_label(a: Arc) -> str:
    kind = arc_kind(a)
    if isinstance(kind, Peripheral):
        return f"M_{{{a.lo},{a.hi}}}"
    if isinstance(kind, Prufer):
        return f"Pi_{kind.m}"
    if isinstance(kind, Adic):
        return f"A_{kind.m}"
    return "G"


def format_arc(a: Arc) -> str:
    kind = arc_kind(a)
    if isinstance(kind, Peripheral):
        return f"({a.lo},{a.hi})"
    if isinstance(kind, Adic):
        return f"a({kind.m})"
    if isinstance(kind, Prufer):
        return f"p({kind.m})"
    return "z"


_PAIR = re.compile(r"^\(\s*([^,]+?)\s*,\s*([^,]+?)\s*\)$")
_ASYM = re.compile(r"^([ap])\(\s*(-?\d+)\s*\)$")


def parse_arc(text: str, surface: SurfaceKind = SurfaceKind.COMPLETED) -> Arc:
    """Parse ``(i,j)``, ``a(m)``, ``p(m)`` or ``z``."""
    t = text.strip()
    if t == "z":
        return make_arc(NEG_INF, POS_INF, surface)
    m = _ASYM.match(t)
    if m:
        n = int(m.group(2))
        if m.group(1) == "a":
            return make_arc(NEG_INF, n, surface)
        return make_arc(n, POS_INF, surface)
    m = _PAIR.match(t)
    if m:
        return make_arc(parse_vertex(m.group(1)), parse_vertex(m.group(2)), surface)
    raise ValueError(f"cannot parse arc {text!r}")
