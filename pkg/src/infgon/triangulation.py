"""Finitely presented triangulations: a catalog template plus a finite patch."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import count
from typing import Iterable, Iterator, Sequence, Union

from .arcs import (
    GENERIC,
    NEG_INF,
    POS_INF,
    Arc,
    SurfaceKind,
    Vertex,
    adic,
    format_vertex,
    is_edge,
    is_finite,
    prufer,
)
from .arcsets import ArcSet, AsymRun, Fan, Zigzag
from .errors import Crossing, NotMaximal, NotMember, NotMutable, SurfaceMismatch
from .oracle import flip_path

INFTY = SurfaceKind.INFTY
COMPLETED = SurfaceKind.COMPLETED
BOTH = frozenset({INFTY, COMPLETED})
ONLY_COMPLETED = frozenset({COMPLETED})

# ---------------------------------------------------------------- templates


@dataclass(frozen=True)
class ZigzagLF:
    center: int = 0
    orient: str = "right"
    surfaces = BOTH

    def __post_init__(self) -> None:
        if self.orient not in ("left", "right"):
            raise ValueError("orient must be left or right")

    def families(self) -> tuple[tuple, frozenset]:
        return ((Zigzag(self.center, self.orient),), frozenset())

    def text(self) -> str:
        return f"zigzag c={self.center} orient={self.orient}"


@dataclass(frozen=True)
class SplitFountain:
    a: int
    b: int
    surfaces = frozenset({INFTY})

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise ValueError("need a <= b")

    def families(self) -> tuple[tuple, frozenset]:
        a, b = self.a, self.b
        fams = (Fan(a, "left", a - 2), Fan(b, "right", b + 2))
        return (fams, frozenset(Arc(a, k) for k in range(a + 2, b + 1)))

    def text(self) -> str:
        return f"split a={self.a} b={self.b}"


@dataclass(frozen=True)
class CompletedFountain:
    a: int
    b: int
    surfaces = ONLY_COMPLETED

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise ValueError("need a <= b")

    def families(self) -> tuple[tuple, frozenset]:
        a, b = self.a, self.b
        fams = (Fan(a, "left", a - 2), AsymRun("adic", a, a), AsymRun("prufer", a, b), Fan(b, "right", b + 2))
        return (fams, frozenset())

    def text(self) -> str:
        return f"cfountain a={self.a} b={self.b}"


@dataclass(frozen=True)
class LeftInfRight:
    """Left fountain at -inf, right fountain at ``b``."""

    b: int
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        b = self.b
        return ((AsymRun("adic", None, b), AsymRun("prufer", b, b), Fan(b, "right", b + 2)), frozenset())

    def text(self) -> str:
        return f"linf b={self.b}"


@dataclass(frozen=True)
class RightInfRight:
    """Left fountain at +inf, right fountain at ``b``."""

    b: int
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        b = self.b
        return ((AsymRun("prufer", None, b), Fan(b, "right", b + 2)), frozenset())

    def text(self) -> str:
        return f"rinf b={self.b}"


@dataclass(frozen=True)
class LeftRightInf:
    """Left fountain at ``a``, right fountain at +inf."""

    a: int
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        a = self.a
        return ((Fan(a, "left", a - 2), AsymRun("adic", a, a), AsymRun("prufer", a, None)), frozenset())

    def text(self) -> str:
        return f"ainf a={self.a}"


@dataclass(frozen=True)
class LeftMinusInf:
    """Left fountain at ``a``, right fountain at -inf."""

    a: int
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        a = self.a
        return ((Fan(a, "left", a - 2), AsymRun("adic", a, None)), frozenset())

    def text(self) -> str:
        return f"aminf a={self.a}"


@dataclass(frozen=True)
class DoubleInf:
    c: int = 0
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        return ((AsymRun("adic", None, self.c), AsymRun("prufer", self.c, None)), frozenset())

    def text(self) -> str:
        return f"dinf c={self.c}"


@dataclass(frozen=True)
class AllPrufer:
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        return ((AsymRun("prufer"),), frozenset())

    def text(self) -> str:
        return "allprufer"


@dataclass(frozen=True)
class AllAdic:
    surfaces = ONLY_COMPLETED

    def families(self) -> tuple[tuple, frozenset]:
        return ((AsymRun("adic"),), frozenset())

    def text(self) -> str:
        return "alladic"


TemplateSpec = Union[
    ZigzagLF,
    SplitFountain,
    CompletedFountain,
    LeftInfRight,
    RightInfRight,
    LeftRightInf,
    LeftMinusInf,
    DoubleInf,
    AllPrufer,
    AllAdic,
]

# ------------------------------------------------------------ triangulation


@dataclass(frozen=True)
class Patch:
    flips: tuple = ()
    removed: frozenset = frozenset()
    added: frozenset = frozenset()


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Template arcs, minus ``removed``, plus ``added``.  ``history`` lists the flips applied."""

    surface: SurfaceKind
    template: TemplateSpec
    removed: frozenset = field(default_factory=frozenset)
    added: frozenset = field(default_factory=frozenset)
    history: tuple = ()

    @cached_property
    def base(self) -> ArcSet:
        fams, extra = self.template.families()
        return ArcSet(self.surface, fams, extra)

    @cached_property
    def arcset(self) -> ArcSet:
        return self.base.with_changes(self.removed, self.added)

    @property
    def patch(self) -> Patch:
        return Patch(self.history, self.removed, self.added)

    def contains(self, a: Arc) -> bool:
        return self.arcset.contains(a)

    def __contains__(self, a: Arc) -> bool:
        return self.arcset.contains(a)

    def _key(self) -> tuple:
        return (self.surface, self.template, self.removed, self.added)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Triangulation) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def window(self, lo: int, hi: int) -> frozenset:
        return self.arcset.window(lo, hi)

    def presentation(self) -> str:
        lines = [f"surface: {self.surface.value}", f"template: {self.template.text()}"]
        if self.history:
            lines.append("flips: " + "; ".join(str(a) for a in self.history))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        extra = f", {len(self.history)} flips" if self.history else ""
        return f"Triangulation({self.surface.value}, {self.template.text()}{extra})"


def instantiate(spec: TemplateSpec, surface: SurfaceKind = COMPLETED) -> Triangulation:
    if surface not in spec.surfaces:
        raise SurfaceMismatch(f"template {spec.text()!r} is not available on the {surface.value} surface")
    return Triangulation(surface, spec)


def contains(T: Triangulation, a: Arc) -> bool:
    return T.contains(a)


def _as_arcset(x: Union[Triangulation, ArcSet]) -> ArcSet:
    return x.arcset if isinstance(x, Triangulation) else x


# ------------------------------------------------------------------ triangles


def triangle_apexes(S: ArcSet, a: Arc) -> tuple[Vertex | None, Vertex | None]:
    """Apexes of the triangles of ``S`` (with edges) on the inner and outer side of ``a``."""
    common = S.neighbors(a.lo).intersect(S.neighbors(a.hi))

    def unique(ns) -> Vertex | None:
        if not ns.bounded:
            return None
        pts = ns.elements()
        return pts[0] if len(pts) == 1 else None

    return unique(common.between(a.lo, a.hi)), unique(common.outside(a.lo, a.hi))


def co_diagonal(S: ArcSet, a: Arc) -> Arc:
    if a == GENERIC:
        raise NotMutable("the generic arc is never mutable")
    w_in, w_out = triangle_apexes(S, a)
    if w_in is None or w_out is None:
        raise NotMutable(f"{a} is not the diagonal of a quadrilateral")
    return Arc(min(w_in, w_out), max(w_in, w_out))


def replace_arc(T: Triangulation, old: Arc, new: Arc) -> Triangulation:
    removed, added = set(T.removed), set(T.added)
    if old in added:
        added.discard(old)
    else:
        removed.add(old)
    if new in removed:
        removed.discard(new)
    else:
        added.add(new)
    out = Triangulation(T.surface, T.template, frozenset(removed), frozenset(added), T.history + (old,))
    if "arcset" in T.__dict__:
        out.__dict__["arcset"] = T.arcset.with_changes([old], [new])
    return out


def flip_arc(T: Triangulation, a: Arc) -> tuple[Triangulation, Arc]:
    if not T.contains(a):
        raise NotMember(f"{a} is not in the triangulation")
    new = co_diagonal(T.arcset, a)
    return replace_arc(T, a, new), new


# -------------------------------------------------------------------- fans


@dataclass(frozen=True)
class IncidentFan:
    """Arcs at one vertex: a finite part plus infinite tails ``('up', k0)`` / ``('down', k0)``."""

    vertex: Vertex
    finite: tuple
    tails: tuple = ()

    @property
    def infinite(self) -> bool:
        return bool(self.tails)

    def _tail_arc(self, k: int) -> Arc:
        v = self.vertex
        return Arc(min(v, k), max(v, k))

    def __iter__(self) -> Iterator[Arc]:
        yield from self.finite
        if not self.tails:
            return
        for step in count():
            for direction, start in self.tails:
                yield self._tail_arc(start + step if direction == "up" else start - step)

    def prefix(self, n: int) -> list[Arc]:
        out = []
        for a in self:
            if len(out) >= n:
                break
            out.append(a)
        return out

    def describe(self) -> list[str]:
        v = format_vertex(self.vertex)
        lines = [str(a) for a in self.finite]
        for direction, start in self.tails:
            if direction == "up":
                lines.append(f"({v},k) for k >= {start}")
            else:
                lines.append(f"(k,{v}) for k <= {start}")
        return lines


def incident(T: Union[Triangulation, ArcSet], v: Vertex) -> IncidentFan:
    S = _as_arcset(T)
    ns = S.arc_neighbors(v)
    finite: list[Arc] = []
    tails = []
    for lo, hi in ns.ints.parts:
        if lo == -float("inf") and hi == float("inf"):
            tails.append(("up", v + 1 if is_finite(v) else 0))
            tails.append(("down", v - 1 if is_finite(v) else -1))
        elif lo == -float("inf"):
            tails.append(("down", int(hi)))
        elif hi == float("inf"):
            tails.append(("up", int(lo)))
        else:
            finite.extend(Arc(min(v, k), max(v, k)) for k in range(int(lo), int(hi) + 1))
    finite.extend(Arc(min(v, x), max(v, x)) for x in sorted(ns.limits))
    finite.sort(key=lambda a: a.other(v))
    return IncidentFan(v, tuple(finite), tuple(tails))


def restrict(T: Union[Triangulation, ArcSet], P: Iterable[Vertex]) -> frozenset:
    pts = set(P)
    fin = [p for p in pts if is_finite(p)]
    if len(pts) < 2:
        return frozenset()
    S = _as_arcset(T)
    lo, hi = (min(fin), max(fin)) if fin else (0, -1)
    return frozenset(a for a in S.window(lo, hi) if a.lo in pts and a.hi in pts)


# ----------------------------------------------------------------- patches


def _find(parent: dict, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def validate_patch(T: Triangulation, removed: Iterable[Arc], added: Iterable[Arc]) -> Triangulation:
    """Swap a finite set of member arcs for a finite set of new ones, checking the result."""
    removed, added = set(removed), set(added)
    S = T.arcset
    for a in removed:
        if a == GENERIC or not S.contains(a):
            raise NotMember(f"{a} is not a removable member")
    if len(added) != len(removed):
        raise NotMaximal("a patch must add as many arcs as it removes")
    kept_cross = {a: S.crossing(a) for a in added}
    for a in sorted(added):
        arcs, infinite = kept_cross[a]
        live = [b for b in arcs if b not in removed]
        if infinite or live:
            what = ", ".join(str(b) for b in live) if live else "infinitely many kept arcs"
            raise Crossing(f"{a} crosses {what}", (a, *live))
        if S.contains(a) and a not in removed:
            raise Crossing(f"{a} is already a member", (a,))
    ordered = sorted(added)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi:
                raise Crossing(f"added arcs {a} and {b} cross", (a, b))
    if not removed:
        return T
    # group removed arcs into regions through shared triangles
    parent: dict = {}
    corners: dict = {}
    for a in removed:
        w_in, w_out = triangle_apexes(S, a)
        if w_in is None or w_out is None:
            raise NotMaximal(f"removing {a} opens an unbounded region")
        parent[a] = a
        corners[a] = {a.lo, a.hi, w_in, w_out}
    by_triangle: dict = {}
    for a in removed:
        w_in, w_out = triangle_apexes(S, a)
        for w in (w_in, w_out):
            tri = frozenset({a.lo, a.hi, w})
            if tri in by_triangle:
                parent[_find(parent, a)] = _find(parent, by_triangle[tri])
            else:
                by_triangle[tri] = a
    regions: dict = {}
    for a in removed:
        r = _find(parent, a)
        regions.setdefault(r, set()).update(corners[a])
    result = T
    placed = set()
    for verts in sorted((sorted(v) for v in regions.values()), key=lambda vs: vs[0]):
        n = len(verts)
        index = {v: i for i, v in enumerate(verts)}
        inside = {a for a in added if a.lo in index and a.hi in index}
        inside = {a for a in inside if not (index[a.hi] - index[a.lo] == 1 or (index[a.lo] == 0 and index[a.hi] == n - 1))}
        if len(inside) != n - 3:
            raise NotMaximal("a removal region is not fully re-triangulated")
        placed |= inside
        src = restrict(result, verts)
        src = {(index[a.lo], index[a.hi]) for a in src}
        src = {p for p in src if not (p[1] - p[0] == 1 or (p[0] == 0 and p[1] == n - 1))}
        dst = {(index[a.lo], index[a.hi]) for a in inside}
        for i, j in flip_path(n, src, dst):
            result, _ = flip_arc(result, Arc(verts[i], verts[j]))
    if placed != added:
        raise NotMaximal("some added arcs do not fit any removal region")
    return result


# ---------------------------------------------------------------- fountains


@dataclass(frozen=True)
class FountainProfile:
    left: Vertex | None = None
    right: Vertex | None = None

    @property
    def locally_finite(self) -> bool:
        return self.left is None and self.right is None


def profile_of(S: ArcSet) -> FountainProfile:
    lefts = sorted(v for side, v in S.fountains if side == "left")
    rights = sorted(v for side, v in S.fountains if side == "right")
    if len(lefts) > 1 or len(rights) > 1:
        raise ValueError("arc set has several fountains on one side")
    return FountainProfile(lefts[0] if lefts else None, rights[0] if rights else None)


def fountain_profile(T: Triangulation) -> FountainProfile:
    # patches are finite, so only the template decides
    return profile_of(T.base)


# ------------------------------------------------------------- subpolygons


@dataclass(frozen=True)
class SubPolygon:
    vertices: tuple

    def __post_init__(self) -> None:
        vs = tuple(sorted(set(self.vertices)))
        if len(vs) < 3:
            raise ValueError("a subpolygon needs at least three vertices")
        object.__setattr__(self, "vertices", vs)


def subpolygon(T: Triangulation, vertices: Sequence[Vertex]) -> SubPolygon:
    P = SubPolygon(tuple(vertices))
    vs = P.vertices
    for a, b in list(zip(vs, vs[1:])) + [(vs[0], vs[-1])]:
        if not (is_edge(a, b) or T.contains(Arc(a, b))):
            raise ValueError(f"({format_vertex(a)},{format_vertex(b)}) is neither an edge nor a member")
    return P


def subpolygon_parts(P: SubPolygon) -> tuple[frozenset, frozenset, frozenset]:
    vs = P.vertices
    k = len(vs)
    S = frozenset((vs[i], vs[j]) for i in range(k) for j in range(i + 1, k))
    E = frozenset([(vs[i], vs[i + 1]) for i in range(k - 1)] + [(vs[0], vs[-1])])
    return S, E, S - E


# ------------------------------------------------------------------ probes


@dataclass(frozen=True)
class ProbeResult:
    ok: bool
    witness: tuple = ()
    reason: str = ""


def window_probe(T: Union[Triangulation, ArcSet], lo: int, hi: int) -> ProbeResult:
    """Non-crossing and maximality check for arcs with endpoints in ``[lo, hi]`` (and the limits)."""
    S = _as_arcset(T)
    members = sorted(S.window(lo, hi))
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if b.lo >= a.hi:
                break
            if a.lo < b.lo < a.hi < b.hi:
                return ProbeResult(False, (a, b), "crossing members")
    low: dict = {}
    high: dict = {}
    for x in range(lo, hi + 1):
        ns = S.arc_neighbors(x)
        lx, hx = ns.lowest, ns.highest
        low[x] = POS_INF if lx is None else lx
        high[x] = NEG_INF if hx is None else hx
    for u in range(lo, hi + 1):
        run_low, run_high = POS_INF, NEG_INF
        for v in range(u + 1, hi + 1):
            if v - u >= 2:
                w = v - 1
                run_low = min(run_low, low[w])
                run_high = max(run_high, high[w])
                if run_low < u or run_high > v:
                    continue
                a = Arc(u, v)
                if not S.contains(a):
                    return ProbeResult(False, (a,), "arc compatible with every member is missing")
    if S.completed:
        for m in range(lo, hi + 1):
            for a in (adic(m), prufer(m)):
                if not S.contains(a) and not S.crosses_any(a):
                    return ProbeResult(False, (a,), "arc compatible with every member is missing")
    return ProbeResult(True)
