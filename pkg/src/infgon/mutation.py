"""Flips, schedules of flips, and their limits.

A schedule is a finite list or one of a handful of closed-form infinite
sequences.  Evaluation always replays the schedule step by step up to a
horizon (checking that each entry is mutable when reached); for the catalog
sequences the limit is then written down in closed form, otherwise an
empirical window snapshot is returned and flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Union

from .arcs import GENERIC, NEG_INF, POS_INF, Arc, adic, format_arc, is_edge, is_finite, prufer
from .arcsets import ArcSet, AsymRun, Fan, Zigzag
from .errors import NotAdmissible, NotComposable, NotMember, NotMutable
from .triangulation import (
    COMPLETED,
    INFTY,
    Triangulation,
    fountain_profile,
    replace_arc,
    triangle_apexes,
)

# ------------------------------------------------------------- single flips


@dataclass(frozen=True)
class Quadrilateral:
    sides: frozenset
    corners: tuple
    diagonal: Arc
    co_diagonal: Arc


def _member(T: Triangulation, a: Arc) -> None:
    if not T.contains(a):
        raise NotMember(f"{a} is not in the triangulation")


def is_mutable(T: Triangulation, a: Arc) -> bool:
    _member(T, a)
    if a == GENERIC:
        return False
    w_in, w_out = triangle_apexes(T.arcset, a)
    return w_in is not None and w_out is not None


def wrapping_arcs(T: Triangulation) -> frozenset:
    """Arcs that can never be flipped: the split-fountain connector, or ``z`` plus fountain-wrapping curves."""
    prof = fountain_profile(T)
    out = set()
    if T.surface is INFTY:
        if prof.left is not None and prof.right is not None and prof.right - prof.left >= 2:
            out.add(Arc(prof.left, prof.right))
        return frozenset(out)
    out.add(GENERIC)
    if prof.left is not None and is_finite(prof.left):
        out.add(adic(prof.left))  # type: ignore[arg-type]
    if prof.right is not None and is_finite(prof.right):
        out.add(prufer(prof.right))  # type: ignore[arg-type]
    return frozenset(out)


def quadrilateral(T: Triangulation, a: Arc) -> Quadrilateral:
    _member(T, a)
    if a == GENERIC:
        raise NotMutable("the generic arc is never mutable")
    w_in, w_out = triangle_apexes(T.arcset, a)
    if w_in is None or w_out is None:
        raise NotMutable(f"{a} is not mutable")
    corners = tuple(sorted({a.lo, a.hi, w_in, w_out}))
    sides = set()
    for x in (a.lo, a.hi):
        for w in (w_in, w_out):
            if not is_edge(x, w):
                s = Arc(min(x, w), max(x, w))
                if s != GENERIC:
                    sides.add(s)
    return Quadrilateral(frozenset(sides), corners, a, Arc(min(w_in, w_out), max(w_in, w_out)))


def flip(T: Triangulation, a: Arc) -> Triangulation:
    q = quadrilateral(T, a)
    return replace_arc(T, a, q.co_diagonal)


def apply_flips(T: Triangulation, arcs) -> Triangulation:
    for a in arcs:
        T = flip(T, a)
    return T


# ---------------------------------------------------------------- schedules


def _sign(direction: str) -> int:
    if direction not in ("+", "-"):
        raise ValueError("direction must be '+' or '-'")
    return 1 if direction == "+" else -1


@dataclass(frozen=True)
class FiniteList:
    arcs: tuple = ()

    length = property(lambda self: len(self.arcs))

    def entry(self, i: int) -> Arc:
        return self.arcs[i - 1]

    def index_of(self, a: Arc) -> Optional[int]:
        for i, b in enumerate(self.arcs, 1):
            if a == b:
                return i
        return None

    def describe(self) -> str:
        return "finite:[" + ";".join(format_arc(a) for a in self.arcs) + "]"


@dataclass(frozen=True)
class FanCollapse:
    """``((p, p+k))_{k >= start}`` for ``+``, ``((p-k, p))_{k >= start}`` for ``-``."""

    pivot: int
    start: int = 2
    direction: str = "+"
    length = None

    def __post_init__(self) -> None:
        _sign(self.direction)
        if self.start < 2:
            raise ValueError("start must be at least 2")

    def entry(self, i: int) -> Arc:
        k = self.start + i - 1
        return Arc(self.pivot, self.pivot + k) if self.direction == "+" else Arc(self.pivot - k, self.pivot)

    def index_of(self, a: Arc) -> Optional[int]:
        if not a.finite:
            return None
        if self.direction == "+" and a.lo == self.pivot:
            k = a.hi - self.pivot
        elif self.direction == "-" and a.hi == self.pivot:
            k = self.pivot - a.lo
        else:
            return None
        return k - self.start + 1 if k >= self.start else None

    def describe(self) -> str:
        return f"fan:p={self.pivot},start={self.start},dir={self.direction}"


@dataclass(frozen=True)
class FountainShift:
    """Move a left fountain one step left (``left``) or a right fountain one step right (``right``)."""

    side: str
    at: int
    length = None

    def __post_init__(self) -> None:
        if self.side not in ("left", "right"):
            raise ValueError("side must be left or right")

    @property
    def as_fan(self) -> FanCollapse:
        return FanCollapse(self.at, 2, "+" if self.side == "right" else "-")

    def entry(self, i: int) -> Arc:
        return self.as_fan.entry(i)

    def index_of(self, a: Arc) -> Optional[int]:
        return self.as_fan.index_of(a)

    def describe(self) -> str:
        return f"shift:{self.side},at={self.at}"


@dataclass(frozen=True)
class AsymptoticSweep:
    """``kind`` curves at ``start``, ``start -/+ 1``, ... in the given direction."""

    kind: str
    start: int
    direction: str = "-"
    length = None

    def __post_init__(self) -> None:
        _sign(self.direction)
        if self.kind not in ("adic", "prufer"):
            raise ValueError("kind must be adic or prufer")

    def _curve(self, m: int) -> Arc:
        return adic(m) if self.kind == "adic" else prufer(m)

    def entry(self, i: int) -> Arc:
        return self._curve(self.start + _sign(self.direction) * (i - 1))

    def index_of(self, a: Arc) -> Optional[int]:
        if self.kind == "adic" and a.lo == NEG_INF and is_finite(a.hi):
            m = a.hi
        elif self.kind == "prufer" and a.hi == POS_INF and is_finite(a.lo):
            m = a.lo
        else:
            return None
        i = _sign(self.direction) * (m - self.start) + 1
        return i if i >= 1 else None

    def describe(self) -> str:
        return f"sweep:{self.kind},from={self.start},dir={self.direction}"


@dataclass(frozen=True)
class AlternatingSweep:
    """``kind`` curves at ``c, c+1, c-1, c+2, ...`` (``first='+'``) or ``c, c-1, c+1, ...``."""

    kind: str
    center: int = 0
    first: str = "+"
    length = None

    def __post_init__(self) -> None:
        _sign(self.first)
        if self.kind not in ("adic", "prufer"):
            raise ValueError("kind must be adic or prufer")

    def _offset(self, i: int) -> int:
        if i == 1:
            return 0
        k = i // 2
        s = _sign(self.first)
        return s * k if i % 2 == 0 else -s * k

    def entry(self, i: int) -> Arc:
        m = self.center + self._offset(i)
        return adic(m) if self.kind == "adic" else prufer(m)

    def index_of(self, a: Arc) -> Optional[int]:
        if self.kind == "adic" and a.lo == NEG_INF and is_finite(a.hi):
            d = a.hi - self.center
        elif self.kind == "prufer" and a.hi == POS_INF and is_finite(a.lo):
            d = a.lo - self.center
        else:
            return None
        if d == 0:
            return 1
        return 2 * abs(d) if (d > 0) == (self.first == "+") else 2 * abs(d) + 1

    def describe(self) -> str:
        tail = "" if self.first == "+" else ",first=-"
        return f"alt:{self.kind},center={self.center}{tail}"


@dataclass(frozen=True)
class ZigzagToFountain:
    """Flip the arcs of the zigzag at ``l`` in order, from the innermost outwards."""

    l: int
    orient: str = "left"
    length = None

    def __post_init__(self) -> None:
        if self.orient not in ("left", "right"):
            raise ValueError("orient must be left or right")

    def entry(self, i: int) -> Arc:
        l, j = self.l, i // 2
        if i == 1:
            return Arc(l - 1, l + 1)
        if self.orient == "left":
            return Arc(l - j - 1, l + j) if i % 2 == 0 else Arc(l - j - 1, l + j + 1)
        return Arc(l - j, l + j + 1) if i % 2 == 0 else Arc(l - j - 1, l + j + 1)

    def index_of(self, a: Arc) -> Optional[int]:
        if not a.finite:
            return None
        l = self.l
        if a.lo + a.hi == 2 * l:
            j = l - a.lo
            return 2 * j - 1 if j >= 1 else None
        if self.orient == "left" and a.lo + a.hi == 2 * l - 1:
            j = a.hi - l
            return 2 * j if j >= 1 else None
        if self.orient == "right" and a.lo + a.hi == 2 * l + 1:
            j = l - a.lo
            return 2 * j if j >= 1 else None
        return None

    def describe(self) -> str:
        tail = "" if self.orient == "left" else ",orient=right"
        return f"zigzag2fountain:l={self.l}{tail}"


@dataclass(frozen=True, eq=False)
class Interleaved:
    """``alpha`` with the entries of ``beta`` slotted in after their quadrilaterals settle."""

    alpha: "Schedule"
    beta: "Schedule"
    point: Callable[[int], int] = field(repr=False)
    _merged: list = field(default_factory=list, repr=False)

    @property
    def length(self) -> Optional[int]:
        if self.alpha.length is None or self.beta.length is None:
            return None
        return self.alpha.length + self.beta.length

    def _extend(self, n: int) -> None:
        merged = self._merged
        ia = sum(1 for src, _ in merged if src == "a")
        ib = len(merged) - ia
        while len(merged) < n:
            b_left = self.beta.length is None or ib < self.beta.length
            a_left = self.alpha.length is None or ia < self.alpha.length
            if b_left and (not a_left or self.point(ib + 1) <= ia):
                ib += 1
                merged.append(("b", ib))
            elif a_left:
                ia += 1
                merged.append(("a", ia))
            else:
                raise IndexError("schedule exhausted")

    def entry(self, i: int) -> Arc:
        self._extend(i)
        src, k = self._merged[i - 1]
        return self.alpha.entry(k) if src == "a" else self.beta.entry(k)

    def index_of(self, a: Arc) -> Optional[int]:
        return None

    def describe(self) -> str:
        return f"interleave({self.alpha.describe()}|{self.beta.describe()})"


Schedule = Union[
    FiniteList, FanCollapse, FountainShift, AsymptoticSweep, AlternatingSweep, ZigzagToFountain, Interleaved
]


def entries(s: Schedule, n: int) -> Iterator[Arc]:
    top = n if s.length is None else min(n, s.length)
    for i in range(1, top + 1):
        yield s.entry(i)


def leaves_untouched(s: Schedule, a: Arc, horizon: int = 50) -> bool:
    if isinstance(s, Interleaved):
        return all(b != a for b in entries(s, horizon))
    return s.index_of(a) is None


# ---------------------------------------------------------- certification


@dataclass(frozen=True)
class Verdict:
    kind: str
    step: Optional[int] = None

    def __str__(self) -> str:
        return f"Fails({self.step})" if self.kind == "Fails" else self.kind

    @property
    def ok(self) -> bool:
        return self.kind in ("Certified", "UpToHorizon")


CERTIFIED = Verdict("Certified")
UP_TO_HORIZON = Verdict("UpToHorizon")
INCONCLUSIVE = Verdict("Inconclusive")


@dataclass(frozen=True)
class StabilizationCertificate:
    kind: str
    horizon: Optional[int] = None
    quiet_steps: Optional[int] = None
    bound: Callable[[Arc], Optional[int]] = field(default=lambda a: None, repr=False, compare=False)

    @property
    def certified(self) -> bool:
        return self.kind == "ClosedForm"


@dataclass(frozen=True)
class Maximality:
    status: str
    witness: Optional[Arc] = None

    def __str__(self) -> str:
        return f"No({format_arc(self.witness)})" if self.status == "No" else self.status  # type: ignore[arg-type]


@dataclass(frozen=True)
class PreArcSet:
    """Limit of a schedule: closed-form arcs, or an empirical window snapshot."""

    surface: object
    arcs: Optional[ArcSet]
    certificate: StabilizationCertificate
    maximal: Maximality
    snapshot: frozenset = frozenset()
    snapshot_window: tuple = (0, -1)

    @property
    def finitely_presented(self) -> bool:
        return self.arcs is not None

    def window(self, lo: int, hi: int) -> frozenset:
        if self.arcs is not None:
            return self.arcs.window(lo, hi)
        return frozenset(a for a in self.snapshot if all(not is_finite(x) or lo <= x <= hi for x in a.endpoints))

    def contains(self, a: Arc) -> bool:
        if self.arcs is not None:
            return self.arcs.contains(a)
        return a in self.snapshot


@dataclass(frozen=True)
class Simulation:
    state: Triangulation
    steps: int
    failed_at: Optional[int]
    changed: dict
    reason: str = ""


def simulate(T: Triangulation, s: Schedule, horizon: int) -> Simulation:
    """Replay up to ``horizon`` entries; ``changed`` maps each created arc to the step creating it."""
    state = T
    changed: dict = {}
    done = 0
    for i, a in enumerate(entries(s, horizon), 1):
        if not state.contains(a):
            return Simulation(state, done, i, changed, f"{a} is not in the triangulation")
        if a == GENERIC:
            return Simulation(state, done, i, changed, "the generic arc is never mutable")
        w_in, w_out = triangle_apexes(state.arcset, a)
        if w_in is None or w_out is None:
            return Simulation(state, done, i, changed, f"{a} is not mutable")
        new = Arc(min(w_in, w_out), max(w_in, w_out))
        state = replace_arc(state, a, new)
        changed.pop(a, None)
        changed[new] = i
        done = i
    return Simulation(state, done, None, changed)


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible_prefix: int
    verdict: Verdict
    reason: str = ""


def check_admissible(T: Triangulation, s: Schedule, horizon: int) -> AdmissibilityReport:
    if horizon < 1:
        raise ValueError("horizon must be positive")
    sim = simulate(T, s, horizon)
    if sim.failed_at is not None:
        return AdmissibilityReport(sim.steps, Verdict("Fails", sim.failed_at), sim.reason)
    if s.length is not None and s.length <= horizon:
        return AdmissibilityReport(sim.steps, CERTIFIED)
    if s.length is None and closed_form(T, s) is not None:
        return AdmissibilityReport(sim.steps, CERTIFIED)
    return AdmissibilityReport(sim.steps, UP_TO_HORIZON)


# ------------------------------------------------------------ closed forms


ClosedForm = tuple  # (ArcSet, bound function)


def _family_holding(S: ArcSet, test: Callable[[object], bool]):
    for f in S.families:
        if test(f):
            return f
    return None


def _rebuild(S: ArcSet, drop, keep: list, add_families: list) -> ArcSet:
    """Replace family ``drop`` by the finitely many arcs ``keep`` and append ``add_families``."""
    fams = tuple(f for f in S.families if f is not drop) + tuple(add_families)
    extra = set(S.extra) | set(keep)
    removed = set(S.removed)
    extra -= removed
    removed = {a for a in removed if any(f.contains(a) for f in fams)}
    extra = {a for a in extra if not any(f.contains(a) for f in fams)}
    return ArcSet(S.surface, fams, frozenset(extra), frozenset(removed))


def _no_removed(S: ArcSet, s: Schedule) -> bool:
    return all(s.index_of(a) is None for a in S.removed)


def _fan_collapse(T: Triangulation, s: FanCollapse) -> Optional[ClosedForm]:
    S, p, st = T.arcset, s.pivot, s.start
    side = "right" if s.direction == "+" else "left"
    fan = _family_holding(
        S,
        lambda f: isinstance(f, Fan)
        and f.pivot == p
        and f.side == side
        and (f.bound <= p + st if side == "right" else f.bound >= p - st),
    )
    if fan is None or not _no_removed(S, s):
        return None
    w, _ = triangle_apexes(S, s.entry(1))
    if w is None or not is_finite(w):
        return None
    if side == "right":
        keep = [Arc(p, x) for x in range(fan.bound, p + st) if Arc(p, x) not in S.removed]
        new = Fan(w, "right", p + st + 1)  # type: ignore[arg-type]

        def bound(a: Arc) -> Optional[int]:
            return a.hi - p - st if new.contains(a) else 0  # type: ignore[operator]

    else:
        keep = [Arc(x, p) for x in range(p - st + 1, fan.bound + 1) if Arc(x, p) not in S.removed]
        new = Fan(w, "left", p - st - 1)  # type: ignore[arg-type]

        def bound(a: Arc) -> Optional[int]:
            return p - st - a.lo if new.contains(a) else 0  # type: ignore[operator]

    return _rebuild(S, fan, keep, [new]), bound


def _sweep(T: Triangulation, s: AsymptoticSweep) -> Optional[ClosedForm]:
    S, c, down = T.arcset, s.start, s.direction == "-"
    run = _family_holding(
        S,
        lambda f: isinstance(f, AsymRun)
        and f.kind == s.kind
        and (f.lo is None and (f.hi is None or f.hi >= c) if down else f.hi is None and (f.lo is None or f.lo <= c)),
    )
    if run is None or not _no_removed(S, s):
        return None
    w_in, w_out = triangle_apexes(S, s.entry(1))
    if w_in is None or w_out is None:
        return None
    if down:
        rest = [AsymRun(s.kind, c + 1, run.hi)] if run.hi is None or run.hi > c else []
    else:
        rest = [AsymRun(s.kind, run.lo, c - 1)] if run.lo is None or run.lo < c else []
    # the apex that stays fixed for the whole sweep
    if s.kind == "adic":
        pivot = w_out if down else w_in
    else:
        pivot = w_in if down else w_out
    if down:
        if is_finite(pivot):
            new = Fan(pivot, "left", c - 1)  # type: ignore[arg-type]
        else:
            new = AsymRun("prufer" if pivot == POS_INF else "adic", None, c - 1)
    else:
        if is_finite(pivot):
            new = Fan(pivot, "right", c + 1)  # type: ignore[arg-type]
        else:
            new = AsymRun("adic" if pivot == NEG_INF else "prufer", c + 1, None)

    def bound(a: Arc) -> Optional[int]:
        if not new.contains(a):
            return 0
        moving = a.lo if down else a.hi
        if not is_finite(moving):
            moving = a.hi if is_finite(a.hi) else a.lo
        return (c - moving) if down else (moving - c)  # type: ignore[operator]

    return _rebuild(S, run, [], rest + [new]), bound


def _alternating(T: Triangulation, s: AlternatingSweep) -> Optional[ClosedForm]:
    S = T.arcset
    run = _family_holding(S, lambda f: isinstance(f, AsymRun) and f.kind == s.kind and f.lo is None and f.hi is None)
    if run is None or S.removed:
        return None
    orient = "right" if s.first == "+" else "left"
    zz = Zigzag(s.center, orient)
    c = s.center

    def bound(a: Arc) -> Optional[int]:
        if not zz.contains(a):
            return 0
        if a.lo + a.hi == 2 * c:
            return 2 * (c - a.lo) - 1  # type: ignore[operator]
        return 2 * (c - a.lo) if orient == "right" else 2 * (a.hi - c)  # type: ignore[operator]

    return _rebuild(S, run, [], [zz]), bound


def _zigzag(T: Triangulation, s: ZigzagToFountain) -> Optional[ClosedForm]:
    S, l = T.arcset, s.l
    zz = _family_holding(S, lambda f: isinstance(f, Zigzag) and f.center == l and f.orient == s.orient)
    if zz is None or S.removed:
        return None
    left, right = Fan(l, "left", l - 2), Fan(l, "right", l + 2)

    def bound(a: Arc) -> Optional[int]:
        if left.contains(a):
            k = l - a.lo  # type: ignore[operator]
            return 2 * k - 3 if s.orient == "left" else 2 * k - 2
        if right.contains(a):
            k = a.hi - l  # type: ignore[operator]
            return 2 * k - 2 if s.orient == "left" else 2 * k - 3
        return 0

    return _rebuild(S, zz, [], [left, right]), bound


def closed_form(T: Triangulation, s: Schedule) -> Optional[ClosedForm]:
    """Limit of a catalog schedule as an arc set, with per-arc stabilization indices."""
    if isinstance(s, FountainShift):
        s = s.as_fan
    if isinstance(s, FanCollapse):
        return _fan_collapse(T, s)
    if isinstance(s, AsymptoticSweep):
        if T.surface is not COMPLETED:
            return None
        return _sweep(T, s)
    if isinstance(s, AlternatingSweep):
        return _alternating(T, s)
    if isinstance(s, ZigzagToFountain):
        return _zigzag(T, s)
    if isinstance(s, Interleaved):
        return _interleaved_form(T, s)
    return None


def _interleaved_form(T: Triangulation, s: Interleaved) -> Optional[ClosedForm]:
    from .completion import as_triangulation

    first = _limit(T, s.alpha)
    if first is None:
        return None
    mid = as_triangulation(first[0])
    if mid is None:
        return None
    second = _limit(mid, s.beta)
    if second is None:
        return None
    return second[0], lambda a: None


def _limit(T: Triangulation, s: Schedule) -> Optional[ClosedForm]:
    if s.length is not None:
        sim = simulate(T, s, s.length)
        if sim.failed_at is not None:
            return None
        return sim.state.arcset, lambda a, ch=sim.changed: ch.get(a, 0)
    return closed_form(T, s)


# ---------------------------------------------------------------- evaluate


def _maximality(S: ArcSet) -> Maximality:
    from .completion import completion_sets

    sets = completion_sets(S)
    missing = sets.missing_prufer()
    if missing is not None:
        return Maximality("No", missing)
    missing = sets.missing_adic()
    if missing is not None:
        return Maximality("No", missing)
    return Maximality("Yes")


def evaluate(T: Triangulation, s: Schedule, horizon: int = 50) -> PreArcSet:
    report = check_admissible(T, s, horizon)
    if report.verdict.kind == "Fails":
        raise NotAdmissible(report.verdict.step or 0, report.reason)
    if s.length is not None and s.length <= horizon:
        sim = simulate(T, s, s.length)
        cert = StabilizationCertificate("ClosedForm", bound=lambda a, ch=sim.changed: ch.get(a, 0))
        return PreArcSet(T.surface, sim.state.arcset, cert, Maximality("Yes"))
    form = closed_form(T, s)
    if form is not None:
        arcs, bound = form
        cert = StabilizationCertificate("ClosedForm", bound=bound)
        maximal = _maximality(arcs) if T.surface is COMPLETED else Maximality("Yes")
        return PreArcSet(T.surface, arcs, cert, maximal)
    return _empirical(T, s, horizon)


def _empirical(T: Triangulation, s: Schedule, horizon: int) -> PreArcSet:
    quiet = horizon // 2
    sim = simulate(T, s, horizon)
    lo, hi = T.arcset.extent
    reach = max(abs(lo), abs(hi)) + horizon
    settled = frozenset(a for a in sim.state.window(-reach, reach) if sim.changed.get(a, 0) <= horizon - quiet)
    cert = StabilizationCertificate(
        "Empirical", horizon=horizon, quiet_steps=quiet, bound=lambda a, ch=sim.changed: ch.get(a, 0)
    )
    return PreArcSet(T.surface, None, cert, Maximality("Unknown"), settled, (-reach, reach))


# ------------------------------------------------------------- interleave


def interleave(T: Triangulation, alpha: Schedule, beta: Schedule) -> Interleaved:
    """One schedule on ``T`` with the effect of ``alpha`` followed by ``beta``."""
    from .completion import as_triangulation

    if alpha.length is not None:
        n = alpha.length
        return Interleaved(alpha, beta, lambda i: n)
    form = closed_form(T, alpha)
    if form is None:
        raise NotComposable("the first schedule has no closed-form stabilization certificate")
    arcs, bound = form
    mid = as_triangulation(arcs)
    if mid is None:
        raise NotComposable("the first schedule does not end in a triangulation")
    points: list[int] = []
    state = [mid]
    created: dict = {}

    def point(i: int) -> int:
        while len(points) < i:
            j = len(points) + 1
            b = beta.entry(j)
            q = quadrilateral(state[0], b)
            need = 0
            for a in q.sides | {b}:
                need = max(need, created[a] if a in created else bound(a) or 0)
            need = max(need, points[-1] if points else 0)
            points.append(need)
            state[0] = replace_arc(state[0], b, q.co_diagonal)
            created[q.co_diagonal] = need
        return points[i - 1]

    return Interleaved(alpha, beta, point)


# ------------------------------------------------------------------ parsing


def _options(text: str) -> tuple[list[str], dict]:
    words, opts = [], {}
    for part in (p.strip() for p in text.split(",") if p.strip()):
        if "=" in part:
            k, v = part.split("=", 1)
            opts[k.strip()] = v.strip()
        else:
            words.append(part)
    return words, opts


def _split_top(text: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "|" and depth == 0:
            return text[:i], text[i + 1 :]
    raise ValueError("interleave needs two schedules separated by '|'")


def parse_schedule(text: str, T: Optional[Triangulation] = None) -> Schedule:
    """Parse a schedule descriptor such as ``sweep:adic,from=0,dir=-``.

    ``interleave(...)`` needs ``T`` unless its first part is finite.
    """
    from .arcs import parse_arc

    t = text.strip()
    if t.startswith("interleave(") and t.endswith(")"):
        first, second = _split_top(t[len("interleave(") : -1])
        alpha, beta = parse_schedule(first, T), parse_schedule(second)
        if T is None:
            if alpha.length is None:
                raise ValueError("interleaving an infinite schedule needs the triangulation")
            n = alpha.length
            return Interleaved(alpha, beta, lambda i: n)
        return interleave(T, alpha, beta)
    head, _, rest = t.partition(":")
    head = head.strip()
    if head == "finite":
        body = rest.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError("finite schedules look like finite:[(0,2);a(3)]")
        items = [x for x in body[1:-1].split(";") if x.strip()]
        surface = T.surface if T is not None else COMPLETED
        return FiniteList(tuple(parse_arc(x, surface) for x in items))
    words, opts = _options(rest)
    try:
        if head == "fan":
            return FanCollapse(int(opts["p"]), int(opts.get("start", 2)), opts.get("dir", "+"))
        if head == "sweep":
            return AsymptoticSweep(words[0], int(opts["from"]), opts.get("dir", "-"))
        if head == "alt":
            return AlternatingSweep(words[0], int(opts.get("center", 0)), opts.get("first", "+"))
        if head == "zigzag2fountain":
            return ZigzagToFountain(int(opts["l"]), opts.get("orient", "left"))
        if head == "shift":
            return FountainShift(words[0], int(opts["at"]))
    except (KeyError, IndexError) as exc:
        raise ValueError(f"missing field {exc} in schedule {text!r}") from exc
    raise ValueError(f"unknown schedule {text!r}")
