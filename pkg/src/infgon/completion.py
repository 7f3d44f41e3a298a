"""Prüfer and adic completions, and mutation followed by completion.

The candidate sets are computed on indices: ``m`` stands for ``p(m)`` in the
Prüfer sets and for ``a(m)`` in the adic ones.  ``p(m)`` crosses a member
``(x, y)`` exactly when ``y`` is finite and ``x < m < y``; ``a(m)`` crosses it
exactly when ``x`` is finite and ``x < m < y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .arcs import NEG_INF, POS_INF, Arc, adic, is_finite, prufer
from .arcsets import ArcSet, AsymRun, Zigzag
from .errors import CompletionNotMaximal, NotFinitelyPresented, TriangulationError
from .intervals import IntervalSet
from .triangulation import (
    AllAdic,
    AllPrufer,
    CompletedFountain,
    DoubleInf,
    LeftInfRight,
    LeftMinusInf,
    LeftRightInf,
    RightInfRight,
    SplitFountain,
    Triangulation,
    ZigzagLF,
    instantiate,
    profile_of,
    validate_patch,
    window_probe,
)


class CompletionFlavor(Enum):
    PRUFER = "prufer"
    ADIC = "adic"


PROBE_MARGIN = 8


def _point_near_zero(s: IntervalSet) -> Optional[int]:
    best = None
    for lo, hi in s.parts:
        m = 0 if lo <= 0 <= hi else (int(lo) if lo > 0 else int(hi))
        if best is None or (abs(m), m) < (abs(best), best):
            best = m
    return best


@dataclass(frozen=True)
class CompletionSets:
    """Index sets of the asymptotic arcs that cross nothing in ``N`` (and in ``N`` plus the other kind)."""

    prufer: IntervalSet
    adic: IntervalSet
    prufer_tilde: IntervalSet
    adic_tilde: IntervalSet
    present_prufer: IntervalSet
    present_adic: IntervalSet

    def missing_prufer(self) -> Optional[Arc]:
        m = _point_near_zero(self.prufer.intersect(self.present_prufer.complement()))
        return None if m is None else prufer(m)

    def missing_adic(self) -> Optional[Arc]:
        m = _point_near_zero(self.adic.intersect(self.present_adic.complement()))
        return None if m is None else adic(m)

    def describe(self) -> dict:
        return {
            "P": self.prufer.describe(),
            "A": self.adic.describe(),
            "P~": self.prufer_tilde.describe(),
            "A~": self.adic_tilde.describe(),
        }


def _arcset(N) -> ArcSet:
    if isinstance(N, ArcSet):
        return N
    if isinstance(N, Triangulation):
        return N.arcset
    if getattr(N, "arcs", None) is None:
        raise NotFinitelyPresented("the arc set has only an empirical window snapshot")
    return N.arcs


def _present(S: ArcSet, kind: str) -> IntervalSet:
    out = IntervalSet()
    for f in S.families:
        if isinstance(f, AsymRun) and f.kind == kind:
            out = out.union(f.range)
    gone, extra = [], []
    for a in S.removed:
        k = _index(a, kind)
        if k is not None:
            gone.append(k)
    for a in S.extra:
        k = _index(a, kind)
        if k is not None:
            extra.append(k)
    return out.minus(gone).union(IntervalSet.points(extra))


def _index(a: Arc, kind: str) -> Optional[int]:
    if kind == "adic" and a.lo == NEG_INF and is_finite(a.hi):
        return a.hi  # type: ignore[return-value]
    if kind == "prufer" and a.hi == POS_INF and is_finite(a.lo):
        return a.lo  # type: ignore[return-value]
    return None


def _index_in(a: Arc, kind: str, idx: IntervalSet) -> bool:
    k = _index(a, kind)
    return k is not None and k in idx


def _crossed(S: ArcSet, finite_lo: bool) -> IntervalSet:
    out = IntervalSet()
    for f in S.families:
        out = out.union(f.covered(S.removed, finite_lo))
    for a in S.extra:
        if (finite_lo and is_finite(a.lo)) or (not finite_lo and is_finite(a.hi)):
            out = out.union(IntervalSet.range(a.lo + 1, a.hi - 1))
    return out


def completion_sets(N) -> CompletionSets:
    S = _arcset(N)
    P = _crossed(S, finite_lo=False).complement()
    A = _crossed(S, finite_lo=True).complement()
    # p(m) crosses a(k) iff m < k, so it must sit at or above every adic candidate
    if not A:
        P_t = P
    elif A.high == math.inf:
        P_t = IntervalSet()
    else:
        P_t = P.clip(A.high, math.inf)
    if not P:
        A_t = A
    elif P.low == -math.inf:
        A_t = IntervalSet()
    else:
        A_t = A.clip(-math.inf, P.low)
    return CompletionSets(P, A, P_t, A_t, _present(S, "prufer"), _present(S, "adic"))


def _add_indices(S: ArcSet, kind: str, idx: IntervalSet) -> ArcSet:
    have = _present(S, kind)
    todo = idx.intersect(have.complement())
    if not todo:
        return S
    fams = list(S.families)
    extra = set(S.extra)
    removed = set(S.removed)
    for lo, hi in todo.parts:
        if math.isinf(lo) or math.isinf(hi):
            fams.append(AsymRun(kind, None if math.isinf(lo) else int(lo), None if math.isinf(hi) else int(hi)))
        else:
            for k in range(int(lo), int(hi) + 1):
                a = adic(k) if kind == "adic" else prufer(k)
                if a in removed:
                    removed.discard(a)
                else:
                    extra.add(a)
    return ArcSet(S.surface, tuple(fams), frozenset(extra), frozenset(a for a in removed if not _index_in(a, kind, todo)))


def completed_arcset(N, flavor: CompletionFlavor = CompletionFlavor.PRUFER) -> ArcSet:
    S = _arcset(N)
    sets = completion_sets(S)
    if flavor is CompletionFlavor.PRUFER:
        return _add_indices(_add_indices(S, "prufer", sets.prufer), "adic", sets.adic_tilde)
    return _add_indices(_add_indices(S, "adic", sets.adic), "prufer", sets.prufer_tilde)


# ------------------------------------------------------------ repackaging


def _templates(S: ArcSet) -> list:
    try:
        prof = profile_of(S)
    except ValueError:
        return []
    left, right = prof.left, prof.right
    lo, hi = S.extent
    if left is None and right is None:
        return [ZigzagLF(f.center, f.orient) for f in S.families if isinstance(f, Zigzag)]
    if left is None or right is None:
        return []
    if not S.completed:
        if is_finite(left) and is_finite(right) and left <= right:
            return [SplitFountain(int(left), int(right))]
        return []
    if is_finite(left) and is_finite(right):
        return [CompletedFountain(int(left), int(right))] if left <= right else []
    if is_finite(right):
        return [LeftInfRight(int(right)) if left == NEG_INF else RightInfRight(int(right))]
    if is_finite(left):
        return [LeftRightInf(int(left)) if right == POS_INF else LeftMinusInf(int(left))]
    if left == NEG_INF and right == POS_INF:
        return [DoubleInf(c) for c in range(lo - 2, hi + 3)]
    if left == POS_INF and right == POS_INF:
        return [AllPrufer()]
    if left == NEG_INF and right == NEG_INF:
        return [AllAdic()]
    return []


def _diff(S: ArcSet, base: ArcSet, radius: int) -> tuple[frozenset, frozenset]:
    mine, theirs = S.window(-radius, radius), base.window(-radius, radius)
    return theirs - mine, mine - theirs


def as_triangulation(S: ArcSet) -> Optional[Triangulation]:
    """Re-express a maximal arc set as a catalog template plus a finite patch, if possible."""
    best = None
    for spec in _templates(S):
        T0 = instantiate(spec, S.surface)
        lo, hi = S.extent
        blo, bhi = T0.base.extent
        radius = max(abs(lo), abs(hi), abs(blo), abs(bhi)) + 6
        removed, added = _diff(S, T0.base, radius)
        if _diff(S, T0.base, radius + 8) != (removed, added):
            continue
        if best is None or len(removed) + len(added) < best[0]:
            best = (len(removed) + len(added), T0, removed, added)
    if best is None:
        return None
    _, T0, removed, added = best
    try:
        return validate_patch(T0, removed, added)
    except TriangulationError:
        return None


def complete(N, flavor: CompletionFlavor = CompletionFlavor.PRUFER) -> Triangulation:
    S = _arcset(N)
    if not S.completed:
        T = as_triangulation(S)
        if T is None:
            raise CompletionNotMaximal("the arc set is not a triangulation of the infinity-gon")
        return T
    full = completed_arcset(S, flavor)
    lo, hi = full.extent
    radius = max(abs(lo), abs(hi)) + PROBE_MARGIN
    probe = window_probe(full, -radius, radius)
    if not probe.ok:
        raise CompletionNotMaximal(f"completion fails the window probe: {probe.reason} {probe.witness}")
    T = as_triangulation(full)
    if T is None:
        raise CompletionNotMaximal("the completed arc set has no finite presentation over the catalog")
    return T


@dataclass(frozen=True)
class CompletedMutation:
    result: Triangulation
    certified: bool
    horizon: int


def completed_mutation(
    T: Triangulation,
    s,
    flavor: CompletionFlavor = CompletionFlavor.PRUFER,
    horizon: int = 50,
) -> Triangulation:
    return completed_mutation_report(T, s, flavor, horizon).result


def completed_mutation_report(
    T: Triangulation,
    s,
    flavor: CompletionFlavor = CompletionFlavor.PRUFER,
    horizon: int = 50,
) -> CompletedMutation:
    from .mutation import evaluate

    N = evaluate(T, s, horizon)
    return CompletedMutation(complete(N, flavor), N.certificate.certified, horizon)


def parse_flavor(text: Union[str, CompletionFlavor]) -> CompletionFlavor:
    if isinstance(text, CompletionFlavor):
        return text
    return CompletionFlavor(text.strip().lower().replace("ü", "u"))
