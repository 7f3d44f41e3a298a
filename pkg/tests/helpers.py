"""Random triangulation generators shared by the test modules."""

from __future__ import annotations

import random

from infgon.mutation import flip, is_mutable
from infgon.triangulation import (
    COMPLETED,
    INFTY,
    AllAdic,
    AllPrufer,
    CompletedFountain,
    DoubleInf,
    LeftInfRight,
    LeftMinusInf,
    LeftRightInf,
    RightInfRight,
    SplitFountain,
    ZigzagLF,
    instantiate,
)


def templates(lo: int = -3, hi: int = 3, surface=COMPLETED) -> list:
    """Every catalog template with parameters in ``[lo, hi]`` available on ``surface``."""
    vals = range(lo, hi + 1)
    out = [ZigzagLF(c, o) for c in vals for o in ("left", "right")]
    if surface is INFTY:
        return out + [SplitFountain(a, b) for a in vals for b in vals if a <= b]
    out += [CompletedFountain(a, b) for a in vals for b in vals if a <= b]
    out += [LeftInfRight(b) for b in vals] + [RightInfRight(b) for b in vals]
    out += [LeftRightInf(a) for a in vals] + [LeftMinusInf(a) for a in vals]
    out += [DoubleInf(c) for c in vals] + [AllPrufer(), AllAdic()]
    return out


def random_template(rng: random.Random, lo: int = -3, hi: int = 3, surface=None):
    if surface is None:
        surface = rng.choice([COMPLETED, COMPLETED, INFTY])
    return rng.choice(templates(lo, hi, surface)), surface


def mutable_arcs(T, radius: int = 6) -> list:
    return sorted(a for a in T.window(-radius, radius) if is_mutable(T, a))


def random_flips(rng: random.Random, T, count: int, radius: int = 6):
    for _ in range(count):
        T = flip(T, rng.choice(mutable_arcs(T, radius)))
    return T


def random_triangulation(rng: random.Random, max_flips: int = 4, lo: int = -3, hi: int = 3, surface=None):
    spec, surface = random_template(rng, lo, hi, surface)
    return random_flips(rng, instantiate(spec, surface), rng.randint(0, max_flips))
