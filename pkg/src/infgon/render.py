"""ASCII and SVG arc diagrams of a triangulation restricted to a window ``[-N, N]``."""

from __future__ import annotations

from typing import Union

from .arcs import NEG_INF, POS_INF, Arc, format_arc
from .arcsets import ArcSet
from .triangulation import Triangulation

STEP = 4


def _arcs(T: Union[Triangulation, ArcSet], n: int) -> list[Arc]:
    S = T.arcset if isinstance(T, Triangulation) else T
    arcs = sorted(S.window(-n, n))

    def size(a: Arc) -> tuple:
        lo = -n - 1 if a.lo == NEG_INF else a.lo
        hi = n + 1 if a.hi == POS_INF else a.hi
        return (-(hi - lo), lo, hi)  # type: ignore[operator]

    return sorted(arcs, key=size)


def render_ascii(T: Union[Triangulation, ArcSet], n: int) -> str:
    if n < 1:
        raise ValueError("window radius must be at least 1")
    S = T.arcset if isinstance(T, Triangulation) else T
    margin = len(str(-n)) + (4 if S.completed else 0)
    width = margin * 2 + 2 * n * STEP + 1

    def col(v) -> int:
        if v == NEG_INF:
            return 0
        if v == POS_INF:
            return width - 1
        return margin + (v + n) * STEP

    lines = []
    for a in _arcs(S, n):
        row = [" "] * width
        c1, c2 = col(a.lo), col(a.hi)
        for c in range(c1, c2 + 1):
            row[c] = "-"
        row[c1] = "<" if a.lo == NEG_INF else "+"
        row[c2] = ">" if a.hi == POS_INF else "+"
        lines.append("".join(row) + "  " + format_arc(a))
    axis = [" "] * width
    labels = [" "] * (width + 4)
    for v in range(-n, n + 1):
        axis[col(v)] = "*"
        text = str(v)
        start = col(v) - len(text) + 1 if v < 0 else col(v)
        for i, ch in enumerate(text):
            labels[start + i] = ch
    for c in range(col(-n), col(n)):
        if axis[c] == " ":
            axis[c] = "."
    if S.completed:
        for i, ch in enumerate("-inf"):
            labels[i] = ch
        for i, ch in enumerate("inf"):
            labels[width - 3 + i] = ch
        axis[0] = "|"
        axis[width - 1] = "|"
    lines.append("".join(axis).rstrip())
    lines.append("".join(labels).rstrip())
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_svg(T: Union[Triangulation, ArcSet], n: int) -> str:
    if n < 1:
        raise ValueError("window radius must be at least 1")
    S = T.arcset if isinstance(T, Triangulation) else T
    gap, side = 40, (60 if S.completed else 20)
    width = 2 * side + 2 * n * gap
    height = (n + 2) * gap + 40
    base = height - 30

    def x(v) -> int:
        if v == NEG_INF:
            return 10
        if v == POS_INF:
            return width - 10
        return side + (v + n) * gap

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{x(-n)}" y1="{base}" x2="{x(n)}" y2="{base}" stroke="black" stroke-width="1"/>',
    ]
    if S.completed:
        for v, label in ((NEG_INF, "-inf"), (POS_INF, "inf")):
            out.append(f'<line x1="{x(v)}" y1="{base}" x2="{x(v)}" y2="10" stroke="gray" stroke-dasharray="4 3"/>')
            out.append(f'<text x="{x(v)}" y="{base + 20}" font-size="12" text-anchor="middle">{label}</text>')
    for a in _arcs(S, n):
        x1, x2 = x(a.lo), x(a.hi)
        if a.finite:
            r = (x2 - x1) // 2
            d = f"M {x1} {base} A {r} {r} 0 0 1 {x2} {base}"
        else:
            rise = min(base - 12, (abs(x2 - x1) // 2) + 10)
            if a.lo == NEG_INF and a.hi == POS_INF:
                d = f"M {x1} {base - rise} L {x2} {base - rise}"
                rise = 0
            elif a.lo == NEG_INF:
                d = f"M {x2} {base} C {x2} {base - rise} {x1 + 20} {base - rise} {x1} {base - rise}"
            else:
                d = f"M {x1} {base} C {x1} {base - rise} {x2 - 20} {base - rise} {x2} {base - rise}"
        out.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="1"><title>{format_arc(a)}</title></path>')
    for v in range(-n, n + 1):
        out.append(f'<circle cx="{x(v)}" cy="{base}" r="3" fill="black"/>')
        out.append(f'<text x="{x(v)}" y="{base + 20}" font-size="12" text-anchor="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(T: Union[Triangulation, ArcSet], n: int, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(T, n)
    if fmt == "svg":
        return render_svg(T, n)
    raise ValueError(f"unknown format {fmt!r}")

