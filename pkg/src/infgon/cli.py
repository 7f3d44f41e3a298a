"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from .arcs import SurfaceKind, format_arc, parse_arc, phi_label
from .completion import CompletionFlavor, completed_mutation_report, parse_flavor
from .equivalence import (
    UNKNOWN,
    classify,
    find_obstruction,
    leq_s,
    parse_witness,
    route,
    strongly_equivalent,
    verify_witness,
)
from .errors import CompletionError, InfGonError, MutationError, ParseError, TriangulationError, ValidationError
from .mutation import check_admissible, evaluate, flip, parse_schedule
from .oracle import PolyTriangulation, enum_triangulations, flip_distance
from .render import render
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
    validate_patch,
)

SCHEMA = "infgon.report/v1"

_TEMPLATES = {
    "zigzag": (ZigzagLF, {"c": int, "orient": str}, {"c": "center"}),
    "split": (SplitFountain, {"a": int, "b": int}, {}),
    "cfountain": (CompletedFountain, {"a": int, "b": int}, {}),
    "linf": (LeftInfRight, {"b": int}, {}),
    "rinf": (RightInfRight, {"b": int}, {}),
    "ainf": (LeftRightInf, {"a": int}, {}),
    "aminf": (LeftMinusInf, {"a": int}, {}),
    "dinf": (DoubleInf, {"c": int}, {}),
    "allprufer": (AllPrufer, {}, {}),
    "alladic": (AllAdic, {}, {}),
}


def _parse_template(text: str, line: int):
    words = text.split()
    if not words or words[0] not in _TEMPLATES:
        raise ParseError(f"unknown template {text!r}", line)
    cls, fields, rename = _TEMPLATES[words[0]]
    kwargs = {}
    for w in words[1:]:
        key, eq, value = w.partition("=")
        if not eq or key not in fields:
            raise ParseError(f"unexpected template field {w!r}", line)
        try:
            kwargs[rename.get(key, key)] = fields[key](value)
        except ValueError as exc:
            raise ParseError(f"bad value for {key}: {value!r}", line) from exc
    optional = ("c", "orient") if words[0] == "zigzag" else ()
    missing = [k for k in fields if rename.get(k, k) not in kwargs and k not in optional]
    if missing:
        raise ParseError(f"template {words[0]} needs {', '.join(missing)}", line)
    try:
        return cls(**kwargs)
    except ValueError as exc:
        raise ParseError(str(exc), line) from exc


def _arc_list(text: str, surface: SurfaceKind, line: Optional[int]) -> list:
    try:
        return [parse_arc(x, surface) for x in text.split(";") if x.strip()]
    except ValueError as exc:
        raise ParseError(str(exc), line) from exc


def parse_presentation(text: str) -> Triangulation:
    """Read ``surface:``, ``template:`` and optional ``flips:`` / ``removed:`` / ``added:`` lines."""
    fields: dict = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, value = line.partition(":")
        key = key.strip()
        if not colon or key not in ("surface", "template", "flips", "removed", "added"):
            raise ParseError(f"cannot read {line!r}", n)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", n)
        fields[key] = (value.strip(), n)
    if "template" not in fields:
        raise ParseError("missing template line")
    surface_text, n = fields.get("surface", ("completed", None))
    try:
        surface = SurfaceKind(surface_text)
    except ValueError as exc:
        raise ParseError(f"unknown surface {surface_text!r}", n) from exc
    spec = _parse_template(*fields["template"])
    try:
        T = instantiate(spec, surface)
    except InfGonError as exc:
        raise ValidationError(str(exc)) from exc
    if "flips" in fields:
        for a in _arc_list(fields["flips"][0], surface, fields["flips"][1]):
            try:
                T = flip(T, a)
            except InfGonError as exc:
                raise ValidationError(f"flip {format_arc(a)}: {exc}") from exc
    if "removed" in fields or "added" in fields:
        rtext, rline = fields.get("removed", ("", None))
        atext, aline = fields.get("added", ("", None))
        removed = _arc_list(rtext, surface, rline)
        added = _arc_list(atext, surface, aline)
        try:
            T = validate_patch(T, removed, added)
        except InfGonError as exc:
            raise ValidationError(str(exc)) from exc
    return T


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Triangulation:
    return parse_presentation(_read(path))


def _schedule_text(arg: str) -> str:
    return _read(arg).strip() if os.path.isfile(arg) else arg


def _schedule(arg: str, T: Optional[Triangulation] = None):
    try:
        return parse_schedule(_schedule_text(arg), T)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _chords(text: str) -> list:
    out = []
    for part in (p.strip() for p in text.split(";") if p.strip()):
        inner = part.strip("()")
        i, j = (int(x) for x in inner.split(","))
        out.append((i, j))
    return out


# ---------------------------------------------------------------- commands


def cmd_classify(args) -> tuple[int, dict, str]:
    T = _load(args.file)
    c = classify(T)
    return 0, {"class": str(c)}, f"class: {c}\n"


def cmd_mutate(args) -> tuple[int, dict, str]:
    T = _load(args.file)
    s = _schedule(args.schedule, T)
    rep = check_admissible(T, s, args.horizon)
    data = {
        "schedule": s.describe(),
        "horizon": args.horizon,
        "admissible_prefix": rep.admissible_prefix,
        "verdict": str(rep.verdict),
    }
    text = f"schedule: {s.describe()}\nhorizon: {args.horizon}\nadmissible prefix: {rep.admissible_prefix}\nverdict: {rep.verdict}\n"
    if rep.verdict.kind == "Fails":
        data["reason"] = rep.reason
        return 1, data, text + f"reason: {rep.reason}\n"
    N = evaluate(T, s, args.horizon)
    arcs = sorted(N.window(-args.window, args.window))
    data.update(
        certificate=N.certificate.kind,
        maximal=str(N.maximal),
        window=[-args.window, args.window],
        arcs=[format_arc(a) for a in arcs],
    )
    if N.arcs is not None:
        data["description"] = N.arcs.describe()
    text += f"certificate: {N.certificate.kind}\nmaximal: {N.maximal}\n"
    if N.arcs is not None:
        text += "".join(f"  {line}\n" for line in N.arcs.describe())
    text += f"window [{-args.window},{args.window}]: " + " ".join(format_arc(a) for a in arcs) + "\n"
    return 0, data, text


def cmd_complete(args) -> tuple[int, dict, str]:
    T = _load(args.file)
    s = _schedule(args.schedule, T)
    flavor = parse_flavor(args.flavor)
    try:
        res = completed_mutation_report(T, s, flavor, args.horizon)
    except (MutationError, CompletionError) as exc:
        return 1, {"error": str(exc), "horizon": args.horizon}, f"failed: {exc}\nhorizon: {args.horizon}\n"
    cert = "Certified" if res.certified else "UpToHorizon"
    data = {
        "presentation": res.result.presentation(),
        "class": str(classify(res.result)),
        "flavor": flavor.value,
        "certification": cert,
        "horizon": args.horizon,
    }
    text = res.result.presentation() + f"class: {classify(res.result)}\nflavor: {flavor.value}\ncertification: {cert}\nhorizon: {args.horizon}\n"
    return 0, data, text


def cmd_equiv(args) -> tuple[int, dict, str]:
    T1, T2 = _load(args.first), _load(args.second)
    eq = strongly_equivalent(T1, T2)
    c1, c2 = classify(T1), classify(T2)
    fwd = leq_s(c1, c2, args.obstruction, T1.surface)
    back = leq_s(c2, c1, args.obstruction, T1.surface)
    show = lambda v: "Unknown" if v is UNKNOWN else str(v)
    data = {"first": str(c1), "second": str(c2), "strongly_equivalent": eq, "leq_s": show(fwd), "geq_s": show(back)}
    text = f"first: {c1}\nsecond: {c2}\nstrongly equivalent: {'yes' if eq else 'no'}\nleq_s: {show(fwd)}\ngeq_s: {show(back)}\n"
    if args.obstruction and fwd is False:
        ob = find_obstruction(c1, c2)
        if ob is not None:
            data["obstruction"] = format_arc(ob.arc)
            text += f"obstruction: {ob.reason}\n"
    return (0 if eq else 1), data, text


def _report_text(rep) -> tuple[dict, str]:
    lines = []
    stages = []
    for r in rep.stages:
        lines.append(f"stage {r.index}: {r.verdict}" + (f" ({r.detail})" if r.detail else "") + (f" -> {r.reached}" if r.reached else ""))
        stages.append({"index": r.index, "verdict": r.verdict, "reached": str(r.reached) if r.reached else None, "detail": r.detail})
    lines.append(f"verdict: {rep.verdict}")
    lines.append(f"class match: {rep.class_match}")
    lines.append(f"final match: {rep.final_match}")
    lines.append(f"certification: {rep.certification}")
    lines.append(f"horizon: {rep.horizon}")
    data = {
        "stages": stages,
        "verdict": rep.verdict,
        "class_match": rep.class_match,
        "final_match": rep.final_match,
        "certification": rep.certification,
        "horizon": rep.horizon,
    }
    return data, "\n".join(lines) + "\n"


def cmd_route(args) -> tuple[int, dict, str]:
    T1, T2 = _load(args.first), _load(args.second)
    W = route(T1, T2)
    data: dict = {"witness": [s.describe() for s in W.stages]}
    text = W.text() or "(empty witness)\n"
    code = 0
    if args.verify:
        rep = verify_witness(T1, W, args.horizon, T2)
        rdata, rtext = _report_text(rep)
        data["verification"] = rdata
        text += rtext
        code = 0 if rep.ok else 1
    return code, data, text


def cmd_verify(args) -> tuple[int, dict, str]:
    T = _load(args.file)
    W = parse_witness(_read(args.witness))
    target = _load(args.target) if args.target else None
    rep = verify_witness(T, W, args.horizon, target)
    data, text = _report_text(rep)
    return (0 if rep.ok else 1), data, text


def cmd_render(args) -> tuple[int, dict, str]:
    T = _load(args.file)
    out = render(T, args.window, args.format)
    return 0, {"format": args.format, "window": [-args.window, args.window], "output": out}, out


def cmd_oracle(args) -> tuple[int, dict, str]:
    if args.action == "count":
        n = len(enum_triangulations(args.n))
        return 0, {"n": args.n, "count": n}, f"{n}\n"
    if args.action == "distance":
        if len(args.chords) != 2:
            raise ParseError("distance needs two chord lists")
        try:
            t1, t2 = (PolyTriangulation(args.n, _chords(c)) for c in args.chords)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        d = flip_distance(t1, t2)
        return 0, {"n": args.n, "distance": d}, f"{d}\n"
    if args.seed is None:
        raise ParseError("random needs --seed")
    pool = sorted(sorted(t.arcs) for t in enum_triangulations(args.n))
    pick = random.Random(args.seed).choice(pool)
    text = ";".join(f"({i},{j})" for i, j in pick)
    return 0, {"n": args.n, "seed": args.seed, "chords": [list(c) for c in pick]}, text + "\n"


def cmd_phi(args) -> tuple[int, dict, str]:
    try:
        a = parse_arc(args.arc)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    label = phi_label(a)
    return 0, {"arc": format_arc(a), "label": label}, label + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="infgon", description="Triangulations of the infinity-gon and its completion.")
    p.add_argument("--json", action="store_true", help="emit a machine-readable report")
    sub = p.add_subparsers(dest="command", required=True)

    def horizon(q):
        q.add_argument("--horizon", type=int, default=50)

    q = sub.add_parser("classify", help="strong mutation class of a presentation")
    q.add_argument("file")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("mutate", help="check and evaluate a schedule")
    q.add_argument("file")
    q.add_argument("schedule")
    q.add_argument("--window", type=int, default=10)
    horizon(q)
    q.set_defaults(func=cmd_mutate)

    q = sub.add_parser("complete", help="completed mutation along a schedule")
    q.add_argument("file")
    q.add_argument("schedule")
    q.add_argument("--flavor", default="prufer", choices=[f.value for f in CompletionFlavor])
    horizon(q)
    q.set_defaults(func=cmd_complete)

    q = sub.add_parser("equiv", help="compare the classes of two presentations")
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--obstruction", action="store_true", help="search for crossing obstructions")
    q.set_defaults(func=cmd_equiv)

    q = sub.add_parser("route", help="transfinite route between two presentations")
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--verify", action="store_true")
    q.add_argument("--flavor", default="prufer", choices=["prufer"], help="routes use Prufer completions")
    horizon(q)
    q.set_defaults(func=cmd_route)

    q = sub.add_parser("verify", help="replay a witness file")
    q.add_argument("file")
    q.add_argument("witness")
    q.add_argument("--target")
    horizon(q)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("render", help="draw a window as ASCII or SVG")
    q.add_argument("file")
    q.add_argument("--window", type=int, default=6)
    q.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    q.set_defaults(func=cmd_render)

    q = sub.add_parser("oracle", help="brute-force polygon triangulations")
    q.add_argument("action", choices=["count", "distance", "random"])
    q.add_argument("n", type=int)
    q.add_argument("chords", nargs="*")
    q.add_argument("--seed", type=int)
    q.set_defaults(func=cmd_oracle)

    q = sub.add_parser("phi", help="module label of an arc")
    q.add_argument("arc")
    q.set_defaults(func=cmd_phi)
    return p


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute a command line and return ``(exit code, output text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        code, data, text = args.func(args)
    except ParseError as exc:
        code, data, text = 2, {"error": str(exc), "line": exc.line}, f"parse error: {exc}\n"
    except (ValidationError, TriangulationError, OSError) as exc:
        code, data, text = 2, {"error": str(exc)}, f"invalid input: {exc}\n"
    except (InfGonError, ValueError) as exc:
        code, data, text = 2, {"error": str(exc)}, f"error: {exc}\n"
    if args.json:
        payload = {"schema": SCHEMA, "command": args.command, "exit_code": code, **data}
        return code, json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return code, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
