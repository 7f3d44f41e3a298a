import json
import random
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_triangulation
from infgon.arcs import Arc
from infgon.cli import SCHEMA, parse_presentation, run
from infgon.errors import ParseError, ValidationError
from infgon.render import render
from infgon.triangulation import INFTY, CompletedFountain, LeftInfRight, SplitFountain, ZigzagLF, instantiate


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_presentation_template_only():
    T = parse_presentation("surface: completed\ntemplate: cfountain a=0 b=0")
    assert T == instantiate(CompletedFountain(0, 0))


def test_presentation_with_flips():
    T = parse_presentation("surface: completed\ntemplate: cfountain a=0 b=0\nflips: (0,2)\n")
    assert Arc(1, 3) in T and Arc(0, 2) not in T


def test_presentation_with_explicit_patch():
    T = parse_presentation("surface: infty\ntemplate: zigzag c=0 orient=right\nremoved: (-1,1)\nadded: (0,2)\n")
    assert Arc(0, 2) in T


def test_presentation_errors():
    with pytest.raises(ParseError):
        parse_presentation("template: cfountain a=3 b=1")
    with pytest.raises(ParseError) as info:
        parse_presentation("surface: completed\ntemplate: cfountain a=0\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_presentation("surface: torus\ntemplate: allprufer")
    with pytest.raises(ParseError):
        parse_presentation("surface: completed\nshape: allprufer")
    with pytest.raises(ValidationError):
        parse_presentation("surface: infty\ntemplate: allprufer")
    with pytest.raises(ValidationError):
        parse_presentation("template: cfountain a=0 b=0\nflips: (1,3)")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_presentation_round_trip(seed):
    T = random_triangulation(random.Random(seed))
    assert parse_presentation(T.presentation()) == T


def test_classify_command(tmp_path):
    f = write(tmp_path, "t.tri", "surface: completed\ntemplate: linf b=3\n")
    assert run(["classify", f]) == (0, "class: T(-inf, 3)\n")


def test_phi_command():
    assert run(["phi", "p(3)"]) == (0, "Pi_3\n")
    assert run(["phi", "(1,4)"]) == (0, "M_{1,4}\n")
    assert run(["phi", "q(3)"])[0] == 2


def test_route_command_verifies(tmp_path):
    a = write(tmp_path, "a.tri", "template: allprufer\n")
    b = write(tmp_path, "b.tri", "template: cfountain a=0 b=0\n")
    code, text = run(["route", a, b, "--verify", "--horizon", "60"])
    assert code == 0
    assert text.startswith("stage: dashed sweep:prufer")
    assert "verdict: Pass" in text and "stage 2: Pass" in text


def test_verify_command_reads_a_witness_file(tmp_path):
    a = write(tmp_path, "a.tri", "template: dinf c=0\n")
    b = write(tmp_path, "b.tri", "template: allprufer\n")
    good = write(tmp_path, "good.w", "stage: solid sweep:adic,from=0,dir=- expect=T(inf, inf)\n")
    bad = write(tmp_path, "bad.w", "stage: solid sweep:prufer,from=0,dir=- expect=T(inf, inf)\n")
    assert run(["verify", a, good, "--target", b, "--horizon", "60"])[0] == 0
    code, text = run(["verify", a, bad, "--horizon", "60"])
    assert code == 1 and "Fails(" in text
    broken = write(tmp_path, "broken.w", "step: solid\n")
    assert run(["verify", a, broken])[0] == 2


def test_mutate_command(tmp_path):
    f = write(tmp_path, "t.tri", "template: cfountain a=0 b=0\n")
    code, text = run(["mutate", f, "fan:p=0,start=2,dir=+", "--window", "3"])
    assert code == 0
    assert "verdict: Certified" in text and "maximal: No(p(1))" in text
    code, text = run(["mutate", f, "finite:[z]"])
    assert code == 1 and "Fails(1)" in text


def test_complete_command_json(tmp_path):
    f = write(tmp_path, "t.tri", "template: cfountain a=0 b=0\n")
    code, text = run(["--json", "complete", f, "fan:p=0,start=2,dir=+"])
    data = json.loads(text)
    assert code == 0 and data["schema"] == SCHEMA and data["exit_code"] == 0
    assert data["class"] == "T(0, 1)" and data["certification"] == "Certified"


def test_equiv_command(tmp_path):
    a = write(tmp_path, "a.tri", "template: cfountain a=0 b=2\n")
    b = write(tmp_path, "b.tri", "template: dinf c=0\n")
    code, text = run(["equiv", a, b, "--obstruction"])
    assert code == 1
    assert "leq_s: False" in text and "geq_s: True" in text and "obstruction:" in text
    code, text = run(["equiv", a, a])
    assert code == 0 and "strongly equivalent: yes" in text


def test_oracle_commands():
    assert run(["oracle", "count", "10"]) == (0, "1430\n")
    assert run(["oracle", "distance", "5", "(0,2);(0,3)", "(1,3);(1,4)"]) == (0, "2\n")
    assert run(["oracle", "random", "7", "--seed", "4"]) == run(["oracle", "random", "7", "--seed", "4"])
    assert run(["oracle", "random", "7"])[0] == 2
    assert run(["oracle", "distance", "5", "(0,2);(1,3)", "(1,3);(1,4)"])[0] == 2


def test_usage_errors_exit_two(tmp_path):
    assert run(["nonsense"])[0] == 2
    assert run(["classify", str(tmp_path / "missing.tri")])[0] == 2
    f = write(tmp_path, "bad.tri", "template: cfountain a=3 b=1\n")
    code, text = run(["classify", f])
    assert code == 2 and text.startswith("parse error")


def test_render_command_is_deterministic(tmp_path):
    f = write(tmp_path, "t.tri", "template: linf b=2\n")
    first = run(["render", f, "--format", "svg", "--window", "6"])
    assert first == run(["render", f, "--format", "svg", "--window", "6"])
    ET.fromstring(first[1].split("\n", 1)[1])


def test_console_entry_point(tmp_path):
    f = write(tmp_path, "t.tri", "template: linf b=3\n")
    out = subprocess.run([sys.executable, "-m", "infgon.cli", "classify", f], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "class: T(-inf, 3)\n"


# ---------------------------------------------------------------- render


def test_ascii_shows_fan_and_margins():
    text = render(instantiate(LeftInfRight(2)), 6)
    lines = text.splitlines()
    assert any(line.rstrip().endswith("a(-6)") and line.startswith("<") for line in lines)
    assert any(line.rstrip().endswith("(2,6)") for line in lines)
    assert "-inf" in lines[-1] and lines[-1].rstrip().endswith("inf")


def test_ascii_empty_window_is_a_bare_number_line():
    text = render(instantiate(SplitFountain(5, 6), INFTY), 1)
    assert text.splitlines() == ["  *...*...*", " -1   0   1"]


def test_render_rejects_bad_input():
    T = instantiate(CompletedFountain(0, 0))
    with pytest.raises(ValueError):
        render(T, 0)
    with pytest.raises(ValueError):
        render(T, 3, "png")


@pytest.mark.parametrize("spec", [LeftInfRight(2), CompletedFountain(-1, 1), ZigzagLF(0, "right")])
def test_svg_is_well_formed(spec):
    T = instantiate(spec)
    svg = render(T, 5, "svg")
    root = ET.fromstring(svg.split("\n", 1)[1])
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    titles = [t.text for t in root.iter("{http://www.w3.org/2000/svg}title")]
    assert len(titles) == len(T.window(-5, 5))
