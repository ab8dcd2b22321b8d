import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from nilgrass.cli import run
from nilgrass.combinatorics import permutations
from nilgrass.grassmann import GrassmannRing
from nilgrass.nilhecke import NilHecke
from nilgrass.parsing import BinOp, ParseError, Psi, Y, parse, parse_class, parse_element
from nilgrass.serialize import class_from_json, class_to_json, element_from_json, element_to_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_ast():
    assert parse("psi[1]*y2") == BinOp("*", Psi((1,), 0), Y(2, 7))


def test_parse_and_print():
    H = NilHecke(2)
    assert str(parse_element("y1^2*psi[1]", H)) == "psi[1]*y2^2 - y1 - y2"
    assert not parse_element("psi[1,1]", H)
    assert parse_element("-(y1 - 2)*3", H) == H.y(1) * -3 + 6


def test_precedence():
    H = NilHecke(2)
    assert parse_element("1 + y1*y2", H) == H.y(1) * H.y(2) + 1
    assert parse_element("2 - y1 - y2", H) == 2 - H.y(1) - H.y(2)


@pytest.mark.parametrize(
    "src,offset",
    [("psi[3]", 4), ("y1 +", 4), ("y1 ** y2", 4), ("psi[1", 5), ("z1", 0), ("(y1", 3), ("y3", 0)],
)
def test_parse_errors_carry_offsets(src, offset):
    with pytest.raises(ParseError) as info:
        parse(src, n=2)
    assert info.value.offset == offset


@st.composite
def elements(draw):
    if draw(st.booleans()):
        alg = NilHecke(draw(st.integers(1, 3)))
        cap = lambda i: 3
    else:
        ell = draw(st.integers(2, 4))
        alg = NilHecke(draw(st.integers(1, min(ell, 3))), ell)
        cap = lambda i: ell - i
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        w = draw(st.sampled_from(permutations(alg.n)))
        c = tuple(draw(st.integers(0, cap(i))) for i in range(1, alg.n + 1))
        terms[(w, c)] = draw(st.integers(-(10**40), 10**40))
    return alg.element(terms)


@given(elements())
def test_print_parse_round_trip(x):
    text = str(x)
    y = parse_element(text, x.algebra)
    assert y == x
    assert str(y) == text


@given(elements())
def test_json_round_trip(x):
    data = json.loads(json.dumps(element_to_json(x)))
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
    assert element_from_json(data) == x


def test_class_round_trip():
    ring = GrassmannRing(2, 3)
    x = ring.cls((0, 2), -7) + ring.cls((1, 3), 10**50)
    assert parse_class(str(x), ring) == x
    assert class_from_json(json.loads(json.dumps(class_to_json(x)))) == x
    assert parse_class("0", ring) == ring.zero()
    assert parse_class("1,2", ring) == ring.cls((1, 2))


def test_mul_schubert():
    code, out, _ = call("mul-schubert", "--ell", "4", "--n", "2", "(0,1)", "(0,1)")
    assert (code, out.strip()) == (0, "(0,2) + (1,1)")
    code, out, _ = call("mul-schubert", "--ell", "4", "--n", "2", "--oracle", "(0,1)", "(0,1)", "(0,1)", "(0,1)")
    assert out.strip() == "2*(2,2)"


def test_mul_schubert_json():
    code, out, _ = call("mul-schubert", "--ell", "4", "--n", "2", "--json", "(0,1)", "(0,1)")
    data = json.loads(out)
    assert data["classes"] == [{"index": [0, 2], "coeff": "1"}, {"index": [1, 1], "coeff": "1"}]


def test_normal_form_and_mul_nh():
    assert call("normal-form", "--n", "2", "y1^2*psi[1]")[1].strip() == "psi[1]*y2^2 - y1 - y2"
    assert call("normal-form", "--n", "2", "--ell", "2", "y2")[1].strip() == "-y1"
    assert call("normal-form", "--n", "2", "--ell", "2", "--flavor", "free", "y2")[1].strip() == "y2"
    assert call("mul-nh", "--n", "2", "y2", "psi[1]")[1].strip() == "psi[1]*y1 + 1"
    code, out, _ = call("mul-nh", "--n", "2", "--json", "y2", "psi[1]")
    assert element_from_json(json.loads(out)) == NilHecke(2).psi(1) * NilHecke(2).y(1) + 1


def test_center():
    code, out, _ = call("center", "--ell", "3", "--n", "2")
    assert code == 0
    assert "y1*y2" in out and "y1 + y2" in out and "= 1" in out


def test_giambelli_eta_map():
    assert call("giambelli", "--ell", "4", "--n", "2", "(1,2)")[1].strip() == "ct1*ct2 = (1,2)"
    assert call("giambelli", "--second", "--ell", "5", "--n", "2", "(1,1)")[1].strip() == "(0,0,2)"
    assert call("eta", "--ell", "4", "--n", "2", "(1,1)")[1].strip() == "b(1,1)"
    assert call("eta", "--hat", "--ell", "4", "--n", "2", "(1,2)")[1].strip() == "b(2,1)"
    assert call("map", "--which", "tau", "--ell", "4", "(0,1)")[1].strip() == "(2,4)"
    assert call("map", "--which", "rho", "--ell", "4", "(2,4)")[1].strip() == "(1)"
    assert call("map", "--which", "zeta", "--ell", "5", "--n", "2", "(0,1)")[1].strip() == "(0,0,1)"


def test_verify_exit_codes():
    code, out, _ = call("verify", "--suite", "all", "--ell", "4", "--n", "2")
    assert code == 0
    assert out.strip().endswith("overall: PASS")
    code, out, _ = call("verify", "--suite", "duality", "--ell", "4", "--n", "2", "--json")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["verify", "--suite", "nope"], "--suite"),
        (["verify", "--ell", "x"], "--ell"),
        (["normal-form", "y1"], "--n"),
        (["center", "--ell", "2", "--n", "3"], "--n"),
        (["normal-form", "--n", "2", "psi[3]"], "offset"),
        (["map", "--which", "tau", "(0,1)"], "--ell"),
    ],
)
def test_usage_errors(argv, flag, capsys):
    code, _, err = call(*argv)
    assert code == 2
    assert flag in err + capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nilgrass", "mul-schubert", "--ell", "4", "--n", "2", "(1,1)", "(1,1)"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(2,2)"
