"""CLI surface: parsing, reports, exit codes, determinism, SVG output."""

import json
from fractions import Fraction

import pytest

from kustab.cli import ParseError, build_parser, default_collection, parse_class, run
from kustab.svg import render_walls_svg
from kustab.variety import ChernVector, get_preset
from kustab.walls import WallCircle

Q3 = get_preset("q3")
P4 = get_preset("p4")


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, *argv, "--json")
    return code, json.loads(out)


def test_parse_class_tokens():
    assert parse_class("O(2)", Q3) == (1, 2, 2, Fraction(4, 3))
    assert parse_class("O", Q3) == (1, 0, 0, 0)
    assert parse_class("S", Q3) == (2, -1, 0, Fraction(1, 12))
    assert parse_class("2,-1,0,1/12", Q3) == (2, -1, 0, Fraction(1, 12))
    assert parse_class("2,-1,0", Q3, truncated=True) == (2, -1, 0)


def test_parse_class_errors():
    with pytest.raises(ParseError, match="wrong arity"):
        parse_class("1,0,0", Q3)
    with pytest.raises(ParseError, match="malformed"):
        parse_class("O(x)", Q3)
    with pytest.raises(ParseError, match="malformed"):
        parse_class("spinor", Q3)
    with pytest.raises(ParseError, match="unknown symbol"):
        parse_class("S", P4)


def test_default_collections():
    assert len(default_collection(Q3)) == 3
    assert len(default_collection(P4)) == 5
    assert len(default_collection(get_preset("y4"))) == 2


def test_chi_command(capsys):
    code, doc = invoke_json(capsys, "chi", "--variety", "q3", "O", "O(1)")
    assert code == 0
    assert doc["result"]["chi"] == "5/1"
    assert doc["variety"] == "Q3"


def test_gram_command_paper(capsys):
    code, doc = invoke_json(capsys, "gram", "--variety", "q3",
                            "--convention", "paper")
    assert code == 0
    top = [Fraction(x) for x in doc["result"]["matrix"][0]]
    assert top == [Fraction(1, 2), Fraction(13, 12), Fraction(3, 2), 1]


def test_orth_command(capsys):
    code, doc = invoke_json(capsys, "orth", "--variety", "q3")
    assert code == 0
    assert doc["result"]["basis"] == [["2/1", "-1/1", "0/1", "1/12"]]


def test_nowall_command_text(capsys):
    code, out = invoke(capsys, "nowall", "--variety", "q3", "2,-1,0")
    assert code == 0
    assert "certificate: true" in out
    assert "interval: (0, 2)" in out
    assert "step: 2" in out


def test_blms_fail_still_exits_zero(capsys):
    code, doc = invoke_json(capsys, "blms", "--variety", "q3",
                            "--alpha", "1/2", "--beta", "-1/2")
    assert code == 0
    assert doc["result"]["verdict"] == "FAIL"


def test_alpha_range_command(capsys):
    code, doc = invoke_json(capsys, "alpha-range", "--variety", "q3",
                            "--beta", "-1/2")
    assert code == 0
    (iv,) = doc["result"]["intervals"]
    assert iv["text"] == "(0, 1/2)"


def test_usage_errors_exit_two(capsys):
    assert run(["bogus"]) == 2
    assert run(["chi", "--variety", "q3", "O"]) == 2           # missing arg
    assert run(["chi", "--variety", "q3", "1,0,0", "O"]) == 2  # wrong arity
    assert run(["chi", "--config", "/nonexistent.json", "O", "O"]) == 2
    capsys.readouterr()


def test_domain_errors_exit_three(capsys):
    code, out = invoke(capsys, "beta0", "--variety", "q3", "1,0,0")
    assert code == 3
    assert "no positive discriminant" in out
    code, _ = invoke(capsys, "chi", "--variety", "nosuch", "O", "O")
    assert code == 3


def test_determinism_text_and_json(capsys):
    argv = ["walls", "--variety", "q3", "1,0,-1"]
    _, first = invoke(capsys, *argv)
    _, second = invoke(capsys, *argv)
    assert first == second
    _, jfirst = invoke(capsys, *argv, "--json")
    _, jsecond = invoke(capsys, *argv, "--json")
    assert jfirst == jsecond


def test_json_round_trip(capsys):
    code, out = invoke(capsys, "classify", "--variety", "q3", "S", "--json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, sort_keys=True)) == doc
    assert doc["result"]["chi_self"] == "1/1"
    assert doc["result"]["serre_eigenvalue"] == "+1"


def test_fullness_command(capsys):
    code, doc = invoke_json(capsys, "fullness", "--variety", "q3",
                            "--gen", "S", "--stability-assumed")
    assert code == 0
    assert doc["result"]["verdict"] == "full-modulo-phantoms-excluded"
    code, doc = invoke_json(capsys, "fullness", "--variety", "p4")
    assert doc["result"]["verdict"] == "numerically-full"


def test_config_variety(tmp_path, capsys):
    cfg = tmp_path / "varieties.json"
    cfg.write_text(json.dumps({
        "default_variety": "qq",
        "varieties": [{
            "name": "QQ", "dim": 3, "degree": 2, "index": 3,
            "todd": ["1", "3/2", "13/12", "1/2"],
            "denoms": [1, 1, 2, 12],
            "low_deg_H_generated": True,
        }]}))
    code, doc = invoke_json(capsys, "chi", "--config", str(cfg), "O", "O(1)")
    assert code == 0
    assert doc["variety"] == "QQ"
    assert doc["result"]["chi"] == "5/1"


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run(["chi", "--variety", "q3", "O", "O", "--json",
                "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["result"]["chi"] == "1/1"


def test_svg_axes_only_for_certified_class(capsys):
    code, out = invoke(capsys, "svg", "--variety", "q3", "2,-1,0")
    assert code == 0
    assert out.count("<path") == 0
    assert out.count('class="axis"') >= 1
    assert out.startswith("<?xml")


def test_svg_single_circle(capsys):
    code, out = invoke(capsys, "svg", "--variety", "q3", "1,0,-1")
    assert code == 0
    assert out.count("<path") == 1
    # center -3/2, radius 1/2 with beta_min -4: arc runs from beta -2 to -1
    assert 'M 240.000000' in out
    assert "<title>" in out
    _, again = invoke(capsys, "svg", "--variety", "q3", "1,0,-1")
    assert out == again


def test_render_walls_svg_unit():
    empty = render_walls_svg([], {"beta_min": -2, "beta_max": 2,
                                  "alpha_max": 2})
    assert empty.count(b"<path") == 0
    one = render_walls_svg(
        [WallCircle(kind="circle", center_beta=Fraction(1, 2),
                    radius_sq=Fraction(1, 4),
                    witness=ChernVector([1, 0, 0]),
                    witnesses=(ChernVector([1, 0, 0]),))],
        {"beta_min": -2, "beta_max": 2, "alpha_max": 2})
    assert one.count(b"<path") == 1
    assert render_walls_svg([], {"beta_min": -2, "beta_max": 2,
                                 "alpha_max": 2}) == empty


def test_parser_builds_help():
    parser = build_parser()
    assert parser.format_help()


SMOKE = [
    ["chi", "O", "O(2)"],
    ["gram", "--convention", "chi"],
    ["orth", "O", "O(1)", "O(2)"],
    ["project", "0,0,0,1/2"],
    ["classify", "S"],
    ["serre"],
    ["zh", "S"],
    ["ztilt", "S", "--alpha", "1/4", "--beta", "-1/2", "--shift", "1"],
    ["heart", "O(-3)", "--shift", "2", "--alpha", "1/4", "--beta", "-1/2"],
    ["blms", "--alpha", "1/4", "--beta", "-1/2"],
    ["alpha-range", "--beta", "-1/2"],
    ["beta0", "2,-1,0"],
    ["nowall", "1,0,-1"],
    ["walls", "1,0,-1", "--max-rank", "2", "--max-c1", "2"],
    ["svg", "2,-1,0"],
    ["fullness", "--gen", "S", "--stability-assumed"],
]


def test_every_subcommand_smoke(capsys):
    for argv in SMOKE:
        code, out = invoke(capsys, *argv, "--variety", "q3")
        assert code == 0, argv
        assert out
        if argv[0] != "svg":
            code, doc = invoke_json(capsys, *argv, "--variety", "q3")
            assert code == 0 and "result" in doc
