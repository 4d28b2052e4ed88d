import json
from fractions import Fraction

import pytest

import ruledsurf.verify as verify_mod
from ruledsurf.cli import (
    format_bundle,
    format_cycle,
    format_divisor,
    format_rational,
    format_type,
    parse_bundle,
    parse_cycle,
    parse_divisor,
    parse_summands,
    parse_type,
    run,
)
from ruledsurf.geometry import DivisorClass
from ruledsurf.splitting import SplittingType
from ruledsurf.verify import SuiteResult


def _run(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def test_bundle_jump_example(capsys):
    code, out = _run(
        capsys,
        ["bundle", "jump", "--e", "1", "--r", "2", "--a", "1", "--c1", "2*h+0*f", "--c2", "3"],
    )
    assert code == 0
    assert out == "z  m\n4  -4\n"


def test_split_rigid_example(capsys):
    code, out = _run(capsys, ["split", "rigid", "--r", "5", "--d", "7"])
    assert code == 0
    assert "(2,2,1,1,1)" in out


def test_coh_line_example(capsys):
    code, out = _run(capsys, ["coh", "line", "--e", "0", "--D", "1*h+1*f"])
    assert code == 0
    assert out == "h0  h1  h2\n4   0   0\n"


def test_json_output_shape(capsys):
    code, out = _run(
        capsys,
        ["coh", "line", "--e", "0", "--D", "1*h+1*f", "--format", "json"],
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"subcommand", "inputs", "results", "status"}
    assert report["subcommand"] == "coh"
    assert report["status"] == "ok"
    assert report["results"] == [{"h0": 4, "h1": 0, "h2": 0}]
    assert parse_divisor(report["inputs"]["D"]) == DivisorClass(1, 1)


def test_json_values_round_trip(capsys):
    code, out = _run(
        capsys,
        ["bundle", "twist", "--e", "1", "--r", "2", "--c1", "2*h+0*f",
         "--c2", "3", "--L", "-1*h+0*f", "--format", "json"],
    )
    assert code == 0
    report = json.loads(out)
    twisted = parse_bundle(report["results"][0]["bundle"])
    assert twisted.c1 == DivisorClass(0, 0)
    assert twisted.c2 == 4

    code, out = _run(capsys, ["split", "chain", "--type", "(2,0,-2)", "--format", "json"])
    report = json.loads(out)
    chain = [parse_type(row["type"]) for row in report["results"]]
    assert chain[0] == SplittingType((0, 0, 0))
    assert chain[-1] == SplittingType((2, 0, -2))

    code, out = _run(
        capsys,
        ["surface", "chern", "--e", "1", "--r", "1", "--c1", "1*h+0*f",
         "--c2", "0", "--format", "json"],
    )
    report = json.loads(out)
    cycle = parse_cycle(report["results"][0]["cycle"])
    assert cycle.p2 == Fraction(-1, 2)


def test_deterministic_output(capsys):
    argv = ["verify", "conormal", "--format", "json"]
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second


def test_malformed_literal_position(capsys):
    code, out = _run(capsys, ["coh", "line", "--e", "0", "--D", "1*h+f"])
    assert code == 1
    assert "position 3" in out
    code, out = _run(capsys, ["split", "h1end", "--type", "(1,2)"])
    assert code == 1
    assert "position" in out


def test_unknown_flag_rejected(capsys):
    code, out = _run(
        capsys,
        ["surface", "canonical", "--e", "0", "--frobnicate", "1"],
    )
    assert code == 1
    assert "unrecognized" in out or "frobnicate" in out


def test_unknown_suite_rejected(capsys):
    code, out = _run(capsys, ["verify", "nonsense"])
    assert code == 1


def test_missing_group_rejected(capsys):
    code, _ = _run(capsys, [])
    assert code == 1


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_precondition_failure_is_input_error(capsys):
    code, out = _run(
        capsys,
        ["bundle", "jump", "--e", "1", "--r", "2", "--a", "1", "--c1", "1*h+0*f", "--c2", "3"],
    )
    assert code == 1
    assert "input-error" in out
    code, out = _run(capsys, ["coh", "line", "--q", "1", "--e", "0", "--D", "0*h+0*f"])
    assert code == 1
    assert "genus" in out


def test_verify_ok_exit_zero(capsys):
    code, out = _run(capsys, ["verify", "growth"])
    assert code == 0
    assert "true" in out


def test_verify_violation_exit_two(capsys, monkeypatch):
    def broken():
        return SuiteResult("serre", 7, False, {"e": 0, "D": "1*h+1*f"})

    monkeypatch.setitem(verify_mod.SUITES, "serre", (broken, set()))
    code, out = _run(capsys, ["verify", "serre", "--format", "json"])
    assert code == 2
    report = json.loads(out)
    assert report["status"] == "property-violation"
    assert report["results"][0]["counterexample"] == {"e": 0, "D": "1*h+1*f"}


def test_out_writes_report_verbatim(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = _run(
        capsys,
        ["split", "rigid", "--r", "3", "--d", "-2", "--format", "json", "--out", str(target)],
    )
    assert code == 0
    assert target.read_text(encoding="utf-8") == out


def test_divisor_literal_round_trip():
    for a in range(-4, 5):
        for b in range(-4, 5):
            d = DivisorClass(a, b)
            assert parse_divisor(format_divisor(d)) == d
    assert format_divisor(DivisorClass(-2, 3)) == "-2*h+3*f"
    assert format_divisor(DivisorClass(1, -4)) == "1*h-4*f"


def test_type_literal_round_trip():
    for parts in ((5,), (2, 2, 1, 1, 1), (1, 0, -1), (0, -3)):
        t = SplittingType(parts)
        assert parse_type(format_type(t)) == t
    with pytest.raises(ValueError):
        parse_type("(1,2)")
    with pytest.raises(ValueError):
        parse_type("1,0")


def test_bundle_literal_round_trip():
    text = "r=2; c1=2*h+0*f; c2=3; e=1; q=0"
    bundle = parse_bundle(text)
    assert format_bundle(bundle) == text
    with pytest.raises(ValueError):
        parse_bundle("r=2; c2=3")


def test_rational_and_cycle_literals():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    cycle = parse_cycle("(2,1/2,-1,0)")
    assert format_cycle(cycle) == "(2,1/2,-1,0)"
    with pytest.raises(ValueError):
        parse_cycle("(1,2,3)")


def test_summand_literal_positions():
    bundle = parse_summands("0*h+0*f,1*h+0*f")
    assert bundle.rank() == 2
    with pytest.raises(ValueError) as err:
        parse_summands("0*h+0*f,1*h")
    assert "position 11" in str(err.value)
