import json
from fractions import Fraction

import pytest

from pointfree import cli, io
from pointfree.errors import ParseError
from pointfree.frames import chain_frame, powerset_frame
from pointfree.intervalfn import chi_witness
from pointfree.rieszfd import RieszVec
from pointfree.spatial import INF, FiniteSpace, IntervalValuedFn


def test_rationals():
    assert io.fmt_rational(Fraction(-3, 6)) == "-1/2"
    assert io.parse_rational("3/4") == Fraction(3, 4)
    assert io.parse_rational(2) == 2
    assert io.parse_rational("-inf", allow_inf=True) == -INF
    for bad in ("inf", "x", 0.5, True):
        with pytest.raises(ParseError):
            io.parse_rational(bad)


def test_roundtrips(chain3):
    assert io.frame_from_dict(io.frame_to_dict(chain3)) == chain3
    f = chi_witness(chain3, 1)
    d = io.function_to_dict(f)
    assert io.function_from_dict(json.loads(io.dumps(d))) == f
    X = FiniteSpace.sierpinski()
    assert io.space_from_dict(io.space_to_dict(X)) == X
    g = IntervalValuedFn(X, (Fraction(1), -INF), (Fraction(1), INF))
    assert io.interval_fn_from_dict(io.interval_fn_to_dict(g)) == g
    v = RieszVec.of(1, Fraction(-2, 3))
    assert io.vector_from_dict(io.vector_to_dict(v)) == v


def test_partial_functions_carry_flags(chain3):
    from pointfree.realfn import characteristic
    d = io.function_to_dict(characteristic(chain3, 0, 0))
    assert d["class"] == "partial" and d["hausdorff"] is False


def test_bad_frames():
    with pytest.raises(ParseError):
        io.frame_from_dict({"elements": ["a"]})
    with pytest.raises(ParseError):
        io.frame_from_dict({"elements": ["a", "b"], "leq": [[0, 5]]})
    with pytest.raises(ParseError):
        io.loads("{")


def _write(tmp_path, frame):
    p = tmp_path / "frame.json"
    p.write_text(io.dumps(io.frame_to_dict(frame)))
    return str(p)


def test_classify_cmd(tmp_path, capsys):
    path = _write(tmp_path, chain_frame(3))
    assert cli.main(["classify", path, "--format", "structured"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["properties"]["extremally_disconnected"] is True
    assert out["properties"]["boolean"] is False


def test_booleanize_and_spectrum_cmds(tmp_path, capsys):
    path = _write(tmp_path, chain_frame(3))
    out = tmp_path / "b.json"
    assert cli.main(["booleanize", path, "--out", str(out)]) == 0
    assert io.frame_from_dict(json.loads(out.read_text())).n == 2
    assert cli.main(["spectrum", path]) == 0
    assert len(json.loads(capsys.readouterr().out)["points"]) == 2


def test_generate_cmd(capsys):
    assert cli.main(["generate", "--seed", "5", "--max-size", "6"]) == 0
    first = capsys.readouterr().out
    cli.main(["generate", "--seed", "5", "--max-size", "6"])
    assert capsys.readouterr().out == first
    assert io.frame_from_dict(json.loads(first)).n <= 6


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert cli.main(["classify", str(bad)]) == 2
    assert cli.main(["classify", str(tmp_path / "missing.json")]) == 2
    m3 = tmp_path / "m3.json"
    m3.write_text(json.dumps({"elements": list("0abc1"),
                              "leq": [[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]]}))
    assert cli.main(["classify", str(m3)]) == 2
    assert cli.main(["verify", "--grid", "1,0"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suites", "nope"])
    assert exc.value.code == 2


def test_verify_pass_and_fail(capsys):
    assert cli.main(["verify", "--suites", "rieszfd", "--samples", "5"]) == 0
    assert "checks passed" in capsys.readouterr().out
    rc = cli.main(["verify", "--suites", "spatial", "--check", "spatial.discrete_iff",
                   "--format", "structured"])
    report = json.loads(capsys.readouterr().out)
    assert rc == 1 and report["passed"] is False
    assert report["checks"][0]["counterexample"] is not None
