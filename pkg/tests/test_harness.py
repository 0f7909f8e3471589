import json

import pytest

from parres.algebra import (AlgebraError, NotHomogeneousError, PolyParseError)
from parres.cli import build_parser, bundled_ring_text, main
from parres.harness import (load_ring_spec, parse_ring_spec,
                            reproduce_example, stabilization_scan,
                            verify_inequality, verify_main_theorem)

GOOD = """
# comment
[field]
32003
[vars]
a b c
[ideal]
a*c
b*c
c^2
[sop x]
a
b
[caps]
homological = 4
power = 4
"""


def test_parse_ring_spec_roundtrip():
    spec = parse_ring_spec(GOOD)
    assert spec.ring.dimension() == 2
    assert spec.sop("x").degrees() == (1, 1)
    assert spec.cap("homological", 0) == 4
    assert spec.sop().name == "x"


def test_parse_empty_ideal_is_polynomial_ring():
    spec = parse_ring_spec("[field]\n7\n[vars]\na b\n[ideal]\n[sop x]\na\nb\n")
    assert spec.ring.is_polynomial_ring()
    assert spec.ring.dimension() == 2


def test_parse_rejects_inhomogeneous_generator():
    text = "[field]\n7\n[vars]\na b c\n[ideal]\na*c + b\n"
    with pytest.raises(NotHomogeneousError) as exc:
        parse_ring_spec(text)
    assert "line 6" in str(exc.value)


def test_parse_error_carries_line():
    with pytest.raises(PolyParseError) as exc:
        parse_ring_spec("[field]\n7\n[vars]\na b\n[ideal]\na + * b\n")
    assert exc.value.line == 6


def test_parse_unknown_variable():
    with pytest.raises(PolyParseError):
        parse_ring_spec("[field]\n7\n[vars]\na b\n[ideal]\na*z\n")


def test_parse_bad_sections():
    with pytest.raises(PolyParseError):
        parse_ring_spec("[junk]\n")
    with pytest.raises(PolyParseError):
        parse_ring_spec("orphan line\n")
    with pytest.raises(PolyParseError):
        parse_ring_spec("[field]\nseven\n")
    with pytest.raises(AlgebraError):
        parse_ring_spec("[vars]\na\n")  # missing [field]


def test_load_ring_spec_from_file(tmp_path):
    path = tmp_path / "test.ring"
    path.write_text(GOOD, encoding="utf-8")
    spec = load_ring_spec(path)
    assert spec.ring.dimension() == 2


def test_bundled_rings_all_parse():
    for name in ("r1", "r2", "regular", "hypersurface", "nonflc"):
        spec = parse_ring_spec(bundled_ring_text(name), name=name)
        for sname in spec.sops:
            assert spec.sop(sname).count >= 2


def test_report_determinism(r1):
    a = verify_inequality(r1.ring, r1.sop("x"), 3)
    b = verify_inequality(r1.ring, r1.sop("x"), 3)
    assert a.to_json() == b.to_json()
    doc = json.loads(a.to_json())
    assert doc["experiment"] == "inequality"
    assert all(set(v) == {"claim", "pass", "left", "right"}
               for v in doc["verdicts"])


def test_timings_in_text_not_structured(r1):
    rep = reproduce_example(r1.ring, r1.sop("x"), cap=2)
    assert "time " in rep.to_text()
    assert "time" not in json.loads(rep.to_json())
    assert "timings" not in json.loads(rep.to_json())


def test_main_theorem_guard_on_r1(r1):
    rep = verify_main_theorem(r1.ring, r1.sop("x"), 3)
    assert any(v["right"] == "NOT-APPLICABLE" for v in rep.verdicts)
    assert rep.passed()  # guard verdicts are informational


def test_scan_on_nonflc_still_runs(nonflc):
    rep = stabilization_scan(nonflc.ring, nonflc.sop("y"), 2, nmax=2)
    assert "betti_totals" in rep.data


def test_cli_parser_flags():
    parser = build_parser()
    args = parser.parse_args(["resolve", "--ring", "r1", "--sop", "x",
                              "--cap", "3", "--format", "structured"])
    assert args.command == "resolve" and args.cap == 3
    args = parser.parse_args(["scan", "--ring", "r2", "--power-max", "2"])
    assert args.power_max == 2


def test_cli_end_to_end(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["resolve", "--ring", "r1", "--sop", "x", "--cap", "2",
                 "--format", "structured", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["data"]["poincare"] == [1, 2, 3]
    code2 = main(["resolve", "--ring", "r1", "--sop", "x", "--cap", "2"])
    captured = capsys.readouterr()
    assert code2 == 0 and "betti" in captured.out


def test_cli_byte_identical_runs(tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"run{i}.json"
        main(["koszul", "--ring", "r1", "--sop", "x",
              "--format", "structured", "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_cli_errors(capsys, tmp_path):
    assert main(["resolve", "--ring", str(tmp_path / "missing.ring")]) == 1
    assert "error:" in capsys.readouterr().err
    bad = tmp_path / "bad.ring"
    bad.write_text("[field]\n7\n[vars]\na b\n[ideal]\na + * b\n")
    assert main(["resolve", "--ring", str(bad)]) == 1
    assert main(["koszul", "--ring", "r1", "--sop", "nope"]) == 1
