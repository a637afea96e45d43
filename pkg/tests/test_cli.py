import io
import json
import subprocess
import sys

import pytest

from orbitcalc import cli
from orbitcalc.classify4 import SpherePlusTwoPoints, TwoSpheres
from orbitcalc.dsl import Document, DocumentError, parse, parse_plain_matrix, serialize
from orbitcalc.intforms import IntSymMatrix
from orbitcalc.orbit_data import WeightedArc, WeightedOrbitSpace

from fuzz_corpus import SEEDS, corpus

Z2_ARC = "orbitspace4 { sphere a=1\narc b'=0 seifert=(2,1) b''=-1 }"


def run(argv, stdin=b""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin = io.TextIOWrapper(io.BytesIO(stdin))
    sys.stdout, sys.stderr = out, err
    try:
        code = cli.main(argv)
    finally:
        sys.stdin, sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    doc = parse(Z2_ARC)
    assert doc.kind == "orbitspace4"
    assert doc.payload == WeightedOrbitSpace(spheres=(1,), arcs=(WeightedArc(0, [(2, 1)], -1),))
    assert doc.locations["arc 0"] == (2, 1)
    doc = parse("seifert3 { b=0 eps=o g=0 hbar=2 t=0 }")
    assert (doc.payload.epsilon, doc.payload.h_bar) == ("o", 2)
    assert parse("matrix { n=2 rows=0 1 / 1 0 }").payload == IntSymMatrix([[0, 1], [1, 0]])
    assert parse("matrix { n=2 rows=0 1\n 1 0\n}").payload == IntSymMatrix([[0, 1], [1, 0]])
    assert parse("config { fix=s2+2pt arc=[0;(2,1);-1] }").payload == SpherePlusTwoPoints(
        arc=WeightedArc(0, [(2, 1)], -1))
    assert parse("# comment\nconfig { fix=s2+s2 omega=-4 } # trailing").payload == TwoSpheres(-4)
    assert parse_plain_matrix("2\n1 1\n1 2\n") == IntSymMatrix([[1, 1], [1, 2]])


@pytest.mark.parametrize("text", SEEDS)
def test_round_trip(text):
    doc = parse(text)
    again = parse(serialize(doc))
    assert again.kind == doc.kind and again.payload == doc.payload
    assert serialize(again) == serialize(doc)


@pytest.mark.parametrize("text, line, col", [
    ("orbitspace4 { sphere a=1\narc b'=0 seifert=(2,1 b''=-1 }", 2, 23),
    ("seifert3 { b=0 eps=q g=0 hbar=1 t=0 }", 1, 16),
    ("matrix { n=2 rows=1 2 / 3 }", 1, 14),
    ("config { fix=s3 }", 1, 10),
    ("nonsense { }", 1, 1),
    ("orbitspace4 { sphere a=1 } extra", 1, 28),
    ("orbitspace4 { sphere a=1 @ }", 1, 26),
])
def test_parse_errors_have_locations(text, line, col):
    with pytest.raises(DocumentError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert info.value.code == "E_PARSE"


def test_semantic_errors_keep_module_codes():
    with pytest.raises(DocumentError) as info:
        parse("orbitspace4 { point b=2 }")
    assert info.value.code == "E_LEGALITY" and info.value.line == 1
    with pytest.raises(DocumentError) as info:
        parse("matrix { n=2 rows=1 2 / 3 4 }")
    assert info.value.code == "E_PARSE"
    with pytest.raises(DocumentError):
        parse("1" * 2000)
    with pytest.raises(DocumentError):
        parse(b"\xff")


def test_classify4_z2_arc():
    code, out, _ = run(["classify4", "-", "--format", "json", "--trace"], Z2_ARC.encode())
    assert code == 0
    rep = json.loads(out)
    assert rep["manifold"] == "CP2 # CP2"
    assert rep["extendable"] is True and rep["euler_check"] is True
    assert rep["QM"] == [[1, 1], [1, 2]] and rep["reduction_steps"] == [[1, 2, -1]]
    assert rep["chain"]["omegas"] == [1, 2, 1] and rep["chain"]["t"] == 3
    for key in ("input", "legality", "chain", "B0", "QM", "invariants", "reduction_steps",
                "manifold", "extendable", "euler_check", "notes"):
        assert key in rep


def test_classify3_and_notes():
    code, out, _ = run(["classify3", "-"], b"seifert3 { b=0 eps=o g=0 hbar=1 t=0 seifert=(2,1),(2,1) }")
    assert code == 0 and "manifold: RP3 # RP3" in out
    twisted = b"seifert3 { b=0 eps=n g=1 hbar=1 t=0 }"
    code, out, _ = run(["classify3", "-"], twisted)
    assert code == 0 and "S2~xS1" in out and "note:" in out
    code, _, err = run(["classify3", "-", "--strict"], twisted)
    assert code == 4 and "E_STRICT" in err


def test_multi_segment_note_in_report():
    doc = b"config { fix=s2+2pt arc=[0;(2,1),(3,2);-1] }"
    code, out, _ = run(["classify4", "-", "--format", "json"], doc)
    assert code == 0 and json.loads(out)["notes"]
    assert run(["classify4", "-", "--strict"], doc)[0] == 4


def test_reduce_formats():
    code, out, _ = run(["reduce", "-", "--format", "json"], b"2\n-1 1\n1 -2\n")
    rep = json.loads(out)
    assert code == 0 and rep["endpoint"] == [[-1, 0], [0, -1]] and rep["reduction_steps"] == [[1, 2, 1]]
    code, out, _ = run(["reduce", "-"], b"matrix { n=2 rows=1 1 / 1 2 }")
    assert code == 0 and "(1,2,-1)" in out


def test_enumerate_table():
    code, out, _ = run(["enumerate", "--k-max", "6", "--format", "json"])
    rows = [c["row"] for c in json.loads(out)["cases"]]
    assert code == 0
    assert [1, 1, 1, 2, 1, 2] in rows and [-1, -1, -1, 2, 1, -2] in rows
    assert [-1, 1, 0, 6, 5, 6] in rows and [1, -1, 0, 6, 1, -6] in rows


@pytest.mark.parametrize("argv, stdin, code, err_code", [
    (["validate", "-"], b"orbitspace4 { sphere a=1 }", 3, "E_LEGALITY"),
    (["validate", "-"], b"orbitspace4 { sphere a=0 circle seifert=(2,1),(3,1) }", 3, "E_LEGALITY"),
    (["classify4", "-"], b"orbitspace4 { point b=1 point b=-1 }", 4, "E_UNSUPPORTED"),
    (["classify4", "-"], b"seifert3 { b=0 eps=o g=0 hbar=1 t=0 }", 2, "E_KIND"),
    (["classify3", "-"], b"seifert3 { b=1 eps=o g=0 hbar=0 t=0 }", 4, "E_UNSUPPORTED"),
    (["reduce", "-"], b"matrix { n=1 rows=2 }", 4, "E_NOT_UNIMODULAR"),
    (["reduce", "-"], b"{ oops", 2, "E_PARSE"),
    (["validate", "/nonexistent/file"], b"", 2, "E_IO"),
    (["enumerate", "--k-max", "1"], b"", 4, "E_UNSUPPORTED"),
])
def test_error_exit_codes(argv, stdin, code, err_code):
    got, out, err = run(argv + ["--format", "json"], stdin)
    assert got == code
    assert json.loads(out)["error"]["code"] == err_code
    assert f"error[{err_code}]" in err


def test_validate_reports_line_of_violation():
    doc = b"orbitspace4 {\n  sphere a=1\n  arc b'=0 seifert=(3,1) b''=1\n}\n"
    code, out, err = run(["validate", "-", "--format", "json"], doc)
    rep = json.loads(out)["report"]
    assert code == 3 and rep["legality"][0]["rule"] == "L2" and rep["legality"][0]["line"] == 3
    assert "line 3" in err


def test_fuzz_corpus_only_coded_diagnostics():
    cases = corpus(1000)
    assert len(cases) == 1000
    for command, data in cases:
        code, out, err = run([command, "-", "--format", "json"], data)
        assert code in (0, 2, 3, 4), (command, data, err)
        if code:
            assert err.startswith("orbitcalc: error[E_") and "Traceback" not in err
            assert json.loads(out)["exit_code"] == code


def test_structured_output_is_byte_identical_across_processes(tmp_path):
    path = tmp_path / "z2.orb"
    path.write_text(Z2_ARC)
    outs = [subprocess.run([sys.executable, "-m", "orbitcalc", "classify4", str(path), "--format", "json",
                            "--trace"], capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [subprocess.run([sys.executable, "-m", "orbitcalc", "enumerate", "--format", "json"],
                           capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]


def test_console_script_usage_error():
    res = subprocess.run([sys.executable, "-m", "orbitcalc", "bogus"], capture_output=True)
    assert res.returncode == 2
