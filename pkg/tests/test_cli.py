import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from icfl.cli import FactorReport, main, read_fasta
from icfl import icfl

from conftest import ABCD, words


def run(argv, data: bytes = b""):
    out = io.StringIO()
    code = main(argv, stdin=io.BytesIO(data), stdout=out)
    return code, out.getvalue()


def test_factorize_text():
    assert run(["factorize", "--mode", "icfl", "--alphabet", "abcd"], b"dabadabdabdadac\n") == (
        0,
        "daba|dabdab|dadac\n",
    )
    assert run(["factorize", "--mode", "cfl", "--alphabet", "abcd"], b"bbcbcacad\n") == (0, "bbcbc|acad\n")
    assert run(["factorize", "--mode", "cfl-in", "--alphabet", "abcd"], b"dabadabdabdadac\n") == (
        0,
        "daba|dab|dab|dadac\n",
    )


def test_empty_input_warns(capsys):
    assert run(["factorize"], b"") == (0, "")
    assert "no records" in capsys.readouterr().err


def test_check_predicates():
    assert run(["check", "--predicate", "inverse-lyndon", "--alphabet", "ab"], b"bbababbaa\n") == (0, "true\n")
    assert run(["check", "--predicate", "lyndon", "--alphabet", "ab"], b"aba\n") == (1, "false\n")
    for pred in ("lyndon", "anti-lyndon", "inverse-lyndon", "sesquipower"):
        assert run(["check", "--predicate", pred], b"a\n") == (0, "true\n")


def test_check_json_and_sesquipower_cap(capsys):
    code, out = run(["check", "--predicate", "sesquipower", "--output", "json"], b"bab\n")
    assert code == 0 and json.loads(out) == {"id": "1", "predicate": "sesquipower", "value": True}
    code, _ = run(["check", "--predicate", "sesquipower", "--cap", "3"], b"baba\n")
    assert code == 2 and "cap" in capsys.readouterr().err


def test_verify():
    data = b"dabadabdabdadac\na\ncbabacaacbabacbac\n"
    code, out = run(["verify", "--alphabet", "abcd"], data)
    assert code == 0
    assert out.splitlines() == ["1: ok", "2: ok", "3: ok"]
    code, out = run(["verify", "--alphabet", "abcd", "--inject-fault"], b"dabadabdabdadac\n")
    assert code == 1 and "FAIL" in out and "reassembly" in out


def test_verify_json_skips_compatibility_over_cap():
    code, out = run(["verify", "--output", "json", "--cap", "4"], b"dabadabdabdadac\n")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["checks"]["compatibility"] is None


def test_suffix_sort_modes():
    for mode in ("naive", "merge"):
        assert run(["suffix-sort", "--mode", mode, "--alphabet", "dcba"], b"bbcbcacad\n") == (
            0,
            "6 8 1 4 2 5 7 3 9\n",
        )
    assert run(["suffix-sort"], b"aaaa\n") == (0, "4 3 2 1\n")
    code, _ = run(["suffix-sort", "--mode", "naive", "--cap", "3"], b"aaaa\n")
    assert code == 2


def test_fasta_records(capsys):
    data = b">s1 first\nACG\nTTA\n>empty\n\n>s2\nGATTACA\n"
    code, out = run(["factorize", "--format", "fasta"], data)
    assert code == 0
    assert out.splitlines() == [f"s1 first\t{icfl(b'ACGTTA').render()}", f"s2\t{icfl(b'GATTACA').render()}"]
    assert "empty" in capsys.readouterr().err


def test_fasta_preserves_case():
    recs = list(read_fasta(io.BytesIO(b">x\nacGT\r\nNn\n")))
    assert [(r.id, r.word) for r in recs] == [("x", b"acGTNn")]


def test_json_report_fields():
    code, out = run(
        ["factorize", "--output", "json", "--show-factors", "--alphabet", "abcd"], b"dabadabdabdadac\n"
    )
    assert code == 0
    d = json.loads(out)
    assert list(d) == [
        "id", "kind", "length", "factor_count", "factor_lengths", "min", "max", "mean", "median", "boundaries",
        "factors",
    ]
    assert d["factor_lengths"] == [4, 6, 5] and d["boundaries"] == [1, 5, 11]
    assert out.rstrip("\n") == FactorReport.from_json(out).to_json()
    assert '"mean": 5.000000' in out


@given(words(max_size=40), st.booleans())
def test_json_round_trip(w, show):
    rep = FactorReport.build("r", icfl(w, ABCD), show)
    line = rep.to_json()
    assert FactorReport.from_json(line).to_json() == line
    assert sum(rep.factor_lengths) == rep.length


def test_out_of_alphabet(capsys):
    code, _ = run(["factorize", "--alphabet", "abc"], b"abc\nabz\n")
    err = capsys.readouterr().err
    assert code == 2 and "record 2" in err and "position 3" in err


def test_usage_and_io_errors(tmp_path, capsys):
    assert run(["factorize", "--mode", "nope"])[0] == 2
    assert run(["factorize", "--alphabet", "aa"])[0] == 2
    assert run([])[0] == 2
    assert run(["factorize", str(tmp_path / "missing.txt")])[0] == 3
    capsys.readouterr()


def test_reads_file(tmp_path):
    p = tmp_path / "in.txt"
    p.write_bytes(b"bab\n\ncbabacbac\n")
    assert run(["factorize", "--alphabet", "abc", str(p)]) == (0, "bab\ncbaba|cbac\n")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "icfl", "factorize", "--alphabet", "abcd"],
        input=b"dabdadacddbdc\n",
        capture_output=True,
    )
    assert proc.returncode == 0 and proc.stdout == b"dab|dadac|ddbdc\n"
