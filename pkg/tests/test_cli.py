"""CLI surface: output formats, exit codes, round-trips."""

import json

import pytest

from bellpart.cli import main
from bellpart.triangles import Family, stirling, stirling_b


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_table_bell_row0(capsys):
    code, out = run(capsys, "table", "bell", "--rows", "0")
    assert code == 0
    assert out == "0\t1\n"


def test_table_bell_b_last_line(capsys):
    code, out = run(capsys, "table", "bell-b", "--rows", "8")
    assert code == 0
    assert out.splitlines()[-1] == "8\t219920"


def test_table_stirling_d_matches_triangle(capsys):
    code, out = run(capsys, "table", "stirling-d", "--rows", "7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    # round-trip: re-parse the TSV and compare against the in-memory values
    for n, line in enumerate(lines):
        cells = [int(c) for c in line.split("\t")]
        assert cells == [stirling(Family.TYPE_D, n, k) for k in range(n + 1)]


def test_table_json_format(capsys):
    code, out = run(capsys, "table", "stirling-b", "--rows", "3", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[3] == {"n": 3, "cells": [1, 13, 9, 1]}


def test_table_unknown_family_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "stirling-q", "--rows", "3"])
    assert exc.value.code == 2


def test_table_negative_rows_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "bell", "--rows", "-1"])
    assert exc.value.code == 2


def test_verify_all(capsys):
    code, out = run(capsys, "verify", "all", "--max-n", "10")
    assert code == 0
    assert out.count("PASS") == 7


def test_verify_single_shows_values(capsys):
    code, out = run(capsys, "verify", "ODD_WEIGHT_SUM", "--max-n", "3")
    assert code == 0
    assert "n=2 lhs=rhs=18" in out
    assert "n=3 lhs=rhs=92" in out


def test_verify_d_bell_rec_reconstruction(capsys):
    code, out = run(capsys, "verify", "D_BELL_REC", "--max-n", "5")
    assert code == 0
    assert "n=5 lhs=rhs=403" in out


def test_verify_unknown_id_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "NOT_AN_IDENTITY", "--max-n", "3"])
    assert exc.value.code == 2


def test_enumerate_d1(capsys):
    code, out = run(capsys, "enumerate", "d", "1")
    assert code == 0
    assert out == "0 | 1/-1\ncount 1\n"


def test_enumerate_d2(capsys):
    code, out = run(capsys, "enumerate", "d", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "count 4"
    assert len(lines) == 5


def test_enumerate_pairs_filter(capsys):
    code, out = run(capsys, "enumerate", "b", "4", "--pairs", "2")
    assert code == 0
    assert out.splitlines()[-1] == f"count {stirling_b(4, 2)}"


def test_enumerate_pairs_beyond_n(capsys):
    code, out = run(capsys, "enumerate", "b", "2", "--pairs", "5")
    assert code == 0
    assert out == "count 0\n"


def test_enumerate_json_records(capsys):
    code, out = run(capsys, "enumerate", "d", "2", "--format", "json")
    assert code == 0
    lines = out.splitlines()
    records = [json.loads(line) for line in lines[:-1]]
    assert {"n": 2, "zero_support": [1, 2], "pairs": []} in records
    assert all(rec["n"] == 2 for rec in records)


def test_enumerate_classical(capsys):
    code, out = run(capsys, "enumerate", "classical", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "count 5"
    assert "1,2,3" in lines


def test_enumerate_deterministic(capsys):
    _, first = run(capsys, "enumerate", "b", "3")
    _, second = run(capsys, "enumerate", "b", "3")
    assert first == second


def test_oracle_check(capsys):
    code, out = run(capsys, "oracle-check", "4")
    assert code == 0
    assert out.splitlines()[-1] == "oracle-check: PASS"


def test_dobinski_ok(capsys):
    code, out = run(capsys, "dobinski", "d", "7", "1/2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("lo ")
    assert lines[1].startswith("hi ")
    assert "rounded 17867" in lines
    assert lines[-1] == "OK"


def test_dobinski_a0(capsys):
    code, out = run(capsys, "dobinski", "a", "0", "1/2")
    assert code == 0
    assert "rounded 1" in out


def test_dobinski_b8(capsys):
    code, out = run(capsys, "dobinski", "b", "8", "1/2")
    assert code == 0
    assert "rounded 219920" in out


def test_dobinski_bad_width(capsys):
    for bad in ("zero/half", "0", "-1/2"):
        with pytest.raises(SystemExit) as exc:
            main(["dobinski", "a", "3", bad])
        assert exc.value.code == 2


def test_egf_check(capsys):
    code, out = run(capsys, "egf-check", "7")
    assert code == 0
    assert "1,1,4,15,72,403,2546,17867" in out
    assert out.splitlines()[-1] == "egf-check: PASS"


def test_egf_check_order0(capsys):
    code, out = run(capsys, "egf-check", "0")
    assert code == 0
