"""Command line interface: formats, exit codes, batch mode."""
import csv
import io
import json

import pytest

from pcfzeros.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_csv_output(capsys):
    code, out, err = run(["--a", "-1.7", "--L", "12"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "re", "im", "est_rel_error", "iterations"]
    assert len(rows) == 24  # header + 23 zeros
    assert [r[0] for r in rows[1:]] == [str(i) for i in range(23)]
    # unverified runs leave the error column as nan
    assert all(r[3] == "nan" for r in rows[1:])


def test_json_output_and_roundtrip(capsys):
    code, out, err = run(
        ["--a", "2.3", "--L", "10", "--format", "json", "--verify"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["a"] == 2.3
    assert doc["L"] == 10.0
    assert set(doc["config"]) >= {"eps", "delta", "taylor_order", "lg_order"}
    assert len(doc["zeros"]) == 16
    for rec in doc["zeros"]:
        assert rec["est_rel_error"] is not None
        assert rec["est_rel_error"] < 1e-11
    # 17 significant digits survive a JSON round trip bit-exactly
    again = json.loads(json.dumps(doc))
    assert again == doc


def test_verify_fills_error_column(capsys):
    code, out, err = run(
        ["--a", "-1.7", "--L", "12", "--verify"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert all(float(r[3]) < 1e-11 for r in rows)


def test_deterministic_output(capsys):
    argv = ["--a", "-3.2", "--L", "15", "--verify"]
    out1 = run(argv, capsys)[1]
    out2 = run(argv, capsys)[1]
    assert out1 == out2


def test_hermite_parameter_exits_1(capsys):
    code, out, err = run(["--a", "-2.5", "--L", "10"], capsys)
    assert code == 1
    assert "hermite" in err.lower()


def test_half_is_not_hermite(capsys):
    code, out, err = run(["--a", "0.5", "--L", "10"], capsys)
    assert code == 0


def test_bad_flag_exits_1(capsys):
    code, out, err = run(["--a", "1.0"], capsys)  # missing --L
    assert code == 1


def test_out_file(tmp_path, capsys):
    path = tmp_path / "zeros.csv"
    code, out, err = run(
        ["--a", "-1.7", "--L", "12", "--out", str(path)], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(path.read_text())))
    assert len(rows) == 24


def test_table_mode(tmp_path, capsys):
    table = tmp_path / "cases.txt"
    table.write_text("-1.7 12\n2.3 10\n")
    code, out, err = run(["--table", str(table)], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "a,L,n_zeros,wall_time_seconds"
    first = lines[1].split(",")
    assert first[0] == "-1.7" and int(first[2]) == 23
    second = lines[2].split(",")
    assert int(second[2]) == 16


def test_table_mode_empty_file(tmp_path, capsys):
    table = tmp_path / "empty.txt"
    table.write_text("")
    code, out, err = run(["--table", str(table)], capsys)
    assert code == 0
    assert out.strip() == "a,L,n_zeros,wall_time_seconds"


def test_table_mode_malformed_line(tmp_path, capsys):
    table = tmp_path / "bad.txt"
    table.write_text("-1.7 12\noops\n")
    code, out, err = run(["--table", str(table)], capsys)
    assert code == 1
    assert ":2:" in err


def test_custom_eps(capsys):
    code, out, err = run(
        ["--a", "-1.7", "--L", "12", "--eps", "1e-13"], capsys)
    assert code == 0
    assert len(out.strip().split("\n")) == 24
