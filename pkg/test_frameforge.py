#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas de la línea de comandos (frameforge.run en el mismo proceso)
"""

import json

import pytest

from frameforge import EXIT_OK, EXIT_REJECTED, EXIT_USAGE, run

C4_AXES = "(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)"


def _json_output(capsys):
    return json.loads(capsys.readouterr().out)


def _json_lines(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines()]


def test_verify_signature_set(capsys):
    assert run(["verify", "--group", "C4xC4", "--set", C4_AXES, "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert (data["n"], data["k"], data["mu"]) == (16, 6, 2)
    assert data["valid"] is True
    assert data["group"] == "C4xC4"


def test_verify_quasi_text_output(capsys):
    assert run(["verify", "--group", "C5", "--set", "1,4", "--quasi"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "(6,3)" in out


def test_verify_rejection(capsys):
    assert run(["verify", "--group", "C9", "--set", "1,2", "--json"]) == EXIT_REJECTED
    data = _json_output(capsys)
    assert data["valid"] is False
    assert data["clause"] == "S = S⁻¹"


def test_usage_errors(capsys):
    assert run([]) == EXIT_USAGE
    assert run(["verify", "--group", "S3", "--set", "1"]) == EXIT_USAGE
    assert run(["verify", "--group", "C5", "--set", "7"]) == EXIT_USAGE
    assert run(["verify", "--group", "C5", "--set", "0,1"]) == EXIT_USAGE
    assert run(["tables", "--algorithm", "thm99", "--max-m", "3"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "❌ Error" in err


def test_tables(capsys):
    assert run(["tables", "--algorithm", "thm59", "--max-m", "99", "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert data["count"] == 31
    assert data["rows"][0] == {"algorithm": "thm59", "m": 0, "p": 5, "n": 6, "k": 3}

    assert run(["tables", "--algorithm", "thm511", "--max-m", "5", "--emit-sets", "--emit-matrix", "2", "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert [row["m"] for row in data["rows"]] == [2, 5]
    assert data["rows"][0]["set"] == [1, 2, 4, 8, 9, 13, 15, 16]
    assert len(data["matrix"]) == 18

    assert run(["tables", "--algorithm", "thm511", "--max-m", "1"]) == EXIT_REJECTED
    assert run(["tables", "--algorithm", "thm59", "--max-m", "3", "--emit-matrix", "2"]) == EXIT_USAGE


def test_tables_excel(tmp_path, capsys):
    out = tmp_path / "tabla.xlsx"
    assert run(["tables", "--algorithm", "thm59", "--max-m", "20", "--excel", str(out)]) == EXIT_OK
    assert out.exists()
    assert "(6,3)" in capsys.readouterr().out


def test_search(capsys):
    assert run(["search", "--group", "C5", "--kind", "quasi", "--threads", "1", "--json"]) == EXIT_OK
    hits = _json_lines(capsys)
    assert hits
    assert ["1", "4"] in [hit["set"] for hit in hits]

    assert run(["search", "--group", "C9", "--kind", "cube-pair", "--mu", "-2", "--threads", "1"]) == EXIT_OK
    assert "Sin resultados" in capsys.readouterr().out

    assert run(["search", "--group", "C37", "--kind", "signature"]) == EXIT_USAGE


def test_search_json_one_hit_per_line(capsys):
    argv = ["search", "--group", "C6", "--kind", "cube-pair", "--json", "--threads", "1"]
    assert run(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    hits = [json.loads(line) for line in lines]
    for hit in hits:
        assert hit["group"] == "C6"
        assert hit["mu"] == 4
        assert "t" in hit and "hits" not in hit

    assert run(["search", "--group", "C9", "--kind", "cube-pair", "--mu", "-2", "--json", "--threads", "1"]) == EXIT_OK
    assert capsys.readouterr().out == ""

def test_diffset(capsys):
    assert run(["diffset", "--group", "C11", "--set", "1,3,4,5,9", "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert (data["n"], data["k"], data["lambda"]) == (11, 5, 2)

    assert run(["diffset", "--group", "C11", "--set", "1,3,4,5,9", "--to-signature", "--json"]) == EXIT_REJECTED
    capsys.readouterr()

    assert run(["diffset", "--group", "C4xC4", "--set", C4_AXES, "--to-signature", "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert data["hadamard"] is True
    assert (data["n"], data["k"]) == (16, 6)


def test_cube_verify(capsys):
    argv = ["cube-verify", "--group", "Q8", "--s=-1", "--t", "i,j,k", "--quasi", "--json"]
    assert run(argv) == EXIT_OK
    data = _json_output(capsys)
    assert (data["n"], data["k"], data["mu"]) == (9, 6, -2)
    assert data["conditions"]["passed"] is True
    assert data["t"] == ["i", "j", "k"]

    assert run(["cube-verify", "--group", "Q8", "--s=-1", "--t", "i,j,k", "--json"]) == EXIT_REJECTED
    capsys.readouterr()

    assert run(["cube-verify", "--group", "C3", "--s", "1,2", "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert data["mu"] == 1
    assert data["identities"] is True


def test_matrix_and_frame_round_trip(tmp_path, capsys):
    matrix_json = tmp_path / "q.json"
    matrix_csv = tmp_path / "q.csv"
    vectors_csv = tmp_path / "v.csv"
    argv = ["matrix", "--group", "C13", "--set", "1,3,4,9,10,12", "--quasi",
            "--out", str(matrix_csv), "--json-out", str(matrix_json)]
    assert run(argv) == EXIT_OK
    assert matrix_csv.exists() and matrix_json.exists()

    assert run(["frame", "--from", str(matrix_json), "--out", str(vectors_csv), "--json"]) == EXIT_OK
    data = _json_output(capsys)
    assert data["passed"] is True
    assert (data["n"], data["k"], data["mu"]) == (14, 7, 0)
    assert len(vectors_csv.read_text(encoding="utf-8").splitlines()) == 14

    stored = json.loads(matrix_json.read_text(encoding="utf-8"))
    stored["mu"] = 4
    matrix_json.write_text(json.dumps(stored), encoding="utf-8")
    assert run(["frame", "--from", str(matrix_json)]) == EXIT_USAGE


def test_cube_matrix_json(capsys):
    argv = ["matrix", "--group", "Q8", "--cube", "--s=-1", "--t", "i,j,k", "--quasi", "--json"]
    assert run(argv) == EXIT_OK
    data = _json_output(capsys)
    assert data["n"] == 9 and data["mu"] == -2
    assert data["entries"][0] == ["0"] + ["1"] * 8
    assert data["entries"][1][3] == "w2"

    assert run(["matrix", "--group", "C5"]) == EXIT_USAGE


if __name__ == "__main__":
    print("=== PRUEBAS DE LA LÍNEA DE COMANDOS ===\n")
    raise SystemExit(pytest.main([__file__, "-q"]))
