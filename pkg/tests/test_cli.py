"""End-to-end CLI checks: exit codes, determinism, schema diagnostics."""

import json

import pytest

from coulombkit.cli import main, validate_schema


def run(capsys, argv, stdin_doc=None, monkeypatch=None, tmp_path=None):
    """Invoke the CLI with a JSON document supplied through a temp file."""
    if stdin_doc is not None:
        path = tmp_path / "input.json"
        path.write_text(json.dumps(stdin_doc))
        argv = argv + ["--input", str(path)]
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_km_mult(capsys, tmp_path):
    doc = {"cartan": "A2", "lambda": {"fund": [1, 1]}, "mu": {"fund": [0, 0]}}
    code, out, _ = run(capsys, ["km", "mult"], doc, tmp_path=tmp_path)
    assert code == 0
    assert json.loads(out) == {"multiplicity": 2}


def test_km_tensor(capsys, tmp_path):
    doc = {"cartan": "A2", "lambda1": {"fund": [1, 0]}, "lambda2": {"fund": [0, 1]}}
    code, out, _ = run(capsys, ["km", "tensor"], doc, tmp_path=tmp_path)
    assert code == 0
    assert json.loads(out) == {
        "components": [[{"fund": [0, 0]}, 1], [{"fund": [1, 1]}, 1]]
    }


def test_km_dual(capsys, tmp_path):
    code, out, _ = run(capsys, ["km", "dual"], {"cartan": "B2"}, tmp_path=tmp_path)
    assert code == 0
    assert json.loads(out)["cartan"]["matrix"] == [[2, -1], [-2, 2]]


def test_quiver_slice_trivial_v(capsys, tmp_path):
    doc = {"vertices": 1, "edges": [], "v": [0], "w": [2]}
    code, out, _ = run(capsys, ["quiver", "slice"], doc, tmp_path=tmp_path)
    assert code == 0
    parsed = json.loads(out)
    assert parsed["lambda"] == parsed["mu"] == {"fund": [2]}


def test_quiver_strata_finite(capsys, tmp_path):
    doc = {"cartan": "A1", "lambda": {"fund": [2]}, "mu": {"fund": [0]}}
    code, out, _ = run(capsys, ["quiver", "strata"], doc, tmp_path=tmp_path)
    assert code == 0
    assert json.loads(out) == {"strata": [{"fund": [2]}, {"fund": [0]}]}


def test_quiver_strata_affine_requires_depth(capsys, tmp_path):
    doc = {"cartan": "A1~", "lambda": {"fund": [2, 0]}, "mu": {"fund": [2, 0], "delta": -1}}
    code, _, err = run(capsys, ["quiver", "strata"], doc, tmp_path=tmp_path)
    assert code == 1 and "--depth" in err


def test_quiver_satake(capsys, tmp_path):
    doc = {"cartan": "A1", "lambda": {"fund": [2]}, "mu": {"fund": [0]}}
    code, out, _ = run(capsys, ["quiver", "satake"], doc, tmp_path=tmp_path)
    assert code == 0
    assert json.loads(out) == {"nonempty": True, "dual_multiplicity": 1}


def test_abelian_ring_surface(capsys, tmp_path):
    doc = {
        "theory": {"rank": 1, "characters": [[1], [1]]},
        "a": {"rank": 1, "terms": [{"coweight": [1], "poly": [{"coeff": "1", "powers": [0]}]}]},
        "b": {"rank": 1, "terms": [{"coweight": [-1], "poly": [{"coeff": "1", "powers": [0]}]}]},
    }
    code, out, _ = run(capsys, ["abelian", "ring"], doc, tmp_path=tmp_path)
    assert code == 0
    parsed = json.loads(out)
    assert parsed["result"] == "(w1**2)"
    assert parsed["element"]["terms"] == [
        {"coweight": [0], "poly": [{"coeff": "1", "powers": [2]}]}
    ]


def test_abelian_quantize_and_poisson(capsys, tmp_path):
    theory = {"rank": 1, "characters": [[1], [1], [1]]}
    x = {"rank": 1, "terms": [{"coweight": [1], "poly": [{"coeff": "1", "powers": [0]}]}]}
    y = {"rank": 1, "terms": [{"coweight": [-1], "poly": [{"coeff": "1", "powers": [0]}]}]}
    code, out, _ = run(
        capsys, ["abelian", "quantize"], {"theory": theory, "element": x}, tmp_path=tmp_path
    )
    assert code == 0
    assert json.loads(out)["operator"]["terms"] == [
        {"coweight": [1], "poly": [{"coeff": "1", "powers": [3, 0]}]}
    ]
    code, out, _ = run(
        capsys, ["abelian", "poisson"], {"theory": theory, "a": x, "b": y}, tmp_path=tmp_path
    )
    assert code == 0
    assert json.loads(out)["element"]["terms"] == [
        {"coweight": [0], "poly": [{"coeff": "3", "powers": [2]}]}
    ]


def test_abelian_hilbert(capsys, tmp_path):
    doc = {"rank": 1, "characters": [[1], [1]]}
    code, out, _ = run(capsys, ["abelian", "hilbert", "--max-deg", "2"], doc, tmp_path=tmp_path)
    assert code == 0
    assert json.loads(out) == {"dimensions": [["0", 1], ["1/2", 0], ["1", 3], ["3/2", 0], ["2", 5]]}


def test_hypertoric_compare_verdicts(capsys, tmp_path):
    code, out, _ = run(
        capsys, ["hypertoric", "compare", "--max-deg", "2"], [[1], [1]], tmp_path=tmp_path
    )
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_jordan_hilbert(capsys, tmp_path):
    code, out, _ = run(
        capsys, ["jordan", "hilbert", "--max-deg", "3"], {"n": 1, "ell": 2}, tmp_path=tmp_path
    )
    assert code == 0
    parsed = json.loads(out)
    assert [d for _, d in parsed["dimensions"]] == [1, 0, 3, 0, 5, 0, 7]


def test_validate_ok_and_violations(capsys, tmp_path):
    good = {"vertices": 2, "edges": [[0, 1]], "v": [1, 1], "w": [0, 0]}
    code, out, _ = run(capsys, ["validate", "--schema", "quiver"], good, tmp_path=tmp_path)
    assert code == 0 and json.loads(out) == {"diagnostics": []}

    bad = {"vertices": 2, "edges": [[0, 1]], "v": [-1, 1], "w": [0, 0]}
    code, out, _ = run(capsys, ["validate", "--schema", "quiver"], bad, tmp_path=tmp_path)
    assert code == 2
    diag = json.loads(out)["diagnostics"]
    assert len(diag) == 1 and diag[0].startswith("/v/0")

    out_of_range = {"vertices": 2, "edges": [[0, 2]]}
    diags = validate_schema(out_of_range, "quiver")
    assert diags == ["/edges/0/1: vertex index out of range"]


def test_malformed_input_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("not json")
    code = main(["km", "mult", "--input", str(path)])
    out, err = capsys.readouterr()
    assert code == 1 and "invalid JSON" in err

    missing = tmp_path / "missing.json"
    code = main(["km", "mult", "--input", str(missing)])
    _, err = capsys.readouterr()
    assert code == 1 and "cannot read" in err


def test_timeout_exit_code(capsys, tmp_path):
    doc = {
        "cartan": "A1~",
        "lambda": {"fund": [6, 6]},
        "mu": {"fund": [6, 6], "delta": -8},
    }
    path = tmp_path / "slow.json"
    path.write_text(json.dumps(doc))
    code = main(
        ["quiver", "strata", "--input", str(path), "--depth", "8", "--timeout", "0.0001"]
    )
    _, err = capsys.readouterr()
    assert code == 3 and "cancelled" in err


def test_output_byte_stable(capsys, tmp_path):
    doc = {"cartan": "A2", "lambda": {"fund": [2, 2]}, "mu": {"fund": [0, 0]}}
    code1, out1, _ = run(capsys, ["km", "mult"], doc, tmp_path=tmp_path)
    code2, out2, _ = run(capsys, ["km", "mult"], doc, tmp_path=tmp_path)
    assert code1 == code2 == 0 and out1 == out2


def test_outputs_reparse_under_schema(capsys, tmp_path):
    theory = {"rank": 1, "characters": [[1]]}
    x = {"rank": 1, "terms": [{"coweight": [1], "poly": [{"coeff": "1", "powers": [0]}]}]}
    code, out, _ = run(
        capsys, ["abelian", "quantize"], {"theory": theory, "element": x}, tmp_path=tmp_path
    )
    assert code == 0
    parsed = json.loads(out)
    assert validate_schema(parsed["operator"], "operator") == []
