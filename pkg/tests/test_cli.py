import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from sympchar.cli import MatrixFile, parse_matrix_file, render_matrix_file, run
from sympchar.errors import ParseError
from sympchar.matrix import Matrix
from sympchar.scalars import BiPoly

FIX = Path(__file__).parent / "fixtures"
DIAG = str(FIX / "diag1234.json")
DISSIMILAR = str(FIX / "diag1324.json")
NONSELFADJOINT = str(FIX / "nonselfadjoint.json")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_scp_command():
    code, out, _ = call("scp", DIAG)
    assert code == 0
    expected = BiPoly.pair_factor(1, 3) * BiPoly.pair_factor(2, 4)
    assert out.strip() == str(expected)


def test_factor_command():
    code, out, _ = call("factor", DIAG)
    assert code == 0
    assert out.splitlines()[0] == "((1-s)*(3-s)-t)*((2-s)*(4-s)-t)"


def test_similar_dissimilar_pair():
    code, out, _ = call("similar", DIAG, DISSIMILAR)
    assert code == 0 and out.strip() == "not-symplectically-similar"


def test_similar_to_itself(tmp_path):
    code, out, _ = call("similar", DIAG, DIAG, "--json")
    data = json.loads(out)
    assert code == 0 and data["result"] == "symplectically-similar"
    assert data["witness"] == [[str(int(i == j)) for j in range(4)] for i in range(4)]


def test_psi_error_token():
    code, _, err = call("psi", NONSELFADJOINT)
    assert code == 1 and err.startswith("NOT_SELF_ADJOINT:")
    assert len(err.strip().splitlines()) == 1
    code, out, _ = call("psi", NONSELFADJOINT, "--json")
    assert code == 1 and json.loads(out)["error"] == "NOT_SELF_ADJOINT"


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "matrix": [["1.5", "0"], ["0", "1"]]}')
    code, _, err = call("scp", str(bad))
    assert code == 2 and err.startswith("PARSE_ERROR")
    bad.write_text('{"dim": 2, "matrix": [[0.5, 0], [0, 1]]}')
    assert call("scp", str(bad))[0] == 2
    bad.write_text('{"dim": 3, "matrix": [["1"]]}')
    assert call("scp", str(bad))[0] == 2
    assert call("scp", str(tmp_path / "missing.json"))[0] == 2
    assert call("similar", DIAG)[0] == 2


def test_json_and_text_share_data():
    code, out, _ = call("diagonalize", DIAG, "--json")
    data = json.loads(out)
    assert data["pairs"] == [["1", "3"], ["2", "4"]]
    _, text, _ = call("diagonalize", DIAG)
    assert "pairs:" in text and "  [1, 3]" in text


def test_every_command_runs():
    for cmd in ("check", "adjoint", "charpoly", "scp", "factor", "decompose", "diagonalize"):
        code, out, _ = call(cmd, DIAG, "--json")
        assert code == 0, cmd
        json.loads(out)
    code, out, _ = call("decompose", DIAG, "--json")
    assert json.loads(out)["ratfun_projections_agree"] is True
    code, out, _ = call("decompose", DIAG, "--json", "--max-ratfun-dim", "2")
    assert json.loads(out)["ratfun_projections_agree"] == "skipped"


def test_check_with_seed():
    code, out, _ = call("check", DIAG, "--seed", "5", "--json")
    data = json.loads(out)
    assert data["scp_invariant_under_random_conjugation"] is True
    assert data["symplectically_diagonalizable"] is True


def test_pfaffian_and_external_form(tmp_path):
    alt = tmp_path / "alt.json"
    alt.write_text(json.dumps({"dim": 4, "matrix": [["0", "2", "3", "5"], ["-2", "0", "7", "11"], ["-3", "-7", "0", "13"], ["-5", "-11", "-13", "0"]]}))
    code, out, _ = call("pfaffian", str(alt))
    assert code == 0 and out.strip() == str(2 * 13 - 3 * 11 + 5 * 7)
    form = tmp_path / "form.json"
    form.write_text(json.dumps({"form": [["0", "2"], ["-2", "0"]]}))
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"dim": 2, "matrix": [["1", "2"], ["3", "4"]]}))
    code, out, _ = call("adjoint", str(m), "--form", str(form))
    assert code == 0 and out.splitlines()[1:] == ["  [4, -2]", "  [-3, 1]"]


def test_external_form_changes_scp(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"dim": 2, "matrix": [["1", "0"], ["0", "2"]], "form": [["0", "1/3"], ["-1/3", "0"]]}))
    code, out, _ = call("scp", str(m))
    assert code == 0 and out.strip() == str(BiPoly.pair_factor(1, 2))


entries = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(2 * n),
    st.lists(st.lists(entries, min_size=2 * n, max_size=2 * n), min_size=2 * n, max_size=2 * n),
    st.booleans(),
)))
def test_round_trip(args):
    dim, rows, with_form = args
    form = None
    if with_form:
        n = dim // 2
        form = Matrix([[int(j == i + n) - int(i == j + n) for j in range(dim)] for i in range(dim)])
    mf = MatrixFile(dim, Matrix(rows), form)
    assert parse_matrix_file(render_matrix_file(mf)) == mf


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sympchar", "factor", DIAG],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "((1-s)*(3-s)-t)*((2-s)*(4-s)-t)"


def test_parse_rejects_bad_form():
    with pytest.raises(ParseError):
        parse_matrix_file('{"dim": 2, "matrix": [["1","0"],["0","1"]], "form": [["0","1"],["1","0"]]}')
