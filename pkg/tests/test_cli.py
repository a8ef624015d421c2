import json
import subprocess
import sys

import pytest

from cyclorder.cli import EXIT_DISAGREEMENT, EXIT_NOT_INVERTIBLE, EXIT_OK, EXIT_USAGE, main
from cyclorder.generators import gen_h1_general
from cyclorder.matrixdoc import DocumentError, dumps_matrix, loads_matrix

EXPECTED = {
    "identity.json": ("identity", None),
    "unipotent_h2.json": ("infinite", "criterion-h2"),
    "companion_phi6.json": ("finite", "oracle-exponent-bound"),
    "diag_zeta.json": ("finite", "criterion-h1-power-test"),
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_analyze_fixtures(capsys, fixtures_dir, name):
    code, out, _ = run(capsys, "analyze", "--input", str(fixtures_dir / name), "--format", "json")
    assert code == EXIT_OK
    cert = json.loads(out)
    kind, rule = EXPECTED[name]
    assert cert["kind"] == kind
    if rule:
        assert cert["rule"] == rule


def test_analyze_text_and_positional(capsys, fixtures_dir):
    code, out, _ = run(capsys, "analyze", str(fixtures_dir / "companion_phi6.json"))
    assert code == EXIT_OK
    assert "order: 6" in out.splitlines()


def test_analyze_pgl(capsys, fixtures_dir):
    code, out, _ = run(capsys, "--mode", "pgl", "analyze", str(fixtures_dir / "diag_zeta.json"), "--format", "json")
    cert = json.loads(out)
    assert (cert["order"], cert["mode"], cert["embedded_dim"]) == ("5", "pgl", "4")


def test_analyze_singular_exit_code(capsys, fixtures_dir):
    code, _, err = run(capsys, "analyze", str(fixtures_dir / "singular.json"))
    assert code == EXIT_NOT_INVERTIBLE
    assert "not invertible" in err


def test_analyze_bad_documents(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 5, "d": 1, "entries": [[["1","x","0","0"]]]}')
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == EXIT_USAGE and "entries[0][0][1]" in err
    bad.write_text('{"p": 5,')
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == EXIT_USAGE and "line 1" in err
    code, _, _ = run(capsys, "analyze")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE


def test_document_errors():
    with pytest.raises(DocumentError):
        loads_matrix('{"p": 4, "d": 1, "entries": [[["1","0"]]]}')
    with pytest.raises(DocumentError):
        loads_matrix('{"p": 5, "d": 2, "entries": [[["1","0","0","0"]]]}')
    with pytest.raises(DocumentError):
        loads_matrix("[1, 2]")


def test_fixture_round_trip(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.json")):
        A = loads_matrix(path.read_text())
        assert loads_matrix(dumps_matrix(A)) == A
        assert dumps_matrix(A) == path.read_text()


def test_generated_round_trip():
    for seed in range(10):
        A = gen_h1_general(7, 3, seed)
        assert loads_matrix(dumps_matrix(A)) == A


def test_norm_phi_reduce(capsys):
    assert run(capsys, "norm", "--p", "5", "--elt", "-1,1,0,0")[1] == "5^{1/4}\n"
    assert run(capsys, "norm", "--p", "7", "--elt", "2,0,0,0,0,0")[1] == "2^{1}\n"
    assert run(capsys, "phi", "12")[1] == "1\n"
    assert run(capsys, "phi", "27")[1] == "3\n"
    assert run(capsys, "phi", "6", "--poly")[1] == "1\n1 -1 1\n"
    assert run(capsys, "reduce", "--p", "5", "--k", "2", "--elt", "5,0,0,0")[1] == "in-ideal: true\n"
    assert run(capsys, "reduce", "--p", "5", "--k", "2", "--elt", "-1,1,0,0")[1] == "in-ideal: false\n"
    payload = json.loads(run(capsys, "norm", "--p", "5", "--elt", "-1,1,0,0", "--format", "json")[1])
    assert payload == {"p": "5", "norm": "5^{1/4}"}


def test_value_errors_give_usage_exit(capsys):
    assert run(capsys, "norm", "--p", "4", "--elt", "1,2,3")[0] == EXIT_USAGE
    assert run(capsys, "phi", "1")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--size", "1", "--primes", "3,5", "--dims", "1,2")
    assert code == EXIT_OK
    assert out.rstrip().endswith("all agree")
    assert "skipped cell p=3 d=1" in out


def test_selftest_size_zero(capsys):
    code, out, _ = run(capsys, "selftest", "--size", "0", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "ok"


def test_selftest_injected_fault_is_caught(capsys):
    code, out, _ = run(capsys, "selftest", "--size", "1", "--primes", "5", "--dims", "2", "--inject-fault")
    assert code == EXIT_DISAGREEMENT
    assert "DISAGREEMENTS FOUND" in out


def test_selftest_json_deterministic(capsys):
    argv = ["--seed", "3", "selftest", "--size", "1", "--primes", "3,5", "--dims", "2", "--format", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_module_entry_point(fixtures_dir):
    res = subprocess.run(
        [sys.executable, "-m", "cyclorder", "analyze", str(fixtures_dir / "identity.json")],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert "kind: identity" in res.stdout
