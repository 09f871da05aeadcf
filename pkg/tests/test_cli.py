import json
import subprocess
import sys

import pytest

from schubcalc.cli import main
from schubcalc.poly import PRODUCT_MEMO, SCHUBERT_MEMO, clear_memo


@pytest.fixture(autouse=True)
def _reset():
    yield
    SCHUBERT_MEMO.sink = None
    PRODUCT_MEMO.sink = None


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly(capsys):
    assert run(capsys, "poly", "52341")[:2] == (0, "x1^4*x2*x3*x4\n")
    code, out, _ = run(capsys, "poly", "(1,2)", "--json")
    assert json.loads(out) == [{"coeff": 1, "exps": [1]}]


def test_schur_mult_const(capsys):
    assert run(capsys, "schur", "2,1", "2")[1].strip() == "x1^2*x2 + x1*x2^2"
    assert run(capsys, "mult", "213", "213")[1].strip() == "S[312]"
    assert run(capsys, "const", "312645", "162345", "561234")[1].strip() == "1"
    # degrees do not match, so the constant vanishes
    assert run(capsys, "const", "312645", "24135", "561234")[1].strip() == "0"


def test_skewcoef(capsys):
    assert run(capsys, "skewcoef", "(2,4)(1,5,3)", "3,2")[1].strip() == "1"
    assert run(capsys, "skewcoef", "(1243)", "21")[1].strip() == "1"
    assert run(capsys, "skewcoef", "(2,4)(1,5,3)", "3,2", "--u", "21345", "--k", "2")[1].strip() == "1"


def test_interval_formats(capsys):
    code, out, _ = run(capsys, "interval", "312645", "561234", "--k", "2")
    assert code == 0 and out.strip().endswith("maximal chains 6")
    out = run(capsys, "interval", "1234", "2413", "--k", "2", "--dot")[1]
    assert out.startswith("digraph") and "label" in out
    data = json.loads(run(capsys, "interval", "e", "321", "--json")[1])
    assert len(data["nodes"]) == 6


def test_chains_greedy_qorder_rsk(capsys):
    assert run(capsys, "chains", "1234", "2413", "--colors", "2")[1].strip() == "2"
    code, out, _ = run(capsys, "greedy", "21345", "45123", "--k", "2")
    assert code == 0 and len(out.split()) == 6
    assert run(capsys, "qorder", "(2,4)(1,5,3)", "--rank")[1].strip() == "5"
    out = run(capsys, "qorder", "(2,4)(1,5,3)", "--interval")[1]
    assert "nodes 12" in out
    out = run(capsys, "rsk", "7,5,8,3,7,9,1,4,8,2,6,2,6,5,8")[1]
    assert out.splitlines()[0] == "P 1,2,2,5,8/3,4,6,6/5,7,8/7,8,9"


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "chain_identity", "n=3", "I=1,2")
    assert code == 0 and json.loads(out)["instances"] == 19 and "PASS" in err
    code, out, _ = run(capsys, "verify", "psi_P", "n=3", "P=1,3", "known_upto=4", "tail=in")
    assert code == 0 and json.loads(out)["params"]["tail"] == "in"
    code, out, _ = run(capsys, "verify", "schensted_counting", "u=132", "w=2413", "k=2")
    assert code == 0


def test_exit_codes(capsys):
    assert run(capsys, "greedy", "4321", "1234", "--k", "2")[0] == 1
    assert run(capsys, "verify", "greedy", "m=3")[0] == 2
    assert run(capsys, "verify", "greedy", "n=x")[0] == 2
    assert run(capsys, "verify", "psi_P", "n=3")[0] == 2
    assert run(capsys, "interval", "321", "123", "--k", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["poly", "41x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_check_failure_exit_code(capsys, monkeypatch):
    from schubcalc import verify

    real = verify.count_I_chains
    monkeypatch.setattr(verify, "count_I_chains", lambda u, w, I: real(u, w, I) + 1)
    code, out, _ = run(capsys, "verify", "chain_identity", "n=2", "I=1")
    assert code == 1 and json.loads(out)["failures"]


def test_cache_cold_warm_and_disabled(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUBERT_CACHE_DIR", str(tmp_path / "c"))
    clear_memo()
    cold = run(capsys, "poly", "456123")[1]
    clear_memo()
    warm = run(capsys, "poly", "456123")[1]
    clear_memo()
    off = run(capsys, "--no-cache", "poly", "456123")[1]
    assert cold == warm == off
    out = run(capsys, "cache", "--stats")[1]
    assert "polynomials" in out and "0 skipped" in out
    with open(tmp_path / "c" / "records.jsonl", "a") as fh:
        fh.write("{broken\n")
    clear_memo()
    code, out, err = run(capsys, "poly", "456123")
    assert code == 0 and out == cold
    assert "1 skipped" in run(capsys, "cache", "--stats")[1]
    assert "removed" in run(capsys, "cache", "--clear")[1]


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "schubcalc", "--no-cache", "poly", "52341"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "x1^4*x2*x3*x4\n"
