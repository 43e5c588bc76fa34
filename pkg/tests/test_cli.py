import json

import pytest

from torusq.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jones_forms(capsys):
    code, out, _ = _run(capsys, "jones", "A1", "--p", "2", "--pp", "3", "--lambda", "1")
    assert code == 0 and out.strip() == "-1 + q^2 + q^3 + q^4"
    code, out2, _ = _run(capsys, "jones", "A1", "--p", "2", "--pp", "3", "--lambda", "1", "--form", "rosso")
    assert out2 == out


@pytest.mark.parametrize("alg,p,pp,lam", [("A1", 2, 5, "3"), ("A2", 3, 4, "1,1"), ("C2", 7, 8, "0,1")])
def test_json_forms_byte_identical(capsys, alg, p, pp, lam):
    outs = []
    for form in ("rosso", "lattice"):
        code, out, _ = _run(capsys, "jones", alg, "--p", str(p), "--pp", str(pp), "--lambda", lam,
                            "--form", form, "--json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    json.loads(outs[0])


def test_mult(capsys):
    code, out, _ = _run(capsys, "mult", "A2", "--lambda", "1,1", "--mu", "0,0")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = _run(capsys, "mult", "A2", "--lambda", "1,1", "--mu", "0,0", "--engine", "kostant")
    assert out.strip() == "2"


def test_root_basis(capsys):
    code, out, _ = _run(capsys, "mult", "C2", "--basis", "root", "--lambda", "3,2", "--mu", "0,0")
    code2, out2, _ = _run(capsys, "mult", "C2", "--lambda", "2,1", "--mu", "0,0")
    assert code == code2 == 0 and out == out2
    code, _, err = _run(capsys, "mult", "A2", "--basis", "root", "--lambda", "1/2,1/2")
    assert code == 2 and "--lambda" in err


@pytest.mark.parametrize("argv,flag", [
    (["info", "Q3"], "Q3"),
    (["jones", "A1", "--p", "2", "--pp", "4", "--lambda", "1"], "coprime"),
    (["mult", "A2", "--lambda", "1,a"], "--lambda"),
    (["mult", "A2", "--lambda", "1"], "--lambda"),
    (["mult", "A2", "--lambda", "1,1", "--mu", "0"], "--mu"),
    (["trailing", "C2", "--p", "3", "--pp", "4", "--lambda", "0,1"], "short-root"),
    (["limit-rhs", "C2", "--p", "3", "--pp", "4", "--window", "4"], "short-root"),
])
def test_precondition_exit_code(capsys, argv, flag):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert flag in err


def test_empirical_label(capsys):
    for argv in (["ratios", "A2", "--lambda", "1,1", "--mu1", "0,0", "--mu2", "1,1", "--nmax", "5"],
                 ["stabilize", "A1", "--lambda", "2", "--p", "2", "--pp", "3", "--window", "6",
                  "--nmax", "2"],
                 ["fit", "G2", "--lambda", "0,1", "--mu", "0,0", "--degree", "3", "--nmax", "30"]):
        code, out, _ = _run(capsys, *argv)
        assert code == 0 and "EMPIRICAL" in out
        code, out, _ = _run(capsys, *argv, "--json")
        assert json.loads(out)["label"] == "EMPIRICAL"


def test_other_commands(capsys):
    for argv in (["info", "G2"], ["info", "E6", "--json"], ["jhat", "A2", "--lambda", "1,1", "--p", "3",
                 "--pp", "4", "--window", "6"],
                 ["wchar", "A2", "--p", "3", "--pp", "4", "--j", "1", "--window", "5"],
                 ["minimum", "A1", "--p", "2", "--pp", "5", "--j", "1"],
                 ["limit-rhs", "A1", "--p", "2", "--pp", "3", "--window", "12"],
                 ["trailing", "A1", "--p", "2", "--pp", "3", "--lambda", "1"],
                 ["plethysm", "A2", "--lambda", "1,0", "--p", "3"],
                 ["partition", "A2", "--beta", "2,3"], ["n0", "A1", "--lambda", "1", "--mu", "3"],
                 ["sympow", "C3", "--colour", "6", "--mu", "0,0,0"]):
        code, out, err = _run(capsys, *argv)
        assert code == 0, (argv, err)
        assert out.strip()


def test_specific_outputs(capsys):
    assert _run(capsys, "partition", "A2", "--beta", "2,3")[1].strip() == "3"
    assert _run(capsys, "n0", "A1", "--lambda", "1", "--mu", "3")[1].strip() == "3"
    assert _run(capsys, "sympow", "C3", "--colour", "6", "--mu", "0,0,0")[1].strip() == "10"
    out = _run(capsys, "limit-rhs", "A1", "--p", "2", "--pp", "3", "--window", "12")[1]
    assert out.strip() == "1 - q^2 - q^3 - q^4 + q^7 + q^8 + q^9 + q^10 + q^11 + O(q^>12)"


def test_deterministic_with_workers(capsys, monkeypatch):
    argv = ["ratios", "C2", "--lambda", "2,0", "--mu1", "0,0", "--mu2", "0,1", "--nmax", "8", "--json"]
    monkeypatch.setenv("TORUSQ_THREADS", "1")
    a = _run(capsys, *argv)[1]
    monkeypatch.setenv("TORUSQ_THREADS", "2")
    b = _run(capsys, *argv)[1]
    assert a == b


def test_bad_thread_count(capsys, monkeypatch):
    monkeypatch.setenv("TORUSQ_THREADS", "zero")
    code, _, err = _run(capsys, "ratios", "A2", "--lambda", "1,1", "--mu1", "0,0", "--mu2", "1,1",
                        "--nmax", "3")
    assert code == 2 and "TORUSQ_THREADS" in err
