import io
import json
import subprocess
import sys

import pytest

from qcong.adhoc import CheckSpec, run_check
from qcong.cli import UsageError, cli_main, main, parse_params, parse_range


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


# (argv, exit code) golden table
GOLDEN = [
    (["verify", "theorem1", "--range", "1..20"], 0),
    (["verify", "all", "--range", "1..6"], 0),
    (["verify", "lemma_b2", "--range", "5..5", "--json"], 0),
    (["verify", "straub_new5", "--range", "3..5", "--params", "a=3,b=1"], 0),
    (["verify", "nosuch", "--range", "1..2"], 2),
    (["verify", "theorem1", "--range", "1-2"], 2),
    (["verify", "theorem1", "--range", "5..1"], 2),
    (["verify", "theorem1", "--range", "1..2", "--params", "c=1"], 2),
    (["verify", "straub_new5", "--range", "3..4", "--params", "a=9,b=1"], 2),
    (["verify", "theorem1"], 2),
    (["frobnicate"], 2),
    ([], 2),
    (["check", "--lhs", "q^n", "--rhs", "1", "--mod", "cyclo(n)", "--range", "1..50"], 0),
    (["check", "--lhs", "q", "--rhs", "1", "--mod", "cyclo(2)", "--range", "2..2"], 1),
    (["check", "--lhs", "q", "--rhs", "q", "--mod", "2*q + 1", "--range", "1..2"], 1),
    (["check", "--lhs", "qbinom(q, 1)", "--rhs", "1", "--mod", "q", "--range", "1..2"], 2),
    (["check", "--lhs", "1", "--rhs", "1", "--mod", "q", "--pow", "0", "--range", "1..2"], 2),
    (["check", "--lhs", "1/(1-q)", "--rhs", "0", "--mod", "cyclo(1)", "--range", "1..1"], 1),
    (["eval", "qtrinom(4,0)", "--n", "1"], 0),
    (["eval", "1/(q-q)"], 2),
    (["eval", "qbinom(q, 1)"], 2),
]


@pytest.mark.parametrize("argv, code", GOLDEN, ids=[" ".join(a) or "<empty>" for a, _ in GOLDEN])
def test_exit_codes(argv, code):
    got, out, err = run(argv)
    assert got == code
    if code == 2:
        assert err.strip()


def test_verify_table_lines():
    code, out, err = run(["verify", "theorem1", "--range", "1..20"])
    lines = out.strip().splitlines()
    assert lines[0].startswith("# statement\t")
    body = lines[1:]
    assert len(body) == 20
    assert all(line.split("\t")[2] == "PASS" for line in body)
    assert "20/20" in err


def test_json_is_single_array():
    code, out, _ = run(["verify", "theorem2", "--range", "1..4", "--json", "--verbose"])
    data = json.loads(out)
    assert isinstance(data, list) and len(data) == 4
    assert all(d["holds"] and d["residual"] == "0" for d in data)
    assert [d["params"]["n"] for d in data] == [1, 2, 3, 4]


def test_eval_prints_canonical_text():
    code, out, _ = run(["eval", "qtrinom(4,0)", "--n", "1"])
    assert out.strip() == "1 + q + 2*q^2 + 3*q^3 + 4*q^4 + 3*q^5 + 3*q^6 + q^7 + q^8"
    code, out, _ = run(["eval", "(1-q^2)/(1-q)^2"])
    assert out.strip() == "(-1 - q)/(-1 + q)"


def test_check_c5_over_1_50():
    code, out, _ = run(["check", "--lhs", "qbinom(2*n,n)", "--rhs", "2 - n*(1-q^n)",
                        "--mod", "cyclo(n)", "--pow", "2", "--range", "1..50"])
    assert code == 0
    assert len(out.strip().splitlines()) == 51


def test_invalid_modulus_is_reported_per_n():
    code, out, _ = run(["check", "--lhs", "1", "--rhs", "1", "--mod", "q^n", "--range", "0..2", "--json"])
    data = json.loads(out)
    assert [d["reason"] for d in data] == ["invalid_modulus", "divisible", "divisible"]
    assert code == 1


def test_evaluation_error_is_reported_per_n():
    reps = run_check(CheckSpec.from_text("qint(n)", "0", "cyclo(2)", 1, 0, 1))
    assert [r.reason for r in reps] == ["evaluation_error", "nonzero_remainder"]


def test_run_check_examples():
    reps = run_check(CheckSpec.from_text("q", "1", "cyclo(2)", 1, 2, 2))
    assert len(reps) == 1 and not reps[0].holds
    assert reps[0].residual_degree == 0 and reps[0].residual == "-2"
    reps = run_check(CheckSpec.from_text("qtrinom(n,0)", "qtrinom(n,0)", "cyclo(n)", 3, 1, 12))
    assert all(r.holds and r.statement == "adhoc" for r in reps)
    with pytest.raises(ValueError):
        run_check(CheckSpec.from_text("1", "1", "q", 1, 3, 2))


def test_figure_option(tmp_path):
    path = tmp_path / "timing.png"
    code, _, _ = run(["verify", "theorem1", "--range", "1..8", "--figure", str(path)])
    assert code == 0
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    path2 = tmp_path / "fail.png"
    code, _, _ = run(["check", "--lhs", "q", "--rhs", "1", "--mod", "cyclo(2)", "--range", "1..3",
                      "--figure", str(path2)])
    assert code == 1 and path2.exists()


def test_range_and_params_parsing():
    assert parse_range("1..200") == (1, 200)
    assert parse_range(" 3 .. 3 ") == (3, 3)
    for bad in ("1..", "a..b", "1...3", "3..1"):
        with pytest.raises(UsageError):
            parse_range(bad)
    assert parse_params("a=3,b=1") == {"a": 3, "b": 1}
    with pytest.raises(UsageError):
        parse_params("a=x")


def test_alias_and_module_entry_point():
    assert cli_main is main
    proc = subprocess.run([sys.executable, "-m", "qcong", "verify", "nosuch", "--range", "1..2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "nosuch" in proc.stderr and proc.stdout == ""
    proc = subprocess.run([sys.executable, "-m", "qcong", "verify", "theorem1", "--range", "1..3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and len(proc.stdout.strip().splitlines()) == 4
