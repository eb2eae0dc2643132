import json
import subprocess
import sys

import pytest

from grpder.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_table(capsys):
    code, out, _ = run(["dims", "--n-list", "1,3", "--char-list", "0,3"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "char", "dim", "der", "inner", "outer", "expected", "match"]
    assert lines[-1].split() == ["3", "3", "20", "15", "5", "20", "yes"]


def test_dims_json(capsys):
    code, out, _ = run(["dims", "--n-list", "2", "--char-list", "7", "--json"], capsys)
    assert code == 0
    assert json.loads(out) == [{"n": 2, "char": 7, "dim_der": 6, "dim_inner": 6, "dim_outer": 0,
                                "expected": 6, "match": True}]


def test_verify_writes_deterministic_report(tmp_path, capsys):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ["verify", "--n-max", "4", "--chars", "0,3,5"]
    assert run(args + ["--out", str(out1)], capsys)[0] == 0
    assert run(args + ["--out", str(out2), "--jobs", "2"], capsys)[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert report["passed"] and len(report["cases"]) == 12
    first = report["cases"][0]
    assert (first["n"], first["char"], first["conjugacy_ok"]) == (1, 0, True)
    assert first["conjugacy"]["class_count"] == 5
    for key in ("dim_oracle", "dim_inner", "dim_listed_basis", "listed_basis_all_valid", "failed_vectors",
                "classification_summary", "conjugacy_ok", "anticentralizer_ok"):
        assert key in first


@pytest.mark.parametrize(
    "argv",
    [
        ["dims", "--n-list", "1", "--char-list", "2"],
        ["verify", "--n-list", "1", "--chars", "2", "--skip-even-order-sweep"],
        ["basis", "--n", "1", "--char", "0", "--which", "everything"],
        ["basis", "--n", "1", "--char", "0", "--which", "anti_centralizer:c^2"],
        ["basis", "--n", "1", "--char", "9", "--which", "full"],
        ["dims", "--n-list", "13", "--char-list", "0"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--n-list", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_max_n_env(monkeypatch, capsys):
    monkeypatch.setenv("GRPDER_MAX_N", "2")
    assert run(["dims", "--n-list", "3", "--char-list", "0"], capsys)[0] == 2
    assert run(["dims", "--n-list", "2", "--char-list", "0"], capsys)[0] == 0


def test_unwritable_output(tmp_path, capsys):
    target = tmp_path / "missing" / "r.json"
    code, _, err = run(["basis", "--n", "1", "--char", "0", "--which", "full", "--out", str(target)], capsys)
    assert code == 2 and "cannot write" in err


@pytest.mark.parametrize(
    "which,count",
    [("inner", 3), ("anti_centralizer:b", 2), ("full", 3), ("listed", 3)],
)
def test_basis_n1(which, count, capsys):
    code, out, _ = run(["basis", "--n", "1", "--char", "0", "--which", which], capsys)
    assert code == 0 and len(json.loads(out)) == count


def test_basis_full_modular(tmp_path, capsys):
    path = tmp_path / "basis.json"
    assert run(["basis", "--n", "3", "--char", "3", "--which", "full", "--out", str(path)], capsys)[0] == 0
    pairs = json.loads(path.read_text())
    assert len(pairs) == 20
    assert set(pairs[0]) == {"da", "db"}
    assert pairs[0]["da"]["n"] == 3 and pairs[0]["da"]["char"] == 3


def write_pair(tmp_path, da_terms, db_terms, n, char):
    path = tmp_path / "d.json"
    el = lambda terms: {"n": n, "char": char, "terms": terms}  # noqa: E731
    path.write_text(json.dumps({"da": el(da_terms), "db": el(db_terms)}))
    return str(path)


def test_classify_zero_is_inner(tmp_path, capsys):
    path = write_pair(tmp_path, [], [], 3, 3)
    code, out, _ = run(["classify", "--n", "3", "--char", "3", "--in", path], capsys)
    assert code == 0 and out.splitlines()[0] == "Inner"


def test_classify_not_a_derivation(tmp_path, capsys):
    path = write_pair(tmp_path, [{"i": 0, "j": 0, "c": "1"}], [], 2, 0)
    code, out, _ = run(["classify", "--n", "2", "--char", "0", "--in", path, "--json"], capsys)
    assert code == 0 and out.splitlines()[0] == "NotADerivation"
    assert json.loads(out.split("\n", 1)[1])["failing_relators"]


def test_classify_outer_and_inner_with_witness(tmp_path, capsys):
    basis = tmp_path / "listed.json"
    run(["basis", "--n", "3", "--char", "3", "--which", "listed", "--out", str(basis)], capsys)
    kinds = set()
    for entry in json.loads(basis.read_text()):
        if not entry["valid"]:
            continue
        path = tmp_path / "one.json"
        path.write_text(json.dumps({"da": entry["da"], "db": entry["db"]}))
        code, out, _ = run(["classify", "--n", "3", "--char", "3", "--in", str(path), "--json"], capsys)
        assert code == 0
        first, rest = out.split("\n", 1)
        kinds.add(first)
        if first == "Inner":
            assert rest.startswith("witness:")
            assert "witness" in json.loads(rest.split("\n", 1)[1])
    assert kinds == {"Inner", "Outer"}


def test_classify_parse_failure(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["classify", "--n", "1", "--char", "0", "--in", str(bad)], capsys)[0] == 2
    wrong_case = write_pair(tmp_path, [], [], 2, 0)
    assert run(["classify", "--n", "1", "--char", "0", "--in", wrong_case], capsys)[0] == 2
    assert run(["classify", "--n", "1", "--char", "0", "--in", str(tmp_path / "nope.json")], capsys)[0] == 2


def test_console_script_and_module_entry():
    res = subprocess.run(["grpder", "dims", "--n-list", "1", "--char-list", "0"], capture_output=True, text=True)
    assert res.returncode == 0 and "yes" in res.stdout
    res = subprocess.run([sys.executable, "-m", "grpder", "dims", "--n-list", "1", "--char-list", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 2
