import io
import json
import subprocess
import sys

import pytest

from boolideal.cli import RunReport, main


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def report(out):
    return RunReport.from_json(out.strip())


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin="": run(capsys, monkeypatch, argv, stdin)


def test_sat_fixture_file(cli, tmp_path):
    from boolideal.ingest import fixture_cyclic_truncated, format_system
    path = tmp_path / "ex1.poly"
    path.write_text(format_system(fixture_cyclic_truncated(1)))
    code, out, _ = cli(["sat", "--input", str(path)])
    assert code == 0
    assert report(out).result["verdict"] == "sat"


def test_sat_dimacs_unsat(cli, tmp_path):
    path = tmp_path / "contra.cnf"
    path.write_text("p cnf 1 2\n1 0\n-1 0\n")
    code, out, _ = cli(["sat", "--input", str(path), "--oracle"])
    assert code == 1
    rep = report(out)
    assert rep.result["verdict"] == "unsat" and rep.oracle_checked


def test_sat_dimacs_from_stdin(cli):
    code, out, _ = cli(["sat", "--format", "dimacs", "--witness"], "p cnf 2 2\n1 2 0\n-1 0\n")
    assert code == 0
    assert report(out).result["witness"] == [0, 1]


def test_sat_pair_family(cli):
    from boolideal.ingest import fixture_pair_family, format_system
    code, out, _ = cli(["sat", "--oracle"], format_system(fixture_pair_family(8)))
    rep = report(out)
    assert code == 0
    assert rep.result["full_monomial"] is True
    assert rep.result["parity"] == "odd"


@pytest.mark.parametrize("flags", [[], ["--early-stop"], ["--staged"], ["--no-split"]])
def test_sat_flags_same_verdict(cli, flags):
    code, out, _ = cli(["sat", "--oracle", *flags], "x1*x2 + x3\nx1*x3 + x2\nx3 + 1\n")
    assert code == 0 and report(out).oracle_checked


def test_count(cli):
    code, out, _ = cli(["count", "--oracle"], "x1 + x2 + x2*x3\n")
    rep = report(out)
    assert code == 0
    assert rep.result["count"] == 4
    assert rep.result["d"] == [-10, 10, -4]
    code, out, _ = cli(["count", "--vars", "3"], "")
    assert report(out).result["count"] == 8
    code, out, _ = cli(["count", "--count-method", "lattice", "--oracle"],
                       "x1*x2 + x1 + x2 + 1\nx3*x4 + x3 + x4 + 1\n")
    assert report(out).result["count"] == 9


EXAMPLE_POINTS = [
    [0, 1, 0, 1, 0], [0, 1, 1, 1, 0], [1, 0, 0, 0, 1], [1, 0, 0, 1, 1],
    [1, 0, 1, 0, 1], [1, 0, 1, 1, 1], [1, 1, 0, 0, 1], [1, 1, 0, 1, 0],
    [1, 1, 0, 1, 1], [1, 1, 1, 0, 1], [1, 1, 1, 1, 0], [1, 1, 1, 1, 1],
]


@pytest.mark.parametrize("method", ["brute", "explicit1", "explicit2", "mod2"])
def test_variety_methods(cli, method):
    code, out, _ = cli(["variety", "--method", method, "--oracle"],
                       "1 + x1*x5 + x2*x4 + x2*x4*x5\n")
    rep = report(out)
    assert code == 0
    assert rep.result["points"] == EXAMPLE_POINTS


def test_variety_of_one(cli):
    code, out, _ = cli(["variety", "--vars", "2"], "1\n")
    assert report(out).result["points"] == []


def test_ideal_ops(cli):
    f = "x1*x2*x3 + x3 + 1"
    code, out, _ = cli(["ideal", "nf", "--f", f, "--g", "x1*x3 + 1", "--oracle"])
    assert code == 0 and report(out).result["normal_form"] == "x1*x3 + x3"
    code, out, _ = cli(["ideal", "colon", "--f", f, "--g", "x3 + 1", "--oracle"])
    assert report(out).result["defining"] == "1"
    code, out, _ = cli(["ideal", "colon", "--f", "x3 + 1", "--g", f, "--oracle"])
    assert report(out).result["defining"] == "x1*x2*x3 + 1"
    code, out, _ = cli(["ideal", "member", "--f", f, "--g", "0", "--oracle"])
    rep = report(out)
    assert rep.result["member"] is True
    assert rep.result["equivalences"] == [True] * 10
    code, out, _ = cli(["ideal", "sum", "--oracle"], "x1\nx2\n")
    assert report(out).result["defining"] == "x1*x2 + x1 + x2"
    code, out, _ = cli(["ideal", "intersect", "--oracle"], "x1\nx2\n")
    assert report(out).result["defining"] == "x1*x2"


def test_bench_suites(cli):
    code, out, _ = cli(["bench", "cyclic13"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 2
    assert all(r["result"]["verdict"] == "sat" and r["result"]["match"] for r in rows)
    code, out, _ = cli(["bench", "pairs"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["result"]["case"] for r in rows] == ["pairs-8", "pairs-17", "pairs-22"]
    assert all(r["result"]["verdict"] == "sat" and r["result"]["parity"] == "odd" for r in rows)
    code, out, _ = cli(["bench", "smoke", "--seed", "3"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows and all(r["oracle_checked"] for r in rows)


def test_bench_random_suite(cli):
    code, out, _ = cli(["bench", "random", "--seed", "1"])
    rows = {r["result"]["case"]: r["result"] for r in map(json.loads, out.splitlines())}
    assert rows["random-15-contradiction"]["verdict"] == "unsat"
    assert rows["random-15-contradiction"]["match"] is True


def test_exit_codes(cli):
    code, _, err = cli(["sat"], "x1 x2\n")
    assert code == 2 and "column" in err
    code, _, _ = cli(["sat", "--format", "dimacs"], "1 0\n")
    assert code == 2
    code, _, _ = cli(["variety", "--method", "brute", "--guard", "3", "--vars", "5"], "x1\n")
    assert code == 3
    code, _, _ = cli(["ideal", "nf"], "x1\n")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bench", "nope"])
    assert exc.value.code == 2


def test_oracle_mismatch_exit_code(cli, monkeypatch):
    from boolideal import cli as cli_mod
    monkeypatch.setitem(cli_mod.VARIETY_METHODS, "brute", lambda f, a: frozenset())
    code, _, err = cli(["variety", "--method", "explicit2", "--oracle"], "x1\n")
    assert code == 4 and "mismatch" in err


def test_pretty_output(cli):
    code, out, _ = cli(["count", "--pretty"], "x1 + x2 + x2*x3\n")
    assert code == 0 and out.startswith("count:") and "count: 4" in out


@pytest.mark.parametrize("argv, stdin", [
    (["sat", "--witness"], "x1*x2 + x3\nx3 + 1\n"),
    (["count"], "x1 + x2 + x2*x3\n"),
    (["variety"], "1 + x1*x5 + x2*x4 + x2*x4*x5\n"),
    (["ideal", "member", "--oracle"], "x1*x2*x3 + x3 + 1\nx3 + 1\n"),
])
def test_deterministic_and_roundtrip(cli, argv, stdin):
    outs = []
    for _ in range(2):
        code, out, _ = cli(argv, stdin)
        rep = report(out)
        rep.timing = 0.0
        outs.append(rep.to_json())
        again = RunReport.from_json(out.strip())
        assert again.to_json() == out.strip()
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "boolideal", "count"], input="x1\n",
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["result"]["count"] == 1
