import csv
import subprocess
import sys

import pytest

from crosscountry.cli import main
from crosscountry.program import format_program
from crosscountry.tasks import worked_example


@pytest.fixture
def files(tmp_path):
    prog = tmp_path / "worked.prog"
    prog.write_text(format_program(worked_example()))
    assert main(["trace", str(prog), "--out", str(tmp_path / "worked.graph")]) == 0
    (tmp_path / "rev.order").write_text("2 1\n")
    return tmp_path


def _body(out: str) -> list[str]:
    return [ln for ln in out.splitlines() if not ln.startswith("#")]


def test_trace_to_stdout(files, capsys):
    assert main(["trace", str(files / "worked.prog")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# crosscountry")
    assert _body(out)[0] == "2 2 2" and len(_body(out)) == 7


def test_cost_reverse(files, capsys):
    assert main(["cost", "--graph", str(files / "worked.graph"), "--strategy", "reverse"]) == 0
    assert _body(capsys.readouterr().out)[-1].split() == ["total", "6", "1"]


def test_cost_with_order_file(files, capsys):
    assert main(["cost", "--program", str(files / "worked.prog"), "--order", str(files / "rev.order")]) == 0
    assert _body(capsys.readouterr().out)[-1].split()[1] == "6"


def test_cost_needs_order_or_strategy(files, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cost", "--graph", str(files / "worked.graph")])
    assert exc.value.code == 2


@pytest.mark.parametrize("method", ["brute", "mcts", "anneal", "portfolio"])
def test_search_writes_order(files, capsys, method):
    out = files / f"{method}.order"
    argv = ["search", "--graph", str(files / "worked.graph"), "--method", method, "--budget", "5",
            "--steps", "50", "--seed", "1", "--out", str(out)]
    assert main(argv) == 0
    assert out.read_text().split() == ["2", "1"]
    assert "seed=1" in capsys.readouterr().out


def test_verify_ok(files, capsys):
    argv = ["verify", "--graph-from-program", str(files / "worked.prog"), "--order", str(files / "rev.order"),
            "--point", "random:7", "--tol", "1e-9"]
    assert main(argv) == 0
    assert "max relative error" in capsys.readouterr().out


def test_verify_mismatch_exit_code(files, capsys):
    # finite differences cannot reach a 1e-14 tolerance
    argv = ["verify", "--graph-from-program", str(files / "worked.prog"), "--order", str(files / "rev.order"),
            "--point", "random:7", "--tol", "1e-14", "--reference", "fd"]
    assert main(argv) == 1


def test_verify_domain_error_is_usage_error(files, capsys):
    argv = ["verify", "--graph-from-program", str(files / "worked.prog"), "--point", "random:0"]
    assert main(argv) == 2


def test_bench(tmp_path, capsys):
    argv = ["bench", "--tasks", "humanheartdipole", "--methods", "forward,reverse,markowitz",
            "--csv", str(tmp_path / "b.csv")]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "paper (different trace)" in out
    rows = list(csv.DictReader(open(tmp_path / "b.csv")))
    assert len(rows) == 1
    assert int(rows[0]["forward"]) > int(rows[0]["reverse"])


def test_bench_unknown_task():
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--tasks", "nope"])
    assert exc.value.code == 2


def test_randgen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.prog", tmp_path / "b.prog"
    assert main(["randgen", "--seed", "4", "--vector", "--out", str(a)]) == 0
    assert main(["randgen", "--seed", "4", "--vector", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()
    assert main(["trace", str(a)]) == 0


def test_table(capsys):
    assert main(["table"]) == 0
    assert " 6    9 ->" in capsys.readouterr().out


def test_header_hash_depends_on_config(files, capsys):
    main(["search", "--graph", str(files / "worked.graph"), "--method", "brute"])
    h1 = capsys.readouterr().out.splitlines()[1]
    main(["search", "--graph", str(files / "worked.graph"), "--method", "brute", "--seed", "5"])
    h2 = capsys.readouterr().out.splitlines()[1]
    assert h1.split("graph=")[1] == h2.split("graph=")[1]
    assert h1.split("config=")[1].split()[0] != h2.split("config=")[1].split()[0]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "crosscountry", "bogus"], capture_output=True, text=True)
    assert r.returncode == 2
