import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hyperturan import (ForbiddenFamily, build_B, complete, count_copies, is_family_free,
                        jump_parameters, min_l_degree, read_hypergraph, resolve_named,
                        write_hypergraph)
from hyperturan.cli import EXIT_BUDGET, EXIT_DATA, EXIT_SIZE, EXIT_USAGE, run_command
from hyperturan.io import digest
from hyperturan.report import parse_report
from hyperturan.solver import oracle_ex


def run(*argv):
    code, rep, err = run_command([str(a) for a in argv])
    return code, rep, err


def test_stats_on_B(tmp_path):
    path = tmp_path / "b.hg"
    write_hypergraph(build_B(2, 4, 3, 2), path)
    code, rep, _ = run("stats", "--file", path, "--l", 2)
    assert code == 0
    assert rep["delta_2"] == 2 == min_l_degree(build_B(2, 4, 3, 2), 2)[0]
    assert rep["finite ratio delta_2/C(n,k-l)"] == Fraction(2, 8)
    data = parse_report(rep.render())
    assert data["values"]["finite ratio delta_2/C(n,k-l)"] == {"exact": "1/4", "decimal": "0.25"}
    assert data["version"]


def test_check_free(tmp_path):
    path = tmp_path / "g.hg"
    write_hypergraph(resolve_named("K4_3_minus_e"), path)
    code, rep, _ = run("check-free", "--file", path, "--forbidden", "K4_3")
    assert code == 0 and rep["free"] is True
    assert "free: true" in rep.render()
    code, rep, _ = run("check-free", "--file", "K5_3", "--forbidden", "K4_3")
    assert rep["free"] is False


def test_forbidden_flags_mix_names_and_files(tmp_path):
    path = tmp_path / "minus.hg"
    write_hypergraph(resolve_named("K4_3_minus_e"), path)
    code, rep, _ = run("check-free", "--file", "K4_3", "--forbidden", path,
                       "--forbidden", "K4_3", "--forbidden", "K4_3")
    assert code == 0
    assert rep["family_size"] == 2
    assert rep["free"] is False


def test_solve_oracle_matches_library():
    code, rep, _ = run("solve", "--n", 5, "--k", 3, "--l", 2, "--forbidden", "K4_3", "--mode", "oracle")
    assert code == 0
    fam = ForbiddenFamily.of([complete(4, 3)])
    assert rep["value"] == oracle_ex(5, 3, 2, fam).value == 1
    assert rep["status"] == "proved-exact"


def test_solve_decision_and_witness(tmp_path):
    out = tmp_path / "w.hg"
    code, rep, _ = run("solve", "--n", 7, "--k", 3, "--l", 2, "--forbidden", "K4_3",
                       "--mode", "decision:3", "--witness-out", out, "--restarts", 2)
    assert code == 0
    W = read_hypergraph(out)
    assert rep.artifacts[str(out)] == digest(W)
    assert min_l_degree(W, 2)[0] >= 3
    assert is_family_free(W, ForbiddenFamily.of([complete(4, 3)]))
    code, rep, _ = run("solve", "--n", 7, "--k", 3, "--l", 2, "--forbidden", "K4_3", "--mode", "decision:4")
    assert code == 0 and rep["status"] == "unsat"


def test_solve_budget_exit_code():
    code, rep, _ = run("solve", "--n", 11, "--k", 3, "--l", 2, "--forbidden", "K4_3",
                       "--nodes", 500, "--restarts", 2)
    assert code == EXIT_BUDGET
    assert rep["status"] == "budget-exhausted"
    assert isinstance(rep["value"], list)


def test_solve_oracle_too_big():
    code, _, err = run("solve", "--n", 8, "--k", 3, "--l", 2, "--forbidden", "K4_3", "--mode", "oracle")
    assert code == EXIT_SIZE and err


def test_construct_writes_sidecar(tmp_path):
    out = tmp_path / "g.hg"
    code, rep, _ = run("construct", "Giraud", "--order", 4, "--out", out)
    assert code == 0
    meta = json.loads((tmp_path / "g.hg.json").read_text())
    assert meta["variant"] == "Giraud" and meta["order"] == 4
    assert meta["sha256"] == digest(read_hypergraph(out)) == rep.artifacts[str(out)]


def test_construct_random_link_replays(tmp_path):
    a, b = tmp_path / "a.hg", tmp_path / "b.hg"
    args = ["construct", "RandomLink", "--bipartite", "3,3", "--n", 12, "--k", 3, "--l", 2, "--seed", 5]
    _, ra, _ = run(*args, "--out", a)
    _, rb, _ = run(*args, "--out", b)
    assert a.read_bytes() == b.read_bytes()
    assert ra.artifacts[str(a)] == rb.artifacts[str(b)]


def test_count_copies():
    code, rep, _ = run("count-copies", "--file", "K6_3", "--pattern", "K4_3")
    assert rep["copies"] == 15 == count_copies(complete(6, 3), complete(4, 3))
    assert rep["automorphisms"] == 24


def test_link_family():
    code, rep, _ = run("link-family", "--graph", "K4_3_minus_e", "--l", 1)
    assert code == 0 and rep["size"] == 2


def test_params_report():
    code, rep, _ = run("params", "--k", 3, "--l", 2, "--delta", "0.1")
    assert code == 0
    P = jump_parameters(3, 2, Fraction(1, 10))
    assert (rep["t"], rep["M0"], rep["epsilon0_pow"]) == (P.t, P.M0, P.epsilon0_pow)
    assert "epsilon0_pow: 1/50 (~0.02)" in rep.render()
    code, rep, _ = run("params", "--k", 3, "--l", 2, "--delta", "0.1", "--q", "1/2", "--threshold-eps", "0.5")
    assert (rep["a"], rep["b"], rep["M_threshold"]) == (4, 8, 381)


def test_count_good_subsets(tmp_path):
    code, rep, _ = run("count", "good-subsets", "--file", "K8_3", "--l", 2, "--m", 5, "--alpha", "1/2", "--exact")
    assert code == 0 and rep["count"] == 56 and rep["exact"] is True
    code, rep, _ = run("count", "good-subsets", "--file", "K8_3", "--l", 2, "--m", 5, "--alpha", "1/2",
                       "--samples", 50, "--seed", 1)
    assert rep["exact"] is False and rep["hits"] == 50
    code, _, _ = run("count", "good-subsets", "--file", "K8_3", "--l", 2, "--m", 5, "--alpha", "1/2",
                     "--exact", "--budget", 10)
    assert code == EXIT_BUDGET


@pytest.mark.parametrize("argv", [["bogus"], ["stats"], ["stats", "--file", "K4_3", "--l", "x"],
                                  ["solve", "--n", "5", "--k", "3", "--l", "2", "--forbidden", "K4_3",
                                   "--mode", "fast"], []])
def test_usage_errors(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_data_errors(tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("3 4\n0 1 2\n0 1 2\n")
    code, _, err = run("stats", "--file", bad, "--l", 1)
    assert code == EXIT_DATA and "line 3" in err
    assert run("stats", "--file", "no_such_graph", "--l", 1)[0] == EXIT_DATA
    assert run("stats", "--file", "K4_3", "--l", 5)[0] == EXIT_DATA


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "hyperturan.cli", "stats", "--file", "K5_3", "--l", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_report(proc.stdout)["values"]["delta_2"] == 3
    proc = subprocess.run([sys.executable, "-m", "hyperturan.cli", "nope"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
