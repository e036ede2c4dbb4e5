import json
import subprocess
import sys

import pytest

from diaglab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_topology_sizes(capsys):
    code, out, _ = run(capsys, "topology", "--family", "hypercube", "--n", "3")
    assert code == 0 and len(json.loads(out)["labels"]) == 8
    _, out, _ = run(capsys, "topology", "--family", "arrangement", "--n", "4", "--k", "2")
    assert len(json.loads(out)["labels"]) == 12
    _, out, _ = run(capsys, "topology", "--family", "nk-star", "--n", "4", "--k", "2")
    d = json.loads(out)
    assert len(d["labels"]) == 12 and len(d["edges"]) == 18


def test_bad_params_exit_nonzero(capsys):
    code, out, err = run(capsys, "topology", "--family", "nk-star", "--n", "4", "--k", "5")
    assert code == 2 and out == "" and "error" in err
    with pytest.raises(SystemExit):
        main(["topology", "--family", "torus", "--n", "3"])


@pytest.mark.parametrize("n,t", [(3, 3), (4, 5)])
def test_diag_extra_mmstar(capsys, n, t):
    code, out, err = run(capsys, "diag", "--family", "hypercube", "--n", str(n),
                         "--fault", "g-extra", "--g", "1", "--model", "mmstar")
    assert code == 0 and json.loads(out)["t"] == t
    assert "level" in err


def test_diag_unrestricted_pmc(capsys):
    _, out, _ = run(capsys, "diag", "--family", "hypercube", "--n", "3", "--fault", "unrestricted",
                    "--model", "pmc", "--cap", "4")
    d = json.loads(out)
    assert d["t"] == 3 and d["exhaustive"] and d["cap"] == 4


def test_missing_g(capsys):
    code, _, err = run(capsys, "kappa", "--family", "hypercube", "--n", "3", "--fault", "g-extra")
    assert code == 2 and "--g" in err


def test_kappa(capsys):
    _, out, _ = run(capsys, "kappa", "--family", "hypercube", "--n", "4", "--fault", "g-extra", "--g", "1")
    d = json.loads(out)
    assert d["kappa"] == 6 and len(d["witness"]) == 6


def test_witness(capsys):
    _, out, _ = run(capsys, "witness", "--family", "hypercube", "--n", "4", "--g", "1")
    d = json.loads(out)
    assert d["measured_boundary_size"] == 6 and d["closed_size"] == 8
    assert d["upper_bound"]["value"] == 7
    _, out, _ = run(capsys, "witness", "--family", "arrangement", "--n", "7", "--k", "4", "--shape", "C4")
    assert json.loads(out)["measured_boundary_size"] == 32
    code, _, _ = run(capsys, "witness", "--family", "arrangement", "--n", "7", "--k", "4")
    assert code == 2


def test_catalog(capsys):
    _, out, _ = run(capsys, "catalog")
    assert any(d["id"] == "t_bar_2_arrangement" for d in json.loads(out))
    _, out, _ = run(capsys, "catalog", "--id", "t_bar_2_arrangement", "--n", "8", "--k", "3")
    assert json.loads(out)["value"] == 34
    code, _, _ = run(capsys, "catalog", "--id", "t_bar_2_arrangement", "--n", "7", "--k", "3")
    assert code == 2
    _, out, _ = run(capsys, "catalog", "--table")
    assert "t_bar_2_arrangement" in out


def test_deterministic_output(capsys, tmp_path):
    argv = ["verify", "--suite", "oracles", "--seed", "7", "--pairs", "300"]
    run(capsys, *argv, "--output", str(tmp_path / "a.json"))
    run(capsys, *argv, "--output", str(tmp_path / "b.json"))
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_verify_oracles(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracles", "--seed", "42", "--pairs", "2000")
    d = json.loads(out)
    assert code == 0 and d["failed"] == 0 and d["seed"] == 42


def test_verify_constructions(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "constructions")
    d = json.loads(out)
    failing = [c["name"] for c in d["checks"] if c["status"] != "pass"]
    # every witness check passes; the distance-based common-neighbour rule
    # does not hold on three of the four arrangement graphs
    assert failing == [
        "A_4,2 distance-based common-neighbour rule",
        "A_5,2 distance-based common-neighbour rule",
        "A_5,3 distance-based common-neighbour rule",
    ]
    assert code == 1


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "relations", "--table")
    assert code == 0 and out.strip().endswith("0 failed")


@pytest.mark.slow
def test_verify_formulas(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "formulas")
    assert code == 0 and json.loads(out)["failed"] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diaglab", "topology", "--family", "hypercube", "--n", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["edges"] == [[0, 1], [0, 2], [1, 3], [2, 3]]
