"""CLI verbs: JSON on stdout, summaries on stderr, exit codes."""

import json

import pytest

from framelat import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.strip() else None
    return code, doc, captured.err


def test_build_code(capsys):
    code, doc, err = run_cli(capsys, "build", "C_{13,12}")
    assert code == 0
    assert doc["object"]["modulus"] == 13
    assert "C_{13,12}" in err


def test_build_matrix(capsys):
    code, doc, _ = run_cli(capsys, "build", "P_8")
    assert code == 0
    assert len(doc["object"]["rows"]) == 8


def test_build_lattice_by_alias(capsys):
    code, doc, _ = run_cli(capsys, "build", "D12+")
    assert code == 0
    assert doc["object"]["scale"] == 3


def test_theta_command(capsys):
    code, doc, _ = run_cli(capsys, "theta", "D20", "--max-norm", "4")
    assert code == 0
    assert doc["fingerprint"]["counts"] == [1, 0, 760, 0, 77560]


def test_min_norm_command(capsys):
    code, doc, _ = run_cli(capsys, "min-norm", "C_{12,3}(D_6)")
    assert code == 0
    assert doc["min_norm"] == 2


def test_find_frame_negative(capsys):
    code, doc, _ = run_cli(capsys, "find-frame", "D20", "--k", "3")
    assert code == 0
    assert doc["result"]["status"] == "none"


def test_find_frame_exhausted_exit(capsys):
    code, doc, _ = run_cli(capsys, "find-frame", "A5^4", "--k", "2",
                           "--budget", "5")
    assert code == 2
    assert doc["result"]["status"] == "exhausted"


def test_represent_single_prime(capsys):
    code, doc, _ = run_cli(capsys, "represent", "--case", "b",
                           "--prime", "11")
    assert code == 0
    assert doc["result"]["status"] == "witness"


def test_represent_range(capsys):
    code, doc, _ = run_cli(capsys, "represent", "--case", "e",
                           "--range", "60")
    assert code == 0
    assert doc["report"]["exceptions"] == [2, 3]


def test_theorem_32b(capsys):
    code, doc, _ = run_cli(capsys, "theorem", "3.2b", "--prime-range", "100")
    assert code == 0
    nones = [r["p"] for r in doc["records"] if r["status"] == "none"]
    assert nones == [2, 7]


def test_theorem_unknown(capsys):
    code, _, err = run_cli(capsys, "theorem", "9.99")
    assert code == 3
    assert "unknown theorem" in err


def test_verify_catalog_subset(capsys):
    code, doc, _ = run_cli(capsys, "verify-catalog", "--only",
                           "C_{13,12}", "B_12")
    assert code == 0
    assert doc["pass"] is True
    assert len(doc["entries"]) == 2


def test_verify_catalog_subset_threads(capsys):
    code, doc, _ = run_cli(capsys, "verify-catalog", "--threads", "2",
                           "--only", "C_{13,12}", "C_{23,12}")
    assert code == 0
    assert doc["pass"] is True


def test_neighbors_command(capsys):
    code, doc, _ = run_cli(capsys, "neighbors", "L32_82")
    assert code == 0
    mins = sorted(d["min_norm"] for d in doc["neighbors"])
    assert mins[-1] == 4  # the Barnes-Wall-level neighbor
    assert all(d["even"] for d in doc["neighbors"])


def test_list_command(capsys):
    code, doc, _ = run_cli(capsys, "list")
    assert code == 0
    assert "C_{9,40}" in doc["entries"]
    assert "frames-48" in doc["theorems"]


def test_bad_name_exit(capsys):
    code, _, err = run_cli(capsys, "build", "nothing")
    assert code == 3 and "error" in err
