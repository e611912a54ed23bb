from __future__ import annotations

import json
from pathlib import Path

import pytest

from spectral_independence.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_bounds_graph_petersen(capsys):
    code, rep = run_json(capsys, "bounds", "graph", DATA / "petersen.g")
    assert code == 0
    assert set(rep) >= {"input", "parameters", "bounds", "certificates", "exact", "meta"}
    assert rep["values"]["hoffman"] == pytest.approx(4.0)
    assert rep["values"]["beta1"] == pytest.approx(4.0)
    assert rep["exact"]["alpha_exact"] == 4
    assert rep["best_bound"] == pytest.approx(4.0)
    assert all("tolerance" in b for b in rep["bounds"])
    assert rep["meta"]["seed"] == 0x5EED and rep["meta"]["runtime_ms"] is None


def test_bounds_graph_table_lists_refusals(capsys):
    code, out, _ = run(capsys, "bounds", "graph", DATA / "k13.g")
    assert code == 0
    assert "hoffman" in out and "refused" in out and "beta1" in out


def test_certify_theta(capsys):
    code, rep = run_json(capsys, "certify", "theta", DATA / "k13.g", "--set", "1,2,3")
    cert = rep["certificates"][0]
    assert code == 0 and cert["certified"] and cert["value"] == 3
    assert cert["functional"] == pytest.approx(3.0, abs=1e-6)


def test_bounds_hypergraph_with_lambda(capsys):
    code, rep = run_json(capsys, "bounds", "hypergraph", DATA / "edge4.h", "--t", "3", "--lambda", "-1")
    assert code == 0
    assert rep["bounds"][0]["value"] == pytest.approx(3.0)
    assert rep["bounds"][0]["lambda_source"] == "exact-known"
    assert rep["certificates"][0]["all_match"]
    assert rep["exact"]["alpha_t_exact"] == 3


def test_bounds_hypergraph_even_t(capsys):
    code, rep = run_json(capsys, "bounds", "hypergraph", DATA / "edge4.h", "--t", "2")
    assert code == 0
    assert rep["bounds"][0]["signing"] == [-1]
    assert rep["bounds"][0]["value"] == pytest.approx(2.0)


def test_heuristic_lambda_is_flagged(capsys, tmp_path):
    f = tmp_path / "h.h"
    f.write_text("0 1 2 3\n1 2 4 5\n")
    code, rep = run_json(capsys, "bounds", "hypergraph", f, "--t", "1", "--starts", "8")
    assert code == 0
    assert rep["bounds"][0]["lambda_source"] == "solver-heuristic"
    assert rep["bounds"][0]["caveat"]


def test_check_equality(capsys):
    code, rep = run_json(capsys, "check", "equality", DATA / "c5.g", "--set", "0,2")
    assert code == 0 and not rep["certificates"][0]["all_match"]
    code, rep = run_json(capsys, "check", "equality", DATA / "odd_bipartite_2_6.h", "--set", "0,1", "--t", "1")
    assert code == 0 and rep["certificates"][0]["all_match"]


def test_exact_commands(capsys):
    code, rep = run_json(capsys, "exact", "alpha", DATA / "petersen.g")
    assert rep["exact"]["alpha_exact"] == 4
    code, rep = run_json(capsys, "exact", "alpha-t", DATA / "two_edges4.h", "--t", "2")
    assert rep["exact"]["alpha_t_exact"] == 4
    code, rep = run_json(capsys, "exact", "power-alpha", DATA / "c5.g", "--k", "2")
    assert rep["exact"]["alpha_exact"] == 5
    assert rep["exact"]["power_alpha_root"] == pytest.approx(5 ** 0.5)
    assert all(len(t) == 2 for t in rep["exact"]["alpha_witness_tuples"])


def test_construct_outputs_parse_back(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "odd-bipartite", "--k", "4", "--t", "1", "--a", "2", "--b", "6")
    assert code == 0 and "regular d=20" in out
    f = tmp_path / "odd.h"
    f.write_text(out)
    code, rep = run_json(capsys, "bounds", "hypergraph", f, "--t", "1")
    assert rep["bounds"][0]["value"] == pytest.approx(2.0)

    code, out, _ = run(capsys, "construct", "pendant", DATA / "c4.g", "--p", "3,3,3,3")
    g = tmp_path / "pend.g"
    g.write_text(out)
    code, rep = run_json(capsys, "certify", "theta", g, "--set", ",".join(map(str, range(4, 16))))
    assert rep["certificates"][0]["value"] == 12

    code, out, _ = run(capsys, "construct", "join", DATA / "c5.g", DATA / "c5.g")
    assert out.startswith("n 10\n") and len(out.strip().splitlines()) == 36


def test_construct_example46(capsys):
    code, rep = run_json(capsys, "construct", "example46", "--n1", "200", "--r1", "2", "--n2", "3", "--r2", "2")
    assert code == 0 and rep["result"]["ordered"]
    assert rep["result"]["laplacian_closed_form"] == 198.0


@pytest.mark.parametrize("argv,code", [
    (["construct", "example46", "--n1", "200", "--r1", "2", "--n2", "0", "--r2", "2"], 1),
    (["bounds", "hypergraph", str(DATA / "edge4.h"), "--t", "4"], 1),
    (["bounds", "graph", "no/such/file.g"], 2),
    (["certify", "theta", str(DATA / "k13.g"), "--set", "a,b"], 2),
    (["certify", "theta", str(DATA / "k13.g"), "--set", "9"], 2),
])
def test_exit_codes(capsys, argv, code):
    rc, out, err = run(capsys, *argv)
    assert rc == code and err


def test_parse_error_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.g"
    f.write_text("0 1\n1 1\n")
    rc, _, err = run(capsys, "bounds", "graph", f)
    assert rc == 2 and "line 2" in err


def test_corpus_mode_sorted_and_deterministic(capsys):
    code, first = run_json(capsys, "bounds", "graph", "--dir", DATA)
    _, second = run_json(capsys, "bounds", "graph", "--dir", DATA)
    assert code == 0 and first == second
    names = [r["input"] for r in first["reports"]]
    assert names == sorted(names) and "petersen.g" in names


def test_reruns_are_byte_identical(capsys):
    argv = ["bounds", "hypergraph", str(DATA / "two_edges4.h"), "--t", "1", "--json", "--starts", "8"]
    main(argv)
    a = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == a


def test_timing_flag(capsys):
    code, rep = run_json(capsys, "exact", "alpha", DATA / "c5.g", "--timing")
    assert rep["meta"]["runtime_ms"] >= 0


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "spectral_independence", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "0.1.0" in proc.stdout
