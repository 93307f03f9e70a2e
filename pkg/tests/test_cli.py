import json
import subprocess
import sys

import pytest

from levi import families as fam
from levi.cli import run
from levi.io import from_graph6, to_graph6


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_graph6(capsys):
    code, out, _ = _run(capsys, "gen", "--family", "heawood")
    assert code == 0
    assert from_graph6(out.strip().encode()) == fam.heawood()


def test_gen_with_labels(capsys):
    code, out, _ = _run(capsys, "gen", "--family", "d", "--n", "9", "--labels")
    data = json.loads(out)
    assert code == 0 and len(data["labels"]) == 18 and data["labels"][0] == "u_1^1"


def test_gen_edgelist(capsys):
    code, out, _ = _run(capsys, "gen", "--family", "k33", "--out-format", "edgelist")
    assert code == 0 and out.splitlines()[0] == "6 9"


def test_gen_bad_parameters(capsys):
    code, _, err = _run(capsys, "gen", "--family", "cyclic", "--n", "6")
    assert code == 1 and "error" in err
    code, _, _ = _run(capsys, "gen", "--family", "d", "--n", "5")
    assert code == 1


def test_classify_json(capsys):
    code, out, _ = _run(capsys, "classify", to_graph6(fam.pappus()).decode(), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["total_two_factors"] == 42
    assert data["by_circuit_count"] == {"1": 36, "3": 6}
    assert data["flags"]["pseudo_two_factor_isomorphic"] is True
    assert data["flags"]["two_factor_isomorphic"] is False


def test_classify_text_and_parity(capsys):
    code, out, _ = _run(capsys, "classify", to_graph6(fam.heawood()).decode())
    assert code == 0 and "two_factor_hamiltonian=true" in out
    code, out, _ = _run(capsys, "classify", to_graph6(fam.d_graph(9)).decode(), "--mode", "parity", "--json")
    data = json.loads(out)
    assert data["status"] == "early_exit"
    assert data["flags"]["pseudo_two_factor_isomorphic"] is False


def test_classify_budget_inconclusive(capsys):
    code, out, _ = _run(capsys, "classify", to_graph6(fam.pappus()).decode(), "--budget", "5", "--json")
    assert code == 0 and json.loads(out)["status"] == "inconclusive"


def test_classify_reads_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "graphs.g6"
    path.write_bytes(to_graph6(fam.k33()) + b"\n" + to_graph6(fam.heawood()) + b"\n")
    code, out, _ = _run(capsys, "classify", str(path), "--json")
    assert code == 0 and [json.loads(x)["vertices"] for x in out.splitlines()] == [6, 14]


def test_parse_errors_exit_1(capsys):
    code, _, err = _run(capsys, "classify", "M??")
    assert code == 1 and "offset" in err


def test_not_cubic_exit_1(capsys):
    code, _, err = _run(capsys, "classify", to_graph6(fam.circuit(6)).decode())
    assert code == 1 and "error" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        run(["classify", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["classify", "x", "--threads", "0"])
    assert info.value.code == 2


def test_bad_thread_environment(capsys, monkeypatch):
    monkeypatch.setenv("LEVI_THREADS", "many")
    code, _, err = _run(capsys, "gen", "--family", "k33")
    assert code == 2 and "LEVI_THREADS" in err


def test_props(capsys):
    g, _ = fam.heawood_star_heawood()
    code, out, _ = _run(capsys, "props", to_graph6(g).decode())
    data = json.loads(out)
    assert code == 0
    assert data["girth"] == 6 and data["bipartite"] and data["edge_connectivity"] == 3
    assert data["essentially_4_edge_connected"] is False and len(data["cut_witness"]) == 3


def test_iso(capsys):
    a = to_graph6(fam.d_graph(7)).decode()
    b = to_graph6(fam.heawood()).decode()
    c = to_graph6(fam.pappus()).decode()
    assert _run(capsys, "iso", a, b)[1] == "true\n"
    assert _run(capsys, "iso", a, c)[1] == "false\n"


def test_martinetti_commands(capsys, tmp_path):
    pappus = to_graph6(fam.pappus()).decode()
    code, out, err = _run(capsys, "martinetti", "extend", pappus, "--up-to-iso")
    assert code == 0 and len(out.splitlines()) == 1
    log = json.loads(err)
    assert log["moves"][0]["kind"] == "extend"
    extended = out.strip()

    logfile = tmp_path / "moves.json"
    code, out, err = _run(capsys, "martinetti", "reduce", extended, "--log", str(logfile))
    assert code == 0 and err == ""
    moves = json.loads(logfile.read_text())["moves"]
    assert moves and all(m["kind"] == "reduce" for m in moves)

    assert _run(capsys, "martinetti", "irreducible", pappus)[1] == "true\n"
    assert _run(capsys, "martinetti", "irreducible", extended)[1] == "false\n"
    code, out, _ = _run(capsys, "martinetti", "sites", to_graph6(fam.heawood()).decode())
    assert json.loads(out) == {"extension_sites": [], "reduction_sites": []}


def test_martinetti_site_index(capsys):
    pappus = to_graph6(fam.pappus()).decode()
    code, out, _ = _run(capsys, "martinetti", "extend", pappus, "--site", "3")
    assert code == 0 and len(out.splitlines()) == 1
    code, _, _ = _run(capsys, "martinetti", "extend", pappus, "--site", "99")
    assert code == 1


def test_witnesses_command(capsys):
    code, out, _ = _run(capsys, "witnesses", "--family", "d", "--n", "11")
    data = json.loads(out)
    assert code == 0
    assert data["hamiltonian"]["lengths"] == [22]
    assert data["disconnected"]["lengths"] == [6, 16]
    assert data["disconnected"]["circuits"][0][0].startswith(("u", "v", "w"))
    code, _, _ = _run(capsys, "witnesses", "--family", "d", "--n", "7")
    assert code == 1


def test_verify_subset(capsys):
    code, out, _ = _run(capsys, "verify-paper", "--claims", "classify,star", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert {c["group"] for c in data["claims"]} == {"classify", "star"}
    code, _, _ = _run(capsys, "verify-paper", "--claims", "nope")
    assert code == 2


def test_output_is_byte_identical_across_runs_and_threads():
    cmd = [sys.executable, "-m", "levi", "classify", to_graph6(fam.t_graph(1, 2)).decode(), "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    again = subprocess.run(cmd, capture_output=True, check=True).stdout
    threaded = subprocess.run(cmd + ["--threads", "2"], capture_output=True, check=True).stdout
    assert first == again == threaded
