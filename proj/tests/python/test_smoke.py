import json
import os
import subprocess

import pytest

svir = pytest.importorskip("svir")


def test_version():
    assert svir.__version__ == "0.1.0"


def test_rational_and_phase():
    assert svir.rational("6/4") == "3/2"
    assert svir.phase_from_exponent("3/2") == "1/2"
    assert svir.phase_is_one("2")


def test_discrete_series_weights():
    assert svir.discrete_c(1) == "1"
    assert svir.hq_ns(1, 1, 1) == ("1", "1/6", "-1/3")
    c, h, q = svir.hq_r(1, 0, 1)
    assert (h, q) == ("1/24", "1/6")
    labels = svir.enumerate_labels(1, "NS")
    assert sorted(labels) == [(0, 0), (1, -1), (1, 1)]


def test_region_check():
    res = svir.region_check("NS", "1", "1/6", "-1/3")
    assert res["region"] == "NS3"
    assert res["labels"] == [(1, 1)]
    assert svir.region_check("NS", "1", "43/274", "-1/3")["region"] == "none"


def test_bracket():
    terms = svir.bracket("L", "2", "L", "-2", "0")
    by_fam = {t["fam"]: t for t in terms}
    assert by_fam["L"]["coeff"]["a"] == "4"
    assert by_fam["C"]["coeff"]["a"] == "1/2"


def test_fusion():
    prod = svir.fuse(2, (1, 1, 0), (1, 1, 0))
    # (2,2,0) in canonical form is (0,6,2)
    assert prod == [((0, 2, 0), 1), ((0, 6, 2), 1)]
    assert svir.canonical_sector(2, 2, 2, 0) == (0, 6, 2)
    assert svir.statistics_phase(6, 6, 4, 0) == "0"
    assert svir.is_dim_one(6, 6, 4, 0)
    assert svir.sector_order(2, 0, 1, 1) == 8


def test_module_summary():
    summary = svir.module_summary("1", "0", "0", "NS", "1")
    dims = {lv["level"]: lv["dim_irred"] for lv in summary["levels"]}
    assert dims == {"0": 1, "1/2": 0, "1": 1}
    assert all(lv["psd"] for lv in summary["levels"])


def test_classification():
    recs = svir.classify(6)
    assert len(recs) == 3
    assert {r["kind"] for r in recs} == {"simple_current"}
    groups = svir.phase_one_maximal_subgroups(32)
    assert len(groups) == 2
    assert all(g["order"] == 4 for g in groups)


def test_chiral_and_flow():
    assert svir.chiral_labels(2) == [(0, 0), (1, -1), (2, -2)]
    assert svir.ramond_vacuum_sectors(1) == [(0, 1), (1, 2)]
    assert svir.flow_lowest_vector("1", "0", "0", "1") == ("1/6", "1/3")
    target = svir.flow_discrete_label(1, (1, -1), "NS", "-1/2")
    assert target in svir.ramond_vacuum_sectors(1)
    back = svir.flow_discrete_label(1, target, "R", "1/2")
    assert back == (1, -1)


def test_index_pairing():
    assert svir.index_pairing_matrix(1) == [[1, 0], [0, 1]]
    assert svir.index_pairing_matrix(2) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


# --- CLI smoke -----------------------------------------------------------

CLI = os.environ.get("SVIR_CLI")
needs_cli = pytest.mark.skipif(CLI is None, reason="SVIR_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@needs_cli
def test_cli_fuse_and_determinism():
    out1 = run_cli("--format", "json", "fuse", "--n", "2", "--a", "1,1,0", "--b", "1,1,0")
    out2 = run_cli("--format", "json", "fuse", "--n", "2", "--a", "1,1,0", "--b", "1,1,0")
    assert out1.returncode == 0
    assert out1.stdout == out2.stdout  # byte-identical
    payload = json.loads(out1.stdout)
    assert payload["command"] == "fuse"
    prods = payload["result"]["product"]
    assert [(p["l"], p["m"], p["s"], p["mult"]) for p in prods] == [
        (0, 2, 0, 1),
        (0, 6, 2, 1),
    ]


@needs_cli
def test_cli_classify_json():
    out = run_cli("--format", "json", "classify", "--n", "6")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    exts = payload["result"][0]["extensions"]
    assert len(exts) == 3
    maximal = payload["result"][0]["maximal_phase_one_subgroups"]
    assert maximal[0]["order"] == 4


@needs_cli
def test_cli_index():
    out = run_cli("--format", "json", "index", "--n", "1")
    payload = json.loads(out.stdout)
    assert payload["result"]["pairing"] == [[1, 0], [0, 1]]


@needs_cli
def test_cli_exit_codes():
    bad_usage = run_cli("no-such-command")
    assert bad_usage.returncode == 2
    domain_error = run_cli("fuse", "--n", "2", "--a", "1,0,0", "--b", "0,0,0")
    assert domain_error.returncode == 1  # parity violation
    err = json.loads(domain_error.stderr)
    assert "error" in err
    ok = run_cli("module", "--c", "1", "--h", "0", "--q", "0", "--type", "NS", "--cutoff", "1")
    assert ok.returncode == 0
