"""End-to-end smoke checks for the Python module and the installed CLI.

The build directory is handed in through WALRAS_MODULE_DIR and the CLI
binary through WALRAS_CLI; the working directory is the repository root.
"""

import json
import os
import pathlib
import subprocess
import sys

import pytest

sys.path.insert(0, os.environ["WALRAS_MODULE_DIR"])

import walras  # noqa: E402

FIXTURES = pathlib.Path("fixtures")
QL_UD = (FIXTURES / "ql_ud.json").read_text()
QL_NOWE = (FIXTURES / "ql_nowe.json").read_text()
NQL_2 = (FIXTURES / "nql_2.json").read_text()


def test_version_matches_package():
    assert walras.version().startswith("walras ")
    assert walras.__version__ == walras.version().split()[-1]


def test_digest_is_pinned():
    assert walras.digest(QL_UD) == "fnv1a64:461027a813a03b2e"
    assert walras.digest(QL_NOWE) == "fnv1a64:29ccb52129cae6cf"


def test_canonical_round_trips():
    canon = walras.canonical(QL_UD)
    assert walras.canonical(canon) == canon
    assert walras.digest(canon) == walras.digest(QL_UD)


def test_validate_reports_defects():
    ok = json.loads(walras.validate(QL_UD))
    assert ok["ok"] is True
    broken = json.loads(QL_UD)
    broken["price_cap"] = "-1"
    report = json.loads(walras.validate(json.dumps(broken)))
    assert report["ok"] is False
    assert report["violations"]


def test_malformed_documents_raise():
    with pytest.raises(ValueError):
        walras.digest("not json")
    with pytest.raises(ValueError):
        walras.solve('{"items": []}')


def test_solve_finds_the_assignment_equilibrium():
    report = json.loads(walras.solve(QL_UD))
    assert report["status"] == "we_found"
    assert report["gap"] == "0"
    assert set(report["allocation"]) == {"1", "2"}


def test_solve_modes_disagree_on_the_tie_fixture():
    assert json.loads(walras.solve(QL_NOWE))["status"] == "no_we_conclusive"
    frac = json.loads(walras.solve(QL_NOWE, mode="frac"))
    assert frac["status"] == "frac_only"
    assert frac["prices"] == {"a": "3/2", "b": "3/2"}
    weights = frac["fractional"]
    assert sorted(weights["1"]) == ["[\"a\",\"b\"]", "[]"]
    assert weights["2"] == {"[\"a\"]": "1/2", "[\"b\"]": "1/2"}


def test_curve_instance_solves():
    report = json.loads(walras.solve(NQL_2))
    assert report["status"] == "we_found"


def test_demand_sets():
    report = json.loads(walras.demand(QL_UD, "1,1"))
    assert report["demand"]["1"]["bundles"] == [["a"]]
    assert report["demand"]["1"]["max_utility"] == "1"


def test_verify_both_shapes():
    good = json.loads(walras.verify(QL_UD, "1,1", alloc="1:a,2:b"))
    assert good["ok"] is True
    bad = json.loads(walras.verify(QL_UD, "3,0", alloc="1:a,2:b"))
    assert bad["ok"] is False
    assert {v["condition"] for v in bad["violations"]}

    frac = json.loads(
        walras.verify(QL_NOWE, "3/2,3/2", frac="1:a+b=1/2,1:=1/2,2:a=1/2,2:b=1/2")
    )
    assert frac["ok"] is True
    with pytest.raises(ValueError):
        walras.verify(QL_UD, "1,1")
    with pytest.raises(ValueError):
        walras.verify(QL_UD, "1,1", alloc="1:a", frac="1:a=1")


def test_brute_matches_the_solver_on_the_tie_fixture():
    report = json.loads(walras.brute(QL_NOWE, "1/4"))
    assert report["count"] == 0
    assert report["equilibria"] == []


def test_reduce_shape():
    market = json.loads(walras.reduce(QL_UD))
    assert (market["M"], market["N"], market["Z"]) == (3, 3, "21")
    assert market["endowments"][0] == ["0", "0", "21/2"]


def test_configlp_dump():
    text = walras.configlp(QL_UD, "1,1", solve=True)
    assert text.startswith("maximize: ")
    assert "value: 4" in text
    dual = walras.configlp(QL_UD, "1,1", dual=True)
    assert dual.startswith("minimize: ")


def cli(*args):
    return subprocess.run(
        [os.environ["WALRAS_CLI"], *args], capture_output=True, text=True
    )


def test_cli_exit_codes():
    assert cli("validate", "fixtures/ql_ud.json").returncode == 0
    assert cli("solve", "fixtures/ql_nowe.json").returncode == 1
    assert cli("solve", "fixtures/ql_nowe.json", "--mode", "frac").returncode == 0
    assert cli("solve", "fixtures/missing.json").returncode == 2


def test_cli_agrees_with_the_module():
    run = cli("solve", "fixtures/ql_ud.json")
    assert run.returncode == 0
    assert run.stdout == walras.solve(QL_UD)
    rerun = cli("solve", "fixtures/ql_ud.json")
    assert rerun.stdout == run.stdout
