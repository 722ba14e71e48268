import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "lpmpoly.cli"]


def run_cli(*args):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, timeout=600
    )


def test_volume_verb():
    out = run_cli("volume", "--lower", "EENN", "--upper", "NNEE")
    assert out.returncode == 0
    assert json.loads(out.stdout) == {"volume_normalized": "4"}


def test_bases_verb_round_trip_and_determinism():
    first = run_cli("bases", "--lower", "EENN", "--upper", "NENE")
    second = run_cli("bases", "--lower", "EENN", "--upper", "NENE")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout) == ["0011", "0101", "0110", "1001", "1010"]


def test_facets_verb_schema():
    out = run_cli("facets", "--lower", "EENN", "--upper", "NENE")
    records = json.loads(out.stdout)
    assert len(records) == 5
    for rec in records:
        assert set(rec) == {"coeffs", "rel", "rhs", "tight_vertices"}
        assert rec["rel"] in ("<=", ">=")
    assert {"coeffs": [1, 1, 0, 0], "rel": "<=", "rhs": 1, "tight_vertices": [1, 2, 3, 4]} in records


def test_hrep_verb_schema():
    out = run_cli("hrep", "--lower", "EN", "--upper", "NE")
    records = json.loads(out.stdout)
    assert {"coeffs": [1, 1], "rel": "=", "rhs": 1, "tight_vertices": [0, 1]} in records


def test_dim_edges_ehrhart_verbs():
    assert json.loads(run_cli("dim", "--lower", "EENN", "--upper", "NENE").stdout) == {
        "dimension": 3
    }
    edges = json.loads(run_cli("edges", "--lower", "EENN", "--upper", "NNEE").stdout)
    assert edges["count"] == 12
    ehr = json.loads(run_cli("ehrhart", "--lower", "EENN", "--upper", "NNEE").stdout)
    assert ehr["volume_normalized"] == "4"
    assert ehr["values"]["1"] == "6"
    assert len(ehr["coeffs"]) == 4
    assert all("/" in c for c in ehr["coeffs"])


def test_decompose_verb():
    out = run_cli("decompose", "--lower", "EENN", "--upper", "NNEE")
    tree = json.loads(out.stdout)
    assert tree["split"] == {"x": 2, "j": 1}
    assert [c["strip"] for c in tree["children"]] == ["RU", "UR"]
    assert [c["descents"] for c in tree["children"]] == [[2], [1]]


def test_triangulate_verb():
    out = run_cli("triangulate", "--k", "2", "--n", "4")
    cells = json.loads(out.stdout)
    assert len(cells) == 4
    assert all(cell["det"] == 1 for cell in cells)
    assert all("/" in coord for cell in cells for v in cell["vertices"] for coord in v)


def test_catalan_verb():
    out = json.loads(run_cli("catalan", "--n", "3").stdout)
    assert out["edge_count"] == "8"
    assert out["facet_count_claim"] == 10
    assert out["gap_area_total"] == "29/2"


def test_region_file_input(tmp_path):
    path = tmp_path / "region.json"
    path.write_text(json.dumps({"lower": "EENN", "upper": "NNEE"}))
    out = run_cli("volume", "--file", str(path))
    assert json.loads(out.stdout) == {"volume_normalized": "4"}


def test_exit_codes():
    bad = run_cli("bases", "--lower", "NENE", "--upper", "EENN")
    assert bad.returncode == 3
    assert "DominanceViolation" in bad.stderr
    usage = run_cli("bases", "--lower", "EENN")
    assert usage.returncode == 2
    unknown = run_cli("frobnicate")
    assert unknown.returncode == 2
    cap = run_cli("bases", "--lower", "E" * 6 + "N" * 6, "--upper", "N" * 6 + "E" * 6)
    assert cap.returncode == 4
    raised = run_cli(
        "bases",
        "--lower", "E" * 6 + "N" * 6,
        "--upper", "N" * 6 + "E" * 6,
        "--max-size", "12",
    )
    assert raised.returncode == 0
    disconnected = run_cli("decompose", "--lower", "ENEN", "--upper", "ENEN")
    assert disconnected.returncode == 3


def test_kn_verbs_reject_region_flags():
    out = run_cli("triangulate", "--k", "2", "--n", "4", "--lower", "EENN")
    assert out.returncode == 2
    out = run_cli("catalan", "--n", "3", "--upper", "NENE")
    assert out.returncode == 2


def test_verify_ehrhart_formula_csv():
    out = run_cli("verify", "ehrhart-formula", "--max-size", "3", "--t-max", "2")
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "lower,upper,t,formula_value,true_value,match"
    assert "EN,NE,1,3,2,false" in lines
