import json
import subprocess
import sys

import pytest

from scissors.algebraic import make_algebraic
from scissors.geom.convex import (
    box,
    regular_tetrahedron,
    scaled_simplices,
    transformed,
    unit_cube,
)
from scissors.io import polytope_from_json, polytope_to_json
from scissors.report import recheck_certificates, verify_report_digest


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "scissors.cli", *argv],
        capture_output=True, text=True)
    return proc


@pytest.fixture(scope="module")
def fixtures(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    cube = root / "cube.json"
    cube.write_text(json.dumps(polytope_to_json(unit_cube())))
    s = make_algebraic([-3, 0, 0, 8], (0, 1))
    tet = root / "tetra_vol1.json"
    tet.write_text(json.dumps(polytope_to_json(
        scaled_simplices(regular_tetrahedron(), s))))
    tall = root / "box112.json"
    tall.write_text(json.dumps(polytope_to_json(
        box((0, 0, 0), (1, 1, 2)))))
    rot = root / "cube_rot.json"
    from fractions import Fraction
    R = [(Fraction(3, 5), Fraction(-4, 5), 0),
         (Fraction(4, 5), Fraction(3, 5), 0), (0, 0, 1)]
    rot.write_text(json.dumps(polytope_to_json(
        transformed(unit_cube(), R, shift=(2, 1, 0)))))
    tensor = root / "t.json"
    tensor.write_text(json.dumps(
        {"terms": [{"length": "rat:1/1", "cos": "t", "sin": "s"}]}))
    return root


def test_polytope_round_trip(fixtures):
    obj = json.loads((fixtures / "cube.json").read_text())
    p = polytope_from_json(obj)
    assert p.volume() == 1
    obj2 = polytope_to_json(p)
    p2 = polytope_from_json(obj2)
    assert p2.volume() == 1


def test_cli_polytope_info_cube(fixtures):
    proc = run_cli("polytope-info", str(fixtures / "cube.json"))
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["results"]["volume"] == "rat:1/1"
    assert report["results"]["dehn_verdict"] == "Zero"
    assert verify_report_digest(report)


def test_cli_polytope_info_tetra(fixtures):
    proc = run_cli("polytope-info", str(fixtures / "tetra_vol1.json"))
    report = json.loads(proc.stdout)
    assert report["results"]["dehn_verdict"] == "NonzeroCertified"
    certs = {c["type"] for c in report["certificates"]}
    assert "nonzero-dehn" in certs


def test_cli_compare_hilbert(fixtures):
    proc = run_cli("compare", str(fixtures / "cube.json"),
                   str(fixtures / "tetra_vol1.json"))
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["results"]["verdict"]["tag"] == "NotCongruent_Dehn"
    recheck = recheck_certificates(report)
    assert recheck["recheck_passed"]


def test_cli_compare_rotated(fixtures):
    proc = run_cli("compare", str(fixtures / "cube.json"),
                   str(fixtures / "cube_rot.json"))
    report = json.loads(proc.stdout)
    assert report["results"]["verdict"]["tag"] == "Congruent_DSJ"


def test_cli_compare_volume(fixtures):
    proc = run_cli("compare", str(fixtures / "box112.json"),
                   str(fixtures / "cube.json"))
    report = json.loads(proc.stdout)
    assert report["results"]["verdict"]["tag"] == "NotCongruent_Volume"
    recheck = recheck_certificates(report)
    assert recheck["recheck_passed"]


def test_cli_determinism(fixtures):
    a = run_cli("verify", "sd-homotopy", "--seed", "3", "--cases", "6")
    b = run_cli("verify", "sd-homotopy", "--seed", "3", "--cases", "6")
    ra, rb = json.loads(a.stdout), json.loads(b.stdout)
    assert ra["digest"] == rb["digest"]
    ra.pop("timing_ms")
    rb.pop("timing_ms")
    assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)


def test_cli_exit_codes(fixtures):
    assert run_cli("polytope-info", "/nonexistent.json").returncode == 2
    assert run_cli("hochschild", "--algebra", "mat4",
                   "--max-degree", "3").returncode == 4
    bad = fixtures / "bad.json"
    bad.write_text(json.dumps({
        "dim": 3,
        "vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1],
                     ["rat:1/4", "rat:1/4", "rat:1/4"]],
        "cells": [[0, 1, 2, 3], [0, 1, 2, 4]],
    }))
    assert run_cli("polytope-info", str(bad)).returncode == 3


def test_cli_phi(fixtures):
    proc = run_cli("phi", "--tensor", str(fixtures / "t.json"),
                   "--tower", "t; s: s^2 = 1 - t^2")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert "dt" in report["results"]["image"]
    # the rendered coefficient equals 1/s in the tower
    from scissors.kahler import FieldTower
    T = FieldTower("t; s: s^2 = 1 - t^2")
    got = T.parse(report["results"]["image"]["dt"])
    assert T.equal(got, T.parse("1/s"))


def test_cli_homology_group():
    proc = run_cli("homology", "--group", "Z/4", "--module", "trivialZ",
                   "--max-degree", "3")
    report = json.loads(proc.stdout)
    assert report["results"]["homology"] == ["Z", "Z/4", "0", "Z/4"]


def test_cli_text_format(fixtures):
    proc = run_cli("--format", "text", "polytope-info",
                   str(fixtures / "cube.json"))
    assert proc.returncode == 0
    assert "volume" in proc.stdout
    assert "{" not in proc.stdout.splitlines()[0]


def test_cli_hexagon_prism_info(tmp_path):
    # algebraic vertex literals (√3/2) through the wire format, and the
    # rational-angle certificate for the interior-angle drops
    from scissors.geom import prism
    from scissors.geom.convex import regular_hexagon
    p = prism(regular_hexagon(1), 1)
    path = tmp_path / "prism_hex.json"
    path.write_text(json.dumps(polytope_to_json(p)))
    proc = run_cli("polytope-info", str(path))
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["results"]["dehn_verdict"] == "Zero"
    kinds = {c["type"] for c in report["certificates"]}
    assert "rational-angles" in kinds
    dropped = [c for c in report["certificates"]
               if c["type"] == "rational-angles"][0]["dropped"]
    assert any(d["q"] == "rat:2/3" for d in dropped)  # hexagon corner angle
    recheck = recheck_certificates(report)
    assert recheck["recheck_passed"]


def test_cli_recheck_roundtrip(fixtures, tmp_path):
    proc = run_cli("compare", str(fixtures / "cube.json"),
                   str(fixtures / "tetra_vol1.json"))
    path = tmp_path / "report.json"
    path.write_text(proc.stdout)
    rc = run_cli("recheck", str(path))
    assert rc.returncode == 0
    out = json.loads(rc.stdout)
    assert out["results"]["recheck_passed"]
    # tamper: flipping a certificate breaks the digest
    report = json.loads(proc.stdout)
    report["certificates"][0]["monic"] = True
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(report))
    rc2 = run_cli("recheck", str(bad))
    assert rc2.returncode == 1
