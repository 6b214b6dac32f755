import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

import aqcube
from aqcube.cli import main

FIX = Path(aqcube.__file__).parent / "fixtures"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(p.name for p in FIX.glob("*.json")
                                        if "corrupted" not in p.name))
def test_fixtures_validate(name):
    code, out, _ = run("validate", FIX / name)
    assert code == 0 and out.startswith("ok:")


def test_corrupted_fixture_names_both_paths():
    code, out, _ = run("validate", FIX / "boundary3_corrupted.json")
    assert code == 2
    assert "non-commuting" in out and "give different maps" in out


def test_truncated_json_reports_position(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "schema": 1,\n  "kind": "cubical",\n  "description": "oops\n')
    code, _, err = run("validate", p)
    assert code == 3
    assert f"{p}:4:" in err


def test_schema_violation_exits_parse(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"schema": 1, "kind": "shape"}))
    code, _, err = run("cohomology", p)
    assert code == 3 and "kind" in err


def test_missing_file(tmp_path):
    code, _, err = run("validate", tmp_path / "nope.json")
    assert code == 3 and "nope.json" in err


def test_square_boundary_cohomology():
    code, out, _ = run("cohomology", FIX / "square_boundary.json", "--ascii")
    assert code == 0
    assert out.splitlines()[:2] == ["H^-2 = Z", "H^-1 = Z"]
    code, out, _ = run("cohomology", FIX / "square_boundary.json", "--json")
    data = json.loads(out)
    assert data["degrees"] == {"-2": {"rank": 1, "torsion": []}, "-1": {"rank": 1, "torsion": []}}
    assert data["interval_counts"] == [4, 4]


def test_interval_cohomology_single_degree():
    code, out, _ = run("cohomology", FIX / "interval_constant.json", "--degree", -1)
    assert code == 0 and out.startswith("H^-1 = ℤ\n")
    code, out, _ = run("cohomology", FIX / "interval_constant.json", "--degree", 0)
    assert out.startswith("H^0 = 0\n")


def test_diamond_poset_torsion():
    code, out, _ = run("cohomology", FIX / "diamond_poset.json", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["degrees"][str(data["offset"])] == {"rank": 0, "torsion": [4]}


@pytest.mark.parametrize("name,code,verdict", [
    ("boundary3_toda.json", 0, "LIFTS"),
    ("boundary3_toda_nonzero.json", 1, "OBSTRUCTED"),
    ("boundary3_samelson.json", 0, "LIFTS"),
    ("boundary2_generator.json", 1, "OBSTRUCTED"),
    ("boundary3_coboundary.json", 0, "LIFTS"),
])
def test_obstruct_fixtures(name, code, verdict):
    c, out, _ = run("obstruct", FIX / name)
    assert (c, out.splitlines()[0]) == (code, verdict)
    c, out, _ = run("obstruct", FIX / name, "--json")
    data = json.loads(out)
    assert data["verdict"] == verdict
    assert (data["certificate"] is None) == (verdict == "OBSTRUCTED")


def test_obstruct_generator_class():
    _, out, _ = run("obstruct", FIX / "boundary2_generator.json", "--json")
    data = json.loads(out)
    assert data["H1"] == {"rank": 1, "torsion": []}
    assert data["class"] == {"free": [1], "torsion": []}
    assert data["total_class"] == [1]


def test_obstruct_rejects_other_kinds():
    code, _, err = run("obstruct", FIX / "square_boundary.json")
    assert code == 2 and "obstruction" in err


def test_obstruct_zero_system(tmp_path):
    doc = json.loads((FIX / "boundary3_toda.json").read_text())
    doc["system"] = {"default_group": {"rank": 0, "torsion": []}}
    doc["facet_classes"] = {k: [] for k in doc["facet_classes"]}
    doc.pop("transports", None)
    p = tmp_path / "zero.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run("obstruct", p, "--ascii")
    assert code == 0 and out.splitlines()[:2] == ["LIFTS", "H^1 = 0"]


@pytest.mark.parametrize("n,line", [
    (1, "0 -> 1: point, rank 0, 1 vertices"),
    (3, "000 -> 111: hexagon, rank 2, 6 vertices"),
    (4, "0000 -> 1111: 3-permutohedron, rank 3, 24 vertices"),
])
def test_cube_info(n, line):
    code, out, _ = run("cube-info", n)
    assert code == 0 and line in out


def test_cube_info_bounds():
    code, _, err = run("cube-info", 8)
    assert code == 2 and "factorially" in err
    assert run("cube-info", 0)[0] == 0


def test_output_is_deterministic():
    for args in (("cohomology", FIX / "square_boundary.json", "--json"),
                 ("obstruct", FIX / "boundary3_toda_nonzero.json"),
                 ("cube-info", 3)):
        assert run(*args) == run(*args)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "aqcube.cli", "obstruct",
                        str(FIX / "boundary3_toda_nonzero.json")], capture_output=True, text=True)
    assert r.returncode == 1 and r.stdout.startswith("OBSTRUCTED")
