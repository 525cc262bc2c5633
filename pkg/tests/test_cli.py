import io
import json

import pytest

import config
from frontend.cli import run

AFFINE = {"C": [["2", "-2"], ["-2", "2"]]}
KM_PENTAD = {
    "r": 3,
    "n": 2,
    "A": [["1/8", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]],
    "D": [["2", "-2"], ["0", "0"], ["0", "1"]],
    "Gamma": ["4", "4"],
}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, data in (("affine", AFFINE), ("km", KM_PENTAD), ("a2", {"C": [[2, -1], [-1, 2]]})):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(data))
        paths[name] = str(path)
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    paths["bad"] = str(bad)
    singular_a = dict(KM_PENTAD, A=[["1", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]])
    path = tmp_path / "singular.json"
    path.write_text(json.dumps(singular_a))
    paths["singular"] = str(path)
    return paths


def invoke(*argv):
    out = io.StringIO()
    status = run(list(argv), stdout=out)
    return status, out.getvalue()


class TestExpand:
    def test_reduced_affine_csv(self, files):
        status, out = invoke("expand", "--reduced-matrix", files["affine"], "--max-degree", "4", "--format", "csv")
        assert status == 0
        assert out == "degree,dim\n-4,1\n-3,2\n-2,1\n-1,2\n0,1\n1,2\n2,1\n3,2\n4,1\n"

    def test_pentad_json(self, files):
        status, out = invoke("expand", "--pentad", files["km"], "--max-degree", "3", "--format", "json")
        assert status == 0
        data = json.loads(out)
        assert data["degrees"]["0"] == 3
        assert data["degrees"]["3"] == 2
        assert not data["terminated_pos"]

    def test_batch(self, files):
        status, out = invoke("expand", "--matrix", files["a2"], "--matrix", files["affine"],
                             "--max-degree", "2", "--format", "table")
        assert status == 0
        assert out.count("# G(C)") == 2

    def test_saves_output(self, files, tmp_path):
        target = tmp_path / "out" / "dims.csv"
        status, out = invoke("expand", "--matrix", files["a2"], "--format", "csv", "--output", str(target))
        assert status == 0
        assert target.read_text() == out

    def test_size_limit_exit_status(self, files, monkeypatch, capsys):
        monkeypatch.setattr(config, "PENTAD_MAX_DIM", 5)
        status, _ = invoke("expand", "--reduced-matrix", files["affine"], "--max-degree", "6")
        assert status == 3
        assert "PENTAD_MAX_DIM" in capsys.readouterr().err


class TestCommands:
    def test_cartan(self, files):
        status, out = invoke("cartan", "--pentad", files["km"])
        assert status == 0
        assert json.loads(out) == {"C": [["2", "-2"], ["-2", "2"]]}

    def test_structure(self, files):
        status, out = invoke("structure", "--pentad", files["km"], "--decompose")
        data = json.loads(out)
        assert status == 0
        assert (data["rank_D"], data["rank_C"], data["dim_Z"], data["dim_Delta"]) == (2, 1, 1, 1)
        assert data["center"] == [["0", "4", "0"]]

    def test_realize_full_km(self, files):
        status, out = invoke("realize", "--matrix", files["affine"])
        data = json.loads(out)
        assert status == 0
        assert data["certificate"]["ok"]
        assert data["pentad"]["r"] == 3

    def test_realize_derived(self, files):
        status, out = invoke("realize", "--matrix", files["affine"], "--mode", "derived", "--max-degree", "3")
        assert status == 0
        assert json.loads(out)["derived_degrees"] == {"-3": 2, "-2": 1, "-1": 2, "0": 2, "1": 2, "2": 1, "3": 2}

    def test_sl2fd_minor(self):
        status, out = invoke("sl2fd", "--indices", "(-1),(2,0)", "--format", "json")
        assert status == 0
        assert json.loads(out) == {"C": [["2", "-2"], ["-2", "2"]]}

    def test_sl2fd_compare(self):
        status, out = invoke("sl2fd", "--indices", "(-1),(1,0)", "--compare", "3")
        assert status == 0
        assert json.loads(out)["ok"]

    def test_verify_paper(self):
        status, out = invoke("verify-paper", "--max-degree", "4")
        assert status == 0
        assert out.splitlines()[-1] == "15/15 fixtures passed"
        assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


class TestExitStatus:
    def test_missing_file(self, tmp_path):
        assert invoke("cartan", "--pentad", str(tmp_path / "nope.json"))[0] == 2

    def test_bad_json(self, files):
        assert invoke("expand", "--matrix", files["bad"])[0] == 2

    def test_bad_arguments(self):
        assert invoke("expand", "--max-degree", "0", "--matrix", "x.json")[0] == 2
        assert invoke("frobnicate")[0] == 2

    def test_zero_denominator(self, tmp_path, capsys):
        path = tmp_path / "zero.json"
        path.write_text(json.dumps({"C": [["1/0"]]}))
        assert invoke("expand", "--matrix", str(path))[0] == 2
        assert "invariant: input" in capsys.readouterr().err

    def test_unwritable_output(self, files, tmp_path, capsys):
        blocker = tmp_path / "file.txt"
        blocker.write_text("")
        status, _ = invoke("expand", "--reduced-matrix", files["affine"], "--max-degree", "2",
                           "--output", str(blocker / "dims.csv"))
        assert status == 2
        assert "invariant: input" in capsys.readouterr().err

    def test_help(self):
        assert invoke("--help")[0] == 0

    def test_invalid_pentad(self, files, capsys):
        assert invoke("cartan", "--pentad", files["singular"])[0] == 1
        assert "invariant: pentad_core" in capsys.readouterr().err

    def test_singular_matrix_for_invertible_mode(self, files):
        assert invoke("realize", "--matrix", files["affine"], "--mode", "invertible")[0] == 1

    def test_degenerate_index_set(self):
        assert invoke("sl2fd", "--indices", "(0,0),(0,1)", "--compare", "2")[0] == 1

    def test_malformed_indices(self):
        assert invoke("sl2fd", "--indices", "(2)")[0] == 2
