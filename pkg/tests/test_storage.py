import json

import pytest

from backend.storage import StorageManager
from processing.exactq import QMatrix

SL2_TABLE = {
    "name": "G(C)",
    "degrees": {1: 1, -1: 1, 0: 1},
    "terminated_pos": True,
    "terminated_neg": True,
}


@pytest.fixture
def storage(tmp_path):
    return StorageManager(output_dir=tmp_path)


class TestRender:
    def test_csv(self, storage):
        assert storage.render_dimensions(SL2_TABLE, "csv") == "degree,dim\n-1,1\n0,1\n1,1\n"

    def test_json(self, storage):
        data = json.loads(storage.render_dimensions(SL2_TABLE, "json"))
        assert data == {
            "degrees": {"-1": 1, "0": 1, "1": 1},
            "terminated_pos": True,
            "terminated_neg": True,
        }

    def test_table(self, storage):
        lines = storage.render_dimensions(SL2_TABLE, "table").splitlines()
        assert lines[0] == "# G(C)"
        assert lines[1].split() == ["degree", "dim"]
        assert lines[-1] == "terminated: + -"

    def test_unknown_format(self, storage):
        with pytest.raises(ValueError):
            storage.render_dimensions(SL2_TABLE, "xml")

    def test_matrix(self, storage):
        c = QMatrix([[2, -1], [-1, "1/2"]])
        assert json.loads(storage.render_matrix(c)) == {"C": [["2", "-1"], ["-1", "1/2"]]}
        assert storage.render_matrix(c, "csv") == "2,-1\n-1,1/2\n"

    def test_mapping(self, storage):
        text = storage.render_mapping({"rank_D": 2, "rank_C": 1}, "csv")
        assert text == "key,value\nrank_D,2\nrank_C,1\n"


class TestSave:
    def test_default_location(self, storage, tmp_path):
        path = storage.save_result("{}\n", "expand run", "json")
        assert path == tmp_path / "expand_run.json"
        assert path.read_text() == "{}\n"

    def test_table_is_saved_as_text(self, storage, tmp_path):
        path = storage.save_result("x\n", "verify_paper", "table")
        assert path.suffix == ".txt"
        assert path.read_text() == "x\n"

    def test_explicit_path(self, storage, tmp_path):
        target = tmp_path / "nested" / "out.csv"
        assert storage.save_result("a\n", "ignored", "csv", output_path=target) == target
        assert target.read_text() == "a\n"
