from utils.file_utils import ensure_directory, input_digest, input_kind, safe_stem


def test_digest_ignores_key_order_and_spacing():
    a = {"C": [["2", "-1"], ["-1", "2"]], "name": "A2"}
    b = {"name": "A2", "C": [["2", "-1"], ["-1", "2"]]}
    assert input_digest(a) == input_digest(b)
    assert len(input_digest(a)) == 64


def test_digest_sees_entry_changes():
    assert input_digest({"C": [["2"]]}) != input_digest({"C": [["1"]]})


def test_input_kind():
    assert input_kind("pentads/km.json") == "json"
    assert input_kind("KM.JSON") == "json"
    assert input_kind("km.yaml") is None
    assert input_kind("km") is None


def test_safe_stem():
    assert safe_stem("expand run") == "expand_run"
    assert safe_stem("G'(C) / A2") == "GC__A2"
    assert safe_stem("???") == "result"
    assert safe_stem("", default="dims") == "dims"


def test_ensure_directory(tmp_path):
    target = tmp_path / "a" / "b"
    ensure_directory(target)
    ensure_directory(target)
    assert target.is_dir()
