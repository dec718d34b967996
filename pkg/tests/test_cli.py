import json
import subprocess
import sys

import pytest

from vnroles.cli import run


def test_stats(mini_dir, capsys):
    assert run(["stats", "--vn-path", str(mini_dir)]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "classes": 11,
        "roots": 6,
        "effective": 8,
        "retained_subclasses": 2,
        "roles": 12,
        "members": 36,
    }


def test_stats_csv(mini_dir, capsys):
    assert run(["stats", "--vn-path", str(mini_dir), "--format", "csv"]) == 0
    assert "members,36\n" in capsys.readouterr().out


def test_vn_path_from_environment(mini_dir, capsys, monkeypatch):
    monkeypatch.setenv("VN_PATH", str(mini_dir))
    assert run(["classes"]) == 0
    assert capsys.readouterr().out.startswith("admire-31.2\t3\tExperiencer,Stimulus\n")


def test_matrix_levels(mini_dir, capsys):
    assert run(["matrix", "--vn-path", str(mini_dir)]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 1 + 36
    assert run(["matrix", "--vn-path", str(mini_dir), "--level", "class"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 1 + 8


@pytest.mark.parametrize("fmt", ["json", "csv", "dot"])
def test_deps_formats(mini_dir, capsys, fmt):
    assert run(["deps", "--vn-path", str(mini_dir), "--threshold", "55", "--level", "verb", "--format", fmt]) == 0
    out = capsys.readouterr().out
    if fmt == "json":
        assert len(json.loads(out)["mutual_pairs"]) == 6
    elif fmt == "dot":
        assert out.count("dir=none") == 6


def test_mutual(mini_dir, capsys):
    assert run(["mutual", "--vn-path", str(mini_dir), "--threshold", "100"]) == 0
    pairs = json.loads(capsys.readouterr().out)["mutual_pairs"]
    assert {(p["a"], p["b"]) for p in pairs} == {
        ("Experiencer", "Stimulus"),
        ("Instrument", "Patient"),
        ("Material", "Product"),
        ("Recipient", "Theme"),
    }


def test_output_file(mini_dir, tmp_path):
    target = tmp_path / "out.dot"
    assert run(["deps", "--vn-path", str(mini_dir), "--format", "dot", "-o", str(target)]) == 0
    assert target.read_bytes().startswith(b"digraph roles {\n")


def test_demo_events(capsys):
    assert run(["demo-events"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kill"]["side"] == "result"
    assert data["hit"]["side"] == "manner"


@pytest.mark.parametrize(
    "argv",
    [
        ["deps", "--threshold", "101"],
        ["deps", "--threshold", "0"],
        ["deps", "--threshold", "abc"],
        ["deps", "--level", "sentence"],
        ["stats", "--format", "dot"],
        ["nonsense"],
        [],
    ],
)
def test_bad_flags_exit_2(argv, mini_dir, monkeypatch):
    monkeypatch.setenv("VN_PATH", str(mini_dir))
    assert run(argv) == 2


def test_missing_vn_path_exit_2(monkeypatch, capsys):
    monkeypatch.delenv("VN_PATH", raising=False)
    assert run(["stats"]) == 2
    assert "--vn-path" in capsys.readouterr().err


def test_io_errors_exit_1(tmp_path, capsys):
    assert run(["stats", "--vn-path", str(tmp_path / "absent")]) == 1
    assert "not found" in capsys.readouterr().err
    (tmp_path / "bad.xml").write_text("<VNCLASS")
    assert run(["stats", "--vn-path", str(tmp_path)]) == 1
    assert "bad.xml" in capsys.readouterr().err


def test_module_entry_point(mini_dir):
    out = subprocess.run(
        [sys.executable, "-m", "vnroles", "stats", "--vn-path", str(mini_dir)],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["effective"] == 8
