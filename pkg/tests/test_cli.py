from __future__ import annotations

import json
import subprocess
import sys

import pytest

from dhpgraph import cli
from dhpgraph.extremal import complete_tree_dhp
from dhpgraph.instance import emit_instance


@pytest.fixture
def files(tmp_path, c4, star):
    paths = {}
    for name, g in {"c4": c4, "star": star, "tree4": complete_tree_dhp(4),
                    "tree16": complete_tree_dhp(16)}.items():
        p = tmp_path / f"{name}.dhp"
        p.write_text(emit_instance(g))
        paths[name] = str(p)
    return paths


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_dhp_documents(files, capsys):
    code, out, _ = run(["check-dhp", files["c4"]], capsys)
    assert code == 0
    doc = json.loads(out)
    assert list(doc)[:3] == ["command", "instance", "holds"]
    code, out, _ = run(["check-dhp", files["star"]], capsys)
    doc = json.loads(out)
    assert code == 1 and doc["witness"] == [0, 1] and doc["two_neighborhood"] == ["b0"]


def test_two_factor_certificate(files, capsys):
    code, out, _ = run(["two-factor", files["star"]], capsys)
    doc = json.loads(out)
    assert code == 1
    assert doc["certificate"]["satisfied"] is False and doc["dhp"] is False


def test_find_cycle_dot(files, capsys):
    code, out, _ = run(["find-cycle", files["tree4"], "--format", "dot"], capsys)
    assert code == 0 and out.startswith("graph dhp {") and out.count("color=red") == 8


def test_gen_tree_and_sample_emit_instances(capsys):
    code, out, _ = run(["gen-tree", "--n", "8"], capsys)
    assert code == 0 and out.startswith("dhp v1\n# generator: tree\n")
    code, out, _ = run(["sample", "--n", "5", "--b", "6", "--seed", "9", "--profile", "tree"], capsys)
    assert code == 0 and "# seed: 9" in out


def test_stdin_input(monkeypatch, capsys, c4):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(emit_instance(c4)))
    code, out, _ = run(["check-dhp", "-"], capsys)
    assert code == 0


def test_parse_error_message(tmp_path, capsys):
    p = tmp_path / "bad.dhp"
    p.write_text("dhp v1\nA 2 B 2\n0 9\n")
    code, _, err = run(["check-dhp", str(p)], capsys)
    assert code == 2 and "line 3, column 3" in err


def test_unsafe_cap_allows_larger_cap(files, capsys):
    code, _, _ = run(["check-dhp", files["c4"], "--cap", "30"], capsys)
    assert code == 2
    code, _, _ = run(["check-dhp", files["c4"], "--cap", "30", "--unsafe-cap"], capsys)
    assert code == 0


def test_search_is_byte_identical(capsys):
    argv = ["search", "--n-min", "3", "--n-max", "6", "--samples", "60", "--seed", "4", "--profile", "mixed"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv + ["--workers", "2"], capsys)
    assert first == second


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "dhpgraph.cli", "bounds", files["tree4"]],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lower_bound"] == 8.0
