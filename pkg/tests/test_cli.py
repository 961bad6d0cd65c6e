"""Command-line interface: subcommands, formats, exit codes."""

import json
import subprocess
import sys

import pytest

from hoffline.cli import main
from hoffline.core import slim_complete
from hoffline.enumeration import write_graph6


def _run(args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "hoffline.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=300,
    )
    return proc


def test_gen_counts_and_format():
    out = _run(["gen", "-n", "5"])
    assert out.returncode == 0
    assert len(out.stdout.split()) == 21
    dot = _run(["gen", "-n", "3", "--format", "dot"])
    assert "graph" in dot.stdout
    txt = _run(["gen", "-n", "3", "--format", "text"])
    assert "s=3 f=0" in txt.stdout


def test_gen_all_includes_disconnected():
    out = _run(["gen", "-n", "4", "--all"])
    assert len(out.stdout.split()) == 11


def test_recognize_k5():
    out = _run(["recognize"], stdin=write_graph6(slim_complete(5)) + "\n")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["is_line"] is True
    assert doc["cases"] == []
    assert doc["cover"]["slim_count"] == 5


def test_recognize_non_line():
    out = _run(["recognize"], stdin="DsW\n")
    doc = json.loads(out.stdout)
    assert doc["is_line"] is False and doc["cover"] is None


def test_covers_counts_triangle():
    out = _run(["covers"], stdin="Bw\n")  # K3
    doc = json.loads(out.stdout)
    assert doc["count"] == 2


def test_spectral_output():
    # Ds[ is the five-vertex member below the threshold; K4 is above
    out = _run(["spectral"], stdin="Ds[\n" + write_graph6(slim_complete(4)) + "\n")
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert [l["vs_threshold"] for l in lines] == ["below", "at_or_above"]


def test_sums_subcommand(tmp_path):
    from hoffline.families import family_graph

    f = tmp_path / "f7.hg"
    f.write_text(family_graph("F7").to_text())
    out = _run(["sums", "--F", str(f), "--slim-k", "2", "--ck", "1"])
    assert out.returncode == 0
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert lines and all(l["slim_count"] == 6 for l in lines)


def test_verify_eq2_exit_zero():
    out = _run(["verify", "--claim", "eq2"])
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["status"] == "confirmed"


def test_verify_lemma_exit_zero():
    out = _run(["verify", "--claim", "lemma4.10"])
    assert out.returncode == 0


def test_usage_error_exit_two():
    out = _run(["verify", "--claim", "bogus"])
    assert out.returncode == 2
    out = _run(["frobnicate"])
    assert out.returncode == 2


def test_screen_with_catalog_dir(tmp_path, catalog7):
    cat = tmp_path / "catalog"
    catalog7.save(str(cat))
    out = _run(
        ["screen", "--catalog", str(cat)],
        stdin=write_graph6(slim_complete(6)) + "\nDsW\n",
    )
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert [l["is_line"] for l in lines] == [True, False]


def test_catalog_build_writes_directory(tmp_path):
    out = _run(["catalog", "build", "--nmax", "5", "--out", str(tmp_path / "c5")])
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["counts"] == {"5": 2}
    assert (tmp_path / "c5" / "catalog.json").exists()
    assert (tmp_path / "c5" / "g6" / "mfs5.g6").exists()


def test_main_function_direct(capsys):
    rc = main(["verify", "--claim", "eq2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["claim"] == "eq2"


def test_catalog_env_var(tmp_path, catalog7, monkeypatch):
    cat = tmp_path / "envcat"
    catalog7.save(str(cat))
    monkeypatch.setenv("HOFFLINE_CATALOG", str(cat))
    proc = subprocess.run(
        [sys.executable, "-m", "hoffline.cli", "screen"],
        input="DsW\n",
        capture_output=True,
        text=True,
        env={**__import__("os").environ, "HOFFLINE_CATALOG": str(cat)},
        timeout=300,
    )
    assert json.loads(proc.stdout)["is_line"] is False
