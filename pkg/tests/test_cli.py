import json
import subprocess
import sys

import pytest

from helpers import DEMO_TREE_MERMAID, PAIR_TREE_DOT, PAIR_TREE_MERMAID


def run_cli(*args, stdin: str | None = None):
    return subprocess.run(
        [sys.executable, "-m", "arbor", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )


@pytest.fixture
def sources(tmp_path):
    mmd = tmp_path / "tree.mmd"
    mmd.write_text(PAIR_TREE_MERMAID, encoding="utf-8")
    dot = tmp_path / "tree.dot"
    dot.write_text(PAIR_TREE_DOT, encoding="utf-8")
    return tmp_path, mmd, dot


def test_compile_all_writes_five_files(sources):
    tmp_path, mmd, _ = sources
    out = tmp_path / "out"
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "all", str(mmd), "--out-dir", str(out),
    )
    assert result.returncode == 0, result.stderr
    names = sorted(p.name for p in out.iterdir())
    assert names == [
        "tree.ir.json", "tree.nav.html", "tree.table.html", "tree.tactile.svg", "tree.txt",
    ]


def test_mermaid_and_dot_give_byte_identical_ir(sources):
    tmp_path, mmd, dot = sources
    out_m, out_d = tmp_path / "m", tmp_path / "d"
    for lang, src, out in (("mermaid", mmd, out_m), ("dot", dot, out_d)):
        result = run_cli(
            "compile", "--lang", lang, "--structure", "binary-tree",
            "--format", "ir", str(src), "--out-dir", str(out),
        )
        assert result.returncode == 0, result.stderr
    assert (out_m / "tree.ir.json").read_bytes() == (out_d / "tree.ir.json").read_bytes()


def test_parse_error_exit_1_with_json_on_stderr(sources):
    tmp_path, _, dot = sources
    result = run_cli(
        "compile", "--lang", "dot", "--structure", "array",
        "--format", "ir", str(dot), "--out-dir", str(tmp_path / "x"),
    )
    assert result.returncode == 1
    record = json.loads(result.stderr.strip().splitlines()[-1])
    assert record["code"] == "StructureMismatch"
    assert set(record) == {"code", "message", "line", "column"}
    assert not (tmp_path / "x").exists() or not list((tmp_path / "x").iterdir())


def test_syntax_error_carries_position(tmp_path):
    bad = tmp_path / "bad.mmd"
    bad.write_text("flowchart TD\nA((1)) --> \n", encoding="utf-8")
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "ir", str(bad), "--out-dir", str(tmp_path),
    )
    assert result.returncode == 1
    record = json.loads(result.stderr.strip().splitlines()[-1])
    assert record["code"] == "SyntaxError"
    assert record["line"] == 2


def test_usage_errors_exit_2(tmp_path):
    assert run_cli("compile").returncode == 2  # missing required flags
    assert run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "nope", "x.mmd",
    ).returncode == 2
    assert run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "ir", str(tmp_path / "missing.mmd"),
    ).returncode == 2
    src = tmp_path / "t.mmd"
    src.write_text(DEMO_TREE_MERMAID, encoding="utf-8")
    assert run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "all", str(src), "-o", str(tmp_path / "one.file"),
    ).returncode == 2


def test_stdin_input_and_single_output(tmp_path):
    target = tmp_path / "desc.txt"
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "description", "-o", str(target),
        stdin=DEMO_TREE_MERMAID,
    )
    assert result.returncode == 0, result.stderr
    assert target.read_text(encoding="utf-8").strip() == (
        "This binary tree contains 6 nodes and 5 edges. The root node is 3."
    )


def test_title_and_description_flags(tmp_path):
    src = tmp_path / "t.mmd"
    src.write_text(DEMO_TREE_MERMAID, encoding="utf-8")
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "ir", str(src), "--out-dir", str(tmp_path),
        "--title", "Demo", "--description", "A walkthrough tree",
    )
    assert result.returncode == 0
    ir = json.loads((tmp_path / "t.ir.json").read_text(encoding="utf-8"))
    assert ir["meta"]["title"] == "Demo"
    assert ir["meta"]["description"] == "A walkthrough tree"


def test_tactile_config_file(tmp_path):
    src = tmp_path / "t.mmd"
    src.write_text("flowchart TD\nA((1))\n", encoding="utf-8")
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"page_width_mm": 400, "page_height_mm": 400}', encoding="utf-8")
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "tactile", str(src), "--out-dir", str(tmp_path),
        "--tactile-config", str(cfg),
    )
    assert result.returncode == 0, result.stderr
    assert 'viewBox="0 0 400.00 400.00"' in (tmp_path / "t.tactile.svg").read_text(encoding="utf-8")


def test_repeatable_format_flag(tmp_path):
    src = tmp_path / "t.mmd"
    src.write_text(DEMO_TREE_MERMAID, encoding="utf-8")
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "ir", "--format", "tabular", str(src), "--out-dir", str(tmp_path),
    )
    assert result.returncode == 0
    assert (tmp_path / "t.ir.json").exists()
    assert (tmp_path / "t.table.html").exists()
    assert not (tmp_path / "t.tactile.svg").exists()


def test_compile_failure_leaves_no_partial_outputs(tmp_path):
    # The tree compiles but its labels cannot be transcribed, so tactile
    # fails after tabular succeeded; nothing may be written.
    src = tmp_path / "t.mmd"
    src.write_text("flowchart TD\nA((1000)) --> B((2))\n", encoding="utf-8")
    out = tmp_path / "out"
    result = run_cli(
        "compile", "--lang", "mermaid", "--structure", "binary-tree",
        "--format", "all", str(src), "--out-dir", str(out),
    )
    assert result.returncode == 1
    record = json.loads(result.stderr.strip().splitlines()[-1])
    assert record["code"] == "LabelTooLong"
    assert not out.exists() or not list(out.iterdir())
