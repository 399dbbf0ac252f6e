import json
import subprocess
import sys

from nonham.cli import main
from nonham.families import build_H
from nonham.graphs import graph6_decode, graph6_encode


def run_cli(args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "nonham.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )


def test_gen_graph6(capsys):
    assert main(["gen", "--family", "h", "--n", "11", "--d", "3"]) == 0
    out = capsys.readouterr().out.strip()
    assert graph6_decode(out) == build_H(11, 3)


def test_gen_json(capsys):
    assert main(["gen", "--family", "gprime2", "--n", "9", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 9
    assert len(payload["edges"]) == 21


def test_eval_subcommands(capsys):
    cases = [
        (["eval", "hk", "--n", "10", "--x", "2", "--k", "3"], "58"),
        (["eval", "h", "--n", "11", "--d", "3"], "37"),
        (["eval", "e", "--n", "11", "--d", "2"], "40"),
        (["eval", "d0", "--n", "12"], "3"),
        (["eval", "n0", "--d", "1", "--t", "3"], "30"),
        (["eval", "falling", "--k", "5", "--t", "2"], "20"),
        (["eval", "binom", "--a", "5/2", "--b", "2"], "15/8"),
    ]
    for args, expected in cases:
        assert main(args) == 0
        assert capsys.readouterr().out.strip() == expected


def test_pipeline_gen_ham_check():
    gen = run_cli(["gen", "--family", "h", "--n", "9", "--d", "2"])
    assert gen.returncode == 0
    ham = run_cli(["ham", "check"], stdin=gen.stdout)
    assert ham.returncode == 0
    assert ham.stdout.strip() == "false"


def test_pipeline_enum_cliques():
    enum = run_cli(["enum", "--n", "5"])
    assert enum.returncode == 0
    assert len(enum.stdout.split()) == 34
    cliques = run_cli(["cliques", "--k", "3"], stdin=enum.stdout)
    assert cliques.returncode == 0
    counts = [int(x) for x in cliques.stdout.split()]
    assert len(counts) == 34
    assert max(counts) == 10  # K5


def test_count_with_pattern_file(tmp_path, capsys):
    pattern = tmp_path / "k3.g6"
    pattern.write_text("Bw\n", encoding="ascii")
    host = graph6_encode(build_H(10, 2))
    proc = run_cli(["count", "--pattern", str(pattern)], stdin=host + "\n")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "348"
    proc = run_cli(
        ["count", "--pattern", str(pattern), "--unlabeled"], stdin=host + "\n"
    )
    assert proc.stdout.strip() == "58"


def test_ham_cycle_and_path():
    proc = run_cli(["ham", "cycle"], stdin="C~\n")  # K4
    assert proc.returncode == 0
    seq = [int(x) for x in proc.stdout.split()]
    assert sorted(seq) == [0, 1, 2, 3]
    proc = run_cli(["ham", "path", "--from", "0", "--to", "3"], stdin="C~\n")
    seq = [int(x) for x in proc.stdout.split()]
    assert seq[0] == 0 and seq[-1] == 3


def test_saturate_posa_pathcover():
    proc = run_cli(["saturate"], stdin="D??\n")  # edgeless 5-vertex graph
    assert proc.returncode == 0
    sat = graph6_decode(proc.stdout.strip())
    assert sat.n == 5
    proc = run_cli(["posa"], stdin=run_cli(
        ["gen", "--family", "h", "--n", "11", "--d", "3"]).stdout)
    cert = json.loads(proc.stdout)
    assert cert["r"] == 3
    proc = run_cli(["pathcover", "--t", "2"], stdin="C`\n")  # 2K2
    paths = json.loads(proc.stdout)
    assert len(paths) == 2


def test_classify_cli():
    gen = run_cli(["gen", "--family", "h", "--n", "9", "--d", "2"])
    proc = run_cli(["classify", "--d", "2"], stdin=gen.stdout)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert "h(9,2)" in payload["matches"]


def test_verify_cli_report(tmp_path):
    report_path = tmp_path / "r.json"
    proc = run_cli([
        "verify", "clique-bound", "--n", "7", "--d", "2", "--k", "3",
        "--workers", "1", "--report", str(report_path),
    ])
    assert proc.returncode == 0
    payload = json.loads(report_path.read_text())
    assert payload["violations"] == []
    assert payload["theorem"] == "clique-bound"
    assert int(payload["graphs_checked"]) > 0


def test_verify_cli_missing_param():
    proc = run_cli(["verify", "clique-bound", "--n", "7", "--d", "2"])
    assert proc.returncode == 2
    assert "requires --k" in proc.stderr


def test_malformed_input_exits_2():
    proc = run_cli(["ham", "check"], stdin="B\n")
    assert proc.returncode == 2
    assert "nonham:" in proc.stderr


def test_unknown_subcommand_exits_2():
    proc = run_cli(["frobnicate"])
    assert proc.returncode == 2


def test_gen_invalid_params_exits_2():
    proc = run_cli(["gen", "--family", "h", "--n", "5", "--d", "3"])
    assert proc.returncode == 2
    assert "nonham:" in proc.stderr


def test_ham_path_none():
    # star leaf to leaf has no spanning path
    proc = run_cli(["ham", "path", "--from", "1", "--to", "2"], stdin="Cs\n")
    assert proc.stdout.strip() == "none"


def test_pathcover_none():
    proc = run_cli(["pathcover", "--t", "1"], stdin="C`\n")  # 2K2, one path
    assert proc.returncode == 0
    assert proc.stdout.strip() == "none"


def test_worker_env_override(tmp_path):
    import os

    env = dict(os.environ, NONHAM_WORKERS="2")
    proc = subprocess.run(
        [sys.executable, "-m", "nonham.cli",
         "verify", "edge-bound", "--n", "6", "--d", "1"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert "2 workers" in proc.stderr


def test_external_file_verify(tmp_path):
    lines = run_cli(["enum", "--n", "6"]).stdout
    path = tmp_path / "six.g6"
    path.write_text(lines, encoding="ascii")
    proc = run_cli([
        "verify", "edge-bound", "--n", "6", "--d", "1",
        "--in", str(path), "--workers", "2",
    ])
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["violations"] == []
