import json
import subprocess
import sys

import pytest

from netresilience import barabasi_albert, erdos_renyi, format_edge_list, parse_edge_list
from netresilience.cli import cli_main


@pytest.fixture
def ba_file(tmp_path):
    p = tmp_path / "ba.txt"
    p.write_text(format_edge_list(barabasi_albert(100, 2, 1)))
    return p


def run(argv, capsys):
    code = cli_main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_ba(capsys):
    code, out, err = run(["generate", "--model", "ba", "--n", 100, "--m", 2, "--seed", 1], capsys)
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 196
    g, _ = parse_edge_list(out)
    assert g.n == 100 and g.m == 196


def test_generate_er_formats(capsys):
    code, out, _ = run(["generate", "--model", "er", "--n", 10, "--p", 0.3, "--seed", 1, "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["edges"] == [list(e) for e in erdos_renyi(10, 0.3, 1).edges]
    code, out, _ = run(["generate", "--model", "er", "--n", 10, "--p", 0.3, "--seed", 1, "--format", "dot"], capsys)
    assert code == 0 and out.startswith("graph G {")


def test_attack_json(ba_file, capsys):
    code, out, err = run(["attack", ba_file, "--fraction", 0.3333, "--seed", 7], capsys)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert len(doc["rows"]) == 3
    assert doc["meta"]["removed_per_attack"] == 33
    assert len(doc["removed"]["targeted"]) == len(doc["removed"]["random"]) == 33


def test_attack_is_byte_identical(ba_file, capsys):
    argv = ["attack", ba_file, "--seed", 7, "--trials", 3]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_attack_options(ba_file, capsys, tmp_path):
    dest = tmp_path / "r.csv"
    code, out, _ = run(["attack", ba_file, "--adaptive", "--centrality", "degree", "--format", "csv",
                        "--output", dest], capsys)
    assert code == 0 and out == ""
    assert dest.read_text().startswith("metric,before,after_targeted,after_random\n")


def test_attack_sampling_flag(ba_file, capsys):
    code, out, _ = run(["attack", ba_file, "--sample-above", 10, "--sample-sources", 8], capsys)
    assert code == 0
    code2, out2, _ = run(["attack", ba_file], capsys)
    assert json.loads(out)["rows"][2] != json.loads(out2)["rows"][2]


@pytest.mark.parametrize("algorithm", ["louvain", "girvan-newman"])
def test_communities(ba_file, capsys, algorithm):
    code, out, _ = run(["communities", ba_file, "--algorithm", algorithm], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["algorithm"] == algorithm and len(doc["assignment"]) == 100
    code, out, _ = run(["communities", ba_file, "--algorithm", algorithm, "--format", "dot"], capsys)
    assert code == 0 and "fillcolor" in out


def test_analyze(ba_file, capsys):
    code, out, _ = run(["analyze", ba_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["metrics"]["component_count"] == 1
    assert doc["communities"]["algorithm"] == "louvain"
    assert len(doc["nodes"]) == 100
    code, out, _ = run(["analyze", ba_file, "--format", "csv", "--algorithm", "none"], capsys)
    assert code == 0 and out.splitlines()[0] == "node,degree,degree_centrality,closeness,betweenness,community"


@pytest.mark.parametrize("argv,expected", [
    (["attack", "missing.txt"], 1),
    (["attack"], 2),
    (["frobnicate"], 2),
    (["generate", "--model", "ba", "--n", "10"], 2),
    (["attack", "FILE", "--fraction", "1.5"], 2),
    (["attack", "FILE", "--fraction", "abc"], 2),
    (["attack", "BAD"], 1),
    (["attack", "TINY", "--fraction", "0.1"], 1),
])
def test_error_paths(argv, expected, capsys, tmp_path, ba_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("a b c\n")
    tiny = tmp_path / "tiny.txt"
    tiny.write_text("a b\n")
    argv = [{"FILE": str(ba_file), "BAD": str(bad), "TINY": str(tiny)}.get(a, a) for a in argv]
    code, out, err = run(argv, capsys)
    assert code == expected
    assert out == ""
    assert err


def test_module_entry_point(ba_file):
    gen = subprocess.run([sys.executable, "-m", "netresilience", "generate", "--model", "ba", "--n", "100",
                          "--m", "2", "--seed", "1"], capture_output=True, check=True)
    res = subprocess.run([sys.executable, "-m", "netresilience", "attack", "-", "--seed", "7"],
                         input=gen.stdout, capture_output=True)
    assert res.returncode == 0 and res.stderr == b""
    assert len(json.loads(res.stdout)["rows"]) == 3
