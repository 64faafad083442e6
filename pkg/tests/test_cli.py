import io
import json
import os
import subprocess
import sys

import pytest

from zfgp.cli import RunConfig, build_parser, config_from_args, main, parse_range, run
from zfgp.families import complete_graph, enumerate_trees
from zfgp.graph6 import decode_graph6, encode_graph6

K5 = encode_graph6(complete_graph(5))


def invoke(argv):
    config = config_from_args(build_parser().parse_args(argv))
    out, err = io.StringIO(), io.StringIO()
    code = run(config, out, err)
    return code, out.getvalue(), err.getvalue()


def lines(text):
    return [json.loads(x) for x in text.splitlines() if x.strip()]


def stable(text):
    out = []
    for obj in lines(text):
        obj.pop("volatile")
        out.append(obj)
    return out


def test_compute_k5():
    code, out, _ = invoke(["compute", "--graph6", K5])
    (obj,) = lines(out)
    assert code == 0
    assert obj["result"]["Z"] == 4 and obj["result"]["gp"] == 5
    assert obj["version"] and obj["config"]["command"] == "compute"
    assert "timestamp" in obj["volatile"] and "seconds" in obj["volatile"]


def test_verify_trees():
    code, out, _ = invoke(["verify", "--theorem", "T1", "--trees", "--n", "2..10"])
    (obj,) = lines(out)
    assert code == 0
    assert obj["result"]["verdict"] == "pass" and obj["result"]["violations"] == []
    assert obj["result"]["checked"] == 200


def test_hunt_bicyclic_gp_gt_z_exit_1():
    code, out, _ = invoke(["hunt", "--class", "bicyclic", "--relation", "gp>Z", "--n", "4..6", "--exhaustive"])
    (obj,) = lines(out)
    assert code == 1 and obj["result"]["hit_count"] > 0
    hit = obj["result"]["hits"][0]
    assert hit["Z_witness"] and hit["gp_witness"]


def test_hunt_no_hits_exit_0():
    code, _, _ = invoke(["hunt", "--class", "tree", "--relation", "Z>=gp", "--n", "2..8"])
    assert code == 0


def test_usage_errors_exit_2():
    code, _, err = invoke(["compute", "--graph6", "~??"])
    assert code == 2 and "unsupported form" in err
    code, _, err = invoke(["compute"])
    assert code == 2 and "no input graphs" in err
    code, _, err = invoke(["verify", "--theorem", "T99", "--trees"])
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["hunt", "--class", "bicyclic"])
    assert exc.value.code == 2


def test_reproducible_modulo_volatile():
    argv = ["hunt", "--class", "quasi_tree", "--relation", "gp>Z", "--n", "5..9", "--random", "--seed", "3", "--budget", "40"]
    _, a, _ = invoke(argv)
    _, b, _ = invoke(argv)
    assert stable(a) == stable(b)
    # the embedded config alone reproduces the report
    config = RunConfig(**lines(a)[0]["config"])
    out = io.StringIO()
    run(config, out)
    assert stable(out.getvalue()) == stable(a)


def test_gen_round_trip(tmp_path):
    path = tmp_path / "trees.g6"
    code, out, _ = invoke(["gen", "--trees", "--n", "6..7", "--output", str(path)])
    assert code == 0 and lines(out)[0]["result"]["count"] == 17
    graphs = [decode_graph6(x) for x in path.read_text().splitlines()]
    assert graphs == list(enumerate_trees(6)) + list(enumerate_trees(7))
    code, out, _ = invoke(["verify", "--theorem", "T7", "--input", str(path)])
    assert code == 0 and lines(out)[0]["result"]["checked"] == 17


def test_classify_and_trim():
    code, out, _ = invoke(["classify", "--family", "H3"])
    assert code == 0 and lines(out)[0]["result"]["quasi_tree"]
    code, out, _ = invoke(["trim", "--family", "star", "--param", "k=3"])
    res = lines(out)[0]["result"]
    assert (res["n1"], res["n2"], res["n3"], res["empty"]) == (1, 3, 0, True)
    assert [s["kind"] for s in res["log"]][0] == "appropriate"


def test_table_format():
    code, out, _ = invoke(["compute", "--graph6", K5, "--format", "table"])
    assert code == 0 and out.splitlines()[0].split()[:3] == ["id", "n", "m"]


def test_cap_flag_and_env(monkeypatch):
    big = "I????????"  # 10 isolated vertices
    code, out, _ = invoke(["compute", "--graph6", big, "--cap", "5"])
    assert code == 0 and set(lines(out)[0]["result"]["refused"]) == {"Z", "gp", "P"}
    env = dict(os.environ, ZFGP_CAP="5")
    proc = subprocess.run([sys.executable, "-m", "zfgp.cli", "compute", "--graph6", big], capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and json.loads(proc.stdout)["config"]["cap"] == 5


def test_parse_range():
    assert parse_range("2..10") == [2, 10]
    assert parse_range("7") == [7, 7]
