import json

from consistent_subset.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


SPIDER = "0\n1\n2\n1 0\n"


def test_solve_spider(tmp_path, capsys):
    path = write(tmp_path, "sp.txt", SPIDER)
    code, out, _ = run(capsys, "solve-spider", "--input", path)
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is True
    assert data["size"] == len(data["subset"])
    assert data["case"] == "case1"


def test_solve_spider_monochromatic(tmp_path, capsys):
    path = write(tmp_path, "sp.txt", "2\n2 2\n2\n2 2 2\n")
    code, out, _ = run(capsys, "solve-spider", "--input", path)
    assert code == 0
    assert json.loads(out)["size"] == 1


def test_solve_path(tmp_path, capsys):
    path = write(tmp_path, "p.json", "[0, 1, 0]")
    code, out, _ = run(capsys, "solve-path", "--input", path)
    assert code == 0
    assert json.loads(out)["size"] == 3


def test_oracle_and_check(tmp_path, capsys):
    graph = {
        "colour_count": 2,
        "vertices": [{"id": 0, "colour": 0}, {"id": 1, "colour": 0}, {"id": 2, "colour": 1}],
        "edges": [[0, 1], [1, 2]],
    }
    gpath = write(tmp_path, "g.json", json.dumps(graph))
    code, out, _ = run(capsys, "oracle", "--input", gpath)
    assert code == 0
    subset = json.loads(out)["subset"]
    spath = write(tmp_path, "s.json", json.dumps(subset))
    code, out, _ = run(capsys, "check", "--input", gpath, "--subset", spath)
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_oracle_over_cap_exits_3(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("MCS_ORACLE_MAX_N", raising=False)
    n = 25
    graph = {
        "colour_count": 1,
        "vertices": [{"id": i, "colour": 0} for i in range(n)],
        "edges": [[i, i + 1] for i in range(n - 1)],
    }
    gpath = write(tmp_path, "g.json", json.dumps(graph))
    code, _, err = run(capsys, "oracle", "--input", gpath)
    assert code == 3
    assert "MCS_ORACLE_MAX_N" in err


def test_bad_input_exits_1(tmp_path, capsys):
    path = write(tmp_path, "bad.json", "not json")
    code, _, err = run(capsys, "solve-path", "--input", path)
    assert code == 1
    assert "error" in err


def test_reduce_witness_check_extract_pipeline(tmp_path, capsys):
    cnf = write(tmp_path, "f.cnf", "p cnf 2 2\n1 2 0\n-1 2 0\n")
    tree_path = str(tmp_path / "tree.json")
    code, out, _ = run(capsys, "reduce", "--input", cnf, "--output", tree_path)
    assert code == 0
    meta = json.loads(out)
    assert meta["beta"] == 7 and meta["alpha"] == 56

    index = tree_path + ".index.json"
    code, out, _ = run(
        capsys, "witness", "--input", tree_path, "--index", index, "--assignment", "0 1"
    )
    assert code == 0
    wit = json.loads(out)
    assert wit["satisfied"] == 2

    spath = write(tmp_path, "w.json", json.dumps(wit["subset"]))
    code, out, _ = run(capsys, "check", "--input", tree_path, "--subset", spath)
    assert code == 0
    assert json.loads(out)["valid"] is True

    code, out, _ = run(
        capsys, "extract", "--input", tree_path, "--index", index, "--subset", spath
    )
    assert code == 0
    data = json.loads(out)
    assert data["assignment"] == [0, 1]
    assert data["satisfied"] == 2


def test_gen_spider_deterministic(tmp_path, capsys):
    code, out1, _ = run(capsys, "gen-spider", "--seed", "42", "--legs", "4", "--colors", "3", "--max-leg-len", "3")
    assert code == 0
    code, out2, _ = run(capsys, "gen-spider", "--seed", "42", "--legs", "4", "--colors", "3", "--max-leg-len", "3")
    assert out1 == out2
    code, out3, _ = run(capsys, "gen-spider", "--seed", "43", "--legs", "4", "--colors", "3", "--max-leg-len", "3")
    assert out1 != out3


def test_export_dot(tmp_path, capsys):
    graph = {
        "colour_count": 2,
        "vertices": [{"id": 0, "colour": 0}, {"id": 1, "colour": 1}],
        "edges": [[0, 1]],
    }
    gpath = write(tmp_path, "g.json", json.dumps(graph))
    code, out, _ = run(capsys, "export-dot", "--input", gpath)
    assert code == 0
    assert "colorid=1" in out


def test_verify_suite_streams_json_lines(tmp_path, capsys):
    report = str(tmp_path / "r.jsonl")
    code, _, err = run(
        capsys,
        "verify-suite",
        "--seed", "3",
        "--count", "8",
        "--legs", "4",
        "--colors", "3",
        "--max-leg-len", "3",
        "--output", report,
    )
    assert code == 0
    lines = [json.loads(l) for l in open(report)]
    assert [r["instance"] for r in lines] == list(range(8))
    assert all(r["solver_size"] >= r["oracle_size"] for r in lines)
    summary = json.loads(err.strip().splitlines()[-1])
    assert summary["below_oracle"] == 0


def test_verify_suite_deterministic(tmp_path, capsys):
    a = str(tmp_path / "a.jsonl")
    b = str(tmp_path / "b.jsonl")
    for path in (a, b):
        code, _, _ = run(capsys, "verify-suite", "--seed", "9", "--count", "5", "--output", path)
        assert code == 0
    assert open(a).read() == open(b).read()


def test_solver_output_repasses_check(tmp_path, capsys):
    sp = write(tmp_path, "sp.txt", "1\n0 1\n2 2\n1 0 1\n")
    code, out, _ = run(capsys, "solve-spider", "--input", sp)
    assert code == 0
    assert json.loads(out)["valid"] is True
