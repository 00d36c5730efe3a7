import json

import pytest

from fanforge.cli import main
from fanforge.graph import make_cycle, make_hypercube, make_prism
from fanforge.graph6 import encode_graph6
from fanforge.harness import load_input, load_minor, verify
from fanforge.minors import K1


def run_json(capsys, *argv):
    code = main([*argv, "--json", "-"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_wheels_ando(capsys):
    code, rep = run_json(capsys, "verify", "--input", "wheels:4..8", "--suite", "ando", "--no-timings")
    assert code == 0 and rep["report_version"] == 1
    for r in rep["records"]:
        assert r["contractible"] == r["order"] - 1
    assert "timings" not in rep


def test_prism_main2(capsys):
    code, rep = run_json(capsys, "verify", "--input", "prism", "--suite", "main", "main2")
    (r,) = rep["records"]
    assert code == 0 and r["bounds"]["main2"] == {"value": 3, "bound": 3, "pass": True}
    assert "timings" in rep


def test_q3_main3(capsys):
    code, rep = run_json(capsys, "verify", "--input", "q3", "--suite", "main", "main3", "structural")
    (r,) = rep["records"]
    assert code == 0 and r["bounds"]["main3"]["value"] == 7
    assert all(len(b) == 1 for b in r["blocks"])


def test_minor_by_name(capsys):
    code, rep = run_json(capsys, "verify", "--input", "wheels:5..6", "--minor", "k4",
                         "--suite", "main", "main2")
    assert code == 0 and rep["minor"] == "C~"
    assert all(r["bounds"]["main"]["bound"] == r["order"] - 4 for r in rep["records"])


def test_skips_graphs_without_the_minor(capsys):
    code, rep = run_json(capsys, "verify", "--input", "k4", "--minor", "prism", "--suite", "main")
    assert code == 0 and rep["records"][0]["skipped"] == "h is not a minor"


def test_file_input_and_jobs_parity(tmp_path, small_corpus):
    path = tmp_path / "g.g6"
    path.write_text("".join(encode_graph6(g) + "\n" for g in small_corpus[:40]))
    graphs = load_input(str(path))
    assert graphs[0][0] == "line 1"
    one = verify(graphs, K1, jobs=1)
    two = verify(graphs, K1, jobs=2)
    assert one.to_json(timings=False) == two.to_json(timings=False)
    assert one.to_json(timings=False) == verify(graphs, K1).to_json(timings=False)
    assert one.ok


def test_non_3_connected_input_is_skipped():
    rep = verify([("c5", make_cycle(5))], K1)
    assert rep.records[0]["skipped"] and rep.ok


def test_ingest(tmp_path, capsys):
    path = tmp_path / "one.g6"
    path.write_text("C~\n")
    out = tmp_path / "o.json"
    assert main(["ingest", "--graph6", str(path), "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["graphs"] == [{"line": 1, "order": 4, "size": 6, "graph6": "C~"}]


def test_ingest_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert main(["ingest", "--graph6", str(path)]) == 0
    assert "0 graphs" in capsys.readouterr().out


def test_ingest_corrupt_line(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("C~\nC~~~\n")
    assert main(["ingest", "--graph6", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file_and_bad_spec(capsys):
    assert main(["verify", "--input", "no-such-family"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_generate_sharpness(tmp_path, capsys):
    out = tmp_path / "j1.json"
    assert main(["generate-sharpness", "--kind", "j1", "--n", "3", "--verify", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["verify"]["largest_forest"] == 3 and data["verify"]["inside_contracted_set"]
    assert main(["generate-sharpness", "--kind", "j2", "--n", "2"]) == 3


def test_trace(tmp_path):
    out = tmp_path / "t.json"
    assert main(["trace", "--input", "q3", "--json", str(out)]) == 0
    (t,) = json.loads(out.read_text())["traces"]
    assert t["rank"] == 7 and len(t["chain"]["traces"]) == len(t["chain"]["steps"])


def test_load_minor_forms(tmp_path):
    assert load_minor("K1").order == 1
    assert load_minor("prism").size == make_prism().size
    assert load_minor(encode_graph6(make_hypercube(3))).size == 12
    p = tmp_path / "h.g6"
    p.write_text("C~\n")
    assert load_minor(str(p)).size == 6


def test_failure_exit_code(monkeypatch, capsys):
    import fanforge.harness as harness
    monkeypatch.setattr(harness, "contractible_edges", lambda g: frozenset())
    assert main(["verify", "--input", "k4", "--suite", "ando", "--quiet"]) == 1
